"""Exact cyclotomic arithmetic, noncommutative Groebner bases, and PBW criteria
for deformations of skew group algebras over quantum polynomial rings."""

from .scalar import QQ, CycloField, Scalar, cyclotomic_field, parse_scalar, format_scalar
from .freealg import Alphabet, MonomialOrder, Polynomial, parse_polynomial, format_polynomial
from .groebner import GroebnerBasis, buchberger, coset_basis, interreduce, normal_form
from .group import FiniteGroup, generate
from .qdha import (KappaParam, QuantumParams, acts_as_automorphism, build_relations,
                   check_pbw_conditions, is_pbw_via_groebner)
from .classify import aut3_case, classify_abelian, classify_dim2, kappa_solution_space
from .problem import ProblemFile, format_problem, parse_problem

__version__ = "0.1.0"
