"""Solution spaces of admissible kappa for fixed (Q, G), and the closed-form
classifications: abelian diagonal groups, dimension two, and the graded
automorphism groups of quantum 3-space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .group import FiniteGroup, NotDiagonal, diagonal_characters, is_diagonal_matrix, is_monomial_matrix
from .linalg import Matrix, determinant, nullspace
from .qdha import (KappaParam, QuantumParams, _condition_c_coefficient, acts_as_automorphism,
                   quantum_det2, quantum_minor)
from .scalar import Scalar


class ConditionAFailed(ValueError):
    """Q is not a QPS or some group element is not an automorphism."""


def require_condition_a(Q: QuantumParams, G: FiniteGroup) -> None:
    if not Q.is_qps:
        raise ConditionAFailed("Q is not a quantum system of parameters")
    for g, m in enumerate(G.elements):
        ok, quad = acts_as_automorphism(m, Q)
        if not ok:
            raise ConditionAFailed(f"group element g{g + 1} does not act as an automorphism "
                                   f"(minor indices {tuple(x + 1 for x in quad)})")


@dataclass
class KappaSolutionSpace:
    unknowns: list[tuple[int, int, int]]
    dimension: int
    basis: list[KappaParam]
    free: list[tuple[int, int, int]]
    n_equations: int = 0


def kappa_unknowns(n: int, order: int) -> list[tuple[int, int, int]]:
    return [(g, i, j) for g in range(order) for i in range(n) for j in range(i + 1, n)]


def kappa_constraints(Q: QuantumParams, G: FiniteGroup) -> tuple[list[tuple[int, int, int]], list[list[Scalar]]]:
    """Linear equations from the (C) coefficient identities and the (D) identities."""
    n = Q.n
    fld = Q.field
    unknowns = kappa_unknowns(n, len(G))
    col = {u: c for c, u in enumerate(unknowns)}
    rows = []

    def unit(g, a, b):
        vals = {(g, a, b): fld.one()}
        return KappaParam(vals, fld)

    for h, m in enumerate(G.elements):
        for i, j, k in itertools.combinations(range(n), 3):
            for r in range(n):
                row = [fld.zero()] * len(unknowns)
                for a, b in ((i, j), (i, k), (j, k)):
                    row[col[(h, a, b)]] = _condition_c_coefficient(m, Q, unit(h, a, b), h, i, j, k, r)
                if any(row):
                    rows.append(row)
    pairs = list(itertools.combinations(range(n), 2))
    for g in range(len(G)):
        for h, m in enumerate(G.elements):
            c = G.conjugate(g, h)
            for i, j in pairs:
                row = [fld.zero()] * len(unknowns)
                row[col[(c, i, j)]] += 1
                for k, l in pairs:
                    d = quantum_minor(m, Q, i, j, k, l)
                    if d:
                        row[col[(g, k, l)]] -= d
                if any(row):
                    rows.append(row)
    return unknowns, rows


def kappa_solution_space(Q: QuantumParams, G: FiniteGroup) -> KappaSolutionSpace:
    require_condition_a(Q, G)
    unknowns, rows = kappa_constraints(Q, G)
    vecs, free = nullspace(rows, len(unknowns), Q.field)
    basis = [KappaParam({u: x for u, x in zip(unknowns, v) if x}, Q.field) for v in vecs]
    return KappaSolutionSpace(unknowns, len(basis), basis, [unknowns[f] for f in free], len(rows))


# ---------------------------------------------------------------------------
# abelian groups acting diagonally
# ---------------------------------------------------------------------------

@dataclass
class AbelianSupport:
    admissible: dict[tuple[int, int], list[int]]

    @property
    def dimension(self) -> int:
        return sum(len(v) for v in self.admissible.values())


def classify_abelian(Q: QuantumParams, G: FiniteGroup) -> AbelianSupport:
    chi = diagonal_characters(G)
    if chi is NotDiagonal:
        raise ValueError("classify_abelian needs a group of diagonal matrices")
    n = Q.n
    out = {}
    for i, j in itertools.combinations(range(n), 2):
        if not all((chi[(g, i)] * chi[(g, j)]).is_one() for g in range(len(G))):
            out[(i, j)] = []
            continue
        out[(i, j)] = [g for g in range(len(G))
                       if all(chi[(g, k)] == Q(k, i) * Q(k, j) for k in range(n) if k not in (i, j))]
    return AbelianSupport(out)


# ---------------------------------------------------------------------------
# dimension two
# ---------------------------------------------------------------------------

@dataclass
class Dim2Report:
    branch: str  # "q=1", "q=-1", "generic"
    classes: list[list[int]]
    supported_classes: list[list[int]]
    predicted_dimension: int
    solver_dimension: int
    conjugation_ok: bool
    notes: list[str] = dc_field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.predicted_dimension == self.solver_dimension and self.conjugation_ok


def classify_dim2(Q: QuantumParams, G: FiniteGroup) -> Dim2Report:
    """Support prediction: a class is allowed iff every centralizing element has quantum determinant 1."""
    if Q.n != 2:
        raise ValueError("classify_dim2 needs n = 2")
    require_condition_a(Q, G)
    q = Q(0, 1)
    if q.is_one():
        branch = "q=1"
    elif (-q).is_one():
        branch = "q=-1"
    else:
        branch = "generic"
    notes = []
    dets = [quantum_det2(m, Q) for m in G.elements]
    if branch == "generic" and not all(is_diagonal_matrix(m) for m in G.elements):
        notes.append("generic q but the group is not diagonal")
    if branch == "q=-1" and not all(is_monomial_matrix(m) for m in G.elements):
        notes.append("q = -1 but the group is not monomial")
    classes = G.conjugacy_classes()
    supported = [c for c in classes if all(dets[h].is_one() for h in G.centralizer(c[0]))]
    space = kappa_solution_space(Q, G)
    ok = True
    for kap in space.basis:
        for g in range(len(G)):
            for h in range(len(G)):
                if kap(G.conjugate(g, h), 0, 1) != dets[h] * kap(g, 0, 1):
                    ok = False
    return Dim2Report(branch, classes, supported, len(supported), space.dimension, ok, notes)


# ---------------------------------------------------------------------------
# quantum 3-space
# ---------------------------------------------------------------------------

_OFF = {(i, j) for i in range(3) for j in range(3) if i != j}


def _pattern(allowed_offdiag: set) -> Callable[[Matrix], bool]:
    def pred(m: Matrix) -> bool:
        return all(not m[i][j] for i, j in _OFF - allowed_offdiag) and bool(determinant(m))
    return pred


def _exact_shape(cells: set) -> Callable[[Matrix], bool]:
    def pred(m: Matrix) -> bool:
        return all((not m[i][j]) == ((i, j) not in cells) for i in range(3) for j in range(3))
    return pred


_DIAG = {(0, 0), (1, 1), (2, 2)}
_CYCLE_A = {(0, 1), (1, 2), (2, 0)}
_CYCLE_B = {(0, 2), (1, 0), (2, 1)}


def _swap_cells(a: int, b: int) -> set:
    c = 3 - a - b
    return {(a, b), (b, a), (c, c)}


def _any_of(*preds) -> Callable[[Matrix], bool]:
    return lambda m: any(p(m) for p in preds)


@dataclass
class Aut3Case:
    tag: str
    predicate: Callable[[Matrix], bool]
    description: str
    note: str = ""


def aut3_case(q12, q13, q23) -> Aut3Case:
    """Graded automorphism group of quantum 3-space with parameters q12, q13, q23."""
    for x in (q12, q13, q23):
        if not x:
            raise ValueError("quantum parameter must be nonzero")
    q31 = q13.inverse() if isinstance(q13, Scalar) else 1 / q13
    trio = (q12, q23, q31)
    one = lambda x: x == 1
    mone = lambda x: x == -1
    inv = lambda a, b: a * b == 1
    diag = _exact_shape(_DIAG)
    note = "transcendence degree bounds are informational only at concrete parameter values"
    if all(one(x) for x in trio):
        return Aut3Case("I", _pattern(_OFF), "GL_3", note)
    if all(mone(x) for x in trio):
        return Aut3Case("II", lambda m: is_monomial_matrix(m), "monomial matrices", note)
    if q12 == q23 == q31 and not one(q12) and not mone(q12):
        return Aut3Case("IV", _any_of(diag, _exact_shape(_CYCLE_A), _exact_shape(_CYCLE_B)),
                        "torus and the two 3-cycle monomial shapes", note)
    if one(q23) and inv(q12, q31) and not one(q12):
        return Aut3Case("Va", _pattern({(1, 2), (2, 1)}), "block on v2, v3", note)
    if one(q31) and inv(q12, q23) and not one(q12):
        return Aut3Case("Vb", _pattern({(0, 2), (2, 0)}), "block on v1, v3", note)
    if one(q12) and inv(q23, q31) and not one(q23):
        return Aut3Case("Vc", _pattern({(0, 1), (1, 0)}), "block on v1, v2", note)
    if mone(q23) and inv(q12, q31):
        return Aut3Case("VI", _any_of(diag, _exact_shape(_swap_cells(1, 2))), "torus and swap of v2, v3", note)
    if mone(q31) and inv(q12, q23):
        return Aut3Case("VI", _any_of(diag, _exact_shape(_swap_cells(0, 2))), "torus and swap of v1, v3", note)
    if mone(q12) and inv(q23, q31):
        return Aut3Case("VI", _any_of(diag, _exact_shape(_swap_cells(0, 1))), "torus and swap of v1, v2", note)
    return Aut3Case("III", diag, "torus", note)
