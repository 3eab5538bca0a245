"""Quantum parameters, quantum minors and the PBW criteria for deformations of
skew group algebras of quantum polynomial algebras.

All indices here are 0-based: variables v_0..v_{n-1}, group elements by their
position in a :class:`FiniteGroup` (0 is the identity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .freealg import Alphabet, MonomialOrder, Polynomial, default_order, leading
from .groebner import buchberger, normal_form
from .group import FiniteGroup
from .linalg import Matrix, transpose
from .scalar import CycloField, Scalar

VIOLATION_CAP = 100


class NotQps(ValueError):
    """The parameter matrix is not a quantum system of parameters."""


class QuantumParams:
    """An n x n matrix of nonzero scalars q[i][j]."""

    def __init__(self, q: Sequence[Sequence], field: CycloField):
        rows = [tuple(field(x) for x in r) for r in q]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Q must be square")
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if not x:
                    raise ValueError(f"quantum parameter must be nonzero (q{i + 1}{j + 1})")
        self.q = tuple(rows)
        self.n = n
        self.field = field
        self.is_qps = all(rows[i][i].is_one() for i in range(n)) and all(
            (rows[i][j] * rows[j][i]).is_one() for i in range(n) for j in range(i))

    @classmethod
    def from_upper(cls, n: int, upper: Mapping[tuple[int, int], object], field: CycloField) -> QuantumParams:
        """QPS from the entries q_ij, i < j (missing entries are 1)."""
        one = field.one()
        q = [[one] * n for _ in range(n)]
        for (i, j), v in upper.items():
            if not i < j:
                raise ValueError("upper entries need i < j")
            v = field(v)
            if not v:
                raise ValueError(f"quantum parameter must be nonzero (q{i + 1}{j + 1})")
            q[i][j] = v
            q[j][i] = v.inverse()
        return cls(q, field)

    @classmethod
    def uniform(cls, n: int, value, field: CycloField) -> QuantumParams:
        return cls.from_upper(n, {(i, j): value for i in range(n) for j in range(i + 1, n)}, field)

    def __call__(self, i: int, j: int) -> Scalar:
        return self.q[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, QuantumParams) and self.q == other.q

    def __hash__(self) -> int:
        return hash(self.q)

    def __repr__(self) -> str:
        return f"QuantumParams({[[str(x) for x in r] for r in self.q]})"


class KappaParam:
    """Values kappa_g(v_i, v_j) for i < j; everything else follows from the 2-form rule."""

    def __init__(self, entries: Mapping[tuple[int, int, int], object] | None, field: CycloField):
        self.field = field
        self.entries: dict[tuple[int, int, int], Scalar] = {}
        for (g, i, j), v in (entries or {}).items():
            if not i < j:
                raise ValueError(f"kappa is stored for i < j only, got ({i + 1},{j + 1}); "
                                 f"state it as ({j + 1},{i + 1}), the 2-form extension is automatic")
            v = field(v)
            if v:
                self.entries[(g, i, j)] = v

    def __call__(self, g: int, i: int, j: int) -> Scalar:
        """Stored value for i < j (zero when absent)."""
        return self.entries.get((g, i, j), self.field.zero())

    def form(self, Q: QuantumParams, g: int, a: int, b: int) -> Scalar:
        """kappa_g(v_a, v_b) for any a, b via kappa(v_j, v_i) = -q_ij^-1 kappa(v_i, v_j)."""
        if a == b:
            return self.field.zero()
        if a < b:
            return self(g, a, b)
        return -(Q(b, a).inverse() * self(g, b, a))

    def support(self) -> list[int]:
        return sorted({g for g, _, _ in self.entries})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        return isinstance(other, KappaParam) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"KappaParam({ {k: str(v) for k, v in sorted(self.entries.items())} })"


# ---------------------------------------------------------------------------
# minors and automorphisms
# ---------------------------------------------------------------------------

def _entry(h: Matrix, i: int, k: int) -> Scalar:
    """h^i_k: coefficient of v_k in h(v_i)."""
    return h[k][i]


def quantum_minor(h: Matrix, Q: QuantumParams, i: int, j: int, k: int, l: int) -> Scalar:
    return _entry(h, i, k) * _entry(h, j, l) - Q(i, j) * _entry(h, i, l) * _entry(h, j, k)


def acts_as_automorphism(h: Matrix, Q: QuantumParams) -> tuple[bool, tuple | None]:
    """Check det_ijkl(h) = -q_lk det_ijlk(h) for all i, j, k, l; returns (ok, first failing quadruple)."""
    if not Q.is_qps:
        raise NotQps("automorphism test needs a quantum system of parameters")
    n = Q.n
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if quantum_minor(h, Q, i, j, k, l) != -Q(l, k) * quantum_minor(h, Q, i, j, l, k):
            return False, (i, j, k, l)
    return True, None


def _exterior_minor(h: Matrix, Q: QuantumParams, i: int, j: int, k: int, l: int) -> Scalar:
    qij = Q(i, j) if i == j else -Q(i, j)
    return _entry(h, i, k) * _entry(h, j, l) - qij * _entry(h, i, l) * _entry(h, j, k)


def acts_on_quantum_exterior(h: Matrix, Q: QuantumParams) -> bool:
    """Does h preserve the relations of the quantum exterior algebra?

    The minors here use the exterior parameters (-q_ij off the diagonal) and
    the square-zero relations give the transpose condition.
    """
    if not Q.is_qps:
        raise NotQps("exterior test needs a quantum system of parameters")
    n = Q.n
    ht = transpose(h)
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if _exterior_minor(h, Q, i, j, k, l) != Q(l, k) * _exterior_minor(h, Q, i, j, l, k):
            return False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if quantum_minor(ht, Q, i, j, k, k):
                    return False
    return True


def transpose_consistency(h: Matrix, Q: QuantumParams) -> bool:
    return acts_as_automorphism(h, Q)[0] == acts_as_automorphism(transpose(h), Q)[0]


def quantum_det2(h: Matrix, Q: QuantumParams) -> Scalar:
    if Q.n != 2 or len(h) != 2:
        raise ValueError("quantum_det2 needs n = 2")
    (a, b), (c, d) = h
    return a * d - Q(0, 1) * b * c


# ---------------------------------------------------------------------------
# PBW conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    tag: str
    witness: dict
    residual: object = None

    def describe(self) -> str:
        parts = [f"{k}={v}" for k, v in self.witness.items()]
        text = f"({self.tag}) " + " ".join(parts)
        if self.residual is not None:
            text += f" residual {self.residual}"
        return text


@dataclass
class PbwReport:
    verdict: bool
    violations: list[Violation] = dc_field(default_factory=list)
    truncated: bool = False

    def tags(self) -> set[str]:
        return {v.tag for v in self.violations}


def _condition_c_coefficient(h: Matrix, Q: QuantumParams, kap: KappaParam, g: int,
                             i: int, j: int, k: int, m: int) -> Scalar:
    z = Q.field.zero()
    one = Q.field.one()

    def d(a, b):
        return one if a == b else z

    return ((Q(i, k) * Q(j, k) * h[m][k] - d(m, k)) * kap(g, i, j)
            + (Q(j, k) * d(m, j) - Q(i, j) * h[m][j]) * kap(g, i, k)
            + (h[m][i] - Q(i, j) * Q(i, k) * d(m, i)) * kap(g, j, k))


def check_pbw_conditions(Q: QuantumParams, G: FiniteGroup, kappa: KappaParam,
                         cap: int = VIOLATION_CAP) -> PbwReport:
    """Evaluate conditions (A)-(D) exhaustively, collecting up to ``cap`` violations."""
    n = Q.n
    out: list[Violation] = []
    truncated = False

    def add(v: Violation) -> bool:
        nonlocal truncated
        if len(out) >= cap:
            truncated = True
            return False
        out.append(v)
        return True

    # (A)
    if not Q.is_qps:
        bad = [(i, j) for i in range(n) for j in range(n)
               if (i == j and not Q(i, i).is_one()) or (i != j and not (Q(i, j) * Q(j, i)).is_one())]
        add(Violation("A", {"i": bad[0][0], "j": bad[0][1]}, "Q is not a quantum system of parameters"))
    else:
        for g, m in enumerate(G.elements):
            ok, quad = acts_as_automorphism(m, Q)
            if not ok:
                i, j, k, l = quad
                add(Violation("A", {"g": g, "i": i, "j": j, "k": k, "l": l},
                              "not an automorphism"))
    # (B): stored for i < j, so only a non-QPS matrix can break the 2-form rule
    for (g, i, j), v in sorted(kappa.entries.items()):
        r = (Q(i, j) * Q(j, i)).inverse() * v - v
        if r:
            add(Violation("B", {"g": g, "i": i, "j": j}, r))
    # (C)
    for hidx, h in enumerate(G.elements):
        for i, j, k in itertools.combinations(range(n), 3):
            if not (kappa(hidx, i, j) or kappa(hidx, i, k) or kappa(hidx, j, k)):
                continue
            for m in range(n):
                c = _condition_c_coefficient(h, Q, kappa, hidx, i, j, k, m)
                if c:
                    add(Violation("C", {"h": hidx, "i": i, "j": j, "k": k, "m": m}, c))
    # (D)
    pairs = list(itertools.combinations(range(n), 2))
    for g in range(len(G)):
        for hidx, h in enumerate(G.elements):
            c = G.conjugate(g, hidx)
            for i, j in pairs:
                r = kappa(c, i, j)
                for k, l in pairs:
                    kv = kappa(g, k, l)
                    if kv:
                        r = r - quantum_minor(h, Q, i, j, k, l) * kv
                if r:
                    add(Violation("D", {"g": g, "h": hidx, "i": i, "j": j}, r))
    return PbwReport(not out, out, truncated)


# ---------------------------------------------------------------------------
# relations and the Groebner oracle
# ---------------------------------------------------------------------------

def hecke_alphabet(Q: QuantumParams, G: FiniteGroup) -> Alphabet:
    return Alphabet.for_hecke(Q.n, len(G))


def hecke_order(alphabet: Alphabet) -> MonomialOrder:
    """Degree-right-lex with v1 > v2 > ... > vn > t2 > ... (leading words v_j v_i, t_g v_i, t_g t_h)."""
    return default_order(alphabet, "degrightlex")


def _t(alpha: Alphabet, fld: CycloField, g: int) -> Polynomial:
    if g == 0:
        return Polynomial.constant(fld, 1)
    return Polynomial.monomial(fld, (alpha.group_letter(g),))


def _kappa_poly(Q, G, kappa, alpha, a, b) -> Polynomial:
    fld = Q.field
    p = Polynomial(fld)
    for g in range(len(G)):
        c = kappa.form(Q, g, a, b)
        if c:
            p = p + _t(alpha, fld, g).scale(c)
    return p


def deformation_relation(Q, G, kappa, alpha, a, b) -> Polynomial:
    """v_b v_a - q_ab v_a v_b - kappa(v_a, v_b)."""
    fld = Q.field
    return (Polynomial.monomial(fld, (alpha.var(b), alpha.var(a)))
            - Polynomial.monomial(fld, (alpha.var(a), alpha.var(b)), Q(a, b))
            - _kappa_poly(Q, G, kappa, alpha, a, b))


def build_relations(Q: QuantumParams, G: FiniteGroup, kappa: KappaParam,
                    alphabet: Alphabet | None = None) -> list[Polynomial]:
    """Group relations, commutation relations, then deformation relations (i < j)."""
    fld = Q.field
    alpha = alphabet or hecke_alphabet(Q, G)
    rels = []
    for g in range(1, len(G)):
        for h in range(1, len(G)):
            w = (alpha.group_letter(g), alpha.group_letter(h))
            rels.append(Polynomial.monomial(fld, w) - _t(alpha, fld, G.mul(g, h)))
    for g in range(1, len(G)):
        m = G.matrix(g)
        tg = alpha.group_letter(g)
        for i in range(Q.n):
            p = Polynomial.monomial(fld, (tg, alpha.var(i)))
            for r in range(Q.n):
                if m[r][i]:
                    p = p - Polynomial.monomial(fld, (alpha.var(r), tg), m[r][i])
            rels.append(p)
    for i in range(Q.n):
        for j in range(i + 1, Q.n):
            rels.append(deformation_relation(Q, G, kappa, alpha, i, j))
    return rels


def extra_relations(Q: QuantumParams, G: FiniteGroup, kappa: KappaParam,
                    alphabet: Alphabet | None = None) -> list[Polynomial]:
    """The relations for i > j and i = j that the full defining set adds to build_relations."""
    alpha = alphabet or hecke_alphabet(Q, G)
    out = []
    for a in range(Q.n):
        for b in range(a + 1):
            out.append(deformation_relation(Q, G, kappa, alpha, a, b))
    return out


def is_pbw_shape(word: tuple, alpha: Alphabet) -> bool:
    if len(word) != 2:
        return False
    x, y = word
    gx, gy = alpha.is_group_letter(x), alpha.is_group_letter(y)
    if gx:
        return True  # t_g v_i or t_g t_h
    return not gy and x > y  # v_j v_i with i < j


@dataclass
class GbVerdict:
    status: str  # "Pbw", "NotPbw", "Inconclusive"
    witness: Polynomial | None = None
    relations: list[Polynomial] = dc_field(default_factory=list)
    pairs_processed: int = 0

    @property
    def is_pbw(self) -> bool:
        return self.status == "Pbw"


def is_pbw_via_groebner(Q: QuantumParams, G: FiniteGroup, kappa: KappaParam,
                        max_degree: int = 3) -> GbVerdict:
    """Decide the PBW property by Groebner completion of the defining relations."""
    alpha = hecke_alphabet(Q, G)
    order = hecke_order(alpha)
    rels = build_relations(Q, G, kappa, alpha)
    for p in rels:
        if not is_pbw_shape(leading(p, order)[0], alpha):
            raise AssertionError("relation with a non-PBW leading word")
    for p in extra_relations(Q, G, kappa, alpha):
        r = normal_form(p, rels, order)
        if r:
            return GbVerdict("NotPbw", r, rels)
    if max_degree < 3:
        return GbVerdict("Inconclusive", None, rels)
    gb = buchberger(rels, order, max_degree=max_degree, stop_on_new=True)
    if gb.max_pair_degree > 3:
        raise AssertionError("overlap of degree above 3 among degree-2 leading words")
    if gb.added:
        return GbVerdict("NotPbw", gb.added[0], rels, gb.pairs_processed)
    return GbVerdict("Pbw", None, rels, gb.pairs_processed)


def standard_basis_count(n: int, group_order: int, k: int) -> int:
    """binom(k+n, n) * |G|: standard monomials of degree <= k times group letters."""
    from math import comb
    return comb(k + n, n) * group_order
