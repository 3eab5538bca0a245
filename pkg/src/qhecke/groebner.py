"""Two-sided Groebner bases in free associative algebras.

Reduction, complete reduction (normal forms), overlap relations, a
degree-ordered Buchberger completion with optional truncation, interreduction
and enumeration of the Groebner coset basis (words outside the leading ideal).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .freealg import MonomialOrder, Polynomial, Word, divides, find_subword, leading
from .scalar import CycloField

UNBOUNDED = math.inf
DEFAULT_ELEMENT_CAP = 10_000


class CompletionError(RuntimeError):
    """Buchberger completion exceeded the element cap without a degree bound."""


class InsufficientCompletion(ValueError):
    """A truncated basis was asked for data above its certified degree."""


# ---------------------------------------------------------------------------
# reduction machinery
# ---------------------------------------------------------------------------

class _Reducer:
    """Leading-monomial index over a list of nonzero polynomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.terms: list[dict | None] = []
        self.lms: list[Word] = []
        self.lc_inv: list = []
        self.index: dict[Word, list[int]] = {}
        self.lengths: dict[int, int] = {}

    def add(self, p: Polynomial | dict) -> int:
        terms = p.terms if isinstance(p, Polynomial) else p
        lm = max(terms, key=self.order.key)
        k = len(self.terms)
        self.terms.append(terms)
        self.lms.append(lm)
        lc = terms[lm]
        self.lc_inv.append(None if lc.is_one() else lc.inverse())
        self.index.setdefault(lm, []).append(k)
        self.lengths[len(lm)] = self.lengths.get(len(lm), 0) + 1
        return k

    def remove(self, k: int) -> None:
        lm = self.lms[k]
        self.terms[k] = None
        slot = self.index[lm]
        slot.remove(k)
        if not slot:
            del self.index[lm]
        self.lengths[len(lm)] -= 1
        if not self.lengths[len(lm)]:
            del self.lengths[len(lm)]

    def active(self) -> list[int]:
        return [k for k, t in enumerate(self.terms) if t is not None]

    def find(self, w: Word, exclude: int | None = None):
        """Divisor of ``w`` with the smallest leading monomial (ties: list position).

        Returns ``(k, m1, m2)`` for the leftmost occurrence, or None.
        """
        best = None
        index = self.index
        lw = len(w)
        for length in self.lengths:
            for s in range(lw - length + 1):
                slot = index.get(w[s:s + length])
                if not slot:
                    continue
                k = slot[0]
                if k == exclude:
                    if len(slot) == 1:
                        continue
                    k = slot[1]
                if best is None:
                    best = (k, s)
                elif k != best[0]:
                    kk = self.order.key(self.lms[k])
                    kb = self.order.key(self.lms[best[0]])
                    if kk < kb or (kk == kb and k < best[0]):
                        best = (k, s)
        if best is None:
            return None
        k, s = best
        length = len(self.lms[k])
        return k, w[:s], w[s + length:]

    def normal_form(self, terms: Mapping[Word, object], exclude: int | None = None) -> dict:
        """Complete reduction: reduce leading terms, keep irreducible ones, recurse on the tail."""
        order = self.order
        key = order.key
        f = dict(terms)
        heap = [(_neg(key(w)), w) for w in f]
        heapq.heapify(heap)
        result = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = f.pop(w, None)
            if c is None:
                continue
            hit = self.find(w, exclude)
            if hit is None:
                result[w] = c
                continue
            k, m1, m2 = hit
            u = self.terms[k]
            inv = self.lc_inv[k]
            factor = c if inv is None else c * inv
            lm = self.lms[k]
            for uw, uc in u.items():
                if uw == lm:
                    continue
                nw = m1 + uw + m2 if (m1 or m2) else uw
                old = f.get(nw)
                if old is None:
                    f[nw] = -(factor * uc)
                    heapq.heappush(heap, (_neg(key(nw)), nw))
                else:
                    new = old - factor * uc
                    if new:
                        f[nw] = new
                    else:
                        del f[nw]
        return result


def _neg(k: tuple) -> tuple:
    return (-k[0], tuple([-x for x in k[1]]))


def reduce_step(f: Polynomial, u: Polynomial, order: MonomialOrder) -> Polynomial:
    """One reduction ``f - lc(f)/lc(u) * m1 u m2`` at the leftmost occurrence of lm(u) in lm(f)."""
    if not f or not u:
        raise ValueError("reduce_step needs nonzero polynomials")
    lmf, lcf = leading(f, order)
    lmu, lcu = leading(u, order)
    facts = find_subword(lmu, lmf)
    if not facts:
        raise ValueError("lm(u) does not divide lm(f)")
    m1, m2 = facts[0]
    return f - u.left_mul_word(m1).right_mul_word(m2).scale(lcf / lcu)


def normal_form(f: Polynomial, S: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Complete reduction NF(f, S); zero elements of S are ignored."""
    red = _Reducer(order)
    for s in S:
        if s:
            red.add(s)
    if not f:
        return Polynomial(f.field)
    return Polynomial._wrap(f.field, red.normal_form(f.terms))


def is_reduced_wrt(f: Polynomial, S: Sequence[Polynomial], order: MonomialOrder) -> bool:
    lms = [leading(s, order)[0] for s in S if s]
    return not any(divides(lm, w) for w in f.terms for lm in lms)


# ---------------------------------------------------------------------------
# overlaps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OverlapInstance:
    """``lm(f1) m2 == m1 lm(f2)`` with ``|m1| < |lm(f1)|`` and ``|m2| < |lm(f2)|``."""

    f1: Polynomial
    f2: Polynomial
    m1: Word
    m2: Word
    order: MonomialOrder = dc_field(repr=False, compare=False)

    @property
    def word(self) -> Word:
        return self.m1 + leading(self.f2, self.order)[0]

    @property
    def degree(self) -> int:
        return len(self.word)


def _overlap_factors(a: Word, b: Word, same: bool) -> list[tuple[Word, Word]]:
    p, r = len(a), len(b)
    out = []
    for s in range(max(0, p - r), p):
        if a[s:] == b[:p - s]:
            if same and s == 0 and p == r:
                continue
            out.append((a[:s], b[p - s:]))
    return out


def overlaps(f1: Polynomial, f2: Polynomial, order: MonomialOrder) -> list[OverlapInstance]:
    """All overlaps of lm(f1) (on the left) with lm(f2) (on the right)."""
    if not f1 or not f2:
        raise ValueError("overlaps need nonzero polynomials")
    a = leading(f1, order)[0]
    b = leading(f2, order)[0]
    return [OverlapInstance(f1, f2, m1, m2, order)
            for m1, m2 in _overlap_factors(a, b, f1 is f2 or f1 == f2)]


def overlap_relation(inst: OverlapInstance) -> Polynomial:
    """``lc(f2) f1 m2 - lc(f1) m1 f2``."""
    _, lc1 = leading(inst.f1, inst.order)
    _, lc2 = leading(inst.f2, inst.order)
    return inst.f1.right_mul_word(inst.m2).scale(lc2) - inst.f2.left_mul_word(inst.m1).scale(lc1)


# ---------------------------------------------------------------------------
# interreduction and completion
# ---------------------------------------------------------------------------

def _monic_terms(terms: dict, order: MonomialOrder) -> dict:
    lm = max(terms, key=order.key)
    lc = terms[lm]
    if lc.is_one():
        return terms
    inv = lc.inverse()
    return {w: c * inv for w, c in terms.items()}


def interreduce(S: Iterable[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Monic, mutually reduced generators of the same ideal, sorted by ascending lm."""
    S = [p for p in S if p]
    if not S:
        return []
    fld = S[0].field
    work = [_monic_terms(p.terms, order) for p in S]
    work.sort(key=lambda t: order.key(max(t, key=order.key)))
    changed = True
    while changed:
        changed = False
        red = _Reducer(order)
        idx = [red.add(t) for t in work]
        for k in range(len(work)):
            r = red.normal_form(work[k], exclude=idx[k])
            if not r:
                red.remove(idx[k])
                work[k] = None
                changed = True
                continue
            r = _monic_terms(r, order)
            if r != work[k]:
                red.remove(idx[k])
                work[k] = r
                idx[k] = red.add(r)
                changed = True
        work = [t for t in work if t is not None]
        work.sort(key=lambda t: order.key(max(t, key=order.key)))
    return [Polynomial._wrap(fld, t) for t in work]


def is_reduced(S: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """No lm(s) divides a monomial of another element; all elements monic."""
    S = [p for p in S if p]
    lms = [leading(p, order)[0] for p in S]
    for i, p in enumerate(S):
        if not leading(p, order)[1].is_one():
            return False
        for j, lm in enumerate(lms):
            if i != j and any(divides(lm, w) for w in p.terms):
                return False
    return True


@dataclass
class GroebnerBasis:
    elements: list[Polynomial]
    order: MonomialOrder
    complete_to_degree: float = UNBOUNDED
    reduced: bool = True
    added: list[Polynomial] = dc_field(default_factory=list)
    pairs_processed: int = 0
    max_pair_degree: int = 0

    @property
    def complete(self) -> bool:
        return self.complete_to_degree == UNBOUNDED

    @property
    def field(self) -> CycloField | None:
        return self.elements[0].field if self.elements else None

    def leading_monomials(self) -> list[Word]:
        return [leading(p, self.order)[0] for p in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        if not self.complete:
            raise InsufficientCompletion("ideal membership needs a complete basis")
        return not self.normal_form(f)


_SELECTIONS = ("degree", "fifo", "minlm")


def buchberger(S0: Sequence[Polynomial], order: MonomialOrder, max_degree: int | None = None, *,
               cap: int = DEFAULT_ELEMENT_CAP, selection: str = "degree",
               stop_on_new: bool = False) -> GroebnerBasis:
    """Complete ``S0`` to a reduced Groebner basis.

    Pending overlaps are processed by increasing degree of ``m1 lm(f2)`` (ties
    in insertion order) unless ``selection`` says otherwise.  With
    ``max_degree`` the overlaps above the bound are left unprocessed and the
    result reports ``complete_to_degree = max_degree``.  ``stop_on_new``
    returns as soon as the first new element is found (it is in ``added``).
    """
    if selection not in _SELECTIONS:
        raise ValueError(f"selection must be one of {_SELECTIONS}")
    start = interreduce(S0, order)
    if not start:
        return GroebnerBasis([], order)
    fld = start[0].field
    red = _Reducer(order)
    queue: list = []
    seq = itertools.count()
    key = order.key

    def schedule(k: int) -> None:
        lmk = red.lms[k]
        for j in red.active():
            lmj = red.lms[j]
            pairs = [(k, j, m1, m2) for m1, m2 in _overlap_factors(lmk, lmj, j == k)]
            if j != k:
                pairs += [(j, k, m1, m2) for m1, m2 in _overlap_factors(lmj, lmk, False)]
            for i1, i2, m1, m2 in pairs:
                word = m1 + red.lms[i2]
                n = next(seq)
                if selection == "degree":
                    prio = (len(word), n)
                elif selection == "fifo":
                    prio = (n,)
                else:
                    prio = (key(word), n)
                heapq.heappush(queue, (prio, i1, i2, m1, m2, len(word)))

    def insert(terms: dict) -> None:
        """Add a new monic element, evicting elements whose lm it divides."""
        pending = [terms]
        while pending:
            t = pending.pop()
            t = red.normal_form(t)
            if not t:
                continue
            t = _monic_terms(t, order)
            lm = max(t, key=key)
            evicted = [j for j in red.active() if red.lms[j] != lm and divides(lm, red.lms[j])]
            for j in evicted:
                pending.append(red.terms[j])
                red.remove(j)
            k = red.add(t)
            schedule(k)
            if len(red.active()) > cap:
                if max_degree is None:
                    raise CompletionError(
                        f"more than {cap} basis elements; supply max_degree to truncate")
                raise CompletionError(f"more than {cap} basis elements below degree {max_degree}")

    for p in start:
        k = red.add(p.terms)
    for k in red.active():
        schedule(k)

    added: list[Polynomial] = []
    truncated = False
    processed = 0
    max_pair_degree = 0
    while queue:
        prio, i1, i2, m1, m2, deg = heapq.heappop(queue)
        if red.terms[i1] is None or red.terms[i2] is None:
            continue
        if max_degree is not None and deg > max_degree:
            truncated = True
            if selection == "degree":
                break
            continue
        processed += 1
        max_pair_degree = max(max_pair_degree, deg)
        t1, t2 = red.terms[i1], red.terms[i2]
        o: dict = {}
        for w, c in t1.items():
            o[w + m2] = c
        for w, c in t2.items():
            nw = m1 + w
            s = o.get(nw)
            if s is None:
                o[nw] = -c
            else:
                s = s - c
                if s:
                    o[nw] = s
                else:
                    del o[nw]
        h = red.normal_form(o) if o else {}
        if not h:
            continue
        h = _monic_terms(h, order)
        added.append(Polynomial._wrap(fld, h))
        if stop_on_new:
            elements = [Polynomial._wrap(fld, red.terms[k]) for k in red.active()]
            return GroebnerBasis(elements + [added[-1]], order, complete_to_degree=deg - 1,
                                 reduced=False, added=added, pairs_processed=processed,
                                 max_pair_degree=max_pair_degree)
        insert(h)

    elements = interreduce([Polynomial._wrap(fld, red.terms[k]) for k in red.active()], order)
    return GroebnerBasis(elements, order,
                         complete_to_degree=max_degree if truncated else UNBOUNDED,
                         reduced=True, added=added, pairs_processed=processed,
                         max_pair_degree=max_pair_degree)


def all_overlap_relations(S: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Every overlap relation among the elements of S (each ordered pair, self-overlaps included)."""
    S = [p for p in S if p]
    out = []
    for a in S:
        for b in S:
            for inst in overlaps(a, b, order):
                out.append(overlap_relation(inst))
    return out


def verify_groebner(S: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Diamond-lemma check: every overlap relation reduces to zero modulo S."""
    return all(not normal_form(o, S, order) for o in all_overlap_relations(S, order))


# ---------------------------------------------------------------------------
# Groebner coset basis
# ---------------------------------------------------------------------------

def coset_basis(gb: GroebnerBasis, max_degree: int, weights: Mapping[int, int] | None = None,
                *, max_length: int = 64) -> list[Word]:
    """Words of weighted degree <= max_degree outside the leading ideal.

    ``weights`` maps letters to nonnegative integer weights (default 1 each).
    Output is by ascending degree, descending order within a degree. A
    truncated basis certifies words up to its completion length; needing a
    longer word raises InsufficientCompletion.
    """
    order = gb.order
    letters = list(order.precedence)
    wt = {x: 1 for x in letters}
    if weights:
        wt.update(weights)
    lms = set(gb.leading_monomials())
    lengths = sorted({len(w) for w in lms})
    found: list[tuple[int, Word]] = [(0, ())]
    frontier: list[tuple[int, Word]] = [(0, ())]
    length = 0
    while frontier:
        length += 1
        if length > max_length:
            raise InsufficientCompletion(
                "coset basis is infinite at this degree (zero-weight letters never blocked)")
        nxt = []
        for d, w in frontier:
            for x in letters:
                nd = d + wt[x]
                if nd > max_degree:
                    continue
                nw = w + (x,)
                if any(L <= len(nw) and nw[-L:] in lms for L in lengths):
                    continue
                if len(nw) > gb.complete_to_degree:
                    raise InsufficientCompletion(
                        f"basis certified only to length {gb.complete_to_degree}, needed {len(nw)}")
                nxt.append((nd, nw))
        found.extend(nxt)
        frontier = nxt
    found.sort(key=lambda e: (e[0], _neg(order.key(e[1]))))
    return [w for _, w in found]
