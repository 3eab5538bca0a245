"""Words and polynomials in a free associative algebra, plus monomial orders.

Letters are small integers; an :class:`Alphabet` gives them names.  A word is
a tuple of letters (the empty tuple is the unit).  Polynomials are immutable
maps from words to nonzero scalars of one cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .scalar import CycloField, Scalar, ScalarParseError, format_scalar, parse_expression

Word = tuple  # tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1

_SCALAR_TYPES = (Scalar, int, Fraction)


class Alphabet:
    """Names for letters ``0 .. len(names)-1``.

    ``n_vars`` marks how many leading letters are vector variables; the rest
    are group letters (used by the Hecke-type relation builders).
    """

    def __init__(self, names: Sequence[str], n_vars: int | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate letter names")
        self.n_vars = len(self.names) if n_vars is None else n_vars
        self._index = {name: i for i, name in enumerate(self.names)}

    @classmethod
    def for_hecke(cls, n: int, group_order: int) -> Alphabet:
        """Letters v1..vn then t2..t|G| (t1 would be the identity, which is 1)."""
        names = [f"v{i + 1}" for i in range(n)] + [f"t{g + 1}" for g in range(1, group_order)]
        return cls(names, n_vars=n)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and (self.names, self.n_vars) == (other.names, other.n_vars)

    def __hash__(self) -> int:
        return hash((self.names, self.n_vars))

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r}, n_vars={self.n_vars})"

    def letter(self, name: str) -> int:
        return self._index[name]

    def name(self, letter: int) -> str:
        return self.names[letter]

    def is_group_letter(self, letter: int) -> bool:
        return letter >= self.n_vars

    def var(self, i: int) -> int:
        """Letter of the variable with 0-based index ``i``."""
        return i

    def group_letter(self, g: int) -> int:
        """Letter t_g for a non-identity element index ``g`` (0 is the identity)."""
        if g <= 0:
            raise ValueError("the identity element has no letter; t_e is 1")
        return self.n_vars + g - 1

    def word(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "1"):
            return ()
        return tuple(self._index[tok.strip()] for tok in text.split("*"))

    def format_word(self, w: Word) -> str:
        return "*".join(self.names[x] for x in w) if w else "1"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Degree-compatible lexicographic order on words.

    ``precedence`` lists letters from largest to smallest.  ``DegRightLex``
    breaks degree ties by scanning from the rightmost letter, ``DegLeftLex``
    from the leftmost.
    """

    STYLES = ("degrightlex", "degleftlex")

    def __init__(self, precedence: Sequence[int], style: str = "degrightlex"):
        style = style.lower()
        if style not in self.STYLES:
            raise ValueError(f"unknown order style {style!r}")
        if len(set(precedence)) != len(precedence):
            raise ValueError("precedence lists a letter twice")
        self.style = style
        self.precedence = tuple(precedence)
        n = len(self.precedence)
        self._rank = {x: n - i for i, x in enumerate(self.precedence)}
        self._cache: dict = {}
        self._right = style == "degrightlex"

    def __repr__(self) -> str:
        return f"MonomialOrder({list(self.precedence)!r}, style={self.style!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and (self.style, self.precedence) == (other.style, other.precedence)

    def __hash__(self) -> int:
        return hash((self.style, self.precedence))

    def key(self, w: Word) -> tuple:
        """Sort key: ``key(u) > key(w)`` iff u is larger than w."""
        k = self._cache.get(w)
        if k is None:
            rank = self._rank
            letters = reversed(w) if self._right else w
            try:
                k = (len(w), tuple([rank[x] for x in letters]))
            except KeyError as exc:
                raise ValueError(f"letter {exc.args[0]} is not ordered by {self!r}") from None
            if len(self._cache) < 500_000:
                self._cache[w] = k
        return k

    def compare(self, u: Word, w: Word) -> int:
        ku, kw = self.key(u), self.key(w)
        return GREATER if ku > kw else LESS if ku < kw else EQUAL

    def sort_desc(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.key, reverse=True)


def default_order(alphabet: Alphabet, style: str = "degrightlex") -> MonomialOrder:
    """Letters ranked in alphabet order: v1 > ... > vn > t2 > t3 > ..."""
    return MonomialOrder(range(len(alphabet)), style)


def find_subword(v: Word, w: Word) -> list[tuple[Word, Word]]:
    """All factorizations ``w = m1 v m2``, by increasing start position."""
    if not v:
        raise ValueError("the empty word divides everything; pass a nonempty word")
    lv = len(v)
    return [(w[:s], w[s + lv:]) for s in range(len(w) - lv + 1) if w[s:s + lv] == v]


def divides(v: Word, w: Word) -> bool:
    lv = len(v)
    return any(w[s:s + lv] == v for s in range(len(w) - lv + 1))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """A finite combination of words with coefficients in one cyclotomic field."""

    __slots__ = ("field", "terms")

    def __init__(self, field: CycloField, terms: Mapping[Word, Scalar] | None = None):
        self.field = field
        clean = {}
        if terms:
            for w, c in terms.items():
                c = field(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, field: CycloField, terms: dict) -> Polynomial:
        p = object.__new__(cls)
        p.field = field
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, field: CycloField, word: Word, coeff=1) -> Polynomial:
        return cls(field, {tuple(word): coeff})

    @classmethod
    def constant(cls, field: CycloField, value) -> Polynomial:
        return cls(field, {(): value})

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, Scalar]]:
        return iter(self.terms.items())

    def coefficient(self, w: Word) -> Scalar:
        return self.terms.get(tuple(w), self.field.zero())

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def words(self) -> list[Word]:
        return list(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.field is other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"

    # -- arithmetic -----------------------------------------------------
    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, _SCALAR_TYPES):
            return Polynomial.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return Polynomial._wrap(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        if not c:
            return Polynomial(self.field)
        return Polynomial._wrap(self.field, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                key = u + w
                s = out.get(key)
                s = a * b if s is None else s + a * b
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial._wrap(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if len(other.terms) == 1 and () in other.terms:
                other = other.terms[()]
            else:
                raise ValueError("can only divide a polynomial by a scalar")
        return self.scale(self.field.one() / self.field(other))

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(self.field, 1)
        for _ in range(k):
            result = result * self
        return result

    def left_mul_word(self, m: Word) -> Polynomial:
        m = tuple(m)
        return Polynomial._wrap(self.field, {m + w: c for w, c in self.terms.items()})

    def right_mul_word(self, m: Word) -> Polynomial:
        m = tuple(m)
        return Polynomial._wrap(self.field, {w + m: c for w, c in self.terms.items()})

    def monic(self, order: MonomialOrder) -> Polynomial:
        _, c = leading(self, order)
        return self if c.is_one() else self.scale(self.field.one() / c)


def poly_arith(a: Polynomial, b, op: str) -> Polynomial:
    """Functional form: ``add``, ``sub``, ``mul``, ``scale``, ``left_mul_word``, ``right_mul_word``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "left_mul_word":
        return a.left_mul_word(b)
    if op == "right_mul_word":
        return a.right_mul_word(b)
    raise ValueError(f"unknown operation {op!r}")


def leading(p: Polynomial, order: MonomialOrder) -> tuple[Word, Scalar]:
    if not p.terms:
        raise ValueError("the zero polynomial has no leading term")
    w = max(p.terms, key=order.key)
    return w, p.terms[w]


def leading_monomial(p: Polynomial, order: MonomialOrder) -> Word:
    return leading(p, order)[0]


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def parse_polynomial(text: str, alphabet: Alphabet, field: CycloField) -> Polynomial:
    """Parse e.g. ``v2*v1 - (z^2)*v1*v2 - 1/2*t3``; ``z`` is the field's root of unity."""

    def atom(name: str, at: int) -> Polynomial:
        if name == "z":
            return Polynomial.constant(field, field.zeta())
        if name in alphabet._index:
            return Polynomial.monomial(field, (alphabet.letter(name),))
        raise ScalarParseError(f"unknown letter {name!r}", at)

    def number(k: int) -> Polynomial:
        return Polynomial.constant(field, k)

    try:
        return parse_expression(text, atom, number)
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"division by zero in {text.strip()!r}") from exc


def _format_coeff_times(c: Scalar, body: str) -> tuple[int, str]:
    """Sign and magnitude text for ``c * body``; ``body`` may be '' for constants."""
    if c.is_rational():
        fr = c.to_fraction()
        sign = -1 if fr < 0 else 1
        mag = format_scalar(-c if fr < 0 else c)
        if not body:
            return sign, mag
        return sign, body if mag == "1" else f"{mag}*{body}"
    text = format_scalar(c)
    if not body:
        return 1, f"({text})"
    return 1, f"({text})*{body}"


def format_polynomial(p: Polynomial, alphabet: Alphabet, order: MonomialOrder | None = None) -> str:
    """Canonical text, terms in descending order; round-trips through :func:`parse_polynomial`."""
    if not p.terms:
        return "0"
    words = order.sort_desc(p.terms) if order else sorted(p.terms, key=lambda w: (-len(w), w))
    out = ""
    for i, w in enumerate(words):
        body = "*".join(alphabet.names[x] for x in w)
        sign, text = _format_coeff_times(p.terms[w], body)
        if i == 0:
            out = ("-" if sign < 0 else "") + text
        else:
            out += (" - " if sign < 0 else " + ") + text
    return out
