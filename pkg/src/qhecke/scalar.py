"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A :class:`Scalar` is a residue modulo the cyclotomic polynomial Phi_m, stored
as an integer numerator vector over one positive common denominator.  The
representation is unique, so equality and hashing are structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, TypeVar, Union

CONDUCTOR_CAP = 512

Rational = Fraction


class FieldMismatch(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


class ScalarParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at column {pos + 1})"
        super().__init__(message)


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Divide ``a`` by ``b`` over Q; coefficients come back as Fractions."""
    a = [Fraction(c) for c in a]
    _trim(a)
    b = [Fraction(c) for c in b]
    _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _trim(a)
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed by exact division of x^m - 1 by Phi_d for every proper divisor d.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"conductor must be a positive integer, got {m!r}")
    if m > CONDUCTOR_CAP:
        raise ValueError(f"conductor {m} exceeds the cap {CONDUCTOR_CAP}")
    num: list = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem, "cyclotomic division left a remainder"
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class CycloField:
    """The cyclotomic field Q(zeta_m).  Use :func:`cyclotomic_field` to obtain one."""

    __slots__ = ("conductor", "minimal_polynomial", "degree", "_zero", "_one")

    def __init__(self, m: int):
        self.conductor = m
        self.minimal_polynomial = cyclotomic_polynomial(m)
        self.degree = len(self.minimal_polynomial) - 1
        self._zero = Scalar._raw(self, (0,) * self.degree, 1)
        self._one = Scalar._raw(self, (1,) + (0,) * (self.degree - 1), 1)

    def __repr__(self) -> str:
        return f"CycloField({self.conductor})"

    def __reduce__(self):
        return (cyclotomic_field, (self.conductor,))

    def zero(self) -> Scalar:
        return self._zero

    def one(self) -> Scalar:
        return self._one

    def zeta(self) -> Scalar:
        """The primitive root of unity exp(2 pi i / m)."""
        return self.from_poly([0, 1])

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"{value!r} does not live in {self!r}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        return self.rational(value)

    def rational(self, value: Union[int, Fraction]) -> Scalar:
        value = Fraction(value)
        return Scalar._raw(self, (value.numerator,) + (0,) * (self.degree - 1),
                           value.denominator)

    def from_poly(self, coeffs: Iterable) -> Scalar:
        """Reduce an arbitrary rational polynomial in zeta modulo Phi_m."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in fr]
        return Scalar._make(self, _reduce_mod(num, self.minimal_polynomial), den)


@lru_cache(maxsize=None)
def cyclotomic_field(m: int) -> CycloField:
    cyclotomic_polynomial(m)  # validates m and the cap
    return CycloField(m)


def _reduce_mod(num: list, phi: Sequence[int]) -> list:
    """Reduce an integer coefficient list modulo the monic integer polynomial phi."""
    d = len(phi) - 1
    num = list(num)
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        if c:
            base = k - d
            for i in range(d):
                if phi[i]:
                    num[base + i] -= c * phi[i]
    if len(num) < d:
        num.extend([0] * (d - len(num)))
    return num[:d]


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class Scalar:
    """An immutable element of Q(zeta_m)."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, field: CycloField, num: tuple, den: int) -> Scalar:
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, field: CycloField, num: Sequence[int], den: int) -> Scalar:
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return cls._raw(field, tuple(num), den)

    # -- inspection -----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatch(
                    f"cannot combine scalars of Q(zeta_{self.field.conductor}) "
                    f"and Q(zeta_{other.field.conductor})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Scalar._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        return Scalar._make(self.field,
                            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        d = self.field.degree
        if d == 1:
            return Scalar._make(self.field, [a[0] * b[0]], self.den * other.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar._make(self.field, _reduce_mod(prod, self.field.minimal_polynomial),
                            self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.field.degree == 1:
            return Scalar._make(self.field, [self.den], self.num[0])
        # extended Euclid: find s with s * a = 1 mod Phi_m
        phi = [Fraction(c) for c in self.field.minimal_polynomial]
        r0, r1 = phi, [Fraction(c, self.den) for c in self.num]
        _trim(r1)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        # r1 is a nonzero constant because Phi_m is irreducible
        c = r1[0]
        return self.field.from_poly([x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return (self.field is other.field and self.den == other.den
                    and self.num == other.num)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.conductor, self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r}, m={self.field.conductor})"

    def __str__(self) -> str:
        return format_scalar(self)


QQ = cyclotomic_field(1)


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Functional form of the four field operations (``add``, ``sub``, ``mul``, ``div``)."""
    if a.field is not b.field:
        raise FieldMismatch("scalars live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def embed(a: Scalar, target: CycloField) -> Scalar:
    """Image of ``a`` under zeta_m -> zeta_M^(M/m)."""
    m, big = a.field.conductor, target.conductor
    if big % m:
        raise ValueError(f"Q(zeta_{m}) does not embed in Q(zeta_{big})")
    step = big // m
    coeffs = [0] * (step * (len(a.num) - 1) + 1)
    for i, c in enumerate(a.num):
        coeffs[i * step] = c
    return Scalar._make(target, _reduce_mod(coeffs, target.minimal_polynomial), a.den)


def common_field(fields: Iterable[CycloField]) -> CycloField:
    m = 1
    for f in fields:
        m = m * f.conductor // math.gcd(m, f.conductor)
    return cyclotomic_field(m)


def lift_to_common_field(values: Sequence[Scalar]) -> list[Scalar]:
    """Embed every scalar into the smallest cyclotomic field containing all of them."""
    target = common_field(v.field for v in values)
    return [v if v.field is target else embed(v, target) for v in values]


def root_of_unity(order: int, field: CycloField, power: int = 1) -> Scalar:
    """zeta_order^power inside ``field`` (requires order | conductor)."""
    if field.conductor % order:
        raise ValueError(f"Q(zeta_{field.conductor}) has no primitive {order}-th root of unity")
    return field.zeta() ** ((field.conductor // order) * power)


# ---------------------------------------------------------------------------
# literal grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")

T = TypeVar("T")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, m.start(3)))
        pos = m.end()
    return tokens


def parse_expression(text: str, atom: Callable[[str, int], T], number: Callable[[int], T]) -> T:
    """Parse ``+ - * / ^`` expressions with parentheses over caller-defined atoms.

    ``atom`` resolves identifiers; ``number`` builds integer literals.  The
    value type must support the arithmetic operators used in the text.
    """
    tokens = tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ScalarParseError("unexpected end of expression", len(text))
        pos += 1
        return tok

    def expr():
        value = term()
        while (tok := peek()) and tok[0] == "op" and tok[1] in "+-":
            take()
            rhs = term()
            value = value + rhs if tok[1] == "+" else value - rhs
        return value

    def term():
        value = unary()
        while (tok := peek()) and tok[0] == "op" and tok[1] in "*/":
            take()
            rhs = unary()
            value = value * rhs if tok[1] == "*" else value / rhs
        return value

    def unary():
        tok = peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            take()
            value = unary()
            return -value if tok[1] == "-" else value
        return power()

    def power():
        base = primary()
        tok = peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            take()
            return base ** exponent()
        return base

    def exponent() -> int:
        tok = take()
        if tok[0] == "op" and tok[1] == "-":
            return -exponent()
        if tok[0] == "op" and tok[1] == "(":
            e = exponent()
            close = take()
            if close[1] != ")":
                raise ScalarParseError("expected ')'", close[2])
            return e
        if tok[0] != "num":
            raise ScalarParseError("exponent must be an integer", tok[2])
        return int(tok[1])

    def primary():
        tok = take()
        kind, val, at = tok
        if kind == "num":
            return number(int(val))
        if kind == "name":
            return atom(val, at)
        if val == "(":
            value = expr()
            close = take()
            if close[1] != ")":
                raise ScalarParseError("expected ')'", close[2])
            return value
        raise ScalarParseError(f"unexpected {val!r}", at)

    if not tokens:
        raise ScalarParseError("empty expression", 0)
    result = expr()
    if pos != len(tokens):
        raise ScalarParseError(f"unexpected {tokens[pos][1]!r}", tokens[pos][2])
    return result


def parse_scalar(text: str, field: CycloField) -> Scalar:
    """Parse a scalar literal such as ``-1/2*z^3 + 2`` (``z`` is zeta_m)."""

    def atom(name: str, at: int) -> Scalar:
        if name == "z":
            return field.zeta()
        raise ScalarParseError(f"unknown symbol {name!r}", at)

    try:
        return parse_expression(text, atom, field.rational)
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"division by zero in {text.strip()!r}") from exc


def _format_rational(fr: Fraction) -> str:
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def format_scalar(a: Scalar) -> str:
    """Canonical text form, highest power of z first; parses back to ``a``."""
    parts: list[tuple[int, str]] = []
    for k in range(len(a.num) - 1, -1, -1):
        c = a.num[k]
        if not c:
            continue
        fr = Fraction(c, a.den)
        sign = -1 if fr < 0 else 1
        mag = -fr if fr < 0 else fr
        if k == 0:
            body = _format_rational(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{_format_rational(mag)}*{zpart}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out
