import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qhecke.scalar import (CONDUCTOR_CAP, QQ, FieldMismatch, ScalarParseError, cyclotomic_field,
                           cyclotomic_polynomial, embed, euler_phi, format_scalar, lift_to_common_field,
                           parse_scalar, root_of_unity, scalar_arith)


def numeric(a):
    """Evaluate a scalar at zeta = exp(2 pi i / m) (independent oracle)."""
    m = a.field.conductor
    z = cmath.exp(2j * cmath.pi / m)
    return sum(float(c) * z ** k for k, c in enumerate(a.coeffs))


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("m", list(range(1, 61)) + [105, 128, 210, 512])
def test_cyclotomic_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in expected]
    assert cyclotomic_field(m).degree == euler_phi(m) == sympy.totient(m)


def test_conductor_cap():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(CONDUCTOR_CAP + 1)
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_arith_examples():
    F4, F8, F3 = cyclotomic_field(4), cyclotomic_field(8), cyclotomic_field(3)
    i = F4.zeta()
    assert i * i == -1
    z8 = F8.zeta()
    assert 1 / z8 == -z8 ** 3
    assert scalar_arith(F8.one(), z8, "div") == -z8 ** 3
    a = F3.rational(Fraction(1, 2)) + F3.zeta()
    b = F3.rational(Fraction(1, 2)) - F3.zeta()
    assert scalar_arith(a, b, "add") == 1


def test_division_by_zero_and_mismatch():
    F4 = cyclotomic_field(4)
    with pytest.raises(ZeroDivisionError):
        F4.one() / F4.zero()
    with pytest.raises(FieldMismatch):
        F4.zeta() + cyclotomic_field(8).zeta()


def test_embed_examples():
    F2, F4, F8, F3, F12 = (cyclotomic_field(m) for m in (2, 4, 8, 3, 12))
    assert embed(F2(-1), F8) == F8(-1)
    assert embed(F4.zeta(), F8) == F8.zeta() ** 2
    img = embed(F3.zeta(), F12)
    assert img == F12.zeta() ** 4
    assert img * img + img + 1 == 0
    with pytest.raises(ValueError):
        embed(F3.zeta(), F8)


def test_lift_to_common_field():
    a, b = lift_to_common_field([cyclotomic_field(4).zeta(), cyclotomic_field(6).zeta()])
    assert a.field is b.field is cyclotomic_field(12)
    assert a ** 4 == 1 and b ** 6 == 1


@pytest.mark.parametrize("m", range(1, 33))
def test_zeta_order(m):
    z = cyclotomic_field(m).zeta()
    assert z ** m == 1
    assert all(z ** k != 1 for k in range(1, m))


def test_root_of_unity():
    F = cyclotomic_field(12)
    assert root_of_unity(3, F) == F.zeta() ** 4
    assert root_of_unity(4, F, 3) == F.zeta() ** 9
    with pytest.raises(ValueError):
        root_of_unity(5, F)


def test_parse_and_format():
    F = cyclotomic_field(8)
    z = F.zeta()
    assert parse_scalar("-1/2*z^3 + 2", F) == -z ** 3 / 2 + 2
    assert parse_scalar("z**-1", F) == z.inverse()
    assert parse_scalar(" ( 1 + z ) ^ 2 ", F) == 1 + 2 * z + z * z
    assert format_scalar(-z ** 3 / 2 + 2) == "-1/2*z^3 + 2"
    assert format_scalar(F.zero()) == "0"
    assert format_scalar(-z ** 3) == "-z^3"


def test_parse_errors_carry_column():
    with pytest.raises(ScalarParseError, match="column 5"):
        parse_scalar("1 + y", QQ)
    with pytest.raises(ScalarParseError):
        parse_scalar("1/0", QQ)
    with pytest.raises(ScalarParseError):
        parse_scalar("", QQ)


CONDUCTORS = [1, 3, 4, 5, 8, 12]


@st.composite
def field_elements(draw, m=None, count=1):
    m = m if m is not None else draw(st.sampled_from(CONDUCTORS))
    F = cyclotomic_field(m)
    out = []
    for _ in range(count):
        coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                               min_size=F.degree, max_size=F.degree))
        out.append(F.from_poly(coeffs))
    return out


@settings(max_examples=60, deadline=None)
@given(field_elements(count=3))
def test_field_axioms(vals):
    a, b, c = vals
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(field_elements(count=2))
def test_arith_matches_numeric_oracle(vals):
    a, b = vals
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9
    assert abs(numeric(a - b) - (numeric(a) - numeric(b))) < 1e-9
    if b:
        assert abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-7


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(1, 4), (2, 8), (4, 8), (3, 12), (4, 12), (6, 12), (5, 10)]), st.data())
def test_embed_is_ring_hom(pair, data):
    m, M = pair
    a, b = data.draw(field_elements(m=m, count=2))
    T = cyclotomic_field(M)
    assert embed(a + b, T) == embed(a, T) + embed(b, T)
    assert embed(a * b, T) == embed(a, T) * embed(b, T)
    assert embed(cyclotomic_field(m).one(), T) == 1
    assert embed(cyclotomic_field(m).zero(), T) == 0
    assert abs(numeric(embed(a, T)) - numeric(a)) < 1e-9


@settings(max_examples=60, deadline=None)
@given(field_elements())
def test_format_round_trip(vals):
    a = vals[0]
    assert parse_scalar(format_scalar(a), a.field) == a


def test_rational_hash_matches_fraction():
    assert hash(QQ(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert QQ(Fraction(3, 4)) == Fraction(3, 4)
