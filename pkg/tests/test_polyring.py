import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clockwork.polyring import (
    B_VAR,
    ONE,
    W_VAR,
    ZERO,
    LaurentPoly,
    PotentialValue,
    color_var,
    exact_divide,
    g_minus,
    g_plus,
    link_var,
    parse_var,
    rat_eq,
)

VARS = [link_var(1), link_var(2), color_var("a"), B_VAR, W_VAR]

monomials = st.dictionaries(st.sampled_from(VARS), st.integers(-3, 3), max_size=3)
polys = st.lists(st.tuples(monomials, st.integers(-4, 4)), max_size=5).map(
    lambda ts: sum((LaurentPoly.monomial(m, c) for m, c in ts), ZERO))
units = st.tuples(monomials, st.sampled_from([1, -1])).map(lambda t: LaurentPoly.monomial(*t))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(units)
def test_unit_inverse(u):
    assert u * u ** -1 == ONE
    assert u.is_unit()


@given(polys)
@settings(max_examples=60, deadline=None)
def test_json_round_trip_is_identity(p):
    text = p.to_json()
    assert LaurentPoly.from_json(text) == p
    assert LaurentPoly.from_json(text).to_json() == text


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_substitution_is_a_homomorphism(a, b):
    x = LaurentPoly.var(color_var("x"))
    sigma = {link_var(1): x, link_var(2): x ** -1, B_VAR: -x}
    assert (a * b).substitute(sigma) == a.substitute(sigma) * b.substitute(sigma)
    assert (a + b).substitute(sigma) == a.substitute(sigma) + b.substitute(sigma)


def test_substitute_rejects_non_unit_for_negative_exponent():
    x = LaurentPoly.var(link_var(1))
    with pytest.raises(ValueError):
        (x ** -1).substitute({link_var(1): x + ONE})


def test_no_zero_terms_stored():
    x = LaurentPoly.var(link_var(1))
    p = (x + ONE) - x
    assert p == ONE
    assert len(p) == 1
    assert LaurentPoly.monomial({link_var(1): 0}) == ONE


def test_printing():
    x = LaurentPoly.var(link_var(1))
    assert str((x + x ** -1) * (x - x ** -1)) == "X1^2 - X1^-2"
    assert str(ZERO) == "0"


def test_parse_var_names():
    for v in VARS + [link_var(12)]:
        assert parse_var(v.name) == v
    with pytest.raises(ValueError):
        parse_var("Y3")


@given(polys, polys.filter(lambda p: not p.is_zero()))
@settings(max_examples=80, deadline=None)
def test_exact_divide_recovers_factor(a, b):
    assert exact_divide(a * b, b) == a


def test_exact_divide_detects_non_divisibility():
    x = LaurentPoly.var(link_var(1))
    assert exact_divide(x * x + ONE, x - x ** -1) is None
    assert exact_divide(ONE, x + ONE) is None
    assert exact_divide(2 * x, 4 * x) is None


@given(polys, polys.filter(lambda p: not p.is_zero()), units)
@settings(max_examples=60, deadline=None)
def test_rat_eq_ignores_common_factors(a, b, u):
    assert rat_eq(PotentialValue(a, b), PotentialValue(a * u, b * u))
    assert rat_eq(PotentialValue(a, b).canonical(), PotentialValue(a, b))


def test_canonical_form_of_unknot_value():
    x = LaurentPoly.var(color_var("a"))
    v = PotentialValue(x, x * x - ONE)
    assert str(v) == "1/(X_a - X_a^-1)"
    assert str(PotentialValue(-ONE, x ** -1 - x)) == "1/(X_a - X_a^-1)"
    assert v.to_json_obj()["canonical"] is True


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        PotentialValue(ONE, ZERO)


def test_g_helpers():
    x = LaurentPoly.var(link_var(1))
    assert g_plus(x) == x + x ** -1
    assert g_minus(x) == x - x ** -1
    assert g_minus(x) * g_plus(x) == g_minus(x * x)
