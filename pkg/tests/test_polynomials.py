"""Integer polynomial arithmetic and rational factorization, against sympy."""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mckayq.polynomials import (
    IntPolynomial,
    factor_over_Q,
    is_prime,
    parse_polynomial,
    poly_gcd,
    primes_below,
    squarefree_decomposition,
    squarefree_part,
)

X = sympy.Symbol("x")


def to_sympy(f: IntPolynomial):
    return sympy.Poly(list(reversed(f.coeffs)), X)


def from_sympy(p) -> IntPolynomial:
    return IntPolynomial(list(reversed([int(c) for c in p.all_coeffs()])))


poly_strategy = st.lists(st.integers(-6, 6), min_size=1, max_size=7).filter(
    lambda c: any(c))


# -- ring arithmetic ---------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(poly_strategy, poly_strategy)
def test_arithmetic_matches_sympy(ca, cb):
    a, b = IntPolynomial(ca), IntPolynomial(cb)
    sa, sb = to_sympy(a), to_sympy(b)
    assert from_sympy(sa + sb) == a + b or (sa + sb).is_zero and (a + b).is_zero
    assert from_sympy(sa * sb) == a * b
    assert from_sympy(sa - sb) == a - b or (sa - sb).is_zero and (a - b).is_zero
    assert a.evaluate(3) == sa.eval(3)
    assert from_sympy(sa.diff(X)) == a.derivative() or a.degree == 0


def test_basic_properties():
    x = IntPolynomial.x()
    f = x ** 3 - 2 * x + IntPolynomial.one()
    assert f.coeffs == (1, -2, 0, 1)
    assert f.degree == 3 and f.lc == 1 and f.constant == 1
    assert f.is_monic and not IntPolynomial([1, 2]).is_monic
    assert IntPolynomial.zero().is_zero
    assert IntPolynomial([0, 0, 3, 0]).coeffs == (0, 0, 3)
    assert IntPolynomial([2, 4, 6]).content() == 2
    assert IntPolynomial([2, 4, 6]).primitive() == IntPolynomial([1, 2, 3])
    assert (f ** 2).degree == 6
    assert f.try_divide(x) is None
    assert (f * x).try_divide(f) == x


def test_parse_str_round_trip_fixed():
    for text, coeffs in [
        ("x^2-x-6", (-6, -1, 1)),
        ("x^5+2*x^4-44*x^3-40*x^2+400*x+128", (128, 400, -40, -44, 2, 1)),
        ("7", (7,)),
        ("-x", (0, -1)),
        ("x", (0, 1)),
        ("2*x+1", (1, 2)),
        ("x^3+x", (0, 1, 0, 1)),
    ]:
        f = parse_polynomial(text)
        assert f.coeffs == coeffs, text
        assert parse_polynomial(str(f)) == f


@settings(max_examples=60, deadline=None)
@given(poly_strategy)
def test_parse_str_round_trip_random(coeffs):
    f = IntPolynomial(coeffs)
    assert parse_polynomial(str(f)) == f


def test_parse_errors():
    for bad in ("", "x^", "x**2", "y+1", "x^-1", "1//2", "x^2 2"):
        with pytest.raises(ValueError):
            parse_polynomial(bad)


# -- gcd and squarefree ------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(poly_strategy, poly_strategy)
def test_gcd_matches_sympy(ca, cb):
    a, b = IntPolynomial(ca), IntPolynomial(cb)
    got = poly_gcd(a, b)
    want = sympy.gcd(to_sympy(a), to_sympy(b))
    # both are primitive with positive lc, up to rational scaling
    assert to_sympy(got).monic() == sympy.Poly(want, X).monic()


def test_squarefree():
    x = IntPolynomial.x()
    f = (x - IntPolynomial.one()) ** 3 * (x + IntPolynomial.one())
    assert squarefree_part(f) == (x - IntPolynomial.one()) * (x + IntPolynomial.one())
    decomp = squarefree_decomposition(f)
    assert (x - IntPolynomial.one(), 3) in decomp
    assert (x + IntPolynomial.one(), 1) in decomp
    rebuilt = IntPolynomial.one()
    for g, m in decomp:
        rebuilt = rebuilt * g ** m
    assert rebuilt == f.primitive()


# -- factorization ------------------------------------------------------------------


def sympy_factors(f: IntPolynomial):
    _, pairs = sympy.factor_list(to_sympy(f).as_expr(), X)
    out = []
    for base, mult in pairs:
        g = from_sympy(sympy.Poly(base, X)).primitive()
        if g.lc < 0:
            g = -g
        if g.degree >= 1:
            out.extend([g] * mult)
    out.sort(key=lambda h: (h.degree, h.coeffs))
    return tuple(out)


@settings(max_examples=40, deadline=None)
@given(poly_strategy)
def test_factor_matches_sympy(coeffs):
    f = IntPolynomial(coeffs)
    if f.degree == 0:
        assert factor_over_Q(f) == ()
        return
    assert factor_over_Q(f) == sympy_factors(f)


def test_factor_frozen_cases():
    quintic = parse_polynomial("x^5+2*x^4-44*x^3-40*x^2+400*x+128")
    assert factor_over_Q(quintic) == (quintic,)
    assert sympy.Poly(to_sympy(quintic)).is_irreducible

    x = IntPolynomial.x()
    eight = x - IntPolynomial([8])
    assert factor_over_Q(eight * quintic) == (eight, quintic)

    c12 = parse_polynomial("x^12-1")
    degrees = sorted(g.degree for g in factor_over_Q(c12))
    assert degrees == [1, 1, 2, 2, 2, 4]       # the divisors' totients

    assert factor_over_Q(parse_polynomial("6*x^2+5*x+1")) == (
        parse_polynomial("2*x+1"), parse_polynomial("3*x+1"))

    with pytest.raises(ValueError):
        factor_over_Q(IntPolynomial.zero())


# -- small prime utilities -----------------------------------------------------------


def test_primes():
    assert primes_below(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(2, 40) if is_prime(n)] == primes_below(40)
    assert not is_prime(1) and not is_prime(0)
