from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsawtrap.rational import (
    NotADistributionError,
    NotExpandableError,
    PoleError,
    Poly1,
    Poly2,
    RationalFunction,
    bivariate_coefficient,
    mean_variance,
    series_coefficients,
    specialize,
)

X = Poly1.x()
X2, Y2 = Poly2.x(), Poly2.y()


def long_division(num, den, n):
    """Textbook synthetic division oracle: dense coefficient lists."""
    assert den[0] != 0
    rem = list(num) + [F(0)] * (n + 1 + len(den))
    out = []
    for i in range(n + 1):
        c = rem[i] / den[0]
        out.append(c)
        for k, dk in enumerate(den):
            rem[i + k] -= c * dk
    return out


def test_poly_arithmetic_basics():
    p = (X + 1) * (X - 1)
    assert p == X**2 - 1
    assert p(F(3)) == 8
    assert p.derivative() == 2 * X
    q, r = divmod(X**3 - 1, X - 1)
    assert r.is_zero()
    assert q == X**2 + X + 1
    assert (X**2 - 1).gcd(X**2 - 2 * X + 1) == X - 1


def test_poly2_substitution():
    p = 3 * X2**2 * Y2 - Y2**3 + 2
    assert p.subs_y(1) == 3 * Poly1.x(2) + 1
    assert p.subs_x(0) == Poly1({3: -1, 0: 2})
    assert p((2, 1)) == 13


def test_series_geometric():
    f = RationalFunction(Poly1.const(1), 1 - X)
    assert f.series(5) == [F(1)] * 6


def test_series_matches_long_division_fixture():
    num = X**3 * (X - 2)
    den = (X**2 - 2) * (X**3 - 4 * X**2 - 4 * X + 8)
    f = RationalFunction(num, den)
    got = f.series(30)
    want = long_division(num.coeffs_upto(num.degree), den.coeffs_upto(den.degree), 30)
    assert got == want


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def dense_poly(draw, max_deg=5, nonzero_c0=False):
    deg = draw(st.integers(min_value=0, max_value=max_deg))
    coeffs = [draw(small_fractions) for _ in range(deg + 1)]
    if nonzero_c0 and coeffs[0] == 0:
        coeffs[0] = F(1, 2)
    return coeffs


@settings(max_examples=60, deadline=None)
@given(dense_poly(), dense_poly(nonzero_c0=True))
def test_series_matches_long_division_property(num, den):
    f = RationalFunction(Poly1.from_coeffs(num), Poly1.from_coeffs(den))
    assert f.series(30) == long_division(num, den, 30)


def _truncated_inverse(den: Poly2, imax: int, jmax: int) -> Poly2:
    # 1/den as sum_k (1 - den/d00)^k / d00, truncating high powers; the
    # remainder term has total degree > imax+jmax so it cannot matter
    d00 = den.coefficient(0, 0)
    r = Poly2.const(1) - den * (1 / d00)

    def trunc(p):
        return Poly2(
            {(i, j): c for (i, j), c in p.coef.items() if i <= imax and j <= jmax}
        )

    acc = Poly2.const(1)
    term = Poly2.const(1)
    for _ in range(imax + jmax):
        term = trunc(term * r)
        acc = acc + term
    return trunc(acc * (1 / d00))


def test_bivariate_coefficients_match_truncated_inversion():
    num = X2**3 * Y2 * (X2 * Y2 - 2)
    den = (X2**2 * Y2 - 2) * (
        X2**3 * Y2**2 - 4 * X2**2 * Y2 - 4 * X2 * Y2 + 8
    )
    f = RationalFunction(num, den)
    imax = jmax = 10
    table = f.series2(imax, jmax)
    inv = _truncated_inverse(den, imax, jmax)
    expanded = num * inv
    for i in range(imax + 1):
        for j in range(jmax + 1):
            assert table[(i, j)] == expanded.coefficient(i, j), (i, j)


def test_bivariate_coefficient_simple():
    # 1/(1 - x*y) = sum (xy)^n
    f = RationalFunction(Poly2.const(1), 1 - X2 * Y2)
    assert bivariate_coefficient(f, 3, 3) == 1
    assert bivariate_coefficient(f, 3, 2) == 0


def test_specialize_consistency():
    f = RationalFunction(X2**2 * Y2, 2 - X2 * Y2)
    fx = specialize(f, y=1)
    fy = specialize(f, x=1)
    assert fx.series(6) == RationalFunction(X**2, 2 - X).series(6)
    assert fy.evaluate(1) == f.evaluate((1, 1)) == fx.evaluate(1)
    with pytest.raises(ValueError):
        specialize(f, x=1, y=1)


def test_series_not_expandable():
    f = RationalFunction(Poly1.const(1), X)
    with pytest.raises(NotExpandableError):
        f.series(3)


def test_series_after_cancellation():
    # x/(x - x^2) = 1/(1-x): the origin pole is removable
    f = RationalFunction(X, X - X**2)
    assert f.series(4) == [F(1)] * 5


def test_evaluate_removable_singularity():
    f = RationalFunction(1 - X**2, 1 - X)
    assert f.evaluate(1) == 2


def test_evaluate_pole():
    f = RationalFunction(Poly1.const(1), 1 - X)
    with pytest.raises(PoleError):
        f.evaluate(1)


def test_mean_variance_geometric():
    # geometric on {1,2,...}: PGF px/(1-qx); mean 1/p, var q/p^2
    p, q = F(1, 3), F(2, 3)
    f = RationalFunction(Poly1({1: p}), 1 - q * X)
    mean, var = mean_variance(f)
    assert mean == 3
    assert var == q / p**2 == 6


def test_mean_variance_rejects_non_distribution():
    f = RationalFunction(Poly1.const(2), 2 - X)
    with pytest.raises(NotADistributionError):
        mean_variance(f)


def test_mean_variance_matches_finite_differences():
    # exact rational central differences, floats only at the very end
    f = RationalFunction((X + X**2) * Poly1.const(F(1, 2)), 2 - X)
    assert f.evaluate(1) == 1
    mean, var = mean_variance(f)
    h = F(1, 10**6)
    d1 = (f.evaluate(1 + h) - f.evaluate(1 - h)) / (2 * h)
    d2 = (f.evaluate(1 + h) - 2 * f.evaluate(1) + f.evaluate(1 - h)) / h**2
    assert abs(float(d1 - mean)) < 1e-9
    assert abs(float(d2 + d1 - d1 * d1 - var)) < 1e-9


def test_series_coefficients_prefix_stability():
    f = RationalFunction(X**2, (2 - X) * (3 - X))
    assert series_coefficients(f, 10) == series_coefficients(f, 25)[:11]


def test_equals_cross_multiplication():
    a = RationalFunction(X, 1 - X)
    b = RationalFunction(X * (2 - X), (1 - X) * (2 - X))
    assert a.equals(b)
    assert not a.equals(RationalFunction(X, 1 + X))
