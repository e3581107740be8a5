import math
from fractions import Fraction as F

import numpy as np
import pytest

from gsawtrap.rational import Poly1, RationalFunction
from gsawtrap.roots import (
    ComplexDominantPoleError,
    NoRealPoleError,
    dominant_decay_rate,
    isolate_real_roots,
    real_roots,
    square_free_part,
)

X = Poly1.x()


def test_real_roots_simple_cubic():
    p = (X - 2) * (X + 3) * (2 * X - 1)
    roots = real_roots(p)
    assert len(roots) == 3
    for got, want in zip(roots, [F(-3), F(1, 2), F(2)]):
        assert abs(got - want) < F(1, 10**12)


def test_exact_root_at_bisection_point():
    # 0 is the first midpoint tried; exercises the deflation path
    p = X * (X**2 - 2)
    roots = real_roots(p)
    assert F(0) in roots
    assert len(roots) == 3


def test_multiple_roots_collapse():
    p = (X - 1) ** 3 * (X + 2)
    assert square_free_part(p) == ((X - 1) * (X + 2)).monic()
    roots = real_roots(p)
    assert len(roots) == 2


def test_no_real_roots():
    assert isolate_real_roots(X**2 + 1) == []
    f = RationalFunction(Poly1.const(1), X**2 + 1)
    with pytest.raises(NoRealPoleError):
        dominant_decay_rate(f)


def test_decay_rate_geometric():
    f = RationalFunction(Poly1.const(1), 2 - X)
    assert dominant_decay_rate(f) == pytest.approx(0.5, abs=1e-13)


def test_decay_rate_two_row_square_cubic():
    den = X**3 - 4 * X**2 - 4 * X + 8
    f = RationalFunction(Poly1.const(1), den)
    rate = dominant_decay_rate(f)
    assert abs(rate - math.cos(math.pi / 7)) < 1e-9
    # the same pole via the companion matrix, as an independent check
    eig = np.roots([1, -4, -4, 8])
    smallest = min(abs(z) for z in eig)
    assert rate == pytest.approx(1.0 / smallest, abs=1e-9)


def test_decay_rate_two_row_triangular_quartic():
    den = X**4 - 6 * X**3 + 2 * X**2 - 30 * X + 36
    f = RationalFunction(Poly1.const(1), den)
    rate = dominant_decay_rate(f)
    eig = np.roots([1, -6, 2, -30, 36])
    real_eig = sorted(abs(z) for z in eig if abs(z.imag) < 1e-9)
    assert rate == pytest.approx(1.0 / real_eig[0], abs=1e-9)
    assert abs(rate - 0.93) < 0.005


def test_decay_rate_ignores_cancelled_pole():
    # (2-x) cancels; the remaining pole is 3
    num = 2 - X
    den = (2 - X) * (3 - X)
    f = RationalFunction(num, den)
    assert dominant_decay_rate(f) == pytest.approx(1 / 3, abs=1e-12)


def test_complex_dominant_pole_detected():
    f = RationalFunction(Poly1.const(1), (X**2 + 1) * (3 - X))
    with pytest.raises(ComplexDominantPoleError):
        dominant_decay_rate(f)


def test_rational_root_returned_exactly():
    p = (X - F(3, 2)) * (X**2 - 3)
    roots = real_roots(p)
    assert any(r == F(3, 2) for r in roots) or any(
        abs(r - F(3, 2)) < F(1, 10**12) for r in roots
    )
    assert len(roots) == 3
