from fractions import Fraction as F

import pytest

from gsawtrap.catalog import LadderModel, exact_distribution
from gsawtrap.recurrences import RecursionSpec, builtin_spec, eval_recursion


def test_initial_values_echoed():
    got = eval_recursion(builtin_spec("square"), 7)
    assert got[:5] == [F(0)] * 5
    assert got[5:] == [F(1, 24), F(1, 48), F(7, 96)]
    got = eval_recursion(builtin_spec("triangular"), 7)
    assert got[:4] == [F(0)] * 4
    assert got[4:] == [F(1, 54), F(11, 324), F(43, 972), F(95, 1944)]


@pytest.mark.parametrize("name,lattice", [
    ("square", "square-two-sided"),
    ("triangular", "triangular-two-sided"),
])
def test_recursion_matches_series(name, lattice):
    got = eval_recursion(builtin_spec(name), 40)
    want = exact_distribution(LadderModel(lattice), 40).entries
    for n in range(41):
        assert got[n] == want.get(n, F(0)), n


def test_triangular_forcing_positive():
    spec = builtin_spec("triangular")
    assert all(spec.inhomogeneous(n) > 0 for n in range(4, 61))


def test_square_forcing_alternates():
    spec = builtin_spec("square")
    # negative at even indices, positive at odd, from n=7 on
    for n in range(7, 61):
        term = spec.inhomogeneous(n)
        assert (term < 0) == (n % 2 == 0), n


def test_partial_sums_below_one():
    for name in ("square", "triangular"):
        total = sum(eval_recursion(builtin_spec(name), 200))
        assert F(99, 100) < total < 1, name


def test_small_horizons():
    spec = builtin_spec("square")
    assert eval_recursion(spec, 0) == [F(0)]
    assert eval_recursion(spec, 5) == [F(0)] * 5 + [F(1, 24)]
    with pytest.raises(ValueError):
        eval_recursion(spec, -1)


def test_spec_validation():
    with pytest.raises(ValueError):
        RecursionSpec(
            name="bad",
            order=2,
            coefficients=(F(1),),  # wrong arity
            start_index=3,
            initial={3: F(1, 2), 4: F(1, 4)},
            inhomogeneous=lambda n: F(0),
        )
    with pytest.raises(ValueError):
        RecursionSpec(
            name="bad",
            order=2,
            coefficients=(F(1), F(1)),
            start_index=3,
            initial={3: F(1, 2)},  # must cover order entries
            inhomogeneous=lambda n: F(0),
        )
    with pytest.raises(ValueError):
        builtin_spec("hexagonal")
