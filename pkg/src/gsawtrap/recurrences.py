"""Inhomogeneous linear recursions for the two-sided trapping laws.

The trapping probability sequences of the two-sided ladders satisfy
constant-coefficient recursions whose inhomogeneous parts decay
geometrically and depend on the parity of n. They are an independent
route to the same numbers as the generating functions: the homogeneous
coefficients come from the denominator polynomial, the inhomogeneous
part from what is left over, so agreement between the two routes is a
meaningful cross-check rather than a tautology.

Everything is exact. The half-integer powers written in the closed forms
only ever get evaluated at the parity that makes them integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable


@dataclass(frozen=True)
class RecursionSpec:
    """P_n = sum_k coefficients[k-1] * P_{n-k} + inhomogeneous(n), n >= start_index + order."""

    name: str
    order: int
    coefficients: tuple[Fraction, ...]
    start_index: int
    initial: dict[int, Fraction]
    inhomogeneous: Callable[[int], Fraction]

    def __post_init__(self):
        if len(self.coefficients) != self.order:
            raise ValueError("coefficient count must equal the order")
        expected = set(range(self.start_index, self.start_index + self.order))
        if set(self.initial) != expected:
            raise ValueError(f"initial values must cover indices {sorted(expected)}")


def _square_inhomogeneous(n: int) -> Fraction:
    # the 1/3 carries over from the global 1/3 in the generating
    # function; hand-stated versions of this recursion tend to drop it
    # (gsawtrap.errata, finding f)
    if n % 2 == 0:
        return Fraction(-(n - 6), 3) * Fraction(1, 2 ** ((n + 4) // 2))
    return Fraction(n - 3, 3) * Fraction(1, 2 ** ((n + 3) // 2))


def _triangular_inhomogeneous(n: int) -> Fraction:
    if n % 2 == 0:
        inner = (Fraction(5 * n, 2) + 7) * Fraction(1, 3 ** ((n + 2) // 2))
    else:
        inner = (Fraction(3 * n, 2) + Fraction(7, 2)) * Fraction(1, 3 ** ((n + 1) // 2))
    return Fraction(1, 16) * inner


_SQUARE = RecursionSpec(
    name="square",
    order=3,
    coefficients=(Fraction(1, 2), Fraction(1, 2), Fraction(-1, 8)),
    start_index=5,
    initial={5: Fraction(1, 24), 6: Fraction(1, 48), 7: Fraction(7, 96)},
    inhomogeneous=_square_inhomogeneous,
)

_TRIANGULAR = RecursionSpec(
    name="triangular",
    order=4,
    coefficients=(
        Fraction(5, 6),
        Fraction(-1, 18),
        Fraction(1, 6),
        Fraction(-1, 36),
    ),
    start_index=4,
    initial={
        4: Fraction(1, 54),
        5: Fraction(11, 324),
        6: Fraction(43, 972),
        7: Fraction(95, 1944),
    },
    inhomogeneous=_triangular_inhomogeneous,
)


def builtin_spec(which: str) -> RecursionSpec:
    """The recursion for "square" or "triangular" (two-sided ladders)."""
    try:
        return {"square": _SQUARE, "triangular": _TRIANGULAR}[which]
    except KeyError:
        raise ValueError(f"no builtin recursion named {which!r}") from None


def eval_recursion(spec: RecursionSpec, n_max: int) -> list[Fraction]:
    """Probabilities P_0 .. P_n_max.

    Indices below start_index are zero; the stored initial values seed
    the recursion. n_max may be anything >= 0, including values inside
    the initial segment.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = [Fraction(0)] * (n_max + 1)
    for n, v in spec.initial.items():
        if n <= n_max:
            out[n] = v
    for n in range(spec.start_index + spec.order, n_max + 1):
        acc = spec.inhomogeneous(n)
        for k, coef in enumerate(spec.coefficients, start=1):
            acc += coef * out[n - k]
        out[n] = acc
    return out
