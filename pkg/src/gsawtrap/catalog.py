"""Generating functions for trapping on two-row ladders.

Every walk generating function here is assembled from precursor
generating functions (hooks, twists, crooks: the irreducible opening
segments of a walk) by the renewal-style compositions

    wall one-sided   Lw = Hw / (1 - Tw)
    plain one-sided  L  = H + T * Lw
    two-sided        L2 = (H2 + T2) * Lw

on the square ladder, and on the triangular ladder (uniform walks only)

    W = (Hd + Hu) / (1 - Tu - x Td/(2-x) - x Cr/(2-x) - x^3/(3 (2-x)))
    N = x W / (2 - x)
    S = (x/2) ((2x/3) N + (x/3) W)
        + (x/2) ((Hd + Hu) x N + Tu W + Td N + Cr N + (x^2/3) N).

The compositions are the source of truth. Hand-simplified closed forms
of the same functions are kept separately in printed_forms() and are
compared against the compositions in the test suite; the ones that do
not agree are catalogued in gsawtrap.errata instead.

The bias C weights each candidate step by C^(number of its occupied
neighbours other than the head). The square-family precursors below are
valid for every C > 0 and collapse to the uniform forms at C = 1. After
the opening segment of a biased walk, the column behind the head is
fully occupied, which is exactly the wall variant of the one-sided
ladder; that is why the wall function Lw appears in all three square
compositions. No closed form is known to us for biased triangular
ladders, so those go through the enumerator or the simulator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .lattices import LatticeTopology
from .rational import Poly1, Poly2, RationalFunction, mean_variance
from .roots import dominant_decay_rate

X, Y = Poly2.x(), Poly2.y()
x = Poly1.x()

SQUARE_MODELS = ("square-one-sided", "square-two-sided")
TRIANGULAR_MODELS = (
    "triangular-wide",
    "triangular-narrow",
    "triangular-two-sided",
)
MODEL_NAMES = SQUARE_MODELS + TRIANGULAR_MODELS

_TOPOLOGY_KIND = {
    "square-one-sided": "square-ladder-one-sided",
    "square-two-sided": "square-ladder-two-sided",
    "triangular-wide": "triangular-ladder-wide",
    "triangular-narrow": "triangular-ladder-narrow",
    "triangular-two-sided": "triangular-ladder-two-sided",
}


class UnsupportedBiasError(ValueError):
    """No closed form for this lattice/bias combination."""


class UnsupportedObservableError(ValueError):
    """The requested marginal does not exist in the catalog."""


@dataclass(frozen=True)
class LadderModel:
    """A ladder lattice plus the step biasC (and the wall switch)."""

    lattice: str
    C: Fraction = Fraction(1)
    wall: bool = False

    def __post_init__(self):
        if self.lattice not in MODEL_NAMES:
            raise ValueError(f"unknown ladder model {self.lattice!r}")
        object.__setattr__(self, "C", Fraction(self.C))
        if self.C <= 0:
            raise ValueError("the bias C must be positive")
        if self.wall and self.lattice != "square-one-sided":
            raise ValueError("the wall variant only exists for square-one-sided")

    def topology(self) -> LatticeTopology:
        return LatticeTopology(_TOPOLOGY_KIND[self.lattice], wall=self.wall)


@dataclass(frozen=True)
class GFEntry:
    name: str
    gf: RationalFunction
    provenance: str  # "composition" or "transcribed closed form"


@dataclass
class TrappingDistribution:
    """Exact law of one observable, truncated at a horizon."""

    observable: str
    entries: dict[int, Fraction]
    residual_mass: Fraction

    def mass(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))


@dataclass(frozen=True)
class MomentResult:
    mean: Fraction
    variance: Fraction
    # hand-simplified counterparts, when one exists in the catalog
    reference_mean: Optional[Fraction]
    reference_variance: Optional[Fraction]


@dataclass(frozen=True)
class SweepPoint:
    C: Fraction
    mean_length: Fraction
    decay_rate: Optional[float]


def _square_precursors(C: Fraction) -> dict[str, RationalFunction]:
    c = Fraction(C)
    hook = RationalFunction(c * X**3 * Y, (1 + c) * (4 - 2 * X**2 * Y))
    twist = RationalFunction(X**2 * Y, 2) + RationalFunction(
        X**3 * Y**2, (1 + c) * (4 - 2 * X * Y)
    )
    wall_hook = RationalFunction(
        c**2 * X**3 * Y, 2 * (1 + c) * (1 + c**2)
    ) + RationalFunction(c * X**5 * Y**2, 2 * (1 + c) ** 2 * (2 - X**2 * Y))
    wall_twist = (
        RationalFunction(c * X**2 * Y, 1 + c)
        + RationalFunction(X**3 * Y**2, 2 * (1 + c) * (1 + c**2))
        + RationalFunction(X**4 * Y**3, 2 * (1 + c) ** 2 * (2 - X * Y))
    )
    hook2 = RationalFunction(X**2 * Y, 3) + RationalFunction(
        2 * c * X**4 * Y**2, 3 * (1 + c) * (2 - X**2 * Y)
    )
    twist2 = RationalFunction(2 * X**3 * Y**2, 3 * (1 + c) * (2 - X * Y))
    return {
        "hook": hook,
        "twist": twist,
        "wall_hook": wall_hook,
        "wall_twist": wall_twist,
        "hook2": hook2,
        "twist2": twist2,
    }


def _triangular_precursors() -> dict[str, RationalFunction]:
    return {
        "up_twist": RationalFunction(x**2, 9 - 3 * x),
        "crook": RationalFunction(x**2, 9 - 3 * x),
        "up_hook": RationalFunction(x**2, 9 - 3 * x**2),
        "down_twist": RationalFunction(x**3, 18 - 6 * x),
        "down_hook": RationalFunction(x**3, 18 - 6 * x**2),
    }


def precursor_gf(model: LadderModel) -> dict[str, GFEntry]:
    """The opening-segment generating functions the composition consumes."""
    if model.lattice in SQUARE_MODELS:
        p = _square_precursors(model.C)
        if model.wall:
            wanted = ("wall_hook", "wall_twist")
        elif model.lattice == "square-one-sided":
            wanted = ("hook", "twist", "wall_hook", "wall_twist")
        else:
            wanted = ("hook2", "twist2", "wall_hook", "wall_twist")
        return {k: GFEntry(k, p[k], "composition") for k in wanted}
    if model.C != 1:
        raise UnsupportedBiasError(
            "no closed form for biased triangular ladders; use the "
            "enumerator or the simulator"
        )
    return {
        k: GFEntry(k, gf, "composition")
        for k, gf in _triangular_precursors().items()
    }


def _triangular_one_sided() -> tuple[RationalFunction, RationalFunction]:
    p = _triangular_precursors()
    hu, hd = p["up_hook"], p["down_hook"]
    tu, td, cr = p["up_twist"], p["down_twist"], p["crook"]
    two_minus_x = 2 - x
    denom = 1 - tu - (x * td) / two_minus_x - (x * cr) / two_minus_x \
        - RationalFunction(x**3, 3 * two_minus_x)
    wide = (hd + hu) / denom
    narrow = (x * wide) / two_minus_x
    return wide, narrow


@lru_cache(maxsize=128)
def walk_gf(model: LadderModel) -> RationalFunction:
    """Trapping generating function of the model, by composition.

    Square models give the bivariate function in (x, y) = (length,
    width); triangular models only resolve the length. Biased triangular
    models have no closed form and raise UnsupportedBiasError.
    """
    if model.lattice in SQUARE_MODELS:
        p = _square_precursors(model.C)
        wall_gf = p["wall_hook"] / (1 - p["wall_twist"])
        if model.wall:
            return wall_gf
        if model.lattice == "square-one-sided":
            return p["hook"] + p["twist"] * wall_gf
        return (p["hook2"] + p["twist2"]) * wall_gf
    if model.C != 1:
        raise UnsupportedBiasError(
            "no closed form for biased triangular ladders"
        )
    wide, narrow = _triangular_one_sided()
    if model.lattice == "triangular-wide":
        return wide
    if model.lattice == "triangular-narrow":
        return narrow
    p = _triangular_precursors()
    hu, hd = p["up_hook"], p["down_hook"]
    tu, td, cr = p["up_twist"], p["down_twist"], p["crook"]
    half_x = RationalFunction(x, 2)
    first_vertical = RationalFunction(2 * x, 3) * narrow + RationalFunction(
        x, 3
    ) * wide
    after_east = (
        (hd + hu) * x * narrow
        + tu * wide
        + td * narrow
        + cr * narrow
        + RationalFunction(x**2, 3) * narrow
    )
    return half_x * first_vertical + half_x * after_east


def printed_forms() -> dict[str, GFEntry]:
    """Hand-simplified closed forms that agree with the compositions.

    Keys are "<model>:<observable>". Two-sided square width and the
    two-sided triangular length are absent on purpose: the simplified
    forms circulating for those disagree with the composition and the
    enumerator, see gsawtrap.errata.
    """
    cubic2 = X**3 * Y**2 - 4 * X**2 * Y - 4 * X * Y + 8
    cubic1 = x**3 - 4 * x**2 - 4 * x + 8
    quartic = x**4 - 6 * x**3 + 2 * x**2 - 30 * x + 36
    entries = {
        "square-one-sided:joint": RationalFunction(
            X**3 * Y * (X * Y - 2), (X**2 * Y - 2) * cubic2
        ),
        "square-one-sided:length": RationalFunction(
            x**3 * (x - 2), (x**2 - 2) * cubic1
        ),
        "square-one-sided:width": RationalFunction(
            x * (x - 2), (x - 2) * (x**2 - 8 * x + 8)
        ),
        "square-two-sided:joint": RationalFunction(
            X**5 * Y**2 * (4 - X**3 * Y**2), 3 * (X**2 * Y - 2) ** 2 * cubic2
        ),
        "square-two-sided:length": RationalFunction(
            x**5 * (4 - x**3), 3 * (x**2 - 2) ** 2 * cubic1
        ),
        "triangular-wide:length": RationalFunction(
            x**2 * (x + 2) * (x - 3) * (x - 2), (3 - x**2) * quartic
        ),
        "triangular-narrow:length": RationalFunction(
            x**3 * (x + 2) * (x - 3), (x**2 - 3) * quartic
        ),
    }
    return {
        k: GFEntry(k, gf, "transcribed closed form") for k, gf in entries.items()
    }


def length_gf(model: LadderModel) -> RationalFunction:
    gf = walk_gf(model)
    return gf.specialize(y=1) if gf.bivariate else gf


def width_gf(model: LadderModel) -> RationalFunction:
    gf = walk_gf(model)
    if not gf.bivariate:
        raise UnsupportedObservableError(
            f"{model.lattice} has no width generating function"
        )
    return gf.specialize(x=1)


def exact_distribution(
    model: LadderModel, n_max: int, observable: str = "length"
) -> TrappingDistribution:
    """Exact probabilities up to the horizon, plus the tail mass."""
    if observable == "length":
        gf = length_gf(model)
    elif observable == "width":
        gf = width_gf(model)
    else:
        raise UnsupportedObservableError(f"unknown observable {observable!r}")
    coeffs = gf.series(n_max)
    entries = {n: c for n, c in enumerate(coeffs) if c}
    residual = 1 - sum(entries.values(), Fraction(0))
    return TrappingDistribution(observable, entries, residual)


def exact_joint_distribution(
    model: LadderModel, n_max: int, w_max: Optional[int] = None
) -> dict[tuple[int, int], Fraction]:
    """Exact joint (length, width) table for the square models."""
    gf = walk_gf(model)
    if not gf.bivariate:
        raise UnsupportedObservableError(
            f"{model.lattice} has no joint generating function"
        )
    if w_max is None:
        w_max = n_max
    table = gf.series2(n_max, w_max)
    return {k: v for k, v in table.items() if v}


def _poly_in(c: Fraction, coeffs: list[int]) -> Fraction:
    acc = Fraction(0)
    for a in reversed(coeffs):
        acc = acc * c + a
    return acc


def reference_moments(
    model: LadderModel, observable: str = "length"
) -> Optional[tuple[Fraction, Fraction]]:
    """Hand-simplified mean and variance, as functions of C.

    These are the closed-form moment expressions; the catalog treats
    them as cross-checks of the composition moments, not as the source.
    Returns None when no such form exists (biased triangular).
    """
    c = model.C
    if model.lattice == "square-one-sided" and not model.wall:
        if observable == "length":
            mean = _poly_in(c, [16, 42, 51, 59, 36, 4]) / _poly_in(
                c, [0, 2, 4, 6, 4]
            )
            var = _poly_in(
                c,
                [256, 1104, 2488, 3998, 4981, 4864, 3769, 2292, 1000, 288, 48],
            ) / (4 * c**2 * (1 + c) ** 2 * (1 + c + 2 * c**2) ** 2)
            return mean, var
        mean = _poly_in(c, [6, 6, 8, 7, 1]) / _poly_in(c, [0, 1, 1, 2])
        var = (c + 1) * _poly_in(c, [36, 34, 84, 62, 59, 33, 9, 3]) / (
            c**2 * (2 * c**2 + c + 1) ** 2
        )
        return mean, var
    if model.lattice == "square-one-sided" and model.wall:
        if observable == "length":
            mean = _poly_in(c, [8, 14, 12, 14, 4]) / _poly_in(c, [0, 1, 1, 2])
            var = 2 * _poly_in(
                c, [32, 74, 127, 169, 159, 119, 72, 24, 8]
            ) / (c**2 * (2 * c**2 + c + 1) ** 2)
            return mean, var
        mean = _poly_in(c, [6, 7, 7, 6, 2]) / _poly_in(c, [0, 1, 1, 2])
        var = 2 * _poly_in(c, [18, 35, 59, 74, 60, 45, 21, 6, 2]) / (
            c**2 * (2 * c**2 + c + 1) ** 2
        )
        return mean, var
    if model.lattice == "square-two-sided":
        if observable == "length":
            mean = 2 * _poly_in(c, [12, 38, 51, 56, 41, 6]) / (
                3 * c * (c + 1) * (2 * c**2 + c + 1)
            )
            var = 2 * _poly_in(
                c,
                [288, 1242, 2773, 4551, 5822, 5864, 4693, 2975, 1312, 360, 72],
            ) / (9 * c**2 * (c + 1) ** 2 * (2 * c**2 + c + 1) ** 2)
            return mean, var
        mean = _poly_in(c, [18, 28, 28, 32, 6]) / _poly_in(c, [0, 3, 3, 6])
        var = 2 * _poly_in(c, [162, 315, 541, 686, 590, 445, 229, 54, 18]) / (
            9 * c**2 * (2 * c**2 + c + 1) ** 2
        )
        return mean, var
    if c != 1:
        return None
    if observable != "length":
        return None
    constants = {
        "triangular-wide": (Fraction(91, 6), Fraction(793, 4)),
        "triangular-narrow": (Fraction(103, 6), Fraction(801, 4)),
        "triangular-two-sided": (Fraction(941, 48), Fraction(51919, 256)),
    }
    return constants[model.lattice]


def exact_moments(model: LadderModel, observable: str = "length") -> MomentResult:
    """Mean and variance from the composition, with the closed-form twin."""
    gf = length_gf(model) if observable == "length" else width_gf(model)
    mean, var = mean_variance(gf)
    ref = reference_moments(model, observable)
    if ref is None:
        return MomentResult(mean, var, None, None)
    return MomentResult(mean, var, ref[0], ref[1])


def decay_rate(model: LadderModel, observable: str = "length") -> float:
    """Asymptotic per-step decay of the trapping distribution's tail."""
    if observable == "length":
        return dominant_decay_rate(length_gf(model))
    if observable == "width":
        return dominant_decay_rate(width_gf(model))
    raise UnsupportedObservableError(f"unknown observable {observable!r}")


def wall_mean_length(C: Fraction) -> Fraction:
    """Mean trapping length of the wall variant; 2C + O(1) for large C."""
    ref = reference_moments(LadderModel("square-one-sided", C=C, wall=True))
    return ref[0]


def bias_sweep(
    lattice: str,
    C_values: Iterable[Fraction],
    wall: bool = False,
    include_decay: bool = False,
) -> list[SweepPoint]:
    """Exact mean trapping length over a grid of biases.

    Means come from the composition (walk_gf + mean_variance), not from
    the closed-form expressions, so a transcription slip in the latter
    cannot leak into sweep output.
    """
    out = []
    for c in C_values:
        model = LadderModel(lattice, C=Fraction(c), wall=wall)
        gf = length_gf(model)
        mean, _ = mean_variance(gf)
        rate = dominant_decay_rate(gf) if include_decay else None
        out.append(SweepPoint(Fraction(c), mean, rate))
    return out
