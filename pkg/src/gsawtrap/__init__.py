"""Trapping statistics of growing self-avoiding walks.

A growing self-avoiding walk steps uniformly (or with an occupation bias)
among the nearest neighbours it has not yet visited, and dies when there
are none. This package computes the distribution of the trapping time and
of the horizontal width exactly on two-row ladder lattices, by brute-force
enumeration, and by Monte Carlo on ladders and on the infinite square,
triangular and honeycomb lattices.
"""

from ._version import __version__
from .catalog import (
    LadderModel,
    MomentResult,
    SweepPoint,
    TrappingDistribution,
    UnsupportedBiasError,
    UnsupportedObservableError,
    bias_sweep,
    decay_rate,
    exact_distribution,
    exact_joint_distribution,
    exact_moments,
    length_gf,
    printed_forms,
    reference_moments,
    walk_gf,
    width_gf,
)
from .exhaustive import BudgetExceededError, EnumResult, enumerate_walks
from .lattices import INFINITE_KINDS, KINDS, LADDER_KINDS, LatticeTopology
from .rational import (
    NotADistributionError,
    NotExpandableError,
    PoleError,
    Poly1,
    Poly2,
    Rational,
    RationalFunction,
    bivariate_coefficient,
    evaluate,
    mean_variance,
    series_coefficients,
    specialize,
)
from .recurrences import RecursionSpec, builtin_spec, eval_recursion
from .roots import (
    ComplexDominantPoleError,
    NoRealPoleError,
    dominant_decay_rate,
    real_roots,
)
from .simulate import (
    SimSummary,
    backend_name,
    honeycomb_parity_profile,
    parity_profile,
    run_walks,
)

__all__ = [
    "LatticeTopology",
    "KINDS",
    "LADDER_KINDS",
    "INFINITE_KINDS",
    "LadderModel",
    "TrappingDistribution",
    "MomentResult",
    "SweepPoint",
    "walk_gf",
    "length_gf",
    "width_gf",
    "printed_forms",
    "exact_distribution",
    "exact_joint_distribution",
    "exact_moments",
    "reference_moments",
    "decay_rate",
    "bias_sweep",
    "enumerate_walks",
    "EnumResult",
    "BudgetExceededError",
    "RecursionSpec",
    "builtin_spec",
    "eval_recursion",
    "run_walks",
    "SimSummary",
    "backend_name",
    "parity_profile",
    "honeycomb_parity_profile",
    "Poly1",
    "Poly2",
    "Rational",
    "RationalFunction",
    "series_coefficients",
    "bivariate_coefficient",
    "specialize",
    "evaluate",
    "mean_variance",
    "dominant_decay_rate",
    "real_roots",
    "PoleError",
    "NotExpandableError",
    "NotADistributionError",
    "NoRealPoleError",
    "ComplexDominantPoleError",
    "UnsupportedBiasError",
    "UnsupportedObservableError",
    "__version__",
]
