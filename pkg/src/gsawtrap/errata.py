"""Resolved discrepancies in the hand-simplified closed forms.

Several of the simplified formulas in circulation for these models carry
transcription slips: a dropped factor, a wrong exponent, a sign. This
module keeps a machine-checkable record. Every finding pairs the quoted
variant with the form this package ships and recomputes the evidence that
separates them, always by exact comparison against the exhaustive
enumerator (and, for the width variance, a large simulation as well).

resolve_all() returns the full report as one JSON-friendly dictionary;
the command line exposes it as `gsawtrap errata`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._version import __version__
from .catalog import (
    LadderModel,
    _square_precursors,
    _triangular_precursors,
    walk_gf,
    width_gf,
)
from .exhaustive import enumerate_cached
from .lattices import LatticeTopology
from .rational import Poly1, Poly2, RationalFunction, mean_variance
from .recurrences import RecursionSpec, builtin_spec, eval_recursion
from .simulate import run_walks

x = Poly1.x()
X, Y = Poly2.x(), Poly2.y()


@dataclass(frozen=True)
class Finding:
    id: str
    slug: str
    claim: str
    validated: str
    method: str


FINDINGS: tuple[Finding, ...] = (
    Finding(
        id="a",
        slug="two-sided-square-joint-numerator",
        claim="joint length/width generating function on the two-sided "
              "square ladder with numerator factor (4 - x^3 y)",
        validated="numerator factor (4 - x^3 y^2): "
                  "x^5 y^2 (4 - x^3 y^2) / (3 (x^2 y - 2)^2 "
                  "(x^3 y^2 - 4 x^2 y - 4 x y + 8))",
        method="bivariate coefficients against the exhaustive enumerator",
    ),
    Finding(
        id="b",
        slug="two-sided-triangular-sign",
        claim="two-sided triangular length generating function "
              "x^4 (2 + x)(x^4 + x^3 - 6 x - 12) / "
              "(4 (x^2 - 3)^2 (x^4 - 6 x^3 + 2 x^2 - 30 x + 36))",
        validated="the negative of that expression (equivalently, negate "
                  "either the numerator or the denominator)",
        method="rational-function identity plus enumerator coefficients",
    ),
    Finding(
        id="c",
        slug="wide-corner-crook-term",
        claim="wide-corner decomposition without the crook continuation "
              "(the opening that turns back across the rows and leaves a "
              "narrow-corner walk behind)",
        validated="decomposition including the crook term "
                  "x^2/(9 - 3x) * N(x) alongside the hook and twist terms",
        method="series of both variants against the exhaustive enumerator",
    ),
    Finding(
        id="d",
        slug="wall-twist-leading-term",
        claim="biased wall twist function without its leading "
              "C x^2 y / (1 + C) term (the one-step twist)",
        validated="wall twist with the leading term: C x^2 y/(1+C) + "
                  "x^3 y^2/(2(1+C)(1+C^2)) + x^4 y^3/(2(1+C)^2(2 - x y))",
        method="series against the exhaustive enumerator at C = 1 and C = 2",
    ),
    Finding(
        id="e",
        slug="two-sided-width-variance",
        claim="width variance 740/9 on the two-sided square ladder",
        validated="width variance 380/9 (mean 28/3 is not in dispute)",
        method="joint generating function validated against the enumerator, "
               "exact moments of its width marginal, and a large simulation",
    ),
    Finding(
        id="f",
        slug="square-recursion-forcing-prefactor",
        claim="third-order recursion for the two-sided square ladder with "
              "forcing term -(N-6) 2^{-(N+4)/2} (N even), "
              "+(N-3) 2^{-(N+3)/2} (N odd)",
        validated="the same forcing term multiplied by 1/3, matching the "
                  "global 1/3 in the generating function",
        method="recursion output against generating-function coefficients "
               "and the enumerator; partial-sum bound",
    ),
)


def _frac(q: Fraction) -> str:
    return str(Fraction(q))


def _oracle_lengths(model: LadderModel, n_max: int) -> dict[int, Fraction]:
    res = enumerate_cached(model.topology(), model.C, n_max)
    return res.marginal("length")


def _first_series_mismatch(gf: RationalFunction, oracle, n_max: int):
    coeffs = gf.series(n_max)
    for n in range(n_max + 1):
        if coeffs[n] != oracle.get(n, Fraction(0)):
            return {"n": n, "claim": _frac(coeffs[n]),
                    "oracle": _frac(oracle.get(n, Fraction(0)))}
    return None


def _resolve_a(n_max: int) -> dict:
    model = LadderModel("square-two-sided")
    oracle = enumerate_cached(model.topology(), Fraction(1), n_max).trapped
    cubic = X**3 * Y**2 - 4 * X**2 * Y - 4 * X * Y + 8
    claim = RationalFunction(
        X**5 * Y**2 * (4 - X**3 * Y), 3 * (X**2 * Y - 2) ** 2 * cubic
    )
    claim_tbl = claim.series2(n_max, n_max)
    good_tbl = walk_gf(model).series2(n_max, n_max)
    first = None
    mismatches = 0
    good_ok = True
    for n in range(n_max + 1):
        for w in range(n_max + 1):
            want = oracle.get((n, w), Fraction(0))
            if good_tbl[(n, w)] != want:
                good_ok = False
            if claim_tbl[(n, w)] != want:
                mismatches += 1
                if first is None:
                    first = {"length": n, "width": w,
                             "claim": _frac(claim_tbl[(n, w)]),
                             "oracle": _frac(want)}
    return {
        "validatedMatchesOracle": good_ok,
        "claimFirstMismatch": first,
        "claimMismatchCount": mismatches,
        "note": "the claimed numerator produces a negative coefficient, so "
                "it is not a probability generating function",
    }


def _resolve_b(n_max: int) -> dict:
    model = LadderModel("triangular-two-sided")
    quartic = x**4 - 6 * x**3 + 2 * x**2 - 30 * x + 36
    claim = RationalFunction(
        x**4 * (2 + x) * (x**4 + x**3 - 6 * x - 12),
        4 * (x**2 - 3) ** 2 * quartic,
    )
    comp = walk_gf(model)
    oracle = _oracle_lengths(model, n_max)
    return {
        "claimValueAtOne": _frac(claim.evaluate(1)),
        "claimEqualsNegatedValidated": comp.equals(
            RationalFunction(0, 1) - claim),
        "validatedMatchesOracle": _first_series_mismatch(comp, oracle, n_max)
        is None,
        "claimFirstMismatch": _first_series_mismatch(claim, oracle, n_max),
    }


def _resolve_c(n_max: int) -> dict:
    p = _triangular_precursors()
    two = 2 - x
    denom_full = (1 - p["up_twist"] - (x * p["down_twist"]) / two
                  - (x * p["crook"]) / two
                  - RationalFunction(x**3, 3 * two))
    denom_omit = (1 - p["up_twist"] - (x * p["down_twist"]) / two
                  - RationalFunction(x**3, 3 * two))
    tops = p["down_hook"] + p["up_hook"]
    oracle = _oracle_lengths(LadderModel("triangular-wide"), n_max)
    return {
        "validatedMatchesOracle": _first_series_mismatch(
            tops / denom_full, oracle, n_max) is None,
        "claimFirstMismatch": _first_series_mismatch(
            tops / denom_omit, oracle, n_max),
    }


def _resolve_d(n_max: int) -> dict:
    out = {}
    for C in (Fraction(1), Fraction(2)):
        sp = _square_precursors(C)
        boxed = sp["wall_twist"] - RationalFunction(C * X**2 * Y, 1 + C)
        claim_len = (sp["wall_hook"] / (1 - boxed)).specialize(y=1)
        good_len = (sp["wall_hook"] / (1 - sp["wall_twist"])).specialize(y=1)
        oracle = _oracle_lengths(
            LadderModel("square-one-sided", C=C, wall=True), n_max)
        key = f"C={C}"
        out[key] = {
            "validatedMatchesOracle": _first_series_mismatch(
                good_len, oracle, n_max) is None,
            "claimFirstMismatch": _first_series_mismatch(
                claim_len, oracle, n_max),
        }
    unbiased = _square_precursors(Fraction(1))
    plain_twist = RationalFunction(X**2 * Y, 2) + RationalFunction(
        X**3 * Y**2, 8 - 4 * X * Y)
    out["statementReducesAtUnity"] = unbiased["wall_twist"].equals(plain_twist)
    return out


def _resolve_e(n_max: int, walks: int, seed: int) -> dict:
    model = LadderModel("square-two-sided")
    oracle = enumerate_cached(model.topology(), Fraction(1), n_max).trapped
    tbl = walk_gf(model).series2(n_max, n_max)
    joint_ok = all(
        tbl[(n, w)] == oracle.get((n, w), Fraction(0))
        for n in range(n_max + 1) for w in range(n_max + 1)
    )
    mean, var = mean_variance(width_gf(model))
    summary = run_walks(LatticeTopology("square-ladder-two-sided"),
                        walks=walks, seed=seed)
    n = summary.trapped
    counts = summary.widths
    m = Fraction(sum(w * c for w, c in counts.items()), n)
    m2 = Fraction(sum((w - m) ** 2 * c for w, c in counts.items()), n)
    m4 = Fraction(sum((w - m) ** 4 * c for w, c in counts.items()), n)
    # standard error of the sample variance from the fourth central moment
    se = math.sqrt(float(m4 - m2 * m2) / n)
    return {
        "jointMatchesOracle": joint_ok,
        "exactMean": _frac(mean),
        "exactVariance": _frac(var),
        "simulation": {
            "walks": walks,
            "seed": seed,
            "sampleVariance": float(m2),
            "stderr": se,
            "zValidated": (float(m2) - float(var)) / se,
            "zClaim": (float(m2) - 740 / 9) / se,
        },
    }


def _resolve_f(n_max: int) -> dict:
    good = builtin_spec("square")

    def claimed_forcing(n: int) -> Fraction:
        if n % 2 == 0:
            return Fraction(-(n - 6), 2 ** ((n + 4) // 2))
        return Fraction(n - 3, 2 ** ((n + 3) // 2))

    claim = RecursionSpec(
        name="square-ladder claimed forcing",
        order=good.order,
        coefficients=good.coefficients,
        start_index=good.start_index,
        initial=good.initial,
        inhomogeneous=claimed_forcing,
    )
    oracle = _oracle_lengths(LadderModel("square-two-sided"), n_max)
    claim_vals = eval_recursion(claim, n_max)
    good_vals = eval_recursion(good, n_max)
    first = None
    for n in range(n_max + 1):
        if claim_vals[n] != oracle.get(n, Fraction(0)):
            first = {"n": n, "claim": _frac(claim_vals[n]),
                     "oracle": _frac(oracle.get(n, Fraction(0)))}
            break
    return {
        "validatedMatchesOracle": all(
            good_vals[n] == oracle.get(n, Fraction(0))
            for n in range(n_max + 1)),
        "claimFirstMismatch": first,
        "claimPartialSumTo200": float(sum(eval_recursion(claim, 200))),
        "validatedPartialSumTo200": float(sum(eval_recursion(good, 200))),
        "note": "a probability distribution cannot have partial sums "
                "above 1",
    }


def resolve(finding_id: str, n_max: int = 15, walks: int = 1_000_000,
            seed: int = 1) -> dict:
    """Recompute the evidence for one finding; see resolve_all."""
    if n_max < 8:
        raise ValueError("n_max below 8 cannot separate the variants")
    if finding_id == "a":
        return _resolve_a(n_max)
    if finding_id == "b":
        return _resolve_b(n_max)
    if finding_id == "c":
        return _resolve_c(n_max)
    if finding_id == "d":
        return _resolve_d(n_max)
    if finding_id == "e":
        return _resolve_e(n_max, walks, seed)
    if finding_id == "f":
        return _resolve_f(n_max)
    raise ValueError(f"unknown finding {finding_id!r}")


def resolve_all(n_max: int = 15, walks: int = 1_000_000,
                seed: int = 1) -> dict:
    """Full errata report with freshly computed evidence, JSON-friendly."""
    report = {
        "schemaVersion": 1,
        "package": "gsawtrap",
        "version": __version__,
        "oracleHorizon": n_max,
        "findings": [],
    }
    for f in FINDINGS:
        report["findings"].append({
            "id": f.id,
            "slug": f.slug,
            "claim": f.claim,
            "validated": f.validated,
            "method": f.method,
            "evidence": resolve(f.id, n_max=n_max, walks=walks, seed=seed),
            "verdict": "validated form confirmed",
        })
    return report
