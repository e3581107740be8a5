"""Real root isolation and the decay rate of series coefficients.

The coefficients of a rational generating function decay geometrically at
rate 1/|p| where p is the pole of smallest modulus. Real poles are located
exactly: square-free reduction, a Sturm chain to count and isolate real
roots, then sign-change bisection down to rational intervals of relative
width below TOL. Floating point enters only at the very end, and in a
cross-check that no complex pole beats the real one (numpy.roots is good
enough for that comparison, it never produces the returned value).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .rational import Poly1, RationalFunction

TOL = Fraction(1, 10**13)


class NoRealPoleError(ValueError):
    """The denominator has no real roots."""


class ComplexDominantPoleError(ValueError):
    """A complex pole is strictly closer to the origin than every real one."""


def square_free_part(p: Poly1) -> Poly1:
    if p.degree < 1:
        return p.monic() if not p.is_zero() else p
    g = p.gcd(p.derivative())
    return p.exact_div(g).monic()


def sturm_chain(p: Poly1) -> list[Poly1]:
    """Sturm sequence of a square-free polynomial."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(vals: list[Fraction]) -> int:
    signs = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def _count_open(chain: list[Poly1], a: Fraction, b: Fraction) -> int:
    """Number of real roots in the open interval (a, b).

    Requires chain[0](a) != 0 and chain[0](b) != 0.
    """
    va = _variations([q(a) for q in chain])
    vb = _variations([q(b) for q in chain])
    return va - vb


def cauchy_bound(p: Poly1) -> Fraction:
    """Every real root r satisfies |r| < the returned bound."""
    lead = p.leading()
    worst = max(
        (abs(c / lead) for k, c in p.coef.items() if k != p.degree),
        default=Fraction(0),
    )
    return 1 + worst


def isolate_real_roots(p: Poly1) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals each holding exactly one real root of p.

    p need not be square-free; multiplicities are collapsed. An exact
    rational root comes back as a degenerate interval (r, r). When a
    bisection point happens to hit a root, that root is divided out and
    isolation restarts on the quotient, so the dyadic subdivision never
    has to dodge anything.
    """
    p = square_free_part(p)
    if p.degree < 1:
        return []
    bound = cauchy_bound(p)
    chain = sturm_chain(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = _count_open(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if p(m) == 0:
            deflated = p.exact_div(Poly1({0: -m, 1: Fraction(1)}))
            return sorted(
                out + [(m, m)] + isolate_real_roots(deflated),
                key=lambda iv: iv[0],
            )
        stack.append((a, m))
        stack.append((m, b))
    return sorted(out, key=lambda iv: iv[0])


def refine_root(
    p: Poly1, lo: Fraction, hi: Fraction, tol: Fraction = TOL
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval by exact-sign bisection.

    Stops when hi - lo < tol * max(1, |lo|). The input interval must come
    from isolate_real_roots (one simple root strictly inside, none at the
    endpoints).
    """
    if lo == hi:
        return lo, hi
    p = square_free_part(p)
    slo = p(lo)
    shi = p(hi)
    if slo == 0 or shi == 0:
        raise ValueError("endpoints must not be roots")
    if (slo < 0) == (shi < 0):
        raise ValueError("no sign change: not an isolating interval")
    while hi - lo >= tol * max(1, abs(lo)):
        mid = (lo + hi) / 2
        smid = p(mid)
        if smid == 0:
            return mid, mid
        if (smid < 0) == (slo < 0):
            lo, slo = mid, smid
        else:
            hi = mid
    return lo, hi


def real_roots(p: Poly1, tol: Fraction = TOL) -> list[Fraction]:
    """All distinct real roots, as rational approximations within tol.

    Exact rational roots are returned exactly. They are divided out before
    the bisection refinement: intervals produced after a deflation inside
    isolate_real_roots can have a deflated root sitting on an endpoint,
    which would break the sign test against the full polynomial.
    """
    intervals = isolate_real_roots(p)
    sf = square_free_part(p)
    out: list[Fraction] = []
    for lo, hi in intervals:
        if lo == hi:
            out.append(lo)
            sf = sf.exact_div(Poly1({0: -lo, 1: Fraction(1)}))
    for lo, hi in intervals:
        if lo != hi:
            lo, hi = refine_root(sf, lo, hi, tol)
            out.append((lo + hi) / 2)
    return sorted(out)


def dominant_decay_rate(f: RationalFunction) -> float:
    """Asymptotic ratio |a_{n+1}/a_n| of the series coefficients of f.

    Equals 1/|p| for the smallest-modulus pole p of the cancelled
    function. Raises NoRealPoleError if no real pole exists and
    ComplexDominantPoleError if a complex pair sits strictly inside the
    smallest real modulus; in both cases a single decay *rate* is not the
    right description and the caller should look at the full pole set.
    """
    if f.bivariate:
        raise ValueError("dominant_decay_rate applies to univariate functions")
    den = f.cancelled().den
    if den.degree < 1:
        raise NoRealPoleError("denominator is constant after cancellation")
    sf = square_free_part(den)
    roots = real_roots(sf)
    if not roots:
        raise NoRealPoleError("no real pole")
    rho = min(roots, key=abs)
    if rho == 0:
        raise ValueError("pole at the origin; series does not exist")
    rho_f = abs(float(rho))

    # float check that no complex pair is closer to the origin
    deg = sf.degree
    coeffs = [float(sf.coefficient(k)) for k in range(deg, -1, -1)]
    for z in np.roots(coeffs):
        if abs(z.imag) > 1e-8 * (1 + abs(z)) and abs(z) < rho_f * (1 - 1e-6):
            raise ComplexDominantPoleError(
                f"complex pole of modulus {abs(z):.12g} inside real pole "
                f"modulus {rho_f:.12g}"
            )
    return 1.0 / rho_f
