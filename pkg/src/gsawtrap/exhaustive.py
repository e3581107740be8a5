"""Exhaustive enumeration of growing self-avoiding walks on ladders.

Walks every branch of the decision tree with exact Fraction weights, so
the result is a ground-truth joint distribution of (trapping length,
width) up to a step horizon. Only two-row ladders are feasible: the tree
grows like mu^n with mu between 2 and 3, and the default horizon of 18
keeps the node count in the tens of millions at worst.

The step rule matches the simulation: among not-yet-visited neighbours
of the head, a candidate is chosen with probability proportional to
C^(number of its already-visited neighbours other than the head). C = 1
is the uniform walk. Pre-occupied wall sites count as visited for that
rule but never contribute to the width.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattices import LatticeTopology, raw_neighbors

DEFAULT_BUDGET = 18


class BudgetExceededError(ValueError):
    """Horizon beyond what exhaustive enumeration can afford."""


@dataclass(frozen=True)
class EnumResult:
    """Exact joint law of (length, width) for walks resolved by n_max."""

    trapped: dict[tuple[int, int], Fraction]
    alive_mass: Fraction  # walks still running after n_max steps
    nodes: int

    def total_trapped(self) -> Fraction:
        return sum(self.trapped.values(), Fraction(0))

    def marginal(self, observable: str) -> dict[int, Fraction]:
        idx = {"length": 0, "width": 1}[observable]
        out: dict[int, Fraction] = {}
        for key, p in self.trapped.items():
            k = key[idx]
            out[k] = out.get(k, Fraction(0)) + p
        return dict(sorted(out.items()))


def enumerate_walks(
    topology: LatticeTopology,
    C: Fraction = Fraction(1),
    n_max: int = DEFAULT_BUDGET,
    budget: int = DEFAULT_BUDGET,
) -> EnumResult:
    """Exact distribution of trapping events with at most n_max steps.

    Walks alive after n_max steps are lumped into alive_mass, so
    total_trapped() + alive_mass == 1 always. Raises BudgetExceededError
    when n_max exceeds budget; pass a larger budget knowingly.
    """
    if not topology.is_ladder:
        raise ValueError("exhaustive enumeration only works on ladder lattices")
    if n_max > budget:
        raise BudgetExceededError(
            f"n_max={n_max} exceeds the enumeration budget {budget}"
        )
    C = Fraction(C)
    if C <= 0:
        raise ValueError("the bias C must be positive")

    start = topology.start_site()
    visited = {start}
    visited.update(topology.initial_blocked())
    trapped: dict[tuple[int, int], Fraction] = {}
    alive = Fraction(0)
    nodes = 0
    neighbors = topology.neighbors

    kind = topology.kind

    def weight(site) -> Fraction:
        # occupied neighbours of the candidate, not counting the head;
        # raw adjacency so that wall sites outside the domain are seen
        occ = sum(1 for s in raw_neighbors(kind, site) if s in visited) - 1
        return C**occ

    def walk(head, steps, lo, hi, prob):
        nonlocal alive, nodes
        nodes += 1
        cands = [s for s in neighbors(head) if s not in visited]
        if not cands:
            key = (steps, hi - lo)
            trapped[key] = trapped.get(key, Fraction(0)) + prob
            return
        if steps == n_max:
            alive += prob
            return
        if C == 1:
            pairs = [(s, Fraction(1, len(cands))) for s in cands]
        else:
            ws = [weight(s) for s in cands]
            tot = sum(ws)
            pairs = [(s, w / tot) for s, w in zip(cands, ws)]
        for site, p in pairs:
            visited.add(site)
            walk(site, steps + 1,
                 min(lo, site[0]), max(hi, site[0]), prob * p)
            visited.remove(site)

    walk(start, 0, start[0], start[0], Fraction(1))
    return EnumResult(trapped=trapped, alive_mass=alive, nodes=nodes)


@lru_cache(maxsize=64)
def enumerate_cached(
    topology: LatticeTopology, C: Fraction, n_max: int
) -> EnumResult:
    """Memoised enumerate_walks; several test layers share these tables."""
    return enumerate_walks(topology, C, n_max, budget=max(n_max, DEFAULT_BUDGET))
