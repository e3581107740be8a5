"""Lattice geometry shared by the enumerator and the Monte Carlo kernels.

A site is an integer pair. Ladders are two rows high and extend along x;
one-sided ladders are restricted to x >= 0 with the walk started in the
leftmost column. The triangular ladder is embedded on sites (a, b) with
b in {0, 1} and a + b even: same-row bonds span |da| = 2 and cross-row
bonds |da| = 1, which gives interior degree 4, a degree-3 corner at
(1, 1) (the "wide" start) and a degree-2 corner at (0, 0) (the "narrow"
start). The honeycomb lattice uses the brick-wall embedding on Z^2: every
site has its two horizontal neighbours, plus an up bond when x + y is
even and a down bond when x + y is odd.

The neighbour order returned here is canonical: the simulation kernels
consume one uniform draw per step against weights accumulated in exactly
this order, so reproducibility across kernels depends on every consumer
using these lists verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

Site = tuple[int, int]

LADDER_KINDS = (
    "square-ladder-one-sided",
    "square-ladder-two-sided",
    "triangular-ladder-wide",
    "triangular-ladder-narrow",
    "triangular-ladder-two-sided",
)
INFINITE_KINDS = (
    "infinite-square",
    "infinite-triangular",
    "infinite-honeycomb",
)
KINDS = LADDER_KINDS + INFINITE_KINDS

# sentinel sites occupied from the start in the wall variant: they block
# the column left of the origin and count as visited when the bias rule
# counts occupied neighbours
WALL_SITES: tuple[Site, Site] = ((-1, 0), (-1, 1))


@dataclass(frozen=True)
class LatticeTopology:
    """Walk domain: a lattice kind plus its variant switches.

    wall adds two permanently occupied sites at x = -1 next to the start
    of the one-sided square ladder. box_half_width only matters for the
    infinite lattices: the walk runs on a (2h+1) x (2h+1) box and
    touching the rim counts as an escape, not a trapping event.
    honeycomb_start picks which sublattice the walk starts on (0 starts
    at (0, 0) whose vertical bond points up, 1 at (1, 0)).
    """

    kind: str
    wall: bool = False
    box_half_width: int = 256
    honeycomb_start: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.wall and self.kind != "square-ladder-one-sided":
            raise ValueError("the wall variant only exists on the one-sided square ladder")
        if self.kind in INFINITE_KINDS and self.box_half_width < 8:
            raise ValueError("box_half_width must be at least 8")
        if self.honeycomb_start not in (0, 1):
            raise ValueError("honeycomb_start must be 0 or 1")

    @property
    def is_ladder(self) -> bool:
        return self.kind in LADDER_KINDS

    def start_site(self) -> Site:
        if self.kind == "triangular-ladder-wide":
            return (1, 1)
        if self.kind == "infinite-honeycomb":
            return (self.honeycomb_start, 0)
        return (0, 0)

    def neighbors(self, site: Site) -> tuple[Site, ...]:
        """Canonical-order neighbours inside the domain (box rim included)."""
        raw = raw_neighbors(self.kind, site)
        if self.kind in ("square-ladder-one-sided", "triangular-ladder-wide",
                         "triangular-ladder-narrow"):
            return tuple(s for s in raw if s[0] >= 0)
        return raw

    def initial_blocked(self) -> tuple[Site, ...]:
        """Sites treated as visited before the first step."""
        return WALL_SITES if self.wall else ()


def raw_neighbors(kind: str, site: Site) -> tuple[Site, ...]:
    x, y = site
    if kind.startswith("square-ladder"):
        return ((x + 1, y), (x - 1, y), (x, 1 - y))
    if kind.startswith("triangular-ladder"):
        return ((x + 2, y), (x - 2, y), (x + 1, 1 - y), (x - 1, 1 - y))
    if kind == "infinite-square":
        return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
    if kind == "infinite-triangular":
        return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1),
                (x + 1, y - 1), (x - 1, y + 1))
    if kind == "infinite-honeycomb":
        vert = (x, y + 1) if (x + y) % 2 == 0 else (x, y - 1)
        return ((x + 1, y), (x - 1, y), vert)
    raise ValueError(f"unknown lattice kind {kind!r}")
