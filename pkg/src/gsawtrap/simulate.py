"""Monte Carlo driver: grid construction, backend choice, run summaries.

The hot loop lives in gsawtrap._mc (compiled) with a pure-Python twin in
gsawtrap._mc_py; both honour the same randomness contract, so results are
identical bit for bit and independent of how a run is chunked into
streams. Set GSAWTRAP_PURE=1 to force the fallback, or pass backend=
explicitly to run_walks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._mc_py import BLOCKED, WALLHIT
from .lattices import LatticeTopology

LADDER_HALF = 16384   # columns either side of the origin
LADDER_MAX_LEN = 4096  # ladder histogram cap; longer walks count as overflow


def _load_default():
    if os.environ.get("GSAWTRAP_PURE") == "1":
        from . import _mc_py
        return _mc_py, "pure"
    try:
        from . import _mc
        return _mc, "compiled"
    except ImportError:
        from . import _mc_py
        return _mc_py, "pure"


_DEFAULT_KERNEL, _DEFAULT_NAME = _load_default()


def backend_name() -> str:
    """Name of the kernel used when run_walks is not told otherwise."""
    return _DEFAULT_NAME


def _kernel_for(backend):
    if backend is None:
        return _DEFAULT_KERNEL
    if backend == "pure":
        from . import _mc_py
        return _mc_py
    if backend == "compiled":
        from . import _mc
        return _mc
    raise ValueError(f"unknown backend {backend!r}")


def _as_bias(C) -> Fraction:
    if isinstance(C, float):
        raise TypeError("give the bias exactly, e.g. Fraction(3, 2) or '3/2'")
    C = Fraction(C)
    if C <= 0:
        raise ValueError("bias must be positive")
    return C


@dataclass(frozen=True)
class _Grid:
    visited: np.ndarray      # prefilled uint64 occupancy, copied per chunk
    start_idx: int
    start_x: int
    phantoms: np.ndarray     # cells stamped as visited at the start of each walk
    offsets: np.ndarray      # (2, k) flat-index deltas, canonical move order
    xdeltas: np.ndarray
    class_mode: int
    row_threshold: int
    max_len: int
    max_w: int


def build_grid(topology: LatticeTopology) -> _Grid:
    if topology.is_ladder:
        return _ladder_grid(topology)
    return _infinite_grid(topology)


def _ladder_grid(topology: LatticeTopology) -> _Grid:
    width = 2 * LADDER_HALF + 1
    vis = np.zeros(2 * width, dtype=np.uint64)
    grid = vis.reshape(2, width)
    # rim thick enough that weight lookups two columns past a candidate
    # stay inside the array no matter what the stream does
    grid[:, :4] = WALLHIT
    grid[:, width - 4:] = WALLHIT
    phantoms = []
    if topology.wall:
        grid[:, :LADDER_HALF - 1] = BLOCKED
        phantoms = [LADDER_HALF - 1, width + LADDER_HALF - 1]
    elif topology.kind in ("square-ladder-one-sided", "triangular-ladder-wide",
                           "triangular-ladder-narrow"):
        grid[:, :LADDER_HALF] = BLOCKED
    sx, sy = topology.start_site()
    if topology.kind.startswith("square"):
        offsets = [[1, -1, width], [1, -1, -width]]
        xdeltas = [1, -1, 0]
    else:
        offsets = [[2, -2, width + 1, width - 1],
                   [2, -2, -width + 1, -width - 1]]
        xdeltas = [2, -2, 1, -1]
    return _Grid(
        visited=vis,
        start_idx=sy * width + sx + LADDER_HALF,
        start_x=sx,
        phantoms=np.array(phantoms, dtype=np.int64),
        offsets=np.array(offsets, dtype=np.int64),
        xdeltas=np.array(xdeltas, dtype=np.int64),
        class_mode=1,
        row_threshold=width,
        max_len=LADDER_MAX_LEN,
        max_w=2 * LADDER_MAX_LEN,
    )


def _infinite_grid(topology: LatticeTopology) -> _Grid:
    half = topology.box_half_width
    stride = 2 * half + 1
    vis = np.zeros(stride * stride, dtype=np.uint64)
    axis = np.abs(np.arange(stride) - half)
    cheb = np.maximum.outer(axis, axis)
    vis.reshape(stride, stride)[cheb >= half - 1] = WALLHIT
    if topology.kind == "infinite-square":
        offsets = [[1, -1, stride, -stride]] * 2
        xdeltas = [1, -1, 0, 0]
        class_mode = 0
    elif topology.kind == "infinite-triangular":
        offsets = [[1, -1, stride, -stride, 1 - stride, stride - 1]] * 2
        xdeltas = [1, -1, 0, 0, 1, -1]
        class_mode = 0
    else:
        # stride is odd, so flat-index parity equals (x + y) parity and
        # picks the direction of the vertical bond
        offsets = [[1, -1, stride], [1, -1, -stride]]
        xdeltas = [1, -1, 0]
        class_mode = 2
    sx, sy = topology.start_site()
    return _Grid(
        visited=vis,
        start_idx=(sy + half) * stride + (sx + half),
        start_x=sx,
        phantoms=np.array([], dtype=np.int64),
        offsets=np.array(offsets, dtype=np.int64),
        xdeltas=np.array(xdeltas, dtype=np.int64),
        class_mode=class_mode,
        row_threshold=0,
        max_len=(2 * half - 3) ** 2,
        max_w=2 * half,
    )


@dataclass(frozen=True)
class SimSummary:
    """Outcome of a batch of walks, exact counts only.

    lengths and widths hold the trapped-walk histograms; escapes through
    the box rim and walks beyond the histogram range are counted apart and
    excluded from the moments.
    """

    kind: str
    C: Fraction
    wall: bool
    walks: int
    seed: int
    first_index: int
    lengths: dict[int, int]
    widths: dict[int, int]
    wall_hits: int
    overflow: int

    @property
    def trapped(self) -> int:
        return self.walks - self.wall_hits - self.overflow

    def _moments(self, counts):
        n = self.trapped
        if n == 0:
            raise ValueError("no trapped walks")
        s1 = sum(v * c for v, c in counts.items())
        s2 = sum(v * v * c for v, c in counts.items())
        mean = Fraction(s1, n)
        return float(mean), float(Fraction(s2, n) - mean * mean)

    @property
    def mean_length(self) -> float:
        return self._moments(self.lengths)[0]

    @property
    def variance_length(self) -> float:
        return self._moments(self.lengths)[1]

    @property
    def mean_width(self) -> float:
        return self._moments(self.widths)[0]

    @property
    def variance_width(self) -> float:
        return self._moments(self.widths)[1]

    def length_probability(self, n: int) -> float:
        return self.lengths.get(n, 0) / self.trapped

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "bias": str(self.C),
            "wall": self.wall,
            "walks": self.walks,
            "seed": self.seed,
            "firstIndex": self.first_index,
            "trapped": self.trapped,
            "wallHits": self.wall_hits,
            "overflow": self.overflow,
            "meanLength": self.mean_length,
            "varianceLength": self.variance_length,
            "meanWidth": self.mean_width,
            "varianceWidth": self.variance_width,
            "lengths": {str(n): c for n, c in sorted(self.lengths.items())},
            "widths": {str(w): c for w, c in sorted(self.widths.items())},
        }


def run_walks(topology: LatticeTopology, C=Fraction(1), walks: int = 100_000,
              seed: int = 1, streams: int = 1, first_index: int = 0,
              backend: str | None = None) -> SimSummary:
    """Simulate trapped walks and return their exact histograms.

    Walk number first_index + i runs on its own stream derived from seed,
    so results do not depend on streams (a pure chunking knob) and batches
    with adjacent index ranges can be merged. backend picks the kernel:
    None for the import-time default, "compiled" or "pure" to insist.
    """
    C = _as_bias(C)
    if walks < 0:
        raise ValueError("walks must be nonnegative")
    if streams < 1:
        raise ValueError("streams must be at least 1")
    if seed < 0 or first_index < 0:
        raise ValueError("seed and first_index must be nonnegative")
    kernel = _kernel_for(backend)
    grid = build_grid(topology)
    k = grid.offsets.shape[1]
    cpow = np.array([float(C) ** e for e in range(k)], dtype=np.float64)
    length_hist = np.zeros(grid.max_len + 1, dtype=np.int64)
    width_hist = np.zeros(grid.max_w + 1, dtype=np.int64)
    wall_hits = 0
    overflow = 0
    base, extra = divmod(walks, streams)
    start = first_index
    for i in range(streams):
        chunk = base + (1 if i < extra else 0)
        if chunk == 0:
            continue
        wh, ov = kernel.run_walks_kernel(
            grid.visited.copy(), grid.start_idx, grid.start_x, grid.phantoms,
            grid.offsets, grid.xdeltas, grid.class_mode, grid.row_threshold,
            cpow, chunk, seed, start, length_hist, width_hist)
        wall_hits += wh
        overflow += ov
        start += chunk
    return SimSummary(
        kind=topology.kind,
        C=C,
        wall=topology.wall,
        walks=walks,
        seed=seed,
        first_index=first_index,
        lengths={int(n): int(c) for n, c in enumerate(length_hist) if c},
        widths={int(w): int(c) for w, c in enumerate(width_hist) if c},
        wall_hits=wall_hits,
        overflow=overflow,
    )


def parity_profile(summary: SimSummary, modulus: int = 2) -> dict[int, float]:
    """Fraction of trapped walks by trapping length modulo `modulus`."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    mass = {r: 0 for r in range(modulus)}
    for n, c in summary.lengths.items():
        mass[n % modulus] += c
    total = summary.trapped
    return {r: m / total for r, m in mass.items()}


def honeycomb_parity_profile(summary: SimSummary) -> dict[int, float]:
    """Mass by trapping length mod 4; only meaningful on the honeycomb."""
    if summary.kind != "infinite-honeycomb":
        raise ValueError("summary does not come from the honeycomb lattice")
    return parity_profile(summary, modulus=4)
