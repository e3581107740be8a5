"""Pure-Python walk kernel, the fallback when the compiled twin is absent.

This module and the compiled extension implement one contract and must
consume randomness identically:

* walk number i (globally, across chunks) runs on its own SplitMix64
  stream started at mix64(mix64(seed) ^ mix64(i ^ 0xD1B54A32D192ED03)),
* each step of an alive walk consumes exactly one draw: the state advances
  by the golden-gamma increment and the top 53 bits of the mixed output
  become a double in [0, 1),
* a trapped walk consumes nothing at the step it fails to make, so the
  trapping event itself never touches the stream.

Moves are scanned in the canonical neighbour order (gsawtrap.lattices) and
the draw picks one by cumulative weight; the unbiased case runs through the
same scan with an all-ones weight table. Occupancy lives in a uint64 array
stamped with the walk's serial number, so no per-walk clearing is needed;
two sentinel values mark cells outside the domain (BLOCKED) and cells whose
entry ends the walk as an escape (WALLHIT). Given equal inputs the two
kernels emit identical histograms bit for bit.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
BLOCKED = MASK        # never a candidate: outside the walk's domain
WALLHIT = MASK - 1    # stepping here ends the walk as an escape

_GOLDEN = 0x9E3779B97F4A7C15
_SALT = 0xD1B54A32D192ED03
_INV53 = 2.0 ** -53


def mix64(z: int) -> int:
    """SplitMix64 finaliser; doubles as the stream-seeding scramble."""
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def stream_state(seed: int, index: int) -> int:
    """Initial state of the stream driving walk number `index`."""
    return mix64(mix64(seed) ^ mix64((index ^ _SALT) & MASK))


def run_walks_kernel(visited, start_idx, start_x, phantoms, offsets, xdeltas,
                     class_mode, row_threshold, cpow, n_walks, seed,
                     first_index, length_hist, width_hist):
    """Run n_walks walks, accumulating into the histogram arrays.

    visited is a prefilled uint64 grid (sentinels placed, zero elsewhere),
    offsets a (2, k) table of flat-index deltas per site class, xdeltas the
    x displacement of each move, cpow the weight table indexed by the
    number of occupied neighbours a candidate has beyond the walk's head.
    class_mode selects how a site's class is computed: 0 always class 0,
    1 by row (index >= row_threshold), 2 by index parity. Walks whose
    length or width exceeds the histogram range are dropped and counted in
    the second return value; the first counts escapes through WALLHIT
    cells. All arrays are mutated in place.
    """
    vis = visited.tolist()
    offs0 = [int(d) for d in offsets[0]]
    offs1 = [int(d) for d in offsets[1]]
    xdel = [int(d) for d in xdeltas]
    pw = [float(c) for c in cpow]
    phant = [int(p) for p in phantoms]
    lhist = length_hist.tolist()
    whist = width_hist.tolist()
    k = len(offs0)
    max_len = len(lhist) - 1
    max_w = len(whist) - 1
    wall_hits = 0
    overflow = 0
    w = [0.0] * k
    for local in range(n_walks):
        s = stream_state(seed, first_index + local)
        wid = local + 1
        for p in phant:
            vis[p] = wid
        head = start_idx
        vis[head] = wid
        x = start_x
        min_x = max_x = x
        length = 0
        while True:
            if class_mode == 0:
                offs = offs0
            elif class_mode == 1:
                offs = offs1 if head >= row_threshold else offs0
            else:
                offs = offs1 if head & 1 else offs0
            total = 0.0
            last = -1
            for j in range(k):
                c = head + offs[j]
                v = vis[c]
                if v == wid or v == BLOCKED:
                    w[j] = 0.0
                    continue
                if class_mode == 0:
                    coffs = offs0
                elif class_mode == 1:
                    coffs = offs1 if c >= row_threshold else offs0
                else:
                    coffs = offs1 if c & 1 else offs0
                occ = 0
                for m in range(k):
                    if vis[c + coffs[m]] == wid:
                        occ += 1
                # the head is always among the occupied neighbours; the
                # weight exponent counts the others
                wj = pw[occ - 1]
                w[j] = wj
                total += wj
                last = j
            if last < 0:
                width = max_x - min_x
                if length <= max_len and width <= max_w:
                    lhist[length] += 1
                    whist[width] += 1
                else:
                    overflow += 1
                break
            s = (s + _GOLDEN) & MASK
            u = (mix64(s) >> 11) * _INV53
            target = u * total
            choose = last
            cum = 0.0
            for j in range(k):
                wj = w[j]
                if wj == 0.0:
                    continue
                cum += wj
                if target < cum:
                    choose = j
                    break
            c = head + offs[choose]
            if vis[c] == WALLHIT:
                wall_hits += 1
                break
            vis[c] = wid
            head = c
            x += xdel[choose]
            if x < min_x:
                min_x = x
            elif x > max_x:
                max_x = x
            length += 1
    visited[:] = vis
    length_hist[:] = lhist
    width_hist[:] = whist
    return wall_hits, overflow
