# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel.

Twin of gsawtrap._mc_py: same randomness contract, same canonical move
order, same histogram semantics, bit-identical output. Any change here
must land in the pure module too; tests/test_simulate.py compares the two
on every lattice kind.
"""

import numpy as np

cimport numpy as cnp

MASK = (1 << 64) - 1
BLOCKED = MASK
WALLHIT = MASK - 1

cdef unsigned long long _BLOCKED = <unsigned long long>0xFFFFFFFFFFFFFFFF
cdef unsigned long long _WALLHIT = _BLOCKED - 1
cdef unsigned long long _GOLDEN = <unsigned long long>0x9E3779B97F4A7C15
cdef unsigned long long _SALT = <unsigned long long>0xD1B54A32D192ED03
cdef double _INV53 = 1.0 / 9007199254740992.0


cdef inline unsigned long long _mix64(unsigned long long z) nogil:
    z = (z ^ (z >> 30)) * <unsigned long long>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <unsigned long long>0x94D049BB133111EB
    return z ^ (z >> 31)


def mix64(z):
    """Python-visible scramble, for cross-checking against the pure twin."""
    return _mix64(<unsigned long long>(z & MASK))


def stream_state(seed, index):
    """Initial state of the stream driving walk number `index`."""
    cdef unsigned long long s = <unsigned long long>(seed & MASK)
    cdef unsigned long long i = <unsigned long long>(index & MASK)
    return _mix64(_mix64(s) ^ _mix64(i ^ _SALT))


def run_walks_kernel(cnp.uint64_t[::1] visited not None,
                     Py_ssize_t start_idx,
                     long long start_x,
                     cnp.int64_t[::1] phantoms not None,
                     cnp.int64_t[:, ::1] offsets not None,
                     cnp.int64_t[::1] xdeltas not None,
                     int class_mode,
                     Py_ssize_t row_threshold,
                     double[::1] cpow not None,
                     long long n_walks,
                     unsigned long long seed,
                     unsigned long long first_index,
                     cnp.int64_t[::1] length_hist not None,
                     cnp.int64_t[::1] width_hist not None):
    """See gsawtrap._mc_py.run_walks_kernel; the contract is shared."""
    cdef Py_ssize_t k = offsets.shape[1]
    cdef Py_ssize_t n_phant = phantoms.shape[0]
    cdef Py_ssize_t max_len = length_hist.shape[0] - 1
    cdef Py_ssize_t max_w = width_hist.shape[0] - 1
    if k > 8:
        raise ValueError("move tables wider than 8 are not supported")
    cdef double wbuf[8]
    cdef unsigned long long s, wid, v, seed_mix
    cdef long long local, x, min_x, max_x, length, width
    cdef Py_ssize_t head, c, cidx, j, m, pi, last, choose
    cdef int occ, cls
    cdef double total, cum, u, target, wj
    cdef long long wall_hits = 0
    cdef long long overflow = 0
    seed_mix = _mix64(seed)
    with nogil:
        for local in range(n_walks):
            s = _mix64(seed_mix ^ _mix64((first_index + <unsigned long long>local) ^ _SALT))
            wid = <unsigned long long>(local + 1)
            for pi in range(n_phant):
                visited[phantoms[pi]] = wid
            head = start_idx
            visited[head] = wid
            x = start_x
            min_x = x
            max_x = x
            length = 0
            while True:
                if class_mode == 0:
                    cls = 0
                elif class_mode == 1:
                    cls = 1 if head >= row_threshold else 0
                else:
                    cls = <int>(head & 1)
                total = 0.0
                last = -1
                for j in range(k):
                    c = head + offsets[cls, j]
                    v = visited[c]
                    if v == wid or v == _BLOCKED:
                        wbuf[j] = 0.0
                        continue
                    if class_mode == 0:
                        occ = 0
                        for m in range(k):
                            if visited[c + offsets[0, m]] == wid:
                                occ += 1
                    elif class_mode == 1:
                        occ = 0
                        if c >= row_threshold:
                            for m in range(k):
                                if visited[c + offsets[1, m]] == wid:
                                    occ += 1
                        else:
                            for m in range(k):
                                if visited[c + offsets[0, m]] == wid:
                                    occ += 1
                    else:
                        occ = 0
                        if c & 1:
                            for m in range(k):
                                if visited[c + offsets[1, m]] == wid:
                                    occ += 1
                        else:
                            for m in range(k):
                                if visited[c + offsets[0, m]] == wid:
                                    occ += 1
                    # the head is always among the occupied neighbours; the
                    # weight exponent counts the others
                    wj = cpow[occ - 1]
                    wbuf[j] = wj
                    total += wj
                    last = j
                if last < 0:
                    width = max_x - min_x
                    if length <= max_len and width <= max_w:
                        length_hist[length] += 1
                        width_hist[width] += 1
                    else:
                        overflow += 1
                    break
                s = s + _GOLDEN
                u = <double>(_mix64(s) >> 11) * _INV53
                target = u * total
                choose = last
                cum = 0.0
                for j in range(k):
                    wj = wbuf[j]
                    if wj == 0.0:
                        continue
                    cum += wj
                    if target < cum:
                        choose = j
                        break
                c = head + offsets[cls, choose]
                if visited[c] == _WALLHIT:
                    wall_hits += 1
                    break
                visited[c] = wid
                head = c
                x += xdeltas[choose]
                if x < min_x:
                    min_x = x
                elif x > max_x:
                    max_x = x
                length += 1
    return wall_hits, overflow
