# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled annealing kernel; the hot loop runs without the GIL.

Draw-for-draw twin of ``_pykernel``: same move sampling, same uniform and
bounded-integer formulas over the same ``PCG64`` stream. Tables are flat
``h[t * m + r]`` with ``m = n - 1``.
"""
from cpython.pycapsule cimport PyCapsule_GetPointer
from libc.math cimport exp
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t, int64_t
from numpy.random cimport bitgen_t

import numpy as np

cdef enum:
    MAX_REJECTIONS = 100


cdef inline double _uniform(bitgen_t* g) noexcept nogil:
    return (g.next_uint64(g.state) >> 11) * (1.0 / 9007199254740992.0)


cdef inline int _below(bitgen_t* g, int bound) noexcept nogil:
    return <int>(((g.next_uint64(g.state) >> 32) * <uint64_t>bound) >> 32)


cdef inline int _iabs(int v) noexcept nogil:
    return -v if v < 0 else v


cdef inline void _swap_cells(int* h, int m, int i, int j, int r) noexcept nogil:
    cdef int a = h[i * m + r]
    cdef int b = h[j * m + r]
    h[i * m + r] = b
    h[j * m + r] = a
    h[(_iabs(b) - 1) * m + r] = -(i + 1) if b > 0 else i + 1
    h[(_iabs(a) - 1) * m + r] = -(j + 1) if a > 0 else j + 1


cdef void _swap_homes(int* h, int n, int i, int j) noexcept nogil:
    cdef int m = n - 1, r
    for r in range(m):
        if _iabs(h[i * m + r]) == j + 1:
            h[i * m + r] = -h[i * m + r]
            h[j * m + r] = -h[j * m + r]
            return


cdef void _swap_rounds(int* h, int n, int a, int b) noexcept nogil:
    cdef int m = n - 1, t, tmp
    for t in range(n):
        tmp = h[t * m + a]
        h[t * m + a] = h[t * m + b]
        h[t * m + b] = tmp


cdef void _swap_teams(int* h, int n, int i, int j) noexcept nogil:
    cdef int m = n - 1, r
    for r in range(m):
        if _iabs(h[i * m + r]) != j + 1:
            _swap_cells(h, m, i, j, r)


cdef void _partial_swap_rounds(int* h, int n, int t, int a, int b, int* work) noexcept nogil:
    # work: 2n ints (seen flags, stack)
    cdef int m = n - 1, x, y, k, top = 0, tmp
    cdef int* seen = work
    cdef int* stack = work + n
    for x in range(n):
        seen[x] = 0
    seen[t] = 1
    stack[top] = t
    top += 1
    while top:
        top -= 1
        x = stack[top]
        tmp = h[x * m + a]
        h[x * m + a] = h[x * m + b]
        h[x * m + b] = tmp
        # h[x] is already swapped: look at both columns, order does not matter for the set
        for k in range(2):
            y = _iabs(h[x * m + (a if k == 0 else b)]) - 1
            if not seen[y]:
                seen[y] = 1
                stack[top] = y
                top += 1


cdef void _partial_swap_teams(int* h, int n, int i, int j, int r, int* work) noexcept nogil:
    # work: 2n ints (opponent -> round for row i, chain)
    cdef int m = n - 1, c, v, length = 0
    cdef int* where = work
    cdef int* chain = work + n + 1
    for c in range(m):
        where[_iabs(h[i * m + c])] = c
    chain[length] = r
    length += 1
    c = where[_iabs(h[j * m + r])]
    while c != r:
        chain[length] = c
        length += 1
        c = where[_iabs(h[j * m + c])]
    for c in range(length):
        _swap_cells(h, m, i, j, chain[c])


cdef int _random_move(int* h, int n, bitgen_t* g, int* work) noexcept nogil:
    cdef int m = n - 1
    cdef int kind = _below(g, 5)
    cdef int attempt, i, j, a, b, t, r
    for attempt in range(MAX_REJECTIONS):
        if kind == 0 or kind == 2:
            i = _below(g, n)
            j = _below(g, n)
            if i == j:
                continue
            if kind == 0:
                _swap_teams(h, n, i, j)
            else:
                _swap_homes(h, n, i, j)
        elif kind == 1:
            a = _below(g, m)
            b = _below(g, m)
            if a == b:
                continue
            _swap_rounds(h, n, a, b)
        elif kind == 3:
            t = _below(g, n)
            a = _below(g, m)
            b = _below(g, m)
            if a == b:
                continue
            _partial_swap_rounds(h, n, t, a, b, work)
        else:
            i = _below(g, n)
            j = _below(g, n)
            r = _below(g, m)
            if i == j or _iabs(h[i * m + r]) == j + 1:
                continue
            _partial_swap_teams(h, n, i, j, r, work)
        return kind
    return -1


cdef int64_t _distance(const int* h, int n, const int64_t* d) noexcept nogil:
    cdef int m = n - 1, t, r, v, loc, nxt
    cdef int64_t total = 0
    for t in range(n):
        loc = t
        for r in range(m):
            v = h[t * m + r]
            nxt = t if v > 0 else -v - 1
            total += d[loc * n + nxt]
            loc = nxt
        for r in range(m):
            v = h[t * m + r]
            nxt = t if v < 0 else v - 1
            total += d[loc * n + nxt]
            loc = nxt
        total += d[loc * n + t]
    return total


cdef bint _feasible(const int* h, int n, int k, int* work) noexcept nogil:
    cdef int m = n - 1, t, r, v, j, run, side, prev, x
    cdef int* seen = work
    for t in range(n):
        for x in range(n + 1):
            seen[x] = 0
        for r in range(m):
            v = h[t * m + r]
            j = _iabs(v)
            if j < 1 or j > n or j == t + 1 or seen[j]:
                return False
            seen[j] = 1
            if h[(j - 1) * m + r] != (-(t + 1) if v > 0 else t + 1):
                return False
        run = 0
        prev = -1
        for x in range(2 * m):
            v = h[t * m + (x if x < m else x - m)]
            side = (v > 0) if x < m else (v < 0)
            run = run + 1 if side == prev else 1
            prev = side
            if run > k:
                return False
    return True


def random_move(int[:, ::1] h, object bit_generator):
    """Apply one random move in place (used to cross-check the Python kernel)."""
    cdef bitgen_t* g = <bitgen_t*>PyCapsule_GetPointer(bit_generator.capsule, "BitGenerator")
    cdef int n = h.shape[0]
    cdef int[::1] work = np.zeros(2 * n + 2, dtype=np.intc)
    cdef int kind
    with bit_generator.lock:
        kind = _random_move(&h[0, 0], n, g, &work[0])
    if kind < 0:
        raise RuntimeError("no valid move arguments after 100 draws")
    return kind


def distance(int[:, ::1] h, const int64_t[:, ::1] d):
    return _distance(&h[0, 0], h.shape[0], &d[0, 0])


def feasible(int[:, ::1] h, int k):
    cdef int[::1] work = np.zeros(h.shape[0] + 2, dtype=np.intc)
    return bool(_feasible(&h[0, 0], h.shape[0], k, &work[0]))


def anneal(int[:, ::1] h0, const int64_t[:, ::1] dmat, int k, double t_initial, double t_final,
           double alpha, long n_iterations, object bit_generator):
    """Same contract as ``_pykernel.anneal`` without the observer."""
    cdef bitgen_t* g = <bitgen_t*>PyCapsule_GetPointer(bit_generator.capsule, "BitGenerator")
    cdef int n = h0.shape[0]
    cdef int m = n - 1
    cdef size_t cells = n * m
    cdef size_t nbytes = cells * sizeof(int)
    cdef int[:, ::1] best_out = np.zeros((n, m), dtype=np.intc)
    cdef int[::1] buf = np.zeros(3 * cells + 2 * n + 2, dtype=np.intc)
    cdef int* curr = &buf[0]
    cdef int* cand = curr + cells
    cdef int* best = cand + cells
    cdef int* work = best + cells
    cdef int* tmp
    cdef const int64_t* d = &dmat[0, 0]
    cdef int64_t curr_dist, cand_dist, delta, best_dist = -1
    cdef bint have_best = False
    cdef long it, explored = 0, accepted = 0
    cdef double temp
    cdef int kind = 0

    memcpy(curr, &h0[0, 0], nbytes)
    with bit_generator.lock:
      with nogil:
        curr_dist = _distance(curr, n, d)
        if _feasible(curr, n, k, work):
            memcpy(best, curr, nbytes)
            best_dist = curr_dist
            have_best = True
        for it in range(n_iterations):
            temp = t_initial
            if have_best:
                memcpy(curr, best, nbytes)
                curr_dist = best_dist
            while temp > t_final:
                memcpy(cand, curr, nbytes)
                kind = _random_move(cand, n, g, work)
                if kind < 0:
                    break
                cand_dist = _distance(cand, n, d)
                delta = cand_dist - curr_dist
                explored += 1
                if delta < 0 or exp(-(<double>delta) / temp) > _uniform(g):
                    accepted += 1
                    tmp = curr
                    curr = cand
                    cand = tmp
                    curr_dist = cand_dist
                    if (not have_best or cand_dist < best_dist) and _feasible(curr, n, k, work):
                        memcpy(best, curr, nbytes)
                        best_dist = cand_dist
                        have_best = True
                temp *= alpha
            if kind < 0:
                break
    if kind < 0:
        raise RuntimeError("no valid move arguments after 100 draws")
    if not have_best:
        return None, -1, explored, accepted
    memcpy(&best_out[0, 0], best, nbytes)
    return np.asarray(best_out), best_dist, explored, accepted
