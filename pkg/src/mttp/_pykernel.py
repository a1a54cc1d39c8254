"""Pure-Python annealing kernel.

Works on the first half of a mirrored schedule as a list of row lists
(``h[t][r]``, 0-based indices, signed 1-based team values); the second half is
implied by negation. ``_kernel.pyx`` mirrors every function here draw for draw,
so the two must be edited together.
"""
from __future__ import annotations

import math

SWAP_TEAMS, SWAP_ROUNDS, SWAP_HOMES, PARTIAL_SWAP_ROUNDS, PARTIAL_SWAP_TEAMS = range(5)
MOVE_NAMES = ("SwapTeams", "SwapRounds", "SwapHomes", "PartialSwapRounds", "PartialSwapTeams")
MAX_REJECTIONS = 100


def _swap_cells(h, i, j, r):
    # team i takes team j's game in round r and vice versa
    a = h[i][r]
    b = h[j][r]
    h[i][r] = b
    h[j][r] = a
    h[abs(b) - 1][r] = -(i + 1) if b > 0 else i + 1
    h[abs(a) - 1][r] = -(j + 1) if a > 0 else j + 1


def swap_homes(h, i, j):
    row = h[i]
    for r in range(len(row)):
        if abs(row[r]) == j + 1:
            row[r] = -row[r]
            h[j][r] = -h[j][r]
            return


def swap_rounds(h, a, b):
    for row in h:
        row[a], row[b] = row[b], row[a]


def swap_teams(h, i, j):
    for r in range(len(h[i])):
        if abs(h[i][r]) != j + 1:
            _swap_cells(h, i, j, r)


def partial_swap_rounds(h, t, a, b):
    seen = [False] * len(h)
    seen[t] = True
    stack = [t]
    chain = []
    while stack:
        x = stack.pop()
        chain.append(x)
        for y in (abs(h[x][a]) - 1, abs(h[x][b]) - 1):
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    for x in chain:
        row = h[x]
        row[a], row[b] = row[b], row[a]
    return chain


def partial_swap_teams(h, i, j, r):
    where = [0] * (len(h) + 1)
    for c, v in enumerate(h[i]):
        where[abs(v)] = c
    chain = [r]
    c = where[abs(h[j][r])]
    while c != r:
        chain.append(c)
        c = where[abs(h[j][c])]
    for c in chain:
        _swap_cells(h, i, j, c)
    return chain


def random_move(h, rng):
    """Apply one uniformly drawn move to ``h`` in place; return its kind."""
    n = len(h)
    m = n - 1
    kind = rng.below(5)
    for _ in range(MAX_REJECTIONS):
        if kind == SWAP_TEAMS or kind == SWAP_HOMES:
            i = rng.below(n)
            j = rng.below(n)
            if i == j:
                continue
            if kind == SWAP_TEAMS:
                swap_teams(h, i, j)
            else:
                swap_homes(h, i, j)
        elif kind == SWAP_ROUNDS:
            a = rng.below(m)
            b = rng.below(m)
            if a == b:
                continue
            swap_rounds(h, a, b)
        elif kind == PARTIAL_SWAP_ROUNDS:
            t = rng.below(n)
            a = rng.below(m)
            b = rng.below(m)
            if a == b:
                continue
            partial_swap_rounds(h, t, a, b)
        else:
            i = rng.below(n)
            j = rng.below(n)
            r = rng.below(m)
            if i == j or abs(h[i][r]) == j + 1:
                continue
            partial_swap_teams(h, i, j, r)
        return kind
    raise RuntimeError(f"no valid {MOVE_NAMES[kind]} arguments after {MAX_REJECTIONS} draws")


def distance(h, d):
    total = 0
    for t, row in enumerate(h):
        dt = d[t]
        loc = t
        for v in row:
            nxt = t if v > 0 else -v - 1
            total += d[loc][nxt]
            loc = nxt
        for v in row:
            nxt = t if v < 0 else v - 1
            total += d[loc][nxt]
            loc = nxt
        total += dt[loc]
    return total


def feasible(h, k):
    n = len(h)
    for t, row in enumerate(h):
        seen = [False] * (n + 1)
        for r, v in enumerate(row):
            j = abs(v)
            if j < 1 or j > n or j == t + 1 or seen[j]:
                return False
            seen[j] = True
            if h[j - 1][r] != (-(t + 1) if v > 0 else t + 1):
                return False
        run = 0
        prev = 0
        for side in [v > 0 for v in row] + [v < 0 for v in row]:
            run = run + 1 if side == prev else 1
            prev = side
            if run > k:
                return False
    return True


def anneal(h, d, k, t_initial, t_final, alpha, n_iterations, rng, observer=None):
    """One replica: reheated geometric cooling with a feasibility-gated incumbent.

    Returns ``(best_half or None, best_dist or -1, explored, accepted)``.
    """
    curr = [row[:] for row in h]
    curr_dist = distance(curr, d)
    best = None
    best_dist = -1
    if feasible(curr, k):
        best = [row[:] for row in curr]
        best_dist = curr_dist
    explored = 0
    accepted = 0
    exp = math.exp
    for _ in range(n_iterations):
        temp = t_initial
        if best is not None:
            curr = [row[:] for row in best]
            curr_dist = best_dist
        while temp > t_final:
            cand = [row[:] for row in curr]
            kind = random_move(cand, rng)
            cand_dist = distance(cand, d)
            delta = cand_dist - curr_dist
            explored += 1
            improved = False
            ok = delta < 0 or exp(-delta / temp) > rng.uniform()
            if ok:
                accepted += 1
                curr = cand
                curr_dist = cand_dist
                if (best is None or cand_dist < best_dist) and feasible(cand, k):
                    best = [row[:] for row in cand]
                    best_dist = cand_dist
                    improved = True
            if observer is not None:
                observer(explored, kind, cand_dist, curr_dist, ok, improved, best_dist,
                         cand if improved else None, temp)
            temp *= alpha
    return best, best_dist, explored, accepted
