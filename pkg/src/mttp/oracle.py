"""Exhaustive reference solver for tiny instances (n <= 6).

Deliberately shares no code with ``schedule`` or the kernels: itineraries are
rebuilt as explicit location lists and AtMost is re-derived from venue
patterns, so agreement with the fast paths is meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .instance import Instance
from .schedule import Schedule

MAX_ORACLE_TEAMS = 6


class OracleSizeError(ValueError):
    pass


@dataclass
class EnumerationReport:
    n: int
    k: int
    count_feasible: int
    optimum_distance: Optional[int]
    optimum_schedule: Optional[Schedule]
    schedules_enumerated: int


def oracle_team_distance(s: Schedule, inst: Instance, t: int) -> int:
    """Walk length of 1-based team ``t`` built from its list of visited venues."""
    home = t
    stops = [home]
    for cell in s.opp[t - 1]:
        cell = int(cell)
        stops.append(home if cell > 0 else -cell)
    stops.append(home)
    return sum(int(inst.dist[a - 1][b - 1]) for a, b in zip(stops, stops[1:]))


def oracle_distance(s: Schedule, inst: Instance) -> int:
    return sum(oracle_team_distance(s, inst, t) for t in range(1, s.n + 1))


def _longest_run(venues) -> int:
    best = cur = 0
    last = None
    for v in venues:
        cur = cur + 1 if v == last else 1
        last = v
        best = max(best, cur)
    return best


def single_round_robins(n: int):
    """Yield every ordered sequence of ``n-1`` perfect matchings covering K_n.

    Each round is a tuple of ``(a, b)`` pairs with ``a < b`` (1-based); within a
    round the lowest unmatched team is always paired first, so no matching is
    produced twice.
    """
    used = set()

    def matchings(free):
        if not free:
            yield ()
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            if (a, b) in used:
                continue
            rest = free[1:idx] + free[idx + 1:]
            for tail in matchings(rest):
                yield ((a, b),) + tail

    def rounds(depth, acc):
        if depth == n - 1:
            yield tuple(acc)
            return
        for m in list(matchings(list(range(1, n + 1)))):
            used.update(m)
            acc.append(m)
            yield from rounds(depth + 1, acc)
            acc.pop()
            used.difference_update(m)

    yield from rounds(0, [])


def enumerate_feasible(inst: Instance) -> EnumerationReport:
    """Every mirrored double round robin of ``inst``: round orders x first-half venues."""
    n, k = inst.n, inst.k
    if n > MAX_ORACLE_TEAMS:
        raise OracleSizeError(f"exhaustive enumeration is limited to n <= {MAX_ORACLE_TEAMS}")
    m = n - 1
    games = n * m // 2
    masks = np.arange(1 << games, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(games)) & 1).astype(np.int64)

    # per-team lookup tables over the team's own m venue bits (1 = plays at home)
    patterns = [tuple((p >> i) & 1 for i in range(m)) for p in range(1 << m)]
    weights = 1 << np.arange(m)

    count = 0
    enumerated = 0
    best = None
    for srr in single_round_robins(n):
        # game g in round r: srr[r][slot]; first team of the pair hosts when its bit is 1
        order = [(r, a, b) for r, rnd in enumerate(srr) for a, b in rnd]
        total = np.zeros(len(masks), dtype=np.int64)
        ok = np.ones(len(masks), dtype=bool)
        for t in range(1, n + 1):
            # (game index, opponent, t is first of pair) per round
            mine = []
            for g, (r, a, b) in enumerate(order):
                if t in (a, b):
                    mine.append((g, b if t == a else a, t == a))
            cost = np.empty(len(patterns), dtype=np.int64)
            good = np.empty(len(patterns), dtype=bool)
            for p_idx, pat in enumerate(patterns):
                first = [opp if home else -opp
                         for (_, opp, _), home in zip(mine, pat)]
                row = first + [-c for c in first]
                stops = [t] + [t if c > 0 else -c for c in row] + [t]
                cost[p_idx] = sum(int(inst.dist[x - 1][y - 1]) for x, y in zip(stops, stops[1:]))
                good[p_idx] = _longest_run([c > 0 for c in row]) <= k
            home_bits = np.stack(
                [bits[:, g] if is_first else 1 - bits[:, g] for g, _, is_first in mine], axis=1)
            idx = home_bits @ weights
            total += cost[idx]
            ok &= good[idx]
        enumerated += len(masks)
        if not ok.any():
            continue
        count += int(ok.sum())
        feasible_totals = np.where(ok, total, np.iinfo(np.int64).max)
        i = int(feasible_totals.argmin())
        if best is None or feasible_totals[i] < best[0]:
            best = (int(feasible_totals[i]), srr, i)
    if best is None:
        return EnumerationReport(n, k, 0, None, None, enumerated)
    dist, srr, mask = best
    opp = np.zeros((n, 2 * m), dtype=np.int64)
    g = 0
    for r, rnd in enumerate(srr):
        for a, b in rnd:
            host, guest = (a, b) if (mask >> g) & 1 else (b, a)
            opp[host - 1, r], opp[guest - 1, r] = guest, -host
            opp[host - 1, r + m], opp[guest - 1, r + m] = -guest, host
            g += 1
    return EnumerationReport(n, k, count, dist, Schedule(opp), enumerated)
