"""Schedule representation, constraint checks and the travel-distance objective.

A schedule is an opponent table ``opp`` of shape ``(n, 2(n-1))``: row ``t``
(0-based) and column ``r`` (0-based) hold ``+j`` when team ``t+1`` hosts team
``j`` in round ``r+1`` and ``-j`` when it travels to ``j``. Team labels in cell
values are 1-based, matching the external text format.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .instance import Instance


class ScheduleFormatError(ValueError):
    """Malformed schedule table or schedule text."""


class Schedule:
    __slots__ = ("n", "opp")

    def __init__(self, opp):
        a = np.array(opp, dtype=np.int64)
        if a.ndim != 2:
            raise ScheduleFormatError(f"opponent table must be 2-D, got shape {a.shape}")
        n = a.shape[0]
        if a.shape[1] != 2 * (n - 1):
            raise ScheduleFormatError(
                f"{n} teams need {2 * (n - 1)} rounds, got {a.shape[1]}")
        self.n = n
        self.opp = a

    @property
    def rounds(self) -> int:
        return 2 * (self.n - 1)

    @classmethod
    def from_half(cls, half) -> "Schedule":
        """Build a mirrored schedule from its first ``n-1`` rounds."""
        h = np.asarray(half, dtype=np.int64)
        return cls(np.concatenate([h, -h], axis=1))

    def first_half(self) -> list[list[int]]:
        return self.opp[:, : self.n - 1].tolist()

    def copy(self) -> "Schedule":
        return Schedule(self.opp.copy())

    def row(self, team: int) -> list[int]:
        """Opponent row of 1-based ``team``."""
        return self.opp[team - 1].tolist()

    def __eq__(self, other):
        if not isinstance(other, Schedule):
            return NotImplemented
        return self.opp.shape == other.opp.shape and bool(np.array_equal(self.opp, other.opp))

    __hash__ = None

    def __repr__(self):
        return f"Schedule(n={self.n}, opp={self.opp.tolist()})"


def is_valid_structure(s: Schedule) -> bool:
    """Consistency, no self-play, double round robin, single round robin first half."""
    n, opp = s.n, s.opp
    m = n - 1
    a = np.abs(opp)
    if ((a < 1) | (a > n)).any():
        return False
    teams = np.arange(1, n + 1)[:, None]
    if (a == teams).any():
        return False
    cols = np.broadcast_to(np.arange(2 * m), opp.shape)
    if (opp[a - 1, cols] != -np.sign(opp) * teams).any():
        return False
    others = np.array([[j for j in range(1, n + 1) if j != t] for t in range(1, n + 1)])
    if (np.sort(a[:, :m], axis=1) != others).any():
        return False
    signed = np.sort(opp, axis=1)
    return bool((signed == np.concatenate([-others[:, ::-1], others], axis=1)).all())


def _structure_violations(s: Schedule) -> list[tuple[int, int, str]]:
    n, opp = s.n, s.opp
    out = []
    for t in range(n):
        for r in range(s.rounds):
            v = int(opp[t, r])
            j = abs(v)
            if j < 1 or j > n:
                out.append((t + 1, r + 1, f"opponent {v} out of range"))
            elif j == t + 1:
                out.append((t + 1, r + 1, "team plays itself"))
            elif opp[j - 1, r] != (-(t + 1) if v > 0 else t + 1):
                out.append((t + 1, r + 1,
                            f"inconsistent with team {j}'s entry {int(opp[j - 1, r])}"))
    for t in range(n):
        for j in range(1, n + 1):
            if j == t + 1:
                continue
            nh = int(np.count_nonzero(opp[t] == j))
            na = int(np.count_nonzero(opp[t] == -j))
            if nh != 1 or na != 1:
                out.append((t + 1, 0, f"meets team {j} {nh}x at home and {na}x away"))
        first = [abs(int(v)) for v in opp[t, : n - 1]]
        if len(set(first)) != n - 1:
            out.append((t + 1, 0, "first half is not a single round robin"))
    return out


def is_mirrored(s: Schedule) -> bool:
    m = s.n - 1
    return bool(np.array_equal(s.opp[:, m:], -s.opp[:, :m]))


def _mirror_violations(s: Schedule) -> list[tuple[int, int, str]]:
    m = s.n - 1
    out = []
    for t, r in np.argwhere(s.opp[:, m:] != -s.opp[:, :m]):
        out.append((int(t) + 1, int(r) + m + 1,
                    f"expected {-int(s.opp[t, r])} mirroring round {int(r) + 1}, "
                    f"got {int(s.opp[t, r + m])}"))
    return out


def _atmost_violations(s: Schedule, k: int) -> list[tuple[int, int, str]]:
    out = []
    for t in range(s.n):
        run, prev = 0, 0
        for r in range(s.rounds):
            side = 1 if s.opp[t, r] > 0 else -1
            run = run + 1 if side == prev else 1
            prev = side
            if run == k + 1:
                where = "home" if side > 0 else "away"
                out.append((t + 1, r + 1, f"more than {k} consecutive {where} games"))
    return out


def atmost_satisfied(s: Schedule, k: int) -> bool:
    return not _atmost_violations(s, k)


@dataclass
class Feasibility:
    structure_ok: bool
    mirror_ok: bool
    atmost_ok: bool
    violations: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.structure_ok and self.mirror_ok and self.atmost_ok

    def __bool__(self):
        return self.feasible


def check_schedule(s: Schedule, inst: Instance) -> Feasibility:
    """Structure, Mirror and AtMost checks with a (team, round, text) violation list.

    Round 0 in a violation marks a whole-row problem.
    """
    structure = _structure_violations(s)
    mirror = _mirror_violations(s)
    atmost = _atmost_violations(s, inst.k)
    return Feasibility(not structure, not mirror, not atmost, structure + mirror + atmost)


def team_itinerary_distance(s: Schedule, inst: Instance, t: int) -> int:
    """Travel of 1-based team ``t``: home, each game venue in order, home again."""
    d = inst.dist
    home = t - 1
    loc = home
    total = 0
    for v in s.opp[home]:
        nxt = home if v > 0 else -int(v) - 1
        total += int(d[loc, nxt])
        loc = nxt
    return total + int(d[loc, home])


def travel_distance(s: Schedule, inst: Instance) -> int:
    return sum(team_itinerary_distance(s, inst, t) for t in range(1, s.n + 1))


class ScheduleTextError(ScheduleFormatError):
    def __init__(self, msg: str, line: int, column: int | None = None):
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.column = column


def render_schedule(s: Schedule) -> str:
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in s.opp)


def parse_schedule(text: str) -> Schedule:
    """Parse ``n`` lines of ``2(n-1)`` signed integers (blank lines ignored)."""
    rows = []
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    n = len(lines)
    if n < 2:
        raise ScheduleTextError("need at least two team rows", max(n, 1))
    for no, ln in lines:
        toks = ln.split()
        if len(toks) != 2 * (n - 1):
            raise ScheduleTextError(
                f"expected {2 * (n - 1)} columns for {n} teams, got {len(toks)}", no)
        row = []
        for col, tok in enumerate(toks, 1):
            try:
                row.append(int(tok))
            except ValueError:
                raise ScheduleTextError(f"not an integer: {tok!r}", no, col) from None
        rows.append(row)
    return Schedule(rows)
