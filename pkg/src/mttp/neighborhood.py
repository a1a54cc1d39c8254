"""Initial schedules and the five mirror-preserving neighborhood moves.

All moves act on the first ``n-1`` rounds and re-derive the second half, so
their output is mirrored by construction. Public functions take 1-based team
and round numbers and return a new :class:`Schedule`.
"""
from __future__ import annotations

from enum import IntEnum

from . import _pykernel as pk
from .instance import Instance
from .rng import Rng
from .schedule import Schedule


class MoveError(ValueError):
    """Move arguments outside the move's domain."""


class MoveKind(IntEnum):
    SWAP_TEAMS = pk.SWAP_TEAMS
    SWAP_ROUNDS = pk.SWAP_ROUNDS
    SWAP_HOMES = pk.SWAP_HOMES
    PARTIAL_SWAP_ROUNDS = pk.PARTIAL_SWAP_ROUNDS
    PARTIAL_SWAP_TEAMS = pk.PARTIAL_SWAP_TEAMS


def polygon_half(n: int) -> list[list[int]]:
    """First half from the circle method.

    Team ``n`` sits at the centre and hosts in odd rounds; in round ``r`` the
    rim pair at offset ``k`` is ``(r+k, r-k)`` with ``r+k`` hosting for odd ``k``.
    """
    m = n - 1
    h = [[0] * m for _ in range(n)]

    def play(home, away, r):
        h[home - 1][r - 1] = away
        h[away - 1][r - 1] = -home

    for r in range(1, n):
        if r % 2:
            play(n, r, r)
        else:
            play(r, n, r)
        for k in range(1, n // 2):
            a = (r + k - 1) % m + 1
            b = (r - k - 1) % m + 1
            if k % 2:
                play(a, b, r)
            else:
                play(b, a, r)
    return h


def canonical_schedule(n: int) -> Schedule:
    return Schedule.from_half(polygon_half(n))


def initial_schedule(inst: Instance, rng: Rng, burn_in: int | None = None) -> Schedule:
    """Circle-method schedule randomized by ``burn_in`` moves (default ``20*n``)."""
    h = polygon_half(inst.n)
    if burn_in is None:
        burn_in = 20 * inst.n
    for _ in range(burn_in):
        pk.random_move(h, rng)
    return Schedule.from_half(h)


def _team(s: Schedule, t: int) -> int:
    if not 1 <= t <= s.n:
        raise MoveError(f"team {t} outside 1..{s.n}")
    return t - 1


def _round(s: Schedule, r: int) -> int:
    if not 1 <= r <= s.n - 1:
        raise MoveError(f"round {r} outside the first half 1..{s.n - 1}")
    return r - 1


def _pair(s: Schedule, i: int, j: int) -> tuple[int, int]:
    i, j = _team(s, i), _team(s, j)
    if i == j:
        raise MoveError("the two teams must differ")
    return i, j


def swap_teams(s: Schedule, i: int, j: int) -> Schedule:
    i, j = _pair(s, i, j)
    h = s.first_half()
    pk.swap_teams(h, i, j)
    return Schedule.from_half(h)


def swap_rounds(s: Schedule, r1: int, r2: int) -> Schedule:
    a, b = _round(s, r1), _round(s, r2)
    if a == b:
        raise MoveError("the two rounds must differ")
    h = s.first_half()
    pk.swap_rounds(h, a, b)
    return Schedule.from_half(h)


def swap_homes(s: Schedule, i: int, j: int) -> Schedule:
    i, j = _pair(s, i, j)
    h = s.first_half()
    pk.swap_homes(h, i, j)
    return Schedule.from_half(h)


def partial_swap_rounds(s: Schedule, t: int, r1: int, r2: int) -> Schedule:
    t = _team(s, t)
    a, b = _round(s, r1), _round(s, r2)
    if a == b:
        raise MoveError("the two rounds must differ")
    h = s.first_half()
    pk.partial_swap_rounds(h, t, a, b)
    return Schedule.from_half(h)


def partial_swap_teams(s: Schedule, i: int, j: int, r: int) -> Schedule:
    i, j = _pair(s, i, j)
    c = _round(s, r)
    h = s.first_half()
    if abs(h[i][c]) == j + 1:
        raise MoveError(f"teams {i + 1} and {j + 1} meet in round {r}")
    pk.partial_swap_teams(h, i, j, c)
    return Schedule.from_half(h)


def apply_move(s: Schedule, kind: MoveKind, *args: int) -> Schedule:
    fn = {
        MoveKind.SWAP_TEAMS: swap_teams,
        MoveKind.SWAP_ROUNDS: swap_rounds,
        MoveKind.SWAP_HOMES: swap_homes,
        MoveKind.PARTIAL_SWAP_ROUNDS: partial_swap_rounds,
        MoveKind.PARTIAL_SWAP_TEAMS: partial_swap_teams,
    }[MoveKind(kind)]
    return fn(s, *args)


def random_neighbor(s: Schedule, rng: Rng) -> tuple[Schedule, MoveKind]:
    """Like :func:`select_random_neighbor` but also reports the move kind drawn."""
    h = s.first_half()
    kind = pk.random_move(h, rng)
    return Schedule.from_half(h), MoveKind(kind)


def select_random_neighbor(s: Schedule, rng: Rng) -> Schedule:
    """Uniform move kind, uniform valid arguments; ``s`` is left untouched."""
    return random_neighbor(s, rng)[0]
