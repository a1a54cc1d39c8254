"""Problem instances: team count, venue distance matrix and the AtMost bound."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class InstanceError(ValueError):
    """Base class for instance ingestion errors."""


class InstanceParseError(InstanceError):
    pass


class InstanceDomainError(InstanceError):
    pass


class InstanceValidationError(InstanceError):
    pass


class InstanceLengthError(InstanceError):
    pass


def _check_team_count(n: int) -> None:
    if n < 4 or n % 2:
        raise InstanceDomainError(f"team count must be even and >= 4, got {n}")


@dataclass(frozen=True, eq=False)
class Instance:
    """Mirrored TTP instance.

    ``dist`` is an immutable ``int64`` matrix; ``k`` is the maximum number of
    consecutive home (or away) games allowed for any team.
    """

    n: int
    dist: np.ndarray = field(repr=False)
    k: int = 3
    name: str = ""

    def __post_init__(self):
        _check_team_count(self.n)
        if self.k < 1:
            raise InstanceDomainError(f"k must be >= 1, got {self.k}")
        d = np.array(self.dist, dtype=np.int64)
        if d.shape != (self.n, self.n):
            raise InstanceLengthError(
                f"distance matrix must be {self.n}x{self.n}, got {d.shape}")
        for i in range(self.n):
            if d[i, i] != 0:
                raise InstanceValidationError(
                    f"nonzero diagonal at cell ({i}, {i}): {d[i, i]}")
        neg = np.argwhere(d < 0)
        if len(neg):
            i, j = neg[0]
            raise InstanceValidationError(
                f"negative distance at cell ({i}, {j}): {d[i, j]}")
        asym = np.argwhere(d != d.T)
        if len(asym):
            i, j = asym[0]
            raise InstanceValidationError(
                f"asymmetric distance at cell ({i}, {j}): {d[i, j]} != {d[j, i]}")
        d.setflags(write=False)
        object.__setattr__(self, "dist", d)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.n == other.n and self.k == other.k and self.name == other.name
                and np.array_equal(self.dist, other.dist))

    __hash__ = None

    def with_k(self, k: int) -> "Instance":
        return Instance(self.n, self.dist, k, self.name)


def parse_instance(text: str, name: str = "", k: int = 3) -> Instance:
    """Parse ``n`` followed by the ``n*n`` row-major distance matrix."""
    tokens = text.split()
    values = []
    for pos, tok in enumerate(tokens):
        try:
            values.append(int(tok))
        except ValueError:
            raise InstanceParseError(
                f"token {pos} is not an integer: {tok!r}") from None
    if not values:
        raise InstanceLengthError("empty instance text")
    n = values[0]
    _check_team_count(n)
    if len(values) - 1 != n * n:
        raise InstanceLengthError(
            f"expected {n * n} matrix entries for n={n}, got {len(values) - 1}")
    return Instance(n, np.array(values[1:], dtype=np.int64).reshape(n, n), k, name)


def render_instance(inst: Instance) -> str:
    lines = [str(inst.n)]
    lines += [" ".join(str(int(x)) for x in row) for row in inst.dist]
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path, k: int = 3, name: str | None = None) -> Instance:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_instance(text, name if name is not None else path.stem.upper(), k)


def make_circular_instance(n: int, k: int = 3) -> Instance:
    """CIRCn: venues on a cycle with unit edges, ``d(i, j) = min(|i-j|, n-|i-j|)``."""
    _check_team_count(n)
    idx = np.arange(n)
    gap = np.abs(idx[:, None] - idx[None, :])
    return Instance(n, np.minimum(gap, n - gap), k, f"CIRC{n:02d}")
