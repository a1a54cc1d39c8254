"""Random source shared by the pure-Python and compiled annealing kernels.

Both kernels draw from the same numpy ``PCG64`` bit generator and derive
uniforms and bounded integers from raw 64-bit words with the same formulas,
so a seeded run is bit-identical whichever kernel executes it.
"""
from __future__ import annotations

import numpy as np

_TWO_POW_53 = 2.0**-53


class Rng:
    """Thin wrapper around a ``PCG64`` bit generator."""

    __slots__ = ("bit_generator", "_raw")

    def __init__(self, seed: int | np.random.SeedSequence = 0):
        if not isinstance(seed, np.random.SeedSequence):
            seed = np.random.SeedSequence(int(seed))
        self.bit_generator = np.random.PCG64(seed)
        self._raw = self.bit_generator.random_raw

    def raw(self) -> int:
        return int(self._raw())

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self._raw() >> 11) * _TWO_POW_53

    def below(self, bound: int) -> int:
        """Integer in [0, bound) by multiply-shift on the top 32 bits."""
        return ((int(self._raw()) >> 32) * bound) >> 32


def replica_seed(seed: int, index: int) -> np.random.SeedSequence:
    """Seed for replica ``index`` of a run seeded with ``seed``.

    This is ``SeedSequence(seed).spawn(...)[index]``: the child's entropy is
    hashed together with the spawn key ``(index,)``, so replicas are
    decorrelated and the derivation does not depend on the replica count.
    """
    return np.random.SeedSequence(int(seed), spawn_key=(int(index),))


def replica_rng(seed: int, index: int) -> Rng:
    return Rng(replica_seed(seed, index))
