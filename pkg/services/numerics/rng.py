"""Seeded, splittable random number generation.

All randomness in the pipeline flows through :class:`Rng`, a thin wrapper over
numpy's PCG64 bit generator. PCG64 has a published algorithm and fixed constants,
so a seed yields the same stream on every platform. Components derive their own
independent streams with :meth:`Rng.child` instead of sharing one generator, which
keeps, for example, the corpus generator's draws unaffected by how many
parameters the model initializer consumed.
"""

import zlib
from typing import Sequence, TypeVar

import numpy as np

from services.numerics.matrix import Matrix

T = TypeVar("T")

_UINT64_MASK = (1 << 64) - 1


class Rng:
    """Deterministic random stream identified by a 64-bit seed and a path."""

    def __init__(self, seed: int, path: Sequence[int] = ()):
        self.seed = int(seed) & _UINT64_MASK
        self.path = tuple(path)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=self.path)
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    def child(self, name: str) -> "Rng":
        """Derive an independent stream for a named component."""
        return Rng(self.seed, self.path + (zlib.crc32(name.encode("utf-8")),))

    def uniform(self, low: float, high: float, shape=None) -> Matrix:
        return self._generator.uniform(low, high, size=shape)

    def normal(self, shape=None) -> Matrix:
        return self._generator.standard_normal(size=shape)

    def random(self) -> float:
        return float(self._generator.random())

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in the inclusive range ``[low, high]``."""
        return int(self._generator.integers(low, high, endpoint=True))

    def choice(self, items: Sequence[T]) -> T:
        return items[int(self._generator.integers(0, len(items)))]

    def sample(self, items: Sequence[T], count: int) -> list:
        """Choose ``count`` items uniformly without replacement, in draw order."""
        picks = self._generator.choice(len(items), size=count, replace=False)
        return [items[int(i)] for i in picks]

    def permutation(self, count: int) -> list:
        return [int(i) for i in self._generator.permutation(count)]
