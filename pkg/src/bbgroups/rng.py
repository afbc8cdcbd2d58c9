"""Deterministic 64-bit pseudo-random stream.

The generator is deliberately tiny and fully pinned down so that every
sampling run is reproducible from its integer seed alone, independently of
Python version or platform:

* Seeding: the seed (reduced mod 2**64) goes through one round of the
  splitmix64 finaliser::

      x = (seed + 0x9E3779B97F4A7C15) mod 2**64
      x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
      x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) mod 2**64
      state = x ^ (x >> 31)          # replaced by a fixed odd constant if 0

* Stream: xorshift64* -- each call updates the state and emits 64 bits::

      s ^= s >> 12
      s ^= (s << 25) mod 2**64
      s ^= s >> 27
      output = (s * 0x2545F4914F6CDD1D) mod 2**64

Bounded draws use rejection sampling, so they are exactly uniform.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_NONZERO_FALLBACK = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class Rand64:
    """xorshift64* stream with splitmix64 seeding (see module docstring)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = _splitmix64(seed & _MASK64)
        if self.state == 0:
            self.state = _NONZERO_FALLBACK

    def u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK64
        s ^= s >> 27
        self.state = s
        return (s * _MULT) & _MASK64

    def below(self, n: int) -> int:
        """Exactly uniform integer in [0, n), by rejection."""
        if n <= 0:
            raise ValueError(f"below() needs a positive bound, got {n}")
        if n == 1:
            return 0
        limit = ((1 << 64) // n) * n
        while True:
            u = self.u64()
            if u < limit:
                return u % n

    def unit(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.u64() >> 11) * 2.0**-53
