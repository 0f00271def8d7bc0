"""Deterministic pseudo-randomness for the verification suites.

The generator is SplitMix64 (Steele/Lea/Vigna's constants); per-case
streams are derived by folding suite labels through 64-bit FNV-1a and
the SplitMix64 finalizer.  Everything is pure 64-bit integer arithmetic,
so a (seed, label, index) triple reproduces the same sample sequence on
any platform or implementation.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _fnv1a(label: str) -> int:
    h = 0xCBF29CE484222325
    for b in label.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & _MASK
    return h


class Stream:
    """A SplitMix64 stream."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & _MASK

    def u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.u64()
            if x < limit:
                return x % n


def stream(seed: int, label: str = "", index: int = 0) -> Stream:
    """Derive the stream for (seed, label, index)."""
    s = _mix64(seed & _MASK)
    s = _mix64(s ^ _fnv1a(label))
    s = _mix64(s ^ (index & _MASK))
    return Stream(s)
