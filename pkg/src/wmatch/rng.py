"""Deterministic, platform-independent random number generation.

Everything randomized in this package draws from SplitMix64, a
counter-based 64-bit generator (Steele, Lea & Flood's mixer, as used by
java.util.SplittableRandom).  The k-th output is a pure function of the
seed and k, so streams are reproducible bit-for-bit on any platform:

    state_k = (seed + (k + 1) * 0x9E3779B97F4A7C15) mod 2^64
    out_k   = mix64(state_k)

Ranged draws use rejection sampling, so ``randint(1, k)`` is exactly
uniform over {1, ..., k}.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

#: Seed used by the CLI and the verification suites unless overridden.
DEFAULT_SEED = 3141592653


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit value."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def derive_seed(seed: int, index: int) -> int:
    """Derive the seed for the index-th independent substream.

    Used by multi-trial drivers so that trial t of seed s is the same
    everywhere: derive_seed(s, t) feeds a fresh SplitMix64.
    """
    return mix64((seed + (index + 1) * 0xD6E8FEB86659FD93) & _MASK64)


class SplitMix64:
    """SplitMix64 stream starting from ``seed``."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends inclusive.

        Rejection sampling over the 64-bit outputs; the expected number
        of draws per call is below 2 for any range that fits in 64 bits.
        """
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        # Largest multiple of span that fits in 2^64; values at or above
        # it are rejected to kill modulo bias.
        limit = _MASK64 + 1 - ((_MASK64 + 1) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)
