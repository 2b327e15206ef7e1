"""Counter-based splittable pseudo-random generator.

Every stream is identified by a 64-bit key; drawing a value mixes the key
with a per-stream counter, so generator state is a plain value and any
number of independent child streams can be derived from a parent key
without consuming from it.  The mixer is the SplitMix64 finalizer, which
is well distributed enough for shuffling and policy sampling.
"""

from __future__ import annotations

from typing import NamedTuple

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(x: int) -> int:
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class RngState(NamedTuple):
    key: int
    counter: int


def seed_state(seed: int) -> RngState:
    """Root stream for a user-supplied seed (any int, reduced mod 2^64)."""
    return RngState(_mix(seed & _MASK64), 0)


def derive_key(key: int, stream: int) -> int:
    """Key of child stream `stream`; children of distinct streams never collide
    in practice (full 64-bit mixing)."""
    return _mix((key ^ _GOLDEN) + _mix(stream & _MASK64))


def split(state: RngState, stream: int) -> RngState:
    return RngState(derive_key(state.key, stream), 0)


def next_u64(state: RngState) -> tuple[int, RngState]:
    c = state.counter + 1
    return _mix((state.key + c * _GOLDEN) & _MASK64), RngState(state.key, c)


def randbelow(state: RngState, n: int) -> tuple[int, RngState]:
    """Uniform int in [0, n) via 128-bit multiply-shift; bias is negligible for small n."""
    x, state = next_u64(state)
    return (x * n) >> 64, state


def shuffle(state: RngState, items: list) -> tuple[list, RngState]:
    """Fisher-Yates over a copy of `items`."""
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j, state = randbelow(state, i + 1)
        out[i], out[j] = out[j], out[i]
    return out, state
