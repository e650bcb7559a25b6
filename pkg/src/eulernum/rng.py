"""Counter-based pseudo-random numbers for reproducible Monte Carlo.

The generator is a splitmix64-style bit mixer driven by a counter, so the
i-th sample of stream s is a pure function of (seed, s, i).  Results are
therefore identical no matter how draws are batched or parallelized, which
is what the sampling and volume estimates rely on for seed-pinned tests.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15  # splitmix64 increment
_STREAM_SALT = 0xD1B54A32D192ED03
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

_U_GOLDEN = np.uint64(_GOLDEN)
_U_M1 = np.uint64(_M1)
_U_M2 = np.uint64(_M2)
_U30 = np.uint64(30)
_U27 = np.uint64(27)
_U31 = np.uint64(31)
_U11 = np.uint64(11)

_INV53 = 2.0**-53


def mix64(z: int) -> int:
    """splitmix64 finalizer on a 64-bit integer (reference scalar path)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _M1) & _MASK
    z = ((z ^ (z >> 27)) * _M2) & _MASK
    return z ^ (z >> 31)


def stream_base(seed: int, stream: int) -> int:
    """Starting state for (seed, stream); distinct streams never collide
    in practice because the salt multiplies into the full 64-bit space."""
    return mix64((seed + _STREAM_SALT * (stream + 1)) & _MASK)


def raw64(seed: int, stream: int, index: int) -> int:
    """The index-th 64-bit output of the given stream."""
    base = stream_base(seed, stream)
    return mix64((base + _GOLDEN * (index + 1)) & _MASK)


def uniform(seed: int, stream: int, index: int) -> float:
    """Uniform double in [0, 1) from the top 53 bits of raw64."""
    return (raw64(seed, stream, index) >> 11) * _INV53


def _mix_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _U30)) * _U_M1
    z = (z ^ (z >> _U27)) * _U_M2
    return z ^ (z >> _U31)


def uniform_block(seed: int, stream: int, start: int, count: int) -> np.ndarray:
    """Vectorized uniforms for indices start .. start+count-1 of a stream.

    Splitting a block at any point yields the same numbers, so rejection
    sampling can consume proposals in batches of any size.
    """
    base = np.uint64(stream_base(seed, stream))
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = _mix_array(base + idx * _U_GOLDEN)
    return (z >> _U11).astype(np.float64) * _INV53
