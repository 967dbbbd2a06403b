"""Counter-based random number primitives.

Every stream of randomness in the simulator is addressed by a 64-bit
(seed, stream uid, block index) triple.  The generator state is a pure
function of that triple, so any block of any stream can be regenerated at
any time without touching the others.  This is what makes event logs
extendable in time and exactly replayable.

The core is splitmix64; the same jitted functions are used from Python and
from inside the numba kernels, so there is a single source of truth for the
bit patterns.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64, float64, int64

_GOLDEN = uint64(0x9E3779B97F4A7C15)
_MIX1 = uint64(0xBF58476D1CE4E5B9)
_MIX2 = uint64(0x94D049BB133111EB)
_UID_SALT = uint64(0xD1B54A32D192ED03)
_BLOCK_SALT = uint64(0x8CB92BA72F3D8DD7)
_REPLICA_SALT = uint64(0xA24BAED4963EE407)

_INV_2_53 = float64(1.0 / 9007199254740992.0)  # 2**-53


@njit(uint64(uint64), cache=True, inline="always")
def mix64(z):
    """Finalizer of splitmix64: a bijective 64-bit hash."""
    z = (z ^ (z >> uint64(30))) * _MIX1
    z = (z ^ (z >> uint64(27))) * _MIX2
    return z ^ (z >> uint64(31))


@njit(uint64(uint64, uint64, uint64), cache=True, inline="always")
def stream_key(seed, uid, block):
    """Initial splitmix64 state for (seed, stream uid, block index)."""
    h = mix64(seed + _GOLDEN)
    h = mix64(h ^ (uid + _UID_SALT))
    h = mix64(h ^ (block + _BLOCK_SALT))
    return h


@njit(uint64(uint64), cache=True, inline="always")
def next_state(state):
    return state + _GOLDEN


@njit(float64(uint64), cache=True, inline="always")
def to_uniform(state):
    """Uniform in [0, 1) from a splitmix64 state (after next_state)."""
    return float64(mix64(state) >> uint64(11)) * _INV_2_53


@njit(int64(float64, uint64, uint64), cache=True)
def poisson_draw(lam, seed_state, offset):
    """Poisson(lam) count, consuming uniforms from the given stream state.

    Knuth's product method, split into chunks so the running product never
    underflows.  Returns the count; the caller advances its state by
    `poisson_uniforms_used` only implicitly (this helper owns the substream
    starting at seed_state + offset steps).
    """
    total = int64(0)
    state = seed_state + uint64(offset) * _GOLDEN
    remaining = lam
    while remaining > 0.0:
        chunk = remaining if remaining < 64.0 else 64.0
        remaining -= chunk
        limit = np.exp(-chunk)
        prod = 1.0
        k = int64(-1)
        while prod > limit:
            state = next_state(state)
            prod *= to_uniform(state)
            k += 1
        total += k
    return total


def derive_replica_seed(master_seed: int, replica: int) -> int:
    """Seed for replica i: a hash of (master seed, i), as a Python int."""
    m = np.uint64(master_seed & 0xFFFFFFFFFFFFFFFF)
    r = np.uint64(replica & 0xFFFFFFFFFFFFFFFF)
    return int(mix64(m ^ mix64(r + _REPLICA_SALT)))


@njit(cache=True)
def fill_uniform_block(out, seed, uid, block):
    """Fill a flat float64 array with the uniforms of (seed, uid, block)."""
    state = stream_key(seed, uid, block)
    for i in range(out.size):
        state = next_state(state)
        out[i] = to_uniform(state)
    return out
