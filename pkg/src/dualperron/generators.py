"""Built-in test-matrix families.

Six named families cover the interesting structure classes:

* ``ex1``  -- fixed 2x2 with reducible standard part (no eigenvalue exists).
* ``ex2``  -- fixed 2x2 swap pattern, period 2, parametrized dual part.
* ``ex51`` -- star pattern: irreducible, period 2, not weakly positive.
* ``ex52`` -- dense i+j off-diagonal: primitive and weakly positive.
* ``ex53`` -- sparse cycle-plus-spokes: primitive, not weakly positive.
* ``ex54`` -- random positive standard part, Gaussian dual part.

``ex51``..``ex53`` pair their standard part with a Jordan block dual part
(ones on the diagonal and superdiagonal). ``ex54`` draws from the seeded
xorshift64* stream below, so the same spec reproduces the same matrix bit
for bit on any platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadSpec
from .linalg import DualMatrix

__all__ = ["ExampleSpec", "XorShift64Star", "generate", "jordan_block", "EXAMPLE_IDS"]

EXAMPLE_IDS = ("ex1", "ex2", "ex51", "ex52", "ex53", "ex54")

_FIXED_SIZE = {"ex1", "ex2"}


@dataclass(frozen=True)
class ExampleSpec:
    """Recipe for one generated matrix.

    ``params`` feeds the dual part of ``ex2``; ``seed`` selects the random
    stream of ``ex54``; both ignored elsewhere.
    """

    id: str
    n: int = 2
    params: tuple[float, float, float, float] = (1.0, 1.0, 1.0, 1.0)
    seed: int = 0

    def __post_init__(self):
        if self.id not in EXAMPLE_IDS:
            raise BadSpec(f"unknown example id {self.id!r}; expected one of {EXAMPLE_IDS}")
        if self.id in _FIXED_SIZE:
            if self.n != 2:
                raise BadSpec(f"{self.id} is a fixed 2x2 family, got n={self.n}")
        elif self.n < 2:
            raise BadSpec(f"{self.id} requires n >= 2, got n={self.n}")
        if len(self.params) != 4:
            raise BadSpec("params must be four reals (a, b, c, d)")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(self, "seed", int(self.seed))


class XorShift64Star:
    """xorshift64* pseudo-random stream.

    State update: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; the output is
    x * 0x2545F4914F6CDD1D mod 2**64. Uniform doubles take the top 53 bits
    of the output; normals come from those uniforms via Box-Muller (the
    cosine value is returned first, then the cached sine value). A zero
    seed is replaced by 0x9E3779B97F4A7C15 since the all-zero state is a
    fixed point.
    """

    MASK = (1 << 64) - 1
    MULTIPLIER = 0x2545F4914F6CDD1D
    ZERO_SEED = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self._state = int(seed) & self.MASK or self.ZERO_SEED
        self._spare = None

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & self.MASK
        x ^= x >> 27
        self._state = x
        return (x * self.MULTIPLIER) & self.MASK

    def uniform(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def normal(self) -> float:
        """Standard normal double (Box-Muller)."""
        if self._spare is not None:
            z, self._spare = self._spare, None
            return z
        # Shift the first uniform into (0, 1] so the log is finite.
        u1 = ((self.next_u64() >> 11) + 1) * 2.0**-53
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare = r * math.sin(2.0 * math.pi * u2)
        return r * math.cos(2.0 * math.pi * u2)


def jordan_block(n: int) -> np.ndarray:
    """Ones on the diagonal and superdiagonal, zero elsewhere."""
    return np.eye(n) + np.eye(n, k=1)


def _star(n: int) -> np.ndarray:
    a = np.zeros((n, n))
    a[0, 1:] = 1.0
    a[1:, 0] = 1.0
    return a


def _dense_index_sums(n: int) -> np.ndarray:
    idx = np.arange(1, n + 1, dtype=float)
    a = np.add.outer(idx, idx)
    np.fill_diagonal(a, 0.0)
    return a


def _cycle_spokes(n: int) -> np.ndarray:
    a = np.zeros((n, n))
    a[0, n - 1] = 1.0
    a[1:, 0] = 1.0
    a[n - 1, : n - 1] = 1.0
    return a


def _random_positive(n: int, seed: int) -> DualMatrix:
    rng = XorShift64Star(seed)
    standard = np.fromiter(
        (0.1 + rng.uniform() for _ in range(n * n)), dtype=float, count=n * n
    ).reshape(n, n)
    dual = np.fromiter(
        (rng.normal() for _ in range(n * n)), dtype=float, count=n * n
    ).reshape(n, n)
    return DualMatrix(standard, dual)


def generate(spec: ExampleSpec) -> DualMatrix:
    """Instantiate one family member. Entries are filled row-major; the
    standard part is drawn before the dual part."""
    if spec.id == "ex1":
        return DualMatrix([[1.0, 1.0], [0.0, 1.0]], [[0.0, 0.0], [1.0, 0.0]])
    if spec.id == "ex2":
        a, b, c, d = spec.params
        return DualMatrix([[0.0, 1.0], [1.0, 0.0]], [[a, b], [c, d]])
    if spec.id == "ex51":
        return DualMatrix(_star(spec.n), jordan_block(spec.n))
    if spec.id == "ex52":
        return DualMatrix(_dense_index_sums(spec.n), jordan_block(spec.n))
    if spec.id == "ex53":
        return DualMatrix(_cycle_spokes(spec.n), jordan_block(spec.n))
    if spec.id == "ex54":
        return _random_positive(spec.n, spec.seed)
    raise BadSpec(f"unknown example id {spec.id!r}")  # unreachable after validation
