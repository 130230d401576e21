"""Seeded vertex-weight generation.

Draws come from splitmix64 started at the seed, one draw per vertex in id
order, so an assignment depends only on ``(n, mode, seed)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from vertexmatch.graph import WeightAssignment

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, count: int) -> np.ndarray:
    """The first ``count`` outputs of splitmix64 seeded with ``seed`` (uint64)."""
    state = np.uint64(seed % 2**64)
    k = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = state + k * _GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


@dataclass(frozen=True)
class WeightMode:
    kind: str  # "int" or "real"
    lo: float
    hi: float

    def __post_init__(self):
        if self.kind not in ("int", "real"):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if not 0 <= self.lo <= self.hi:
            raise ValueError("weight range needs 0 <= lo <= hi")
        if self.kind == "int" and (self.lo != int(self.lo) or self.hi != int(self.hi)):
            raise ValueError("integer weight bounds must be whole numbers")

    @classmethod
    def parse(cls, text: str) -> "WeightMode":
        """Parse ``int:1:1000`` or ``real:1.0:1.3``."""
        m = re.fullmatch(r"(int|real):([^:]+):([^:]+)", text.strip())
        if not m:
            raise ValueError(f"bad weight mode {text!r}; expected int:LO:HI or real:LO:HI")
        kind, lo, hi = m.groups()
        conv = int if kind == "int" else float
        try:
            return cls(kind, conv(lo), conv(hi))
        except ValueError as exc:
            raise ValueError(f"bad weight mode {text!r}: {exc}") from None

    def __str__(self) -> str:
        if self.kind == "int":
            return f"int:{int(self.lo)}:{int(self.hi)}"
        return f"real:{self.lo!r}:{self.hi!r}"


INT_1_1000 = WeightMode("int", 1, 1000)
REAL_1_13 = WeightMode("real", 1.0, 1.3)


def generate_weights(n: int, mode: WeightMode, seed: int) -> WeightAssignment:
    """Uniform weights: ``lo + draw mod (hi - lo + 1)`` for integers,
    ``lo + (hi - lo) * (draw >> 11) * 2**-53`` for reals (in ``[lo, hi)``)."""
    draws = splitmix64(seed, n)
    if mode.kind == "int":
        lo, hi = int(mode.lo), int(mode.hi)
        span = hi - lo + 1
        if span >= 2**63:
            raise ValueError("integer weight range too wide")
        vals = (draws % np.uint64(span)).astype(np.int64) + lo
        return WeightAssignment("int", vals)
    unit = (draws >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return WeightAssignment("real", mode.lo + (mode.hi - mode.lo) * unit)
