"""Discrete mass distributions (strings) as right-continuous step functions.

A string is a non-decreasing, right-continuous cumulative mass function
M : [0, inf) -> [0, inf], stored as its finitely many jumps plus an optional
"terminal" coordinate beyond which the mass is infinite.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Tuple

import numpy as np


class TotalMass(NamedTuple):
    """Finite supremum of the jump values, plus the infinite-mass flag."""

    finite: float
    has_terminal: bool


@dataclass(frozen=True)
class DiscreteString:
    """Piecewise-constant cumulative mass distribution in canonical form.

    ``jumps`` holds (position, cumulative value) pairs; the value at a
    position x_j is M(x_j), i.e. the mass of [0, x_j].  Canonical form always
    starts at position 0 (with value 0 when there is no atom at the origin)
    and every later entry adds strictly positive mass.  ``terminal``, when
    present, is the coordinate L with M(x) = inf for x >= L.
    """

    jumps: Tuple[Tuple[float, float], ...]
    terminal: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.jumps:
            raise ValueError("a string needs at least one jump record")
        x0, y0 = self.jumps[0]
        if x0 != 0.0:
            raise ValueError("canonical form starts at position 0")
        prev_x, prev_y = x0, 0.0
        for i, (x, y) in enumerate(self.jumps):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite entry at jump {i}: ({x}, {y})")
            if x < 0.0 or y < 0.0:
                raise ValueError(f"negative entry at jump {i}: ({x}, {y})")
            if i > 0 and x <= prev_x:
                raise ValueError(f"positions not strictly increasing at jump {i}")
            if y < prev_y:
                raise ValueError(f"values decrease at jump {i}")
            if y == prev_y and i > 0:
                raise ValueError(f"zero mass increment at jump {i}")
            prev_x, prev_y = x, y
        if self.terminal is not None:
            last_x, last_y = self.jumps[-1]
            if not math.isfinite(self.terminal) or self.terminal < 0.0:
                raise ValueError("terminal must be a finite non-negative position")
            if self.terminal < last_x:
                raise ValueError("terminal precedes the last jump")
            if self.terminal == last_x and last_y > (
                self.jumps[-2][1] if len(self.jumps) > 1 else 0.0
            ):
                raise ValueError("terminal coincides with a mass-carrying jump")

    @cached_property
    def positions(self) -> np.ndarray:
        return np.array([x for x, _ in self.jumps], dtype=float)

    @cached_property
    def values(self) -> np.ndarray:
        return np.array([y for _, y in self.jumps], dtype=float)

    @cached_property
    def masses(self) -> np.ndarray:
        """Individual point masses m_j = y_j - y_{j-1} (with y_{-1} = 0)."""
        v = self.values
        return np.diff(v, prepend=0.0)


def validate_string(
    raw: Iterable[Tuple[float, float]], terminal: Optional[float] = None
) -> DiscreteString:
    """Canonicalize raw (position, cumulative value) pairs into a string.

    Inserts a leading (0, 0) record when the first position is positive and
    drops redundant rows that repeat the previous cumulative value.  Raises
    ValueError on non-monotone positions or values, negative or non-finite
    entries, or a terminal before the last position.
    """
    pairs = [(float(x), float(y)) for x, y in raw]
    if terminal is not None:
        terminal = float(terminal)
    if not pairs:
        pairs = [(0.0, 0.0)]
    for i, (x, y) in enumerate(pairs):
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite entry at row {i}: ({x}, {y})")
        if x < 0.0 or y < 0.0:
            raise ValueError(f"negative entry at row {i}: ({x}, {y})")
        if i > 0:
            if x <= pairs[i - 1][0]:
                raise ValueError(f"positions not increasing at row {i}")
            if y < pairs[i - 1][1]:
                raise ValueError(f"values decrease at row {i}")
    if pairs[0][0] > 0.0:
        pairs.insert(0, (0.0, 0.0))
    canonical = [pairs[0]]
    for x, y in pairs[1:]:
        if y > canonical[-1][1]:
            canonical.append((x, y))
    return DiscreteString(tuple(canonical), terminal)


def eval_mass(s: DiscreteString, x: float) -> float:
    """M(x): right-continuous step lookup, inf at and beyond the terminal."""
    if x < 0.0:
        raise ValueError("mass is defined for x >= 0 only")
    if s.terminal is not None and x >= s.terminal:
        return math.inf
    idx = bisect_right([p for p, _ in s.jumps], x) - 1
    return s.jumps[idx][1] if idx >= 0 else 0.0


def total_mass(s: DiscreteString) -> TotalMass:
    """Supremum of the jump values and whether an infinite-mass point exists."""
    return TotalMass(s.jumps[-1][1], s.terminal is not None)
