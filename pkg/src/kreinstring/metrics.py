"""Error measurement against closed-form references and rate studies.

Errors are evaluated at the jump positions of the approximation only (the
reconstruction is exact in the large-x limit by construction, so a uniform
grid would mostly sample plateaus).  ``averaged_error`` replaces the jump
value by the midpoint of the two adjacent plateau heights, which empirically
gains one order of convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Tuple

import numpy as np

from .continued import ContinuedFraction
from .inversion import invert
from .strings import DiscreteString

MassFunction = Callable[[float], float]


@dataclass(frozen=True)
class ErrorReport:
    """Worst discrepancy over the jumps inside the comparison window."""

    metric: str  # "sup" or "averaged"
    window: float
    value: float
    index: int  # jump index attaining the maximum
    position: float  # its coordinate
    compared: int  # number of jumps inside the window


@dataclass(frozen=True)
class ConvergenceStudy:
    """(n, error) samples with the fitted log-log slope."""

    metric: str
    window: float
    entries: Tuple[Tuple[int, float], ...]
    slope: float


def sup_error(approx: DiscreteString, reference: MassFunction, window: float) -> ErrorReport:
    """max_j |y_j - M(x_j)| over jumps with x_j < window."""
    if window <= 0.0:
        raise ValueError("window must be positive")
    xs = approx.positions
    ys = approx.values
    inside = xs < window
    if not inside.any():
        raise ValueError("no jumps inside the comparison window")
    errs = np.abs(ys[inside] - np.array([reference(x) for x in xs[inside]]))
    worst = int(np.argmax(errs))
    return ErrorReport("sup", window, float(errs[worst]), worst, float(xs[inside][worst]), int(errs.size))


def averaged_error(approx: DiscreteString, reference: MassFunction, window: float) -> ErrorReport:
    """max_j |(y_{j-1}+y_j)/2 - M(x_j)| over jumps with x_j < window, j >= 1."""
    if window <= 0.0:
        raise ValueError("window must be positive")
    xs = approx.positions[1:]
    mids = 0.5 * (approx.values[1:] + approx.values[:-1])
    inside = xs < window
    if not inside.any():
        raise ValueError("no jumps inside the comparison window")
    errs = np.abs(mids[inside] - np.array([reference(x) for x in xs[inside]]))
    worst = int(np.argmax(errs))
    return ErrorReport(
        "averaged", window, float(errs[worst]), worst + 1, float(xs[inside][worst]), int(errs.size)
    )


def convergence_study(
    family: Callable[[int], ContinuedFraction],
    n_list: Sequence[int],
    reference: MassFunction,
    window: float,
    averaged: bool = False,
) -> ConvergenceStudy:
    """Invert the family at each truncation order and fit error ~ n^slope.

    ``n_list`` must be strictly increasing with at least three entries; the
    slope is the ordinary least-squares fit of log(error) against log(n).
    """
    if len(n_list) < 3:
        raise ValueError("need at least three truncation orders")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("truncation orders must be strictly increasing")
    measure = averaged_error if averaged else sup_error
    entries = []
    for n in n_list:
        report = measure(invert(family(n)), reference, window)
        entries.append((int(n), report.value))
    ns = np.array([n for n, _ in entries], dtype=float)
    errs = np.array([e for _, e in entries], dtype=float)
    slope = float(np.polyfit(np.log(ns), np.log(errs), 1)[0])
    return ConvergenceStudy("averaged" if averaged else "sup", window, tuple(entries), slope)
