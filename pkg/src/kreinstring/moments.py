"""Continued-fraction coefficients from power moments, plus a determinacy check.

The coefficient extraction is a pair of alternating series reciprocals applied
to the asymptotic expansion of the characteristic function at z -> -infinity.
It is carried out in exact rational arithmetic so that a moment sequence coming
from a finite atomic measure terminates with a recognisable all-zero remainder
instead of drowning in roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .continued import ContinuedFraction, Form

MomentSequence = Sequence[Fraction]


def _series_reciprocal(g: List[Fraction]) -> List[Fraction]:
    """Truncated power-series inverse: h with g*h = 1 + O(t^len(g))."""
    h = [Fraction(1) / g[0]]
    for i in range(1, len(g)):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += g[j] * h[i - j]
        h.append(-acc / g[0])
    return h


def stieltjes_from_moments_exact(moments: MomentSequence) -> Tuple[List[Fraction], bool]:
    """Exact Stieltjes-form coefficients from the moments c_k = integral of x^k.

    Returns (coefficients, terminated).  ``terminated`` means the remainder
    vanished identically: the moments belong to a finite atomic measure and the
    coefficient list is complete rather than truncated.  Raises ValueError if
    the sequence is not a valid moment sequence as far as the data can tell
    (a required leading coefficient comes out nonpositive).
    """
    if len(moments) == 0:
        raise ValueError("need at least one moment")
    for c in moments:
        if not isinstance(c, (Fraction, int)):
            raise ValueError("moments must be exact rationals, got %r" % type(c).__name__)
    c0 = Fraction(moments[0])
    if c0 <= 0:
        raise ValueError("zeroth moment (total mass) must be positive")
    # Expansion of the characteristic function in powers of 1/z, alternating
    # signs folded in so every extraction step works on the same series shape:
    # invert, read off the constant term, recurse on the tail.  The even and
    # odd steps of the classical scheme become mechanically identical.
    g = [Fraction(c) if k % 2 == 0 else -Fraction(c) for k, c in enumerate(moments)]
    coeffs: List[Fraction] = []
    while True:
        if all(v == 0 for v in g):
            return coeffs, True
        if g[0] <= 0:
            raise ValueError(
                "not a moment sequence: nonpositive divisor at coefficient %d" % len(coeffs)
            )
        h = _series_reciprocal(g)
        coeffs.append(h[0])
        g = h[1:]
        if not g:
            return coeffs, False


def coefficients_from_moments(moments: MomentSequence) -> ContinuedFraction:
    """Float boundary over the exact extraction; Stieltjes form."""
    exact, terminated = stieltjes_from_moments_exact(moments)
    return ContinuedFraction(Form.STIELTJES, tuple(float(v) for v in exact), terminated=terminated)


@dataclass(frozen=True)
class DeterminacyReport:
    """Partial sums of the coefficient sequence and the verdict they support."""

    partial_sums: Tuple[float, ...]
    horizon: int
    verdict: str  # "terminating (determinate)" | "divergence observed up to N" | "inconclusive"


def determinacy_diagnostic(cf: ContinuedFraction, partial_sums: int) -> DeterminacyReport:
    """Report partial sums s_0 + ... + s_i; divergence of the full series is
    the classical criterion for a determinate moment problem.

    Only finitely many coefficients are available, so apart from the
    terminating case the verdict is a heuristic: "divergence observed" when the
    partial sums still grow markedly over the second half of the horizon,
    "inconclusive" otherwise.
    """
    if partial_sums < 0:
        raise ValueError("partial_sums must be nonnegative")
    horizon = min(partial_sums, len(cf.coefficients) - 1)
    sums: List[float] = []
    acc = 0.0
    for s in cf.coefficients[: horizon + 1]:
        acc += s
        sums.append(acc)
    if cf.terminated or len(cf.coefficients) == 1:
        verdict = "terminating (determinate)"
    else:
        half = sums[horizon // 2]
        last = sums[horizon]
        growing = last >= 1.5 * half if half > 0.0 else last > 0.0
        if horizon >= 2 and growing:
            verdict = "divergence observed up to %d" % horizon
        else:
            verdict = "inconclusive"
    return DeterminacyReport(tuple(sums), horizon, verdict)
