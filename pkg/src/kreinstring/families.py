"""Closed-form coefficient families and reference mass curves.

Three KREIN-form families with known characteristic functions:

* ``tanh_coefficients``: the unit-impedance string, W(z) = tanh(r)/r with
  r = sqrt(-z); coefficients 0, 1, 3, 5, ...
* ``bessel_drift_coefficients``: the Bessel-with-drift family,
  W(z) = (alpha/gamma) / ((1 - z/beta)^alpha - 1), whose coefficients are
  ratios of rising factorials.
* ``log_limit_coefficients``: the alpha -> 0 limit of the previous family
  with gamma pinned to 1/2, W(z) = 2 / log(1 - z/beta).

``reference_mass`` exposes the two closed-form mass curves used to judge
reconstructions.
"""

from __future__ import annotations

import math

from .continued import ContinuedFraction, Form


def tanh_coefficients(n: int) -> ContinuedFraction:
    """Coefficients 0, 1, 3, ..., 2n-1 of the unit-impedance string (n+1 entries)."""
    if n < 1:
        raise ValueError("need n >= 1 (the leading coefficient alone is zero)")
    return ContinuedFraction(Form.KREIN, (0.0,) + tuple(float(2 * k - 1) for k in range(1, n + 1)))


def bessel_drift_coefficients(alpha: float, beta: float, c_const: float, n: int) -> ContinuedFraction:
    """First n+1 coefficients of the Bessel-with-drift family.

    With gamma = c_const * Gamma(1-alpha) * beta**alpha, the pair at index j is

        s_{2j}   = (beta/gamma) * (1-alpha)_j / (1+alpha)_j * (2j+1)
        s_{2j+1} = 2*gamma * (1+alpha)_j / (1-alpha)_{j+1}

    where (a)_k is the rising factorial.  Certified against an exact-rational
    expansion of the closed form: for alpha = 1/2, beta = 2, gamma = 1 the
    sequence is the periodic 2, 4, 2, 4, ...  The two ratios are accumulated
    as running products (each factor is O(1), so nothing overflows even
    though the factorials themselves would); the only special-function call
    is the single Gamma(1-alpha).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    if c_const <= 0.0:
        raise ValueError("the constant must be positive")
    if n < 0:
        raise ValueError("need n >= 0")
    gamma = c_const * math.gamma(1.0 - alpha) * beta**alpha
    coeffs = []
    ratio_even = 1.0  # (1-alpha)_j / (1+alpha)_j
    ratio_odd = 1.0 / (1.0 - alpha)  # (1+alpha)_j / (1-alpha)_{j+1}
    j = 0
    while len(coeffs) <= n:
        coeffs.append(beta / gamma * ratio_even * (2 * j + 1))
        if len(coeffs) <= n:
            coeffs.append(2.0 * gamma * ratio_odd)
        ratio_even *= (1.0 - alpha + j) / (1.0 + alpha + j)
        ratio_odd *= (1.0 + alpha + j) / (2.0 - alpha + j)
        j += 1
    return ContinuedFraction(Form.KREIN, tuple(coeffs))


def log_limit_coefficients(beta: float, n: int) -> ContinuedFraction:
    """Termwise alpha -> 0 limit of the Bessel-with-drift coefficients.

    s_{2j} = 2*beta*(2j+1) and s_{2j+1} = 1/(j+1).  The corresponding
    characteristic function is 2 / log(1 - z/beta); the coefficients agree
    with an exact-rational expansion of that closed form.
    """
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    if n < 0:
        raise ValueError("need n >= 0")
    coeffs = []
    j = 0
    while len(coeffs) <= n:
        coeffs.append(2.0 * beta * (2 * j + 1))
        if len(coeffs) <= n:
            coeffs.append(1.0 / (j + 1))
        j += 1
    return ContinuedFraction(Form.KREIN, tuple(coeffs))


def reference_mass(name: str, x: float, length: float = 1.0) -> float:
    """Closed-form cumulative mass of a named reference string.

    ``bm-drift``: M(x) = 2x/(1+4x), the drifted-Brownian-motion string.
    ``uniform``:  M(x) = x up to ``length``, infinite beyond.
    """
    if x < 0.0:
        raise ValueError("mass is defined for x >= 0 only")
    if name == "bm-drift":
        return 2.0 * x / (1.0 + 4.0 * x)
    if name == "uniform":
        return x if x < length else math.inf
    raise ValueError(f"unknown reference {name!r} (choose bm-drift or uniform)")
