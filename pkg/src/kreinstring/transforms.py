"""String-level and fraction-level transforms.

* ``dual``: the right-continuous inverse of the mass function.  Plateau
  heights become jump positions and vice versa; it is an exact involution
  because it only rearranges the stored numbers.
* ``remove_zero_atom``: the string whose spectral measure is the original one
  with the atom at zero deleted, realized by an exact piecewise-linear time
  change.
* ``flip_form``: toggles the layout tag of a continued fraction.
"""

from __future__ import annotations

import dataclasses

from .continued import ContinuedFraction, Form
from .strings import DiscreteString, validate_string


def dual(s: DiscreteString) -> DiscreteString:
    """Right-continuous inverse M*(x) = inf{t : M(t) > x} of a string.

    A finite-total-mass string with no terminal point maps to a string with a
    terminal at its total mass; a terminal point of the input becomes the
    final plateau height of the output.
    """
    pairs = []
    level = 0.0
    for x, y in s.jumps:
        if y > level:
            pairs.append((level, x))
            level = y
    if s.terminal is not None:
        pairs.append((level, s.terminal))
        term = None
    else:
        term = level
    if not pairs:
        pairs = [(0.0, 0.0)]
    return DiscreteString(tuple(pairs), term)


def remove_zero_atom(s: DiscreteString) -> DiscreteString:
    """Delete the zero-frequency atom of the spectral measure.

    Under the time change x(t) = integral of (1 - M/m_tot)^2, which is linear
    on each plateau, the rescaled mass M/(1 - M/m_tot) is again a string.  On
    the final plateau the integrand vanishes, so the result carries a terminal
    point at x(t_last).  Requires finite positive total mass, no terminal
    point, and at least one mass-carrying jump after the origin.
    """
    if s.terminal is not None:
        raise ValueError("string with a terminal point has infinite total mass")
    m_tot = s.jumps[-1][1]
    if m_tot <= 0.0:
        raise ValueError("string carries no mass")
    if len(s.jumps) == 1:
        raise ValueError("single atom at the origin degenerates to a point")
    pairs = []
    x_new = 0.0
    prev_t = 0.0
    prev_y = 0.0
    last = len(s.jumps) - 1
    for j, (t, y) in enumerate(s.jumps):
        x_new += (1.0 - prev_y / m_tot) ** 2 * (t - prev_t)
        if y > prev_y and j < last:
            pairs.append((x_new, y / (1.0 - y / m_tot)))
        prev_t, prev_y = t, y
    return validate_string(pairs, terminal=x_new)


def flip_form(cf: ContinuedFraction) -> ContinuedFraction:
    """Swap the KREIN/STIELTJES layout tag; coefficients are untouched."""
    other = Form.STIELTJES if cf.form is Form.KREIN else Form.KREIN
    return dataclasses.replace(cf, form=other)
