"""Exact invariants and chirally cosmetic surgery obstructions for
alternating odd pretzel knots K(k1, ..., k_{2g+1})."""

import json as _json
from fractions import Fraction

from ._core import (  # noqa: F401
    BadLength,
    NegativeTwist,
    ParseError,
    PretzelError,
    PretzelKnot,
    a2_closed,
    conway_polynomial,
    crossing_number,
    hermitian_signature_oracle,
    jones_polynomial,
    p_signature,
    signature_at_pi_multiple,
    v3_closed,
    v3_skein,
    __version__,
)
from . import _core


def invariants(knot):
    """Cross-checked invariant set as a dict (a2, a4, a6, v3, conway, routes)."""
    return _json.loads(_core.invariants_json(knot))


def strong_ratio(knot):
    """F = -8*a2*v3 / (7*a2^2 - a2 - 10*a4) as a Fraction."""
    return Fraction(*_core.strong_ratio(knot))


def cass_slope_sum(knot, p):
    """q + q' = -sigma(K,p) / (4*a2) as a Fraction."""
    return Fraction(*_core.cass_slope_sum(knot, p))


def sigma_ratio_table(knot, pmax, jobs=1):
    """Rows (p, sigma, Fraction(sigma, p), coincidence)."""
    return [
        (p, sigma, Fraction(*ratio), flag)
        for p, sigma, ratio, flag in _core.sigma_ratio_table(knot, pmax, jobs)
    ]


def decide(knot):
    """Obstruction verdict as a dict with outcome, reasons, survivors."""
    return _json.loads(_core.decide_json(knot))


def alexander_root_angles(knot, width=Fraction(1, 1000000)):
    """Certified Fraction enclosures (lo, hi) of the Alexander root
    angles in (0, pi), sorted increasingly."""
    width = Fraction(width)
    return [
        (Fraction(*lo), Fraction(*hi))
        for lo, hi in _core.alexander_root_angles(knot, width.denominator)
    ]
