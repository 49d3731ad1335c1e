"""Generic nonlinearity synthesis: invert a monotone ground-state profile and
read the nonlinear shape G off the potential, then certify it against the
catalog's closed form.

The engine is family-agnostic: it touches a spec only through the potential,
the residual external potential, the profile, and the scale A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import models, numerics
from .errors import BracketError, DomainError

__all__ = [
    "PHI_WINDOW",
    "SynthesizedNonlinearity",
    "invert_profile",
    "synthesize",
    "verify_method",
]

# default certification window; G may diverge at either end for some families
PHI_WINDOW = (1e-3, 1.0 - 1e-3)

_TRUNCATION_PHI = 1e-6


@dataclass(frozen=True)
class SynthesizedNonlinearity:
    """Tabulated G reconstructed from the potential through profile inversion."""

    phi_grid: np.ndarray
    g_values: np.ndarray
    deviation_vs_analytic: Optional[float]
    window_shrunk: bool = False


def _truncation_radius(gs: models.GroundState) -> float:
    """Smallest bracket end with phi0 below the truncation threshold."""
    if gs.half_width is not None:
        return gs.half_width
    r = gs.length_scale
    for _ in range(200):
        if gs.profile(r) < _TRUNCATION_PHI:
            return r
        r *= 2.0
    raise BracketError("profile does not decay below the truncation threshold")


def invert_profile(gs: models.GroundState, phi: float) -> float:
    """Radius r with phi0(r) = phi, by bisection on the monotone profile."""
    if not 0.0 < phi <= 1.0:
        raise DomainError(f"phi must lie in (0, 1], got {phi}")
    if phi == 1.0:
        return 0.0
    r_max = _truncation_radius(gs)
    if phi < gs.profile(r_max):
        raise BracketError(
            f"phi={phi!r} below the profile value at the truncation radius"
        )
    return numerics.invert_monotone(
        gs.profile, phi, 0.0, r_max, tol=1e-12 * gs.length_scale
    )


def _phi_grid(phi_min: float, phi_max: float, n_points: int) -> np.ndarray:
    """Strictly increasing grid, geometrically refined toward both ends."""
    half = n_points // 2
    lower = np.geomspace(phi_min, 0.5, half, endpoint=False)
    upper = 1.0 - np.geomspace(0.5, 1.0 - phi_max, n_points - half)
    return np.concatenate([lower, upper])


def synthesize(
    spec: models.ModelSpec,
    phi_min: float = PHI_WINDOW[0],
    n_points: int = 256,
    phi_max: float = PHI_WINDOW[1],
) -> SynthesizedNonlinearity:
    """Tabulate G_synth(phi) = [U(r(phi)) - U_ext(r(phi))]/A and compare with
    the catalog's analytic shape."""
    if not 0.0 < phi_min < 1.0:
        raise DomainError(f"phi_min must lie in (0, 1), got {phi_min}")
    if n_points < 16:
        raise DomainError(f"n_points must be >= 16, got {n_points}")

    gs = models.ground_state(spec)
    nl = models.nonlinearity(spec)
    phis = _phi_grid(phi_min, phi_max, n_points)

    kept = []
    g_synth = []
    shrunk = False
    for phi in phis:
        try:
            r = invert_profile(gs, float(phi))
        except BracketError:
            shrunk = True
            continue
        u = float(models.potential(spec, r)) - float(nl.u_ext(r))
        kept.append(phi)
        g_synth.append(u / nl.scale)

    phi_arr = np.array(kept)
    g_arr = np.array(g_synth)
    g_ref = nl.shape(phi_arr)
    dev = float(np.max(np.abs(g_arr - g_ref) / np.maximum(np.abs(g_ref), 1e-300)))
    return SynthesizedNonlinearity(
        phi_grid=phi_arr,
        g_values=g_arr,
        deviation_vs_analytic=dev,
        window_shrunk=shrunk,
    )


def verify_method(spec: models.ModelSpec, **kwargs) -> float:
    """Worst relative deviation of the synthesized shape over the standard window."""
    return synthesize(spec, **kwargs).deviation_vs_analytic
