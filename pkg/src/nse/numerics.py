"""Foundation layer: adaptive quadrature, special functions, monotone inversion,
DFT contract, and finite-difference stencils.

Everything here is a pure function of its inputs and safe to call concurrently.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np
import scipy.special

from .errors import (
    BracketError,
    ConfigurationError,
    DomainError,
    NonConvergenceError,
    SizeError,
)

__all__ = [
    "QuadratureResult",
    "SpectralGrid",
    "integrate_adaptive",
    "log_gamma",
    "zeta",
    "ei_paper",
    "invert_monotone",
    "dft_forward",
    "dft_inverse",
    "second_derivative",
]


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive integration."""

    value: float
    abs_error_estimate: float
    evaluations: int


# 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
# full symmetric node/weight tables
_GK_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_GK_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss points sit at the odd Kronrod abscissae (plus the centre).
_G_INDEX = np.array([1, 3, 5, 7, 9, 11, 13])
_G_WEIGHTS = np.concatenate([_WG[:-1], _WG[::-1]])

_EPS = np.finfo(float).eps


def _call(f: Callable, xs: np.ndarray) -> np.ndarray:
    """Evaluate f at the sample points, accepting scalar-only callables.

    IEEE warnings are suppressed here; finiteness is checked explicitly and
    raised as a domain error instead.
    """
    with np.errstate(all="ignore"):
        try:
            ys = np.asarray(f(xs), dtype=float)
            if ys.shape != xs.shape:
                raise TypeError
        except (TypeError, ValueError, ZeroDivisionError):
            ys = np.array([float(f(x)) for x in xs])
    if not np.all(np.isfinite(ys)):
        bad = xs[~np.isfinite(ys)][0]
        raise DomainError(f"non-finite integrand sample at x={bad!r}")
    return ys


def _gk15(f: Callable, a: float, b: float):
    """One Gauss-Kronrod 15(7) panel; returns (value, error, abs_resolution)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    xs = mid + half * _GK_NODES
    ys = _call(f, xs)
    resk = half * float(_GK_WEIGHTS @ ys)
    resg = half * float(_G_WEIGHTS @ ys[_G_INDEX])
    resabs = abs(half) * float(_GK_WEIGHTS @ np.abs(ys))
    mean = resk / (b - a)
    resasc = abs(half) * float(_GK_WEIGHTS @ np.abs(ys - mean))
    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * _EPS * resabs)
    return resk, err, resabs


def integrate_adaptive(
    f: Callable,
    lo: float,
    hi: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_evals: int = 200_000,
) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod integration of f over [lo, hi].

    ``hi`` may be ``math.inf``; the tail is folded onto [0, 1) through
    u = lo + t/(1-t).  Raises :class:`NonConvergenceError` (carrying the best
    estimate) if the evaluation budget runs out, and :class:`DomainError` on a
    non-finite integrand sample.
    """
    if not (0.0 < rel_tol < 1.0):
        raise DomainError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    if not math.isfinite(lo):
        raise DomainError("lower limit must be finite")
    if not hi > lo:
        raise DomainError("integration limits must satisfy lo < hi")

    if math.isinf(hi):
        base = f

        def g(t):
            one_m = 1.0 - t
            return base(lo + t / one_m) / one_m ** 2

        f, lo, hi = g, 0.0, 1.0

    evals = 15
    val, err, _ = _gk15(f, lo, hi)
    heap = [(-err, 0, lo, hi, val, err)]
    counter = 1
    settled_val = 0.0
    settled_err = 0.0

    def totals():
        v = settled_val + sum(item[4] for item in heap)
        e = settled_err + sum(item[5] for item in heap)
        return v, e

    total_val, total_err = totals()
    while total_err > max(rel_tol * abs(total_val), abs_tol):
        if not heap:
            break
        if evals + 30 > max_evals:
            raise NonConvergenceError(
                f"quadrature budget of {max_evals} evaluations exhausted "
                f"(estimate {total_val!r}, error {total_err:.3e})",
                best=QuadratureResult(total_val, total_err, evals),
            )
        _, _, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            # panel narrower than machine resolution; freeze it
            settled_val += v
            settled_err += e
            continue
        v1, e1, _ = _gk15(f, a, m)
        v2, e2, _ = _gk15(f, m, b)
        evals += 30
        heapq.heappush(heap, (-e1, counter, a, m, v1, e1))
        heapq.heappush(heap, (-e2, counter + 1, m, b, v2, e2))
        counter += 2
        total_val, total_err = totals()

    return QuadratureResult(total_val, total_err, evals)


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def log_gamma(x: float) -> float:
    """Natural log of the Gamma function for x > 0.

    Backed by the C library implementation, which is accurate to a few ulp
    over the whole positive axis.
    """
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def zeta(s: float) -> float:
    """Riemann zeta for real s > 1, by direct sum plus Euler-Maclaurin tail."""
    if s <= 1:
        raise DomainError(f"zeta requires s > 1, got {s}")
    M = 50
    n = np.arange(1, M, dtype=float)
    head = float(np.sum(n ** (-s)))
    tail = (
        M ** (1.0 - s) / (s - 1.0)
        + 0.5 * M ** (-s)
        + s * M ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * M ** (-s - 3.0) / 720.0
    )
    return head + tail


def ei_paper(y: float) -> float:
    """The positive exponential-integral tail: integral of e^(-u)/u over [y, inf).

    This is the classical E1(y).  Note the sign: with the standard convention
    Ei(-y) = -E1(y), so identities quoted in terms of Ei(-y) pick up a sign
    flip when written with this function.
    """
    if y <= 0:
        raise DomainError(f"ei_paper requires y > 0, got {y}")
    return float(scipy.special.exp1(y))


# ---------------------------------------------------------------------------
# monotone inversion
# ---------------------------------------------------------------------------

def invert_monotone(
    f: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float,
) -> float:
    """Bisection solve of f(x) = target for strictly decreasing f on [lo, hi].

    Returns x accurate to within ``tol``.  Raises :class:`BracketError` when
    the target is outside [f(hi), f(lo)].
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if hi <= lo:
        raise DomainError("bracket must satisfy lo < hi")
    f_lo = f(lo)
    f_hi = f(hi)
    if not (f_hi <= target <= f_lo):
        raise BracketError(
            f"target {target!r} outside bracket values [{f_hi!r}, {f_lo!r}]"
        )
    if f_lo == target:
        return lo
    if f_hi == target:
        return hi
    for _ in range(4096):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) >= target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# DFT contract and spectral grid
# ---------------------------------------------------------------------------

def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform periodic grid of n points on [x_min, x_max).

    Wavenumber ordering follows the DFT convention: k_j = 2*pi*j/(n*dx) for
    j in [0, n/2), then the negative frequencies.
    """

    n: int
    x_min: float
    x_max: float

    def __post_init__(self):
        if not _is_power_of_two(self.n) or self.n < 16:
            raise ConfigurationError(
                f"grid size must be a power of two >= 16, got {self.n}"
            )
        if not self.x_max > self.x_min:
            raise ConfigurationError("grid requires x_max > x_min")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n

    @cached_property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    @cached_property
    def k(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx)


def dft_forward(field: np.ndarray) -> np.ndarray:
    """Unnormalized forward DFT: X_k = sum_j x_j exp(-2*pi*i*j*k/n)."""
    field = np.asarray(field)
    if not _is_power_of_two(len(field)):
        raise ConfigurationError(f"DFT length must be a power of two, got {len(field)}")
    return np.fft.fft(field)


def dft_inverse(field: np.ndarray) -> np.ndarray:
    """Inverse DFT carrying the 1/n factor."""
    field = np.asarray(field)
    if not _is_power_of_two(len(field)):
        raise ConfigurationError(f"DFT length must be a power of two, got {len(field)}")
    return np.fft.ifft(field)


# ---------------------------------------------------------------------------
# stencils
# ---------------------------------------------------------------------------

def second_derivative(samples: np.ndarray, dx: float):
    """Second derivative of uniformly spaced samples.

    Central 3-point stencil in the interior, O(dx^2); one-sided 4-point at the
    two endpoints.  Returns ``(values, one_sided)`` where ``one_sided`` is a
    boolean mask flagging the endpoint cells.
    """
    samples = np.asarray(samples)
    if samples.ndim != 1 or len(samples) < 5:
        raise SizeError(f"need at least 5 samples, got {samples.shape}")
    if dx <= 0:
        raise DomainError(f"dx must be positive, got {dx}")
    out = np.empty_like(samples)
    inv = 1.0 / dx ** 2
    out[1:-1] = (samples[2:] - 2.0 * samples[1:-1] + samples[:-2]) * inv
    out[0] = (2.0 * samples[0] - 5.0 * samples[1] + 4.0 * samples[2] - samples[3]) * inv
    out[-1] = (2.0 * samples[-1] - 5.0 * samples[-2] + 4.0 * samples[-3] - samples[-4]) * inv
    one_sided = np.zeros(len(samples), dtype=bool)
    one_sided[0] = one_sided[-1] = True
    return out, one_sided
