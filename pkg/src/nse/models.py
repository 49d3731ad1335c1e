"""Catalog of exactly solvable families.

Each family bundles a linear potential U, its normalized ground state
(profile phi0 with phi0(0)=1, energy E0, normalization c0), and the
synthesized nonlinearity written as A*G(|psi|/c0) plus an optional residual
external potential.  All evaluators accept scalars or numpy arrays and are
numerically stable far into the tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Union

import numpy as np

from . import numerics
from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "GroundState",
    "Nonlinearity",
    "Gausson",
    "TrappedGausson",
    "Cosh1D",
    "CoshND",
    "PowerLaw",
    "TanSquared",
    "SoftenedDelta",
    "Coulomb",
    "ModelSpec",
    "FAMILIES",
    "from_params",
    "potential",
    "ground_state",
    "nonlinearity",
    "norm_constant_numeric",
    "sample_stationary",
]

_LOG2 = math.log(2.0)


def _log_cosh(y):
    """log(cosh(y)), overflow-free for any magnitude of y."""
    ay = np.abs(np.asarray(y, dtype=float))
    return ay + np.log1p(np.exp(-2.0 * ay)) - _LOG2


def _sech(y):
    return np.exp(-_log_cosh(y))


@dataclass(frozen=True)
class PhysicalConstants:
    """Planck constant and particle mass; defaults give dimensionless units."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0 or self.mass <= 0:
            raise DomainError("hbar and mass must both be positive")


@dataclass(frozen=True)
class GroundState:
    """Evaluator bundle for the normalized bound state.

    ``profile`` maps radius (or |x| in 1D) to phi0 in [0, 1] with phi0(0)=1;
    ``profile_deriv`` is d(phi0)/dr where available.  ``half_width`` is None
    for states on the whole space, or the box half-width for walled models.
    """

    profile: Callable
    energy: float
    norm_const: float
    length_scale: float
    half_width: Optional[float] = None
    profile_deriv: Optional[Callable] = None


@dataclass(frozen=True)
class Nonlinearity:
    """Nonlinear term A*G(phi) with phi = |psi|/c0, plus residual potential.

    ``shape`` validates phi in (0, 1] before evaluating; ``shape_raw`` is the
    same formula without the domain guard, for dynamics where transient
    amplitudes may exceed the ground-state range (e.g. soliton collisions).
    """

    scale: float
    shape: Callable
    shape_raw: Callable
    u_ext: Callable
    domain_note: str


def _validated(raw: Callable) -> Callable:
    def shape(phi):
        arr = np.asarray(phi, dtype=float)
        if np.any(arr <= 0.0) or np.any(arr > 1.0):
            raise DomainError("nonlinearity shape G is defined for phi in (0, 1]")
        return raw(phi)

    return shape


def _zero_potential(r):
    return np.asarray(r, dtype=float) * 0.0


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Gausson:
    """Harmonic trap in N dimensions; Gaussian soliton of the log nonlinearity."""

    omega: float
    N: int = 3
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "gausson"

    def __post_init__(self):
        if self.omega <= 0:
            raise DomainError("omega must be positive")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N must be an integer >= 1, got {self.N}")

    @property
    def dim(self) -> int:
        return self.N

    @property
    def b(self) -> float:
        return math.sqrt(2.0 * self.const.hbar / (self.const.mass * self.omega))

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return 0.5 * self.const.mass * self.omega ** 2 * r ** 2

    def _profile(self):
        b2 = self.b ** 2
        return lambda r: np.exp(-np.asarray(r, dtype=float) ** 2 / b2)

    def ground_state(self) -> GroundState:
        hbar, m = self.const.hbar, self.const.mass
        b = self.b
        prof = self._profile()
        c0 = (m * self.omega / (math.pi * hbar)) ** (self.N / 4.0)
        deriv = lambda r: -2.0 * np.asarray(r, dtype=float) / b ** 2 * prof(r)
        return GroundState(
            profile=prof,
            energy=0.5 * self.N * hbar * self.omega,
            norm_const=c0,
            length_scale=b,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        raw = lambda phi: -2.0 * np.log(phi)
        return Nonlinearity(
            scale=0.5 * self.const.hbar * self.omega,
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G diverges logarithmically as phi->0; G(1)=0; "
            "phi*G(phi) peaks at phi=1/e",
        )


@dataclass(frozen=True)
class TrappedGausson:
    """Harmonic trap split into an external part and a log nonlinearity (N=3).

    omega1 drives the residual external potential, omega2 the nonlinear term;
    the ground state is that of the full trap with Omega^2 = omega1^2 + omega2^2.
    """

    omega1: float
    omega2: float
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "trapped-gausson"
    N = 3

    def __post_init__(self):
        if self.omega1 <= 0 or self.omega2 <= 0:
            raise DomainError("omega1 and omega2 must be positive")

    @property
    def dim(self) -> int:
        return 3

    @property
    def omega(self) -> float:
        return math.hypot(self.omega1, self.omega2)

    @property
    def b(self) -> float:
        return math.sqrt(2.0 * self.const.hbar / (self.const.mass * self.omega))

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        return 0.5 * self.const.mass * self.omega ** 2 * r ** 2

    def _profile(self):
        b2 = self.b ** 2
        return lambda r: np.exp(-np.asarray(r, dtype=float) ** 2 / b2)

    def ground_state(self) -> GroundState:
        hbar, m = self.const.hbar, self.const.mass
        prof = self._profile()
        b = self.b
        deriv = lambda r: -2.0 * np.asarray(r, dtype=float) / b ** 2 * prof(r)
        return GroundState(
            profile=prof,
            energy=1.5 * hbar * self.omega,
            norm_const=(m * self.omega / (math.pi * hbar)) ** 0.75,
            length_scale=b,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        raw = lambda phi: -2.0 * np.log(phi)
        m, w1 = self.const.mass, self.omega1
        return Nonlinearity(
            scale=0.5 * self.const.hbar * self.omega2 ** 2 / self.omega,
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=lambda r: 0.5 * m * w1 ** 2 * np.asarray(r, dtype=float) ** 2,
            domain_note="log shape as for the free Gausson; residual harmonic "
            "trap carried separately in u_ext",
        )


@dataclass(frozen=True)
class Cosh1D:
    """1/cosh^2 well in one dimension; bright soliton of the cubic nonlinearity."""

    a: float
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "cosh1d"
    N = 1

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError("a must be positive")

    @property
    def dim(self) -> int:
        return 1

    def potential(self, x):
        hbar, m, a = self.const.hbar, self.const.mass, self.a
        return -(hbar ** 2 / (m * a ** 2)) * _sech(np.asarray(x, dtype=float) / a) ** 2

    def _profile(self):
        a = self.a
        return lambda x: _sech(np.asarray(x, dtype=float) / a)

    def ground_state(self) -> GroundState:
        hbar, m, a = self.const.hbar, self.const.mass, self.a
        prof = self._profile()
        deriv = lambda x: -_sech(np.asarray(x, dtype=float) / a) * np.tanh(
            np.asarray(x, dtype=float) / a
        ) / a
        return GroundState(
            profile=prof,
            energy=-(hbar ** 2) / (2.0 * m * a ** 2),
            norm_const=1.0 / math.sqrt(2.0 * a),
            length_scale=a,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        raw = lambda phi: -np.asarray(phi, dtype=float) ** 2
        return Nonlinearity(
            scale=self.const.hbar ** 2 / (self.const.mass * self.a ** 2),
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G(phi) = -phi^2 everywhere; vanishes as phi->0",
        )


def _coshnd_shape(N: int) -> Callable:
    """G for the N-dimensional 1/cosh family, stable through phi -> 1.

    The awkward ratio sqrt(1-phi^2) / (log(1+sqrt(1-phi^2)) - log(phi)) equals
    t/artanh(t) with t = sqrt(1-phi^2), which is evaluated without any
    cancellation and tends to 1 as phi -> 1 (so G(1) = -(N+1)/2).
    """
    if N == 1:
        return lambda phi: -np.asarray(phi, dtype=float) ** 2

    def raw(phi):
        phi = np.asarray(phi, dtype=float)
        t2 = np.clip((1.0 - phi) * (1.0 + phi), 0.0, None)
        t = np.sqrt(t2)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(t > 0.0, t / np.arctanh(np.where(t > 0.0, t, 0.5)), 1.0)
        return -phi ** 2 - 0.5 * (N - 1) * ratio

    return raw


@dataclass(frozen=True)
class CoshND:
    """1/cosh soliton in N dimensions; zeta-function normalization for N > 2."""

    a: float
    N: int = 3
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "coshNd"

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError("a must be positive")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N must be an integer >= 1, got {self.N}")

    @property
    def dim(self) -> int:
        return self.N

    def potential(self, r):
        hbar, m, a, N = self.const.hbar, self.const.mass, self.a, self.N
        r = np.asarray(r, dtype=float)
        well = -(hbar ** 2 / (m * a ** 2)) * _sech(r / a) ** 2
        if N == 1:
            return well
        with np.errstate(divide="ignore", invalid="ignore"):
            tanh_over_r = np.where(r > 0.0, np.tanh(r / a) / np.where(r > 0.0, r, 1.0), 1.0 / a)
        return well - (N - 1) * hbar ** 2 / (2.0 * m * a) * tanh_over_r

    def _profile(self):
        a = self.a
        return lambda r: _sech(np.asarray(r, dtype=float) / a)

    def _norm_const(self) -> float:
        a, N = self.a, self.N
        if N == 1:
            return 1.0 / math.sqrt(2.0 * a)
        if N == 2:
            # closed form of the (2^N-4)*zeta(N-1) -> 4 ln 2 limit
            return 1.0 / (a * math.sqrt(2.0 * math.pi * _LOG2))
        log_c0_sq = (
            (N - 1) * math.log(4.0)
            + numerics.log_gamma(N / 2.0 + 1.0)
            - math.log(2.0 ** N - 4.0)
            - math.log(N)
            - numerics.log_gamma(float(N))
            - 0.5 * N * math.log(math.pi)
            - math.log(numerics.zeta(N - 1.0))
            - N * math.log(a)
        )
        return math.exp(0.5 * log_c0_sq)

    def ground_state(self) -> GroundState:
        hbar, m, a = self.const.hbar, self.const.mass, self.a
        prof = self._profile()
        deriv = lambda r: -_sech(np.asarray(r, dtype=float) / a) * np.tanh(
            np.asarray(r, dtype=float) / a
        ) / a
        return GroundState(
            profile=prof,
            energy=-(hbar ** 2) / (2.0 * m * a ** 2),
            norm_const=self._norm_const(),
            length_scale=a,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        raw = _coshnd_shape(self.N)
        return Nonlinearity(
            scale=self.const.hbar ** 2 / (self.const.mass * self.a ** 2),
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G -> -(N+1)/2 as phi->1; vanishes as phi->0",
        )


@dataclass(frozen=True)
class PowerLaw:
    """Deepened 1/cosh^2 well giving the pure power nonlinearity -phi^(2*lambda)."""

    a: float
    lam: float = 1.0
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "power-law"
    N = 1

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError("a must be positive")
        if self.lam <= 0:
            raise DomainError("lambda must be positive")

    @property
    def dim(self) -> int:
        return 1

    def potential(self, x):
        hbar, m, a, lam = self.const.hbar, self.const.mass, self.a, self.lam
        pref = (1.0 + lam) / (2.0 * lam ** 2) * hbar ** 2 / (m * a ** 2)
        return -pref * _sech(np.asarray(x, dtype=float) / a) ** 2

    def _profile(self):
        a, lam = self.a, self.lam
        return lambda x: np.exp(-_log_cosh(np.asarray(x, dtype=float) / a) / lam)

    def ground_state(self) -> GroundState:
        hbar, m, a, lam = self.const.hbar, self.const.mass, self.a, self.lam
        prof = self._profile()
        s = 1.0 / lam
        c0 = math.exp(
            0.5 * (numerics.log_gamma(0.5 + s) - numerics.log_gamma(s))
        ) / (math.pi ** 0.25 * math.sqrt(a))

        def deriv(x):
            x = np.asarray(x, dtype=float)
            return -s / a * prof(x) * np.tanh(x / a)

        return GroundState(
            profile=prof,
            energy=-(hbar ** 2) / (2.0 * m * a ** 2 * lam ** 2),
            norm_const=c0,
            length_scale=a,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        lam = self.lam
        raw = lambda phi: -np.power(np.asarray(phi, dtype=float), 2.0 * lam)
        pref = (1.0 + lam) / (2.0 * lam ** 2) * self.const.hbar ** 2 / (
            self.const.mass * self.a ** 2
        )
        return Nonlinearity(
            scale=pref,
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G(phi) = -phi^(2*lambda); reduces to the cubic case "
            "at lambda = 1",
        )


@dataclass(frozen=True)
class TanSquared:
    """tan^2 well inside a box of half-width pi*L/2 with hard walls."""

    L: float
    beta: float = 2.0
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "tan2"
    N = 1

    def __post_init__(self):
        if self.L <= 0:
            raise DomainError("L must be positive")
        if self.beta <= 1:
            raise DomainError(f"beta must exceed 1, got {self.beta}")

    @property
    def dim(self) -> int:
        return 1

    @property
    def half_width(self) -> float:
        return 0.5 * math.pi * self.L

    def potential(self, x):
        hbar, m, L, beta = self.const.hbar, self.const.mass, self.L, self.beta
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) < self.half_width
        pref = hbar ** 2 / (2.0 * m * L ** 2) * beta * (beta - 1.0)
        with np.errstate(invalid="ignore"):
            val = np.where(inside, pref * np.tan(np.where(inside, x, 0.0) / L) ** 2, np.inf)
        if val.ndim == 0:
            return float(val)
        return val

    def _profile(self):
        L, beta, hw = self.L, self.beta, self.half_width

        def prof(x):
            x = np.asarray(x, dtype=float)
            inside = np.abs(x) < hw
            c = np.clip(np.cos(np.where(inside, x, 0.0) / L), 0.0, None)
            return np.where(inside, c ** beta, 0.0)

        return prof

    def ground_state(self) -> GroundState:
        hbar, m, L, beta = self.const.hbar, self.const.mass, self.L, self.beta
        prof = self._profile()
        c0 = math.sqrt(beta / (math.pi ** 0.5 * L)) * math.exp(
            0.5 * (numerics.log_gamma(beta) - numerics.log_gamma(beta + 0.5))
        )
        hw = self.half_width

        def deriv(x):
            x = np.asarray(x, dtype=float)
            inside = np.abs(x) < hw
            xx = np.where(inside, x, 0.0)
            c = np.clip(np.cos(xx / L), 0.0, None)
            return np.where(inside, -beta / L * c ** (beta - 1.0) * np.sin(xx / L), 0.0)

        return GroundState(
            profile=prof,
            energy=hbar ** 2 * beta / (2.0 * m * L ** 2),
            norm_const=c0,
            length_scale=L,
            half_width=hw,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        beta = self.beta
        raw = lambda phi: beta * (beta - 1.0) * (
            np.power(np.asarray(phi, dtype=float), -2.0 / beta) - 1.0
        )
        return Nonlinearity(
            scale=self.const.hbar ** 2 / (2.0 * self.const.mass * self.L ** 2),
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G(1) = 0; G diverges as phi->0 (wall region)",
        )


@lru_cache(maxsize=None)
def _softened_delta_c0(a: float, b0: float) -> float:
    """Numeric normalization for the softened-delta profile (no closed form)."""

    def density(x):
        return np.exp(2.0 * (b0 - np.sqrt(x * x + b0 * b0)) / a)

    res = numerics.integrate_adaptive(density, 0.0, math.inf, rel_tol=1e-12)
    return 1.0 / math.sqrt(2.0 * res.value)


@dataclass(frozen=True)
class SoftenedDelta:
    """Regularized attractive point well; b0 -> 0 recovers the delta potential.

    b0 = 0 is allowed as the cusp limit object e^(-|x|/a) with c0 = 1/sqrt(a),
    but it has no grid-representable nonlinearity, so nonlinearity() requires
    b0 > 0.
    """

    a: float
    b0: float = 1.0
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "softened-delta"
    N = 1

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError("a must be positive")
        if self.b0 < 0:
            raise DomainError("b0 must be >= 0")

    @property
    def dim(self) -> int:
        return 1

    def potential(self, x):
        hbar, m, a, b0 = self.const.hbar, self.const.mass, self.a, self.b0
        x = np.asarray(x, dtype=float)
        if b0 == 0.0 and np.any(x == 0.0):
            raise DomainError("b0 = 0 potential is a delta function, singular at x = 0")
        s2 = x * x + b0 * b0
        return -(hbar ** 2 * b0 ** 2 / (2.0 * a * m)) * (s2 ** -1.5 + 1.0 / (a * s2))

    def _profile(self):
        a, b0 = self.a, self.b0
        return lambda x: np.exp(
            (b0 - np.sqrt(np.asarray(x, dtype=float) ** 2 + b0 * b0)) / a
        )

    def ground_state(self) -> GroundState:
        hbar, m, a, b0 = self.const.hbar, self.const.mass, self.a, self.b0
        prof = self._profile()
        if b0 == 0.0:
            c0 = 1.0 / math.sqrt(a)
            deriv = lambda x: -np.sign(np.asarray(x, dtype=float)) / a * prof(x)
        else:
            c0 = _softened_delta_c0(a, b0)

            def deriv(x):
                x = np.asarray(x, dtype=float)
                return -x / (a * np.sqrt(x * x + b0 * b0)) * prof(x)

        return GroundState(
            profile=prof,
            energy=-(hbar ** 2) / (2.0 * m * a ** 2),
            norm_const=c0,
            length_scale=a,
            profile_deriv=deriv,
        )

    def nonlinearity(self) -> Nonlinearity:
        if self.b0 == 0.0:
            raise DomainError(
                "b0 = 0 nonlinearity is a delta distribution in phi; "
                "only its b0 -> 0 limit structure is verifiable"
            )
        a, b0 = self.a, self.b0
        c = b0 / a

        def raw(phi):
            logterm = np.log(np.asarray(phi, dtype=float)) - c
            return (c * c) * (1.0 - logterm) / logterm ** 3

        return Nonlinearity(
            scale=self.const.hbar ** 2 / (2.0 * self.const.mass * self.a ** 2),
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G(1) = -a/b0 - 1; narrows toward a -delta(1-phi) "
            "spike as b0 -> 0",
        )


@dataclass(frozen=True)
class Coulomb:
    """Attractive 1/r potential in three dimensions."""

    aB: float
    const: PhysicalConstants = field(default_factory=PhysicalConstants)

    name = "coulomb"
    N = 3

    def __post_init__(self):
        if self.aB <= 0:
            raise DomainError("aB must be positive")

    @property
    def dim(self) -> int:
        return 3

    def potential(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0):
            raise DomainError("Coulomb potential requires r > 0")
        return -self.const.hbar ** 2 / (self.aB * self.const.mass * r)

    def _profile(self):
        aB = self.aB
        return lambda r: np.exp(-np.asarray(r, dtype=float) / aB)

    def ground_state(self) -> GroundState:
        hbar, m, aB = self.const.hbar, self.const.mass, self.aB
        prof = self._profile()
        return GroundState(
            profile=prof,
            energy=-(hbar ** 2) / (2.0 * m * aB ** 2),
            norm_const=(math.pi * aB ** 3) ** -0.5,
            length_scale=aB,
            profile_deriv=lambda r: -prof(r) / aB,
        )

    def nonlinearity(self) -> Nonlinearity:
        def raw(phi):
            with np.errstate(divide="ignore"):
                return 1.0 / (2.0 * np.log(np.asarray(phi, dtype=float)))

        return Nonlinearity(
            scale=2.0 * self.const.hbar ** 2 / (self.const.mass * self.aB ** 2),
            shape=_validated(raw),
            shape_raw=raw,
            u_ext=_zero_potential,
            domain_note="G diverges as phi->1, mirroring the r->0 singularity",
        )


ModelSpec = Union[
    Gausson,
    TrappedGausson,
    Cosh1D,
    CoshND,
    PowerLaw,
    TanSquared,
    SoftenedDelta,
    Coulomb,
]

FAMILIES = {
    cls.name: cls
    for cls in (
        Gausson,
        TrappedGausson,
        Cosh1D,
        CoshND,
        PowerLaw,
        TanSquared,
        SoftenedDelta,
        Coulomb,
    )
}

# CLI/JSON parameter keys per family
PARAM_KEYS = {
    "gausson": ("omega", "N"),
    "trapped-gausson": ("omega1", "omega2"),
    "cosh1d": ("a",),
    "coshNd": ("a", "N"),
    "power-law": ("a", "lambda"),
    "tan2": ("L", "beta"),
    "softened-delta": ("a", "b0"),
    "coulomb": ("aB",),
}

_KEY_TO_FIELD = {"lambda": "lam"}


def from_params(name: str, **params) -> ModelSpec:
    """Build a spec from its CLI/JSON name and parameter dict."""
    if name not in FAMILIES:
        raise DomainError(f"unknown model {name!r}; known: {sorted(FAMILIES)}")
    hbar = params.pop("hbar", 1.0)
    mass = params.pop("mass", 1.0)
    kwargs = {_KEY_TO_FIELD.get(k, k): v for k, v in params.items() if v is not None}
    if "N" in kwargs:
        kwargs["N"] = int(kwargs["N"])
    return FAMILIES[name](const=PhysicalConstants(hbar=hbar, mass=mass), **kwargs)


# ---------------------------------------------------------------------------
# module-level operations (thin dispatch onto the family methods)
# ---------------------------------------------------------------------------

def potential(spec: ModelSpec, r):
    """Linear potential U(r); +inf signals the hard wall of boxed families."""
    return spec.potential(r)


def ground_state(spec: ModelSpec) -> GroundState:
    return spec.ground_state()


def nonlinearity(spec: ModelSpec) -> Nonlinearity:
    return spec.nonlinearity()


def norm_constant_numeric(spec: ModelSpec, rel_tol: float = 1e-12) -> float:
    """Normalization constant from quadrature of the density over all space."""
    prof = spec._profile()
    N = spec.dim
    surface = 2.0 * math.pi ** (N / 2.0) / math.exp(numerics.log_gamma(N / 2.0))
    hi = spec.half_width if isinstance(spec, TanSquared) else math.inf

    def integrand(r):
        r = np.asarray(r, dtype=float)
        return r ** (N - 1) * prof(r) ** 2

    res = numerics.integrate_adaptive(integrand, 0.0, hi, rel_tol=rel_tol)
    return 1.0 / math.sqrt(surface * res.value)


def sample_stationary(spec: ModelSpec, grid, t: float = 0.0):
    """Stationary solution c0*phi0*exp(-i*E0*t/hbar) sampled on a 1D grid."""
    from .evolve import ComplexField  # local import to avoid a module cycle

    gs = spec.ground_state()
    x = grid.x
    if gs.half_width is not None and np.any(np.abs(x) > gs.half_width):
        raise DomainError("grid extends beyond the support of the model")
    phase = np.exp(-1j * gs.energy * t / spec.const.hbar)
    samples = gs.norm_const * gs.profile(np.abs(x)) * phase
    return ComplexField(grid=grid, samples=samples.astype(complex), time=t)
