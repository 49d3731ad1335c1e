"""Exactly solvable nonlinear Schrodinger equations.

Catalog of solvable model families, a generic nonlinearity-construction
engine, stationary/boosted/limit verification suites, and 1D soliton
dynamics (split-step spectral and Crank-Nicolson steppers).
"""

__version__ = "0.1.0"

from . import construct, evolve, models, numerics, verify  # noqa: F401
