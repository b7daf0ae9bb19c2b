"""Skew flat fibrations: integrality obstructions and explicit constructions."""
from .series import (
    ExponentPolynomial,
    SymbolicPowerExpansion,
    TruncatedSeries,
    base_series,
    series_pow_symbolic,
)
from .integrality import (
    admissible,
    cross_field_implications,
    hurwitz_radon,
    james_complex,
    james_quaternionic,
    real_exists,
    real_period,
    relation_check,
    solve_congruences,
)

__version__ = "0.1.0"
