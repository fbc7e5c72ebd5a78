"""Scorer functions Gi and Hi on the whole complex plane.

The package evaluates the two standard particular solutions of the
inhomogeneous Airy equation ``w'' - z w = -+ 1/pi`` in double precision by
routing each argument to a numerically stable representation: Maclaurin
series near the origin, non-oscillating descent-contour quadrature in the
middle range, rotation connections between sectors, and large-argument
expansions once they are certifiably accurate.

>>> from scorerlib import gi, hi
>>> hi(-1.0).value.real
0.22066961...
"""

from __future__ import annotations

from .airy import (
    AI_ZERO,
    AIP_ZERO,
    BI_ZERO,
    BIP_ZERO,
    AiryPair,
    ai_complex,
    airy_rotated,
    bi_complex,
)
from .contour import DomainError
from .engine import (
    GI_AT_ZERO,
    GI_DERIV_AT_ZERO,
    HI_AT_ZERO,
    HI_DERIV_AT_ZERO,
    EngineConfig,
    ScorerEngine,
    ScorerResult,
    SectorLabel,
    classify_sector,
    gi,
    gi_asymptotic,
    gi_from_hi_rotations,
    gi_hi_pair,
    gi_integral,
    gi_real_positive,
    gi_series,
    hi,
    hi_asymptotic,
    hi_connection,
    hi_integral_principal,
    hi_integral_upper,
    hi_integral_v_form,
    hi_series,
)
from .quadrature import (
    NonFiniteIntegrandError,
    QuadratureConfig,
    QuadratureResult,
    integrate_finite,
    integrate_piecewise,
    integrate_semi_infinite,
)

__version__ = "0.1.0"

__all__ = [
    "AI_ZERO",
    "AIP_ZERO",
    "BI_ZERO",
    "BIP_ZERO",
    "AiryPair",
    "DomainError",
    "EngineConfig",
    "GI_AT_ZERO",
    "GI_DERIV_AT_ZERO",
    "HI_AT_ZERO",
    "HI_DERIV_AT_ZERO",
    "NonFiniteIntegrandError",
    "QuadratureConfig",
    "QuadratureResult",
    "ScorerEngine",
    "ScorerResult",
    "SectorLabel",
    "__version__",
    "ai_complex",
    "airy_rotated",
    "bi_complex",
    "classify_sector",
    "gi",
    "gi_asymptotic",
    "gi_from_hi_rotations",
    "gi_hi_pair",
    "gi_integral",
    "gi_real_positive",
    "gi_series",
    "hi",
    "hi_asymptotic",
    "hi_connection",
    "hi_integral_principal",
    "hi_integral_upper",
    "hi_integral_v_form",
    "hi_series",
    "integrate_finite",
    "integrate_piecewise",
    "integrate_semi_infinite",
]
