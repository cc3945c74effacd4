from .lateral import (
    HorizonResidual,
    HorizonSample,
    LateralParams,
    horizon_residual,
    h3_parametrize,
    orbit_two_param,
    lateral_action,
    lateral_matrix,
    lateral_inverse,
    lateral_from_matrix,
    h4_samples,
    h4_generate,
)

__all__ = [
    "HorizonResidual",
    "HorizonSample",
    "LateralParams",
    "horizon_residual",
    "h3_parametrize",
    "orbit_two_param",
    "lateral_action",
    "lateral_matrix",
    "lateral_inverse",
    "lateral_from_matrix",
    "h4_samples",
    "h4_generate",
]
