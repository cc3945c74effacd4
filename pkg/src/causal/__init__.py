from .escape import (
    BranchData,
    SphericalCap,
    CapKind,
    IntersectionClass,
    EscapeSet,
    branch_data,
    branch_roots,
    escaping_mask,
    escape_caps,
    intersect_caps,
)
from .classifier import CausalClass, classify, classify_batch, point_seed
from .sampler import SampledClass, classify_sampled, comparison_band, sphere_directions, tags_agree

__all__ = [
    "BranchData",
    "SphericalCap",
    "CapKind",
    "IntersectionClass",
    "EscapeSet",
    "branch_data",
    "branch_roots",
    "escaping_mask",
    "escape_caps",
    "intersect_caps",
    "CausalClass",
    "classify",
    "classify_batch",
    "point_seed",
    "SampledClass",
    "classify_sampled",
    "comparison_band",
    "sphere_directions",
    "tags_agree",
]
