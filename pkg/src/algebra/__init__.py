from .ambient import (
    AdSPoint,
    GroupElement,
    AlgebraElement,
    ValidationReport,
    q_form,
    eta,
    random_point,
    eta_complete,
    complete_frame,
    mat_exp,
    validate_element,
)
from .lie import (
    RootLabel,
    IwasawaBasis,
    generator,
    root_vector,
    cone_generator,
    involution,
    k_theta,
    iwasawa_basis,
    all_labels,
)

__all__ = [
    "AdSPoint",
    "GroupElement",
    "AlgebraElement",
    "ValidationReport",
    "q_form",
    "eta",
    "random_point",
    "eta_complete",
    "complete_frame",
    "mat_exp",
    "validate_element",
    "RootLabel",
    "IwasawaBasis",
    "generator",
    "root_vector",
    "cone_generator",
    "involution",
    "k_theta",
    "iwasawa_basis",
    "all_labels",
]
