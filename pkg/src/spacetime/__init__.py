from .ads import (
    AdSPoint,
    Representative,
    SL2Matrix,
    project,
    representative,
    special_representative,
    lemma_representative,
    iota,
    psi,
    psi_inv,
    singular_residual,
    is_singular,
    null_direction,
    geodesic_point,
    tangent_class,
    reduce_y,
    reproject,
    random_stabilizer,
)

__all__ = [
    "AdSPoint",
    "Representative",
    "SL2Matrix",
    "project",
    "representative",
    "special_representative",
    "lemma_representative",
    "iota",
    "psi",
    "psi_inv",
    "singular_residual",
    "is_singular",
    "null_direction",
    "geodesic_point",
    "tangent_class",
    "reduce_y",
    "reproject",
    "random_stabilizer",
]
