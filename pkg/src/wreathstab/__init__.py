"""Exact (co)homology ranks of vertical configuration spaces and the
representation theory of S_k wr S_n used to study their stability."""

__version__ = "0.1.0"

from .characters import (  # noqa: E402
    ClassFunction,
    character_table,
    decompose,
    induce_class_function,
    inner_product,
    irrep_dimension,
    irrep_labels,
    irreducible_character,
    pieri_decompose_MT,
)
from .rays import ClusterType, RayPartition, betti, enumerate_ray_partitions, poincare_table  # noqa: E402
from .stability import StabilityReport, analyze  # noqa: E402
from .structure import (  # noqa: E402
    CharacterPolynomial,
    GeneratorRankRegressor,
    character_polynomial_MT,
    inverse_binomial_transform,
    pad_multipartition,
    predict_rank,
    stable_ranges,
)
from .wreath import TypeMatrix, WreathElement, type_of  # noqa: E402

__all__ = [
    "CharacterPolynomial",
    "ClassFunction",
    "ClusterType",
    "GeneratorRankRegressor",
    "RayPartition",
    "StabilityReport",
    "TypeMatrix",
    "WreathElement",
    "analyze",
    "betti",
    "character_polynomial_MT",
    "character_table",
    "decompose",
    "enumerate_ray_partitions",
    "induce_class_function",
    "inner_product",
    "inverse_binomial_transform",
    "irrep_dimension",
    "irrep_labels",
    "irreducible_character",
    "pad_multipartition",
    "pieri_decompose_MT",
    "poincare_table",
    "predict_rank",
    "stable_ranges",
    "type_of",
]
