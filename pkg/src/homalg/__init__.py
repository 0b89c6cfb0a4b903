"""Exact structure-constant engine for binary and ternary Hom-algebras."""
from homalg.core import (
    CheckReport,
    DimensionError,
    Element,
    HomAlgebra,
    HomBolAlgebra,
    LinearMap,
    TernaryHomAlgebra,
    Verdict,
    Witness,
)
from homalg.tensor import QTensor

__all__ = [
    "CheckReport",
    "DimensionError",
    "Element",
    "HomAlgebra",
    "HomBolAlgebra",
    "LinearMap",
    "QTensor",
    "TernaryHomAlgebra",
    "Verdict",
    "Witness",
]
__version__ = "0.1.0"
