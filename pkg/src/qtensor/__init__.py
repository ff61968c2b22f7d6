"""Exact construction of the orthogonal family of highest-weight vectors in
quantum tensor space, indexed by walks on the growth diagram of partitions,
with a verification battery for the identities the construction satisfies."""

from .coeff import LaurentPoly, RatFunc, ScalarField, qfact, qint, specialize
from .combinatorics import (
    Partition,
    StandardTableau,
    Walk,
    count_standard,
    coxeter_elements,
    enumerate_walks,
    weyl_dim,
)
from .psiphi import MaximalVectorRecord, NegElement, build_c_pi, is_maximal, phi, psi
from .tensorspace import TensorVector, apply_T, bilinear, weight_of

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "ScalarField",
    "qint",
    "qfact",
    "specialize",
    "Partition",
    "Walk",
    "StandardTableau",
    "enumerate_walks",
    "count_standard",
    "weyl_dim",
    "coxeter_elements",
    "TensorVector",
    "apply_T",
    "bilinear",
    "weight_of",
    "NegElement",
    "MaximalVectorRecord",
    "psi",
    "phi",
    "build_c_pi",
    "is_maximal",
]
