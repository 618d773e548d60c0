"""Exact rational-homotopy computations for homogeneous spaces,
biquotients and cohomogeneity-one manifolds: Sullivan models, ordinary
and Borel-equivariant cohomology, surjectivity criteria and rational
K-theory dimension counts."""

from .cdga import AlgebraElement, CdgaMorphism, Generator, SullivanAlgebra
from .cohomology import CohomologyTable
from .linalg import BACKEND, RationalMatrix, SubspaceBasis
from .models import GroupData, GroupDiagram, RestrictionMap

__all__ = [
    "AlgebraElement",
    "BACKEND",
    "CdgaMorphism",
    "CohomologyTable",
    "Generator",
    "GroupData",
    "GroupDiagram",
    "RationalMatrix",
    "RestrictionMap",
    "SubspaceBasis",
    "SullivanAlgebra",
]
