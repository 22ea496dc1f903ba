"""coring-lab: exact verification of coring/comodule/descent identities.

Everything is finite-dimensional over F_p or Q, every map is a concrete
matrix, and every claimed identity is checked by exact matrix equality.
"""

__version__ = "0.1.0"

from .exactla import GF, QQ, FieldSpec, Mat, Subspace, kernel, kron, quotient, rref, solve
from .rings import Algebra, RingHom, check_algebra, is_firm_ring, jacobson_radical
from .bimod import (
    Bimodule,
    BimoduleMap,
    hom_right,
    is_fg_projective,
    tensor_chain,
    tensor_over,
)
from .corings import Coring, Grouplike, check_coring, sweedler_coring, trivial_coring
from .comod import Comodule, check_comodule, end_ring, hom_comodules
from .comonadlab import RepresentedAdjunction, canonical_morphism
from .galois import GaloisInstance, is_galois

__all__ = [
    "GF",
    "QQ",
    "FieldSpec",
    "Mat",
    "Subspace",
    "kernel",
    "kron",
    "quotient",
    "rref",
    "solve",
    "Algebra",
    "RingHom",
    "check_algebra",
    "is_firm_ring",
    "jacobson_radical",
    "Bimodule",
    "BimoduleMap",
    "hom_right",
    "is_fg_projective",
    "tensor_chain",
    "tensor_over",
    "Coring",
    "Grouplike",
    "check_coring",
    "sweedler_coring",
    "trivial_coring",
    "Comodule",
    "check_comodule",
    "end_ring",
    "hom_comodules",
    "RepresentedAdjunction",
    "canonical_morphism",
    "GaloisInstance",
    "is_galois",
    "__version__",
]
