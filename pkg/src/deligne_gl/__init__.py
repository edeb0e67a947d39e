"""Exact computations in the Grothendieck ring of the Deligne category Rep(GL_t).

The split Grothendieck ring is the tensor square of the ring of symmetric
functions.  This package computes the classes of the indecomposable objects
X_{lambda,mu} by two independent routes (an alternating skew-Schur sum and a
mixed Jacobi-Trudi determinant), their tensor-product structure constants,
their specializations to rational GL_n characters, and truncated
generating-function identities tying it all together, everything in exact
integer arithmetic.
"""

from .bisym import BiSymFunc, omega_xy, tensor
from .genfun import TruncationSpec, genfun_lhs, genfun_rhs, verify_cauchy, verify_dual_cauchy
from .grothendieck import (
    coset_tau,
    expand_in_s_basis,
    mixed_jacobi_trudi,
    s_class,
    tensor_structure_constants,
)
from .partitions import Partition, SkewShape, conjugate, contains, enumerate_ssyt, partitions_in_rectangle
from .specialize import LaurentPoly, check_detshift, rational_schur_char, signature_of, specialize_to_gl_n
from .symfunc import SymFunc, complete_to_schur, elementary_to_schur, jacobi_trudi, multiply, omega, pieri_column, schur, skew_schur

__version__ = "0.1.0"

__all__ = [
    "BiSymFunc",
    "LaurentPoly",
    "Partition",
    "SkewShape",
    "SymFunc",
    "TruncationSpec",
    "__version__",
    "check_detshift",
    "complete_to_schur",
    "conjugate",
    "contains",
    "coset_tau",
    "elementary_to_schur",
    "enumerate_ssyt",
    "expand_in_s_basis",
    "genfun_lhs",
    "genfun_rhs",
    "jacobi_trudi",
    "mixed_jacobi_trudi",
    "multiply",
    "omega",
    "omega_xy",
    "partitions_in_rectangle",
    "pieri_column",
    "rational_schur_char",
    "s_class",
    "schur",
    "signature_of",
    "skew_schur",
    "specialize_to_gl_n",
    "tensor",
    "tensor_structure_constants",
    "verify_cauchy",
    "verify_dual_cauchy",
]
