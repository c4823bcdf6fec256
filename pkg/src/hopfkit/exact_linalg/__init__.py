from .cyclotomic import (CycNumber, CycField, Rational, as_cyc, cyc_inverse, cyc_reduce, field,
                         format_coeff, parse_coeff, root_of_unity_order, roots_of_unity)
from .matrix import (ExactMatrix, SubspaceBasis, hstack, image, intersect, inverse, kernel, kron,
                     preimage, rank, rref, solve, subspace_sum, vstack)

__all__ = ["CycNumber", "CycField", "Rational", "as_cyc", "cyc_inverse", "cyc_reduce", "field", "format_coeff",
           "parse_coeff", "root_of_unity_order", "roots_of_unity", "ExactMatrix", "SubspaceBasis", "hstack",
           "image", "intersect", "inverse", "kernel", "kron", "preimage", "rank", "rref", "solve",
           "subspace_sum", "vstack"]
