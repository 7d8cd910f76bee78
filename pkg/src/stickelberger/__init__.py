"""Exact Gauss and Jacobi sums, Stickelberger valuations, Fermat-curve zeta data and tower ranks."""
from .charsum import TupleA, gauss_sum, jacobi_sum, jacobi_sum_naive
from .cyclo import CycloElem, galois_apply, padic_ord
from .errors import InternalError, PreconditionError
from .fermat import p_rank, zeta_numerator
from .ff import FieldCtx, dlog, make_field
from .stickel import frac_val_sum, is_supersingular, level_lower
from .tower import tower_rank, verify_nonisol

__version__ = "0.1.0"

__all__ = [
    "CycloElem", "FieldCtx", "InternalError", "PreconditionError", "TupleA", "dlog",
    "frac_val_sum", "galois_apply", "gauss_sum", "is_supersingular", "jacobi_sum",
    "jacobi_sum_naive", "level_lower", "make_field", "p_rank", "padic_ord", "tower_rank",
    "verify_nonisol", "zeta_numerator",
]
