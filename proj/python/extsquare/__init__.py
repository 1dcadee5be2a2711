"""Character-theoretic verification engine for a pair of local integral
identities attached to a rank-3 group and its rank-2 twisted form.

The heavy lifting lives in the compiled ``_core`` submodule; this package
re-exports its operations under their public names.
"""

from ._core import (
    __version__,
    branch,
    character_a3,
    character_c2,
    closed_form,
    dim_a3,
    dim_c2,
    factor_coeffs,
    factor_coeffs_numeric,
    local_integral,
    lr_tensor,
    run_suite,
    sample_inert,
    sample_split,
    sym_wedge2,
    tensor_inert,
    tensor_split,
    unipotent,
)

__all__ = [
    "__version__",
    "branch",
    "character_a3",
    "character_c2",
    "closed_form",
    "dim_a3",
    "dim_c2",
    "factor_coeffs",
    "factor_coeffs_numeric",
    "local_integral",
    "lr_tensor",
    "run_suite",
    "sample_inert",
    "sample_split",
    "sym_wedge2",
    "tensor_inert",
    "tensor_split",
    "unipotent",
]
