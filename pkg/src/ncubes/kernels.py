"""Backend selector for the integer kernels.

The compiled extension (ncubes._kernels, built from _kernels.pyx) and the
pure module (ncubes._kernels_py) implement the same functions; import the
compiled one when present unless NCUBES_PURE is set.  HAVE_COMPILED tells
callers (and the benchmark) which one is live.
"""

from __future__ import annotations

import os

if os.environ.get("NCUBES_PURE"):
    from . import _kernels_py as impl

    HAVE_COMPILED = False
else:
    try:
        from . import _kernels as impl  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        from . import _kernels_py as impl

        HAVE_COMPILED = False

mat_echelon = impl.mat_echelon
mat_rank = impl.mat_rank
mat_det = impl.mat_det
mat_kernel = impl.mat_kernel
charpoly = impl.charpoly
poly_trim = impl.poly_trim
poly_deriv = impl.poly_deriv
poly_primitive = impl.poly_primitive
prem_abs = impl.prem_abs
poly_gcd = impl.poly_gcd
sturm_chain = impl.sturm_chain
sign_variations_inf = impl.sign_variations_inf
eval_terms = impl.eval_terms
eval_terms_many = impl.eval_terms_many
