"""Numerical tolerances, fixed once for the whole package.

All matrices here are at most 9x9, so double precision leaves roughly
1e-13 of headroom on the algebraic identities; the values below sit an
order or two above that.
"""

TAU_HERM = 1e-10   # max-abs deviation allowed between M and its adjoint
TAU_PSD = 1e-10    # eigenvalue floor for positive semi-definiteness
TAU_NORM = 1e-10   # unit-trace / unit-norm slack
TAU_NUM = 1e-12    # closed-form algebraic identities
TAU_REL = 1e-9     # complementarity-relation residuals
