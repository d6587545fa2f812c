"""Exact structure constants and multi-level normal forms for Euler-family
vector fields with nilpotent linear part.

All scalars are exact rationals rendered as strings ("num/den", "/den"
omitted for integers). Basis elements are index tuples (l, mu, k); in 2D the
delta power k is always 0.
"""

from ._nilnorm import (
    binom,
    bracket,
    bracket_filtered,
    cgc,
    factorial,
    invert_tensor,
    lambda_coeff,
    normal_form,
    orbit_transvectant,
    product_orbit,
    realize,
    to_orbit_coords,
    transvectant,
    transvectant_norm_sq,
    verify,
)

__all__ = [
    "binom",
    "bracket",
    "bracket_filtered",
    "cgc",
    "factorial",
    "invert_tensor",
    "lambda_coeff",
    "normal_form",
    "orbit_transvectant",
    "product_orbit",
    "realize",
    "to_orbit_coords",
    "transvectant",
    "transvectant_norm_sq",
    "verify",
]
