# Part of fracl1: discrete fractional calculus on uniform meshes.
# Copyright 2026 the fracl1 authors
# SPDX-License-Identifier: Apache-2.0

"""L1-scheme fractional integral/derivative composition experiments."""

from ._core import (
    __version__,
    caputo,
    compose,
    em_decompose,
    em_error,
    em_sweep,
    exact_caputo_monomial,
    exact_integral_monomial,
    frac_integral,
    gamma,
    kernel_S,
    kernel_table,
    operator_rate_sweep,
    rate_fit,
    remainder_constant,
    residue,
    residue_sweep,
    weight,
    weight_sequence,
    zeta,
)

__all__ = [
    "__version__",
    "caputo",
    "compose",
    "em_decompose",
    "em_error",
    "em_sweep",
    "exact_caputo_monomial",
    "exact_integral_monomial",
    "frac_integral",
    "gamma",
    "kernel_S",
    "kernel_table",
    "operator_rate_sweep",
    "rate_fit",
    "remainder_constant",
    "residue",
    "residue_sweep",
    "weight",
    "weight_sequence",
    "zeta",
]
