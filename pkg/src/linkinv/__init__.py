"""Exact invariants of links of weighted-homogeneous hypersurface singularities.

The pipeline: parse an invertible polynomial into its exponent matrix,
solve the weight system exactly, transpose it, expand the divisor of the
Alexander polynomial in the cyclotomic algebra, read off Betti numbers,
torsion, and the evaluations at +-1, and decide the curvature
obstruction inequalities.  Everything runs over exact integer and
rational arithmetic; there is no floating point anywhere.
"""

from __future__ import annotations

from .alexander import (
    CyclotomicDivisor,
    HomologyProfile,
    UVData,
    alexander_divisor,
    betti_from_divisor,
    betti_subset_formula,
    delta_at_1,
    delta_at_minus1,
    expand_delta,
    milnor_number,
    poly_eval,
    structured_divisor_check,
    uv,
)
from .errors import LinkInvError
from .obstruct import (
    LinkClass,
    ObstructionReport,
    bvc_no_extremal,
    classify,
    cone_dimension,
    lichnerowicz,
    obstruction_report,
)
from .orlik import orlik_torsion
from .poly import InvertiblePolynomial, decompose, is_atomic, parse_polynomial
from .report import full_report, oracle_report
from .tables import load_table, verify_table
from .transpose import bh_transpose, dual_weights
from .weights import (
    SuspensionForm,
    WeightSystem,
    m2m3_split,
    solve_weights,
    suspension_form,
    well_formed,
)

__all__ = [
    "CyclotomicDivisor",
    "HomologyProfile",
    "InvertiblePolynomial",
    "LinkClass",
    "LinkInvError",
    "ObstructionReport",
    "SuspensionForm",
    "UVData",
    "WeightSystem",
    "alexander_divisor",
    "betti_from_divisor",
    "betti_subset_formula",
    "bh_transpose",
    "bvc_no_extremal",
    "classify",
    "cone_dimension",
    "decompose",
    "delta_at_1",
    "delta_at_minus1",
    "dual_weights",
    "expand_delta",
    "full_report",
    "is_atomic",
    "lichnerowicz",
    "load_table",
    "m2m3_split",
    "milnor_number",
    "obstruction_report",
    "oracle_report",
    "orlik_torsion",
    "parse_polynomial",
    "poly_eval",
    "solve_weights",
    "structured_divisor_check",
    "suspension_form",
    "uv",
    "verify_table",
    "well_formed",
]
