"""Exact arithmetic and polynomial criteria."""

from .criteria import (
    BigBound,
    cubic_pisot_criterion,
    is_pisot_polynomial,
    pisot_conjugates,
    roots_inside_unit_circle,
    substitution_count_bound,
    unified_criterion,
)
from .field import AlgebraicNumber, NumberField, sign_of
from .perron import NotPrimitiveError, PerronData, is_primitive, perron_data, perron_root_field
from .polynomials import (
    IntPolynomial,
    UnsupportedDegreeError,
    char_poly,
    cubic,
    factor_integer_polynomial,
    is_irreducible,
    is_irreducible_cubic,
    kenyon_cubic,
)
from .roots import RootOnUnitCircleError, count_inside_unit_circle, isolate_real_roots, root_discs

__all__ = [
    "AlgebraicNumber",
    "BigBound",
    "IntPolynomial",
    "NotPrimitiveError",
    "NumberField",
    "PerronData",
    "RootOnUnitCircleError",
    "UnsupportedDegreeError",
    "char_poly",
    "count_inside_unit_circle",
    "cubic",
    "cubic_pisot_criterion",
    "factor_integer_polynomial",
    "is_irreducible",
    "is_irreducible_cubic",
    "is_pisot_polynomial",
    "is_primitive",
    "isolate_real_roots",
    "kenyon_cubic",
    "perron_data",
    "perron_root_field",
    "pisot_conjugates",
    "root_discs",
    "roots_inside_unit_circle",
    "sign_of",
    "substitution_count_bound",
    "unified_criterion",
]
