"""Finite field towers, a complex backend, polynomials and root finding."""
from .core import (
    COMPLEX,
    COMPLEX_RTOL,
    DEFAULT_ENUM_CAP,
    DEFAULT_MAX_DEGREE,
    ComplexField,
    FieldElement,
    FiniteField,
    GF,
    common_field,
    element_from_json,
    embedding,
    enumerate_field,
    field_of_order,
)
from .poly import Poly, kth_root_closure, poly_roots_avoiding, roots_in_level

__all__ = [
    "COMPLEX",
    "COMPLEX_RTOL",
    "DEFAULT_ENUM_CAP",
    "DEFAULT_MAX_DEGREE",
    "ComplexField",
    "FieldElement",
    "FiniteField",
    "GF",
    "Poly",
    "common_field",
    "element_from_json",
    "embedding",
    "enumerate_field",
    "field_of_order",
    "kth_root_closure",
    "poly_roots_avoiding",
    "roots_in_level",
]
