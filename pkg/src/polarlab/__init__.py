"""Exact codes of points versus k-spaces of classical polar spaces."""

__version__ = "0.1.0"

from .gf import FieldSpec, field_of_order, make_field
from .polarspace import PolarSpace, get_space, standard_polar_space

__all__ = [
    "FieldSpec",
    "field_of_order",
    "make_field",
    "PolarSpace",
    "get_space",
    "standard_polar_space",
]
