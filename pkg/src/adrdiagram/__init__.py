"""Extremal planar convex bodies for fixed diameter and inradius."""
from ._accel import backend_name
from .diagram import (DiagramPoint, classical_bounds_ok, diagram_fill, psi,
                      random_convex_body, y_lower, y_upper)
from .errors import (ArcgonFormatError, CertificationError, DegenerateError,
                     DomainError, GeometryError, StructuralError)
from .shapes import (d_star, nonagon_C, nonagon_C_area, nonagon_E,
                     nonagon_E_area, slice_area, slice_body, two_cap_area,
                     two_cap_body, two_cap_volume_nd)

__version__ = "0.1.0"

__all__ = [
    "ArcgonFormatError", "CertificationError", "DegenerateError",
    "DiagramPoint", "DomainError", "GeometryError", "StructuralError",
    "backend_name", "classical_bounds_ok", "d_star", "diagram_fill",
    "nonagon_C", "nonagon_C_area", "nonagon_E", "nonagon_E_area", "psi",
    "random_convex_body", "slice_area", "slice_body", "two_cap_area",
    "two_cap_body", "two_cap_volume_nd", "y_lower", "y_upper",
]
