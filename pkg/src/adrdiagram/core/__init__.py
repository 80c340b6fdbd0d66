"""Representations and measurements of planar convex bodies."""
from .body import (Arc, ArcGon, BoundaryPiece, Point2, Polygon, Segment, area,
                   disk, dumps, loads)
from .hull import convex_hull, polygon_hull
from .measure import (BodyMetrics, ChebyshevResult, calipers_diameter,
                      chebyshev_center, diameter, diameter_with_angle,
                      inradius, measure, samples_inradius)
from .minkowski import minkowski_combination, minkowski_interpolate
from .steiner import steiner_symmetrize
from .support import (SupportSamples, hausdorff, support_area,
                      support_dominates, support_values, to_support)

__all__ = [
    "Arc", "ArcGon", "BoundaryPiece", "BodyMetrics", "ChebyshevResult",
    "Point2", "Polygon", "Segment", "SupportSamples", "area",
    "calipers_diameter", "chebyshev_center", "convex_hull", "diameter",
    "diameter_with_angle", "disk", "dumps", "hausdorff", "inradius", "loads",
    "measure", "minkowski_combination", "minkowski_interpolate",
    "polygon_hull", "samples_inradius", "steiner_symmetrize", "support_area",
    "support_dominates", "support_values", "to_support",
]
