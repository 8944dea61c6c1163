"""Cover a convex quadrilateral with tangent elliptical UAV footprints.

An optimal equal-circle packing of the unit square is carried onto the target
quadrilateral by a four-point homography; every circle becomes an ellipse and
tangencies survive the map. Each ellipse is then served by one UAV whose
altitude minimizes the worst-case air-to-ground path loss over the footprint.
"""
from .channel import PRESETS, Environment, LinkGeometry, p_los, pl_max, w_factor
from .conic import (
    Circle,
    Conic,
    ConicKind,
    EllipseFootprint,
    Relation,
    classify,
    ellipse_area,
    extract_ellipse,
    map_circle,
    tangency_check,
)
from .geometry import Point2, Quadrilateral, contains_point, convexity_check, shoelace_area
from .homography import (
    Homography,
    apply,
    apply_inverse,
    build_dlt_matrix,
    jacobian_det,
    solve_homography,
    vanishing_points,
)
from .packing import PackingConfig, get_packing, load_packing_file, packing_density
from .placement import (
    UavPlacement,
    antenna_angles,
    assemble_placement,
    optimize_altitude,
    projection_offset,
)
from .planner import (
    Plan,
    Scenario,
    coverage_fraction_mc,
    hexagon_comparison,
    plan,
    rectangle_comparison,
)

__version__ = "0.1.0"
