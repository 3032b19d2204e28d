"""Slide-o-Cam profile synthesis and pressure-angle analysis."""

from ._core import (
    ActiveInterval,
    DesignParams,
    ExtendedAngle,
    FeasibilityReport,
    MaxPressureAngle,
    SlideocamError,
    SolverError,
    __version__,
    active_interval,
    cam_profile,
    check_feasibility,
    contact_point,
    curvature_pitch,
    displacement,
    is_convex,
    max_pressure_angle,
    parse_config,
    pitch_point,
    pressure_angle,
    solve_extended_angle,
    tan_pressure_angle,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
