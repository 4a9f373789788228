"""Mollifier-based path smoothing: smooth polyline paths by convolution with a
compactly supported bump kernel, with exact derivatives and curvature planning."""

from ._core import (
    MollifiedPath,
    WaypointPath,
    convex_hull_contains,
    kernel_cdf,
    kernel_normalization,
    kernel_value,
    plan_epsilons,
    read_waypoint_file,
    speed_to_curvature_budget,
)

__all__ = [
    "MollifiedPath",
    "WaypointPath",
    "convex_hull_contains",
    "kernel_cdf",
    "kernel_normalization",
    "kernel_value",
    "plan_epsilons",
    "read_waypoint_file",
    "speed_to_curvature_budget",
]
