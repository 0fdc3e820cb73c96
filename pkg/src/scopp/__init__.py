"""Multi-robot coverage path planning with load-balanced area partitioning.

Pipeline: project the survey boundary onto a local tangent plane, discretize
it into camera-footprint-sized cells, split the cells among robots with
Lloyd's clustering, settle contested cells by a distance-biased auction, and
chain each robot's cells into a route by nearest-neighbor ordering. A
constant-velocity simulator and a serpentine-sweep baseline support
benchmarking.
"""

from .auction import (
    Assignment,
    BiasTable,
    RobotState,
    auction_conflicts,
    compute_bias,
)
from .discretize import (
    Cell,
    Grid,
    PolygonSet,
    UavParams,
    build_grid,
    cell_width,
    point_in_polygon,
)
from .errors import (
    EmptyCandidateError,
    EmptyGridError,
    InconsistentStateError,
    InvalidInputError,
    MissionParseError,
    MissionValidationError,
    OutOfRangeError,
    ScoppError,
)
from .geo import (
    CartPoint,
    GeoPoint,
    Projection,
    haversine_distance,
    to_cartesian,
    to_geographic,
)
from .mission import MissionOptions, MissionSpec, load_mission, parse_mission, validate_mission
from .partition import CellClassification, ClusterState, classify_cells, lloyd_cluster
from .pathplan import KdTree, Plan, finalize_plan, kd_build, kd_nearest, plan_path
from .pipeline import PipelineResult, StageTimings, run_pipeline
from .sim import (
    MetricsReport,
    SweepResult,
    evaluate,
    profile_pipeline,
    random_order_plan,
    scalability_sweep,
    sweep_baseline,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BiasTable",
    "CartPoint",
    "Cell",
    "CellClassification",
    "ClusterState",
    "EmptyCandidateError",
    "EmptyGridError",
    "GeoPoint",
    "Grid",
    "InconsistentStateError",
    "InvalidInputError",
    "KdTree",
    "MetricsReport",
    "MissionOptions",
    "MissionParseError",
    "MissionSpec",
    "MissionValidationError",
    "OutOfRangeError",
    "PipelineResult",
    "Plan",
    "PolygonSet",
    "Projection",
    "RobotState",
    "ScoppError",
    "StageTimings",
    "SweepResult",
    "UavParams",
    "auction_conflicts",
    "build_grid",
    "cell_width",
    "classify_cells",
    "compute_bias",
    "evaluate",
    "finalize_plan",
    "haversine_distance",
    "kd_build",
    "kd_nearest",
    "lloyd_cluster",
    "load_mission",
    "parse_mission",
    "plan_path",
    "point_in_polygon",
    "profile_pipeline",
    "random_order_plan",
    "run_pipeline",
    "scalability_sweep",
    "sweep_baseline",
    "to_cartesian",
    "to_geographic",
    "validate_mission",
]
