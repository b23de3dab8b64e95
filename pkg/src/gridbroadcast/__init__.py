"""Optimal multipackings and dominating broadcasts on grid graphs."""
from .broadcast import (
    BroadcastAssignment,
    UncoveredWitness,
    check_dominating,
    cost,
    is_dominating,
    path_broadcast,
    radius_broadcast,
)
from .constructions import (
    CertificateMismatch,
    ConstructionPlan,
    DualityCertificate,
    InapplicableCaseError,
    build_multipacking,
    certify_optimality,
    gamma_b_value,
    height2_packing,
    height3_packing,
    i_pattern_indices,
    insert_blank_line,
    large_grid_packing,
    long_grid_packing,
    mp_value,
    optimal_broadcast,
    pattern_window_bound,
    table_packing,
)
from .graphs import (
    DisconnectedGraphError,
    DistanceRow,
    Graph,
    GraphError,
    GridShape,
    Vertex,
    bfs_distances,
    diameter,
    eccentricity,
    grid_distance,
    make_cycle,
    make_grid,
    make_path,
    radius,
)
from .oracles import CapExceededError, SolveResult, crosscheck_grid, exact_gamma_b, exact_mp
from .packing import (
    GridBallCounter,
    Multipacking,
    ViolationWitness,
    ball_count,
    check_multipacking,
    is_multipacking,
    max_violation_ratio,
)

__version__ = "0.1.0"
