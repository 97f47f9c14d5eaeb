"""Pursuit-game laboratory: exact capture times, constructive strategies,
and machine-checked bounds on graphs and Cartesian products of trees."""

from .graphs import (
    Graph,
    GraphError,
    bfs_distances,
    build_graph,
    diameter,
    distance,
    eccentricity,
    format_graph,
    parse_graph,
    read_graph,
    write_graph,
)
from .trees import (
    RootedTree,
    add_leaf,
    diametral_path,
    is_descendant,
    is_tree,
    root_tree,
    step_toward,
    tree_diameter,
)
from .products import ProductGraph, cartesian_product
from .generators import (
    SplitMix64,
    all_labeled_trees,
    cycle_graph,
    grid_graph,
    path_graph,
    prufer_decode,
    random_tree,
    star_graph,
)
from .engine import (
    ESCAPE,
    CaptureValue,
    CopStrategy,
    GameConfig,
    GameState,
    IllegalMoveError,
    MoveOrder,
    Outcome,
    ResourceBudgetError,
    RobberStrategy,
    Side,
    Trace,
    advance_round,
    best_response_length,
    format_trace,
    is_escape,
    legal_cop_moves,
    parse_trace,
    replay_trace,
    simulate,
    write_trace,
)
from .solver import (
    SolveResult,
    ValueTable,
    capture_time_both_orders,
    dump_value_table,
    naive_value_iteration,
    optimal_cop_strategy,
    optimal_robber_strategy,
    solve,
)
from .tree_strategies import (
    ParityRecord,
    PlacementPlan,
    ProductTwoCop,
    StrategyInvariantError,
    TreeChaseCop,
    TwoPhaseMemory,
    center_start,
    normalize_parity,
    one_cop_strategy,
    product_initial_placement,
    two_cop_strategy,
)

__version__ = "0.1.0"
