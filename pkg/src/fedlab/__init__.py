"""fedlab: exact fractional eternal domination toolkit.

Graph generators, an exact rational simplex, reconfiguration flows, the
n-state strategy LP, closed-form dispatch, a bounds engine with witnesses,
and an attack/defense game simulator.
"""

from .engine import (
    BoundsReport,
    ClosedForm,
    Interval,
    StrategyCertificate,
    big_F,
    bounds,
    closed_form_fed,
    f_value,
    gamma_f,
    is_fully_fd_critical,
    med_tree,
    solve_program_A,
    split_equality_check,
    split_fed,
)
from .fixtures import FIXTURE_NAMES, load_fixture
from .game import (
    GameState,
    Transcript,
    simulate,
    verify_certificate,
)
from .graphs import ClassTag, Graph, generate, graph_from_edges, product
from .rational import Rat, format_rat, parse_rat
from .reconfig import (
    FDFunction,
    MovePlan,
    apply_move_plan,
    build_reconfig_network,
    can_reconfigure,
    max_flow,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "ClassTag",
    "ClosedForm",
    "FDFunction",
    "FIXTURE_NAMES",
    "GameState",
    "Graph",
    "Interval",
    "MovePlan",
    "Rat",
    "StrategyCertificate",
    "Transcript",
    "apply_move_plan",
    "big_F",
    "bounds",
    "build_reconfig_network",
    "can_reconfigure",
    "closed_form_fed",
    "f_value",
    "format_rat",
    "gamma_f",
    "generate",
    "graph_from_edges",
    "is_fully_fd_critical",
    "load_fixture",
    "max_flow",
    "med_tree",
    "parse_rat",
    "product",
    "simulate",
    "solve_program_A",
    "split_equality_check",
    "split_fed",
    "verify_certificate",
]
