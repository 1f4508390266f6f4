"""Multi-trace checking against interaction models by small-step term rewriting."""

from .analysis import (
    AnalysisGraph,
    AnalysisResult,
    Coverage,
    Mode,
    Pair,
    SearchConfig,
    Verdict,
    analysis_graph,
    analyze,
    omega,
    omega_tilde,
    step_successors,
)
from .errors import InteractionError, ParseError
from .explore import (
    ExecutionTree,
    ExplorationBound,
    accepted_multitraces,
    accepted_traces,
    explore_tree,
    is_accepted_trace,
)
from .interaction import (
    EMPTY,
    Binary,
    Empty,
    Leaf,
    Loop,
    Term,
    alt,
    avoids,
    execute,
    expresses_empty,
    frontier,
    leaf,
    loop_par,
    loop_seq,
    loop_strict,
    par,
    positions,
    prune,
    seq,
    simplify,
    strict,
    sub_interaction,
)
from .syntax import parse_model, parse_multitrace, parse_term
from .trace import (
    Action,
    Direction,
    MultiTrace,
    Signature,
    consume,
    emit,
    head_actions,
    multitrace_length,
    project,
    receive,
)

__version__ = "0.1.0"
