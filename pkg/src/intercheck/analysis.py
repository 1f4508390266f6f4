"""Multi-trace analysis against an interaction.

From a pair ``(term, multi-trace)`` the analysis either consumes a head
action of some component that matches a frontier action (executing that
action in the term), or ends on a coverage verdict.  A multi-trace passes
iff some path ends on ``Cov``.

Two rule sets exist.  ``standard`` yields ``Cov``/``UnCov``; ``extended``
splits failures into ``TooShort`` (everything consumed but the term still
expects actions), ``Out`` (no component emptied, nothing matches) and
``LackObs`` (some component emptied, nothing matches).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import BudgetExhausted
from .interaction import Position, Term, execute, expresses_empty, frontier_actions
from .trace import Action, MultiTrace, consume


class Mode(enum.Enum):
    STANDARD = "standard"
    EXTENDED = "extended"


class Coverage(enum.Enum):
    COV = "Cov"
    UNCOV = "UnCov"
    TOO_SHORT = "TooShort"
    OUT = "Out"
    LACK_OBS = "LackObs"


class Verdict(enum.Enum):
    PASS = "Pass"
    WEAK_PASS = "WeakPass"
    INCONC = "Inconc"
    FAIL = "Fail"


@dataclass(frozen=True)
class Pair:
    term: Term
    mu: MultiTrace


@dataclass(frozen=True)
class Step:
    """R3 edge label: ``action`` consumed from component ``component``, executed at ``position``."""

    action: Action
    position: Position
    component: int


@dataclass(frozen=True)
class Sink:
    """Label of an edge into a coverage verdict, naming the rule that produced it."""

    verdict: Coverage
    rule: str


Vertex = Union[Pair, Coverage]


@dataclass(frozen=True)
class SearchConfig:
    strategy: str = "dfs"
    memoize: bool = True
    node_budget: Optional[int] = None

    def __post_init__(self):
        if self.strategy not in ("dfs", "bfs"):
            raise ValueError(f"unknown search strategy {self.strategy!r}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")


def step_successors(term: Term, mu: MultiTrace, mode: Mode = Mode.STANDARD) -> list:
    """Outgoing edges of ``Pair(term, mu)`` as ``(label, vertex)`` pairs.

    R3 labels are :class:`Step`; sink edges carry a :class:`Sink` label and
    the :class:`Coverage` verdict as vertex.
    """
    mode = Mode(mode)
    if mu.is_empty():
        if expresses_empty(term):
            return [(Sink(Coverage.COV, "R1"), Coverage.COV)]
        v = Coverage.UNCOV if mode is Mode.STANDARD else Coverage.TOO_SHORT
        return [(Sink(v, "R2"), v)]
    out = []
    front = frontier_actions(term)
    for j, comp in enumerate(mu.components):
        if not comp:
            continue
        head = comp[0]
        for p, act in front:
            if act == head:
                after, _ = execute(term, p)
                out.append((Step(act, p, j), Pair(after, consume(mu, j, act))))
    if out:
        return out
    if mode is Mode.STANDARD:
        return [(Sink(Coverage.UNCOV, "R4"), Coverage.UNCOV)]
    if all(mu.components):
        return [(Sink(Coverage.OUT, "R4a"), Coverage.OUT)]
    return [(Sink(Coverage.LACK_OBS, "R4b"), Coverage.LACK_OBS)]


@dataclass
class AnalysisResult:
    verdict: Verdict
    mode: Mode
    witness: Optional[tuple] = None
    """Consumed actions, in order, along a path to the sink that decided the verdict."""
    reached: set = field(default_factory=set)
    expanded: int = 0


_EXTENDED_ORDER = (
    (Coverage.COV, Verdict.PASS),
    (Coverage.TOO_SHORT, Verdict.WEAK_PASS),
    (Coverage.LACK_OBS, Verdict.INCONC),
    (Coverage.OUT, Verdict.FAIL),
)


def analyze(term: Term, mu: MultiTrace, cfg: SearchConfig = SearchConfig(),
            mode: Mode = Mode.STANDARD) -> AnalysisResult:
    """Search the analysis graph from ``(term, mu)``; stop early once ``Cov`` is reached."""
    mode = Mode(mode)
    root = Pair(term, mu)
    # parent links: vertex -> (previous vertex, action); the root maps to None
    parent: dict = {root: None}
    first_sink: dict[Coverage, Pair] = {}
    frontier_ = deque([root])
    seen = {root} if cfg.memoize else None
    expanded = 0

    def path_to(v: Pair) -> tuple:
        acts = []
        while parent[v] is not None:
            v, act = parent[v]
            acts.append(act)
        return tuple(reversed(acts))

    while frontier_:
        v = frontier_.pop() if cfg.strategy == "dfs" else frontier_.popleft()
        expanded += 1
        if cfg.node_budget is not None and expanded > cfg.node_budget:
            raise BudgetExhausted(cfg.node_budget)
        succ = step_successors(v.term, v.mu, mode)
        children = []
        for label, w in succ:
            if isinstance(w, Coverage):
                first_sink.setdefault(w, v)
                if w is Coverage.COV:
                    return AnalysisResult(Verdict.PASS, mode, path_to(v), set(first_sink), expanded)
                continue
            if seen is not None:
                if w in seen:
                    continue
                seen.add(w)
            if w not in parent:
                parent[w] = (v, label.action)
            children.append(w)
        if cfg.strategy == "dfs":
            frontier_.extend(reversed(children))
        else:
            frontier_.extend(children)

    reached = set(first_sink)
    if mode is Mode.STANDARD:
        return AnalysisResult(Verdict.FAIL, mode, None, reached, expanded)
    for cov, verdict in _EXTENDED_ORDER:
        if cov in first_sink:
            return AnalysisResult(verdict, mode, path_to(first_sink[cov]), reached, expanded)
    raise AssertionError("every analysis path ends on a coverage verdict")


def omega(term: Term, mu: MultiTrace, cfg: SearchConfig = SearchConfig()) -> Verdict:
    return analyze(term, mu, cfg, Mode.STANDARD).verdict


def omega_tilde(term: Term, mu: MultiTrace, cfg: SearchConfig = SearchConfig()) -> Verdict:
    return analyze(term, mu, cfg, Mode.EXTENDED).verdict


@dataclass
class AnalysisGraph:
    """Explicit reachable analysis graph.

    ``vertices[k]`` is a :class:`Pair` or a :class:`Coverage`; every sink
    occurrence gets its own vertex.  ``edges`` holds ``(src, dst, label)``
    index triples.  Vertex 0 is the root.
    """

    vertices: list
    edges: list
    mode: Mode

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {k: [] for k in range(len(self.vertices))}
        for s, d, _ in self.edges:
            out[s].append(d)
        return out

    def sinks(self) -> set:
        return {v for v in self.vertices if isinstance(v, Coverage)}

    def is_acyclic(self) -> bool:
        succ = self.successors()
        indeg = {k: 0 for k in succ}
        for s, d, _ in self.edges:
            indeg[d] += 1
        ready = [k for k, n in indeg.items() if n == 0]
        count = 0
        while ready:
            k = ready.pop()
            count += 1
            for d in succ[k]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    ready.append(d)
        return count == len(self.vertices)

    def longest_path(self) -> int:
        """Number of edges on the longest path from the root (graph must be acyclic)."""
        succ = self.successors()
        memo: dict[int, int] = {}
        stack = [(0, False)]
        while stack:
            k, done = stack.pop()
            if done:
                memo[k] = max((1 + memo[d] for d in succ[k]), default=0)
                continue
            if k in memo:
                continue
            stack.append((k, True))
            stack.extend((d, False) for d in succ[k] if d not in memo)
        return memo[0]


def analysis_graph(term: Term, mu: MultiTrace, mode: Mode = Mode.STANDARD,
                   memoize: bool = True, node_budget: Optional[int] = None) -> AnalysisGraph:
    """Exhaustive breadth-first construction of the reachable analysis graph."""
    mode = Mode(mode)
    root = Pair(term, mu)
    vertices: list = [root]
    index = {root: 0}
    edges = []
    queue = deque([0])
    while queue:
        k = queue.popleft()
        if node_budget is not None and k >= node_budget:
            raise BudgetExhausted(node_budget)
        v = vertices[k]
        for label, w in step_successors(v.term, v.mu, mode):
            if isinstance(w, Pair) and memoize and w in index:
                edges.append((k, index[w], label))
                continue
            vertices.append(w)
            d = len(vertices) - 1
            if isinstance(w, Pair):
                if memoize:
                    index[w] = d
                queue.append(d)
            edges.append((k, d, label))
    return AnalysisGraph(vertices, edges, mode)
