"""Bounded exploration of the trace semantics of an interaction.

Executing frontier actions one at a time yields the execution tree of a
term; every path ending on a term that expresses the empty trace spells an
accepted trace.  Loops make that tree infinite, so exploration is bounded by
the number of iterations each loop instance may perform and, optionally, by
trace length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .interaction import (
    Position,
    Term,
    execute,
    expresses_empty,
    frontier_actions,
    with_loop_budget,
)
from .trace import Action, MultiTrace, Signature, project


@dataclass(frozen=True)
class ExplorationBound:
    """Limits for enumeration.

    ``max_loop_unrollings`` is the number of repetitions a loop instance may
    perform after its first iteration: 0 lets each loop run its body at most
    once, 2 at most three times.  Loop instances created by unrolling an
    enclosing loop get a fresh allowance.
    """

    max_loop_unrollings: int = 1
    max_trace_length: Optional[int] = None

    def __post_init__(self):
        if self.max_loop_unrollings < 0:
            raise ValueError("max_loop_unrollings must be >= 0")
        if self.max_trace_length is not None and self.max_trace_length < 0:
            raise ValueError("max_trace_length must be >= 0")

    def prepare(self, i: Term) -> Term:
        return with_loop_budget(i, self.max_loop_unrollings + 1)


@dataclass
class ExecutionTree:
    term: Term
    accepting: bool
    children: list[tuple[Position, Action, "ExecutionTree"]] = field(default_factory=list)

    def size(self) -> int:
        return 1 + sum(child.size() for _, _, child in self.children)

    def accepted_paths(self, prefix=()) -> Iterator[tuple[Action, ...]]:
        if self.accepting:
            yield prefix
        for _, act, child in self.children:
            yield from child.accepted_paths(prefix + (act,))


def _remaining(bound: ExplorationBound) -> int:
    return -1 if bound.max_trace_length is None else bound.max_trace_length


@lru_cache(maxsize=1 << 15)
def _suffixes(i: Term, remaining: int) -> frozenset:
    # remaining == -1 means no length limit (loop budgets keep it finite)
    out = set()
    if expresses_empty(i):
        out.add(())
    if remaining == 0:
        return frozenset(out)
    for p, _ in frontier_actions(i):
        after, act = execute(i, p)
        for tail in _suffixes(after, remaining - 1 if remaining > 0 else -1):
            out.add((act,) + tail)
    return frozenset(out)


def accepted_traces(i: Term, bound: ExplorationBound) -> frozenset:
    """Accepted global traces reachable within ``bound`` (tuples of actions)."""
    return _suffixes(bound.prepare(i), _remaining(bound))


def accepted_multitraces(i: Term, bound: ExplorationBound, sig: Signature) -> frozenset:
    return frozenset(project(t, sig) for t in accepted_traces(i, bound))


def explore_tree(i: Term, bound: ExplorationBound) -> ExecutionTree:
    """Build the bounded execution tree; children are ordered by position."""
    limit = bound.max_trace_length

    def build(term, depth):
        node = ExecutionTree(term, expresses_empty(term))
        if limit is not None and depth >= limit:
            return node
        for p, _ in frontier_actions(term):
            after, act = execute(term, p)
            node.children.append((p, act, build(after, depth + 1)))
        return node

    root = build(bound.prepare(i), 0)
    root.term = i
    return root


def is_accepted_trace(i: Term, trace) -> bool:
    """Whether the global trace is accepted, reading it action by action."""
    trace = tuple(trace)
    seen = set()
    stack = [(i, 0)]
    while stack:
        term, k = stack.pop()
        if (term, k) in seen:
            continue
        seen.add((term, k))
        if k == len(trace):
            if expresses_empty(term):
                return True
            continue
        for p, act in frontier_actions(term):
            if act == trace[k]:
                stack.append((execute(term, p)[0], k + 1))
    return False


def multitrace_accepted_by_enumeration(i: Term, mu: MultiTrace) -> Optional[tuple]:
    """Brute-force membership: search accepted traces of length ``|mu|`` projecting to ``mu``.

    Independent of the multi-trace analysis; used to cross-check it.
    """
    n = len(mu)
    bound = ExplorationBound(max_loop_unrollings=n, max_trace_length=n)
    for t in sorted(accepted_traces(i, bound), key=lambda t: [str(a) for a in t]):
        if len(t) == n and project(t, mu.signature) == mu:
            return t
    return None
