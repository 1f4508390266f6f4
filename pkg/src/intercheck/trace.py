"""Actions, global traces and multi-traces.

A multi-trace holds one local trace per lifeline of a :class:`Signature`,
always stored in the signature's lifeline order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HeadMismatch, UnknownLifeline, UnknownMessage


class Direction(enum.Enum):
    EMIT = "!"
    RECEIVE = "?"


@dataclass(frozen=True)
class Action:
    lifeline: str
    direction: Direction
    message: str

    def __str__(self):
        return f"{self.lifeline}{self.direction.value}{self.message}"

    def __lt__(self, other):
        return (self.lifeline, self.direction.value, self.message) < (
            other.lifeline, other.direction.value, other.message)


def emit(lifeline: str, message: str) -> Action:
    return Action(lifeline, Direction.EMIT, message)


def receive(lifeline: str, message: str) -> Action:
    return Action(lifeline, Direction.RECEIVE, message)


GlobalTrace = tuple  # tuple[Action, ...]; () is the empty trace


@dataclass(frozen=True)
class Signature:
    lifelines: tuple[str, ...]
    messages: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "lifelines", tuple(self.lifelines))
        object.__setattr__(self, "messages", tuple(self.messages))
        if not self.lifelines or not self.messages:
            raise ValueError("a signature needs at least one lifeline and one message")
        if len(set(self.lifelines)) != len(self.lifelines):
            raise ValueError("duplicate lifeline names")
        if len(set(self.messages)) != len(self.messages):
            raise ValueError("duplicate message names")

    def index(self, lifeline: str) -> int:
        try:
            return self.lifelines.index(lifeline)
        except ValueError:
            raise UnknownLifeline(f"unknown lifeline {lifeline!r}") from None

    def check_action(self, act: Action) -> None:
        if act.lifeline not in self.lifelines:
            raise UnknownLifeline(f"unknown lifeline {act.lifeline!r} in {act}")
        if act.message not in self.messages:
            raise UnknownMessage(f"unknown message {act.message!r} in {act}")


@dataclass(frozen=True)
class MultiTrace:
    """One local trace per lifeline; ``components[j]`` belongs to ``signature.lifelines[j]``."""

    signature: Signature
    components: tuple[tuple[Action, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != len(self.signature.lifelines):
            raise ValueError("one component per lifeline is required")
        for lifeline, comp in zip(self.signature.lifelines, comps):
            for act in comp:
                if act.lifeline != lifeline:
                    raise ValueError(f"action {act} does not belong to component {lifeline}")

    @classmethod
    def empty(cls, signature: Signature) -> "MultiTrace":
        return cls(signature, ((),) * len(signature.lifelines))

    def __len__(self):
        return sum(len(c) for c in self.components)

    def is_empty(self) -> bool:
        return all(not c for c in self.components)

    def __str__(self):
        parts = []
        for lifeline, comp in zip(self.signature.lifelines, self.components):
            body = ".".join(str(a) for a in comp) if comp else "eps"
            parts.append(f"{lifeline}: {body}")
        return "{" + "; ".join(parts) + "}"


def project(trace: Iterable[Action], sig: Signature) -> MultiTrace:
    comps: list[list[Action]] = [[] for _ in sig.lifelines]
    for act in trace:
        sig.check_action(act)
        comps[sig.index(act.lifeline)].append(act)
    return MultiTrace(sig, tuple(tuple(c) for c in comps))


def multitrace_length(mu: MultiTrace) -> int:
    return len(mu)


def head_actions(mu: MultiTrace) -> set[tuple[int, Action]]:
    """Pairs ``(j, first action of component j)`` for non-empty components (0-based ``j``)."""
    return {(j, comp[0]) for j, comp in enumerate(mu.components) if comp}


def consume(mu: MultiTrace, j: int, act: Action) -> MultiTrace:
    if not 0 <= j < len(mu.components) or not mu.components[j] or mu.components[j][0] != act:
        raise HeadMismatch(f"component {j} does not start with {act}")
    comps = list(mu.components)
    comps[j] = comps[j][1:]
    return MultiTrace(mu.signature, tuple(comps))


def prepend(mu: MultiTrace, j: int, act: Action) -> MultiTrace:
    comps = list(mu.components)
    comps[j] = (act,) + comps[j]
    return MultiTrace(mu.signature, tuple(comps))


def trace_str(trace: Sequence[Action]) -> str:
    return ".".join(str(a) for a in trace) if trace else "eps"
