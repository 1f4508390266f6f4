"""Interaction terms and the rewriting machinery over them.

Terms are immutable binary trees.  Sub-terms are addressed by positions in
Dewey notation: a tuple over ``{1, 2}`` where ``1`` descends into the left
child (or a loop body) and ``2`` into the right child; ``()`` is the root.

Every operation here is a pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .errors import InvalidPosition, NotInFrontier, PruneUndefined
from .trace import Action

Position = tuple  # tuple[int, ...]

SCHEDULING = ("strict", "seq", "par")
BINARY_OPS = ("strict", "seq", "alt", "par")


class Term:
    __slots__ = ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True, eq=True)
class Empty(Term):
    def __hash__(self):
        return 0x5EED


@dataclass(frozen=True, eq=True)
class Leaf(Term):
    action: Action
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(("leaf", self.action)))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Binary(Term):
    op: str
    left: Term
    right: Term
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary operator {self.op!r}")
        object.__setattr__(self, "_hash", hash((self.op, self.left, self.right)))

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Loop(Term):
    """``loop_<op>(body)``.

    ``budget`` is ``None`` for ordinary terms.  The bounded explorer sets it
    to the number of iterations this loop instance may still start; a loop
    with budget 0 exposes no frontier.
    """

    op: str
    body: Term
    budget: Optional[int] = None
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.op not in SCHEDULING:
            raise ValueError(f"unknown loop kind {self.op!r}")
        object.__setattr__(self, "_hash", hash(("loop", self.op, self.body, self.budget)))

    def __hash__(self):
        return self._hash


EMPTY = Empty()


def leaf(action: Action) -> Leaf:
    return Leaf(action)


def _fold(op: str, terms) -> Term:
    terms = list(terms)
    if not terms:
        raise ValueError(f"{op} needs at least one operand")
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = Binary(op, t, out)
    return out


def strict(*terms: Term) -> Term:
    return _fold("strict", terms)


def seq(*terms: Term) -> Term:
    return _fold("seq", terms)


def alt(*terms: Term) -> Term:
    return _fold("alt", terms)


def par(*terms: Term) -> Term:
    return _fold("par", terms)


def loop_strict(body: Term) -> Loop:
    return Loop("strict", body)


def loop_seq(body: Term) -> Loop:
    return Loop("seq", body)


def loop_par(body: Term) -> Loop:
    return Loop("par", body)


def to_text(i: Term) -> str:
    """Canonical binary-form text, parseable back by :func:`intercheck.syntax.parse_term`."""
    if isinstance(i, Empty):
        return "0"
    if isinstance(i, Leaf):
        return str(i.action)
    if isinstance(i, Binary):
        return f"{i.op}({to_text(i.left)},{to_text(i.right)})"
    return f"loop_{i.op}({to_text(i.body)})"


def format_position(p: Position) -> str:
    return "".join(str(x) for x in p) if p else "ε"


def parse_position(s: str) -> Position:
    if s in ("", "ε", "eps"):
        return ()
    if any(c not in "12" for c in s):
        raise InvalidPosition(f"bad position {s!r}")
    return tuple(int(c) for c in s)


# ---------------------------------------------------------------- addressing

def positions(i: Term) -> list[Position]:
    out: list[Position] = []

    def walk(t, prefix):
        out.append(prefix)
        if isinstance(t, Binary):
            walk(t.left, prefix + (1,))
            walk(t.right, prefix + (2,))
        elif isinstance(t, Loop):
            walk(t.body, prefix + (1,))

    walk(i, ())
    return sorted(out)


def sub_interaction(i: Term, p: Position) -> Term:
    t = i
    for k, step in enumerate(p):
        if isinstance(t, Binary) and step in (1, 2):
            t = t.left if step == 1 else t.right
        elif isinstance(t, Loop) and step == 1:
            t = t.body
        else:
            raise InvalidPosition(f"position {format_position(p)} is not in the term "
                                  f"(stuck after {format_position(p[:k])})")
    return t


def lifelines_of(i: Term) -> frozenset[str]:
    if isinstance(i, Leaf):
        return frozenset((i.action.lifeline,))
    if isinstance(i, Binary):
        return lifelines_of(i.left) | lifelines_of(i.right)
    if isinstance(i, Loop):
        return lifelines_of(i.body)
    return frozenset()


def actions_of(i: Term) -> list[Action]:
    """Action leaves in left-to-right order (with repetitions)."""
    if isinstance(i, Leaf):
        return [i.action]
    if isinstance(i, Binary):
        return actions_of(i.left) + actions_of(i.right)
    if isinstance(i, Loop):
        return actions_of(i.body)
    return []


# ---------------------------------------------------------- static analyses

@lru_cache(maxsize=1 << 16)
def expresses_empty(i: Term) -> bool:
    if isinstance(i, Empty):
        return True
    if isinstance(i, Leaf):
        return False
    if isinstance(i, Loop):
        return True
    if i.op == "alt":
        return expresses_empty(i.left) or expresses_empty(i.right)
    return expresses_empty(i.left) and expresses_empty(i.right)


@lru_cache(maxsize=1 << 16)
def avoids(i: Term, lifeline: str) -> bool:
    if isinstance(i, Empty):
        return True
    if isinstance(i, Leaf):
        return i.action.lifeline != lifeline
    if isinstance(i, Loop):
        return True
    if i.op == "alt":
        return avoids(i.left, lifeline) or avoids(i.right, lifeline)
    return avoids(i.left, lifeline) and avoids(i.right, lifeline)


@lru_cache(maxsize=1 << 16)
def frontier_actions(i: Term) -> tuple[tuple[Position, Action], ...]:
    """``(position, action)`` for every frontier position, in lexicographic position order."""
    if isinstance(i, Empty):
        return ()
    if isinstance(i, Leaf):
        return (((), i.action),)
    if isinstance(i, Loop):
        if i.budget is not None and i.budget <= 0:
            return ()
        return tuple(((1,) + p, a) for p, a in frontier_actions(i.body))
    left = tuple(((1,) + p, a) for p, a in frontier_actions(i.left))
    if i.op == "strict" and not expresses_empty(i.left):
        return left
    right = frontier_actions(i.right)
    if i.op == "seq":
        right = tuple((p, a) for p, a in right if avoids(i.left, a.lifeline))
    return left + tuple(((2,) + p, a) for p, a in right)


def frontier(i: Term) -> list[Position]:
    return [p for p, _ in frontier_actions(i)]


# ---------------------------------------------------------------- rewriting

@lru_cache(maxsize=1 << 16)
def _prune(i: Term, lifeline: str) -> Term:
    if isinstance(i, (Empty, Leaf)):
        return i
    if isinstance(i, Loop):
        if avoids(i.body, lifeline):
            return Loop(i.op, _prune(i.body, lifeline), i.budget)
        return EMPTY
    if i.op == "alt":
        left_ok, right_ok = avoids(i.left, lifeline), avoids(i.right, lifeline)
        if left_ok and right_ok:
            return Binary("alt", _prune(i.left, lifeline), _prune(i.right, lifeline))
        return _prune(i.left if left_ok else i.right, lifeline)
    return Binary(i.op, _prune(i.left, lifeline), _prune(i.right, lifeline))


def prune(i: Term, lifeline: str) -> Term:
    """Keep exactly the executions of ``i`` that never touch ``lifeline``."""
    if not avoids(i, lifeline):
        raise PruneUndefined(f"{to_text(i)} cannot avoid lifeline {lifeline!r}")
    return _prune(i, lifeline)


def _chi(i: Term, p: Position) -> tuple[Term, Action]:
    if isinstance(i, Leaf):
        return EMPTY, i.action
    head, rest = p[0], p[1:]
    if isinstance(i, Loop):
        body_after, act = _chi(i.body, rest)
        residual = Loop(i.op, i.body, None if i.budget is None else i.budget - 1)
        return Binary(i.op, body_after, residual), act
    if head == 1:
        left_after, act = _chi(i.left, rest)
        if i.op == "alt":
            return left_after, act
        return Binary(i.op, left_after, i.right), act
    right_after, act = _chi(i.right, rest)
    if i.op in ("alt", "strict"):
        return right_after, act
    if i.op == "seq":
        return Binary("seq", _prune(i.left, act.lifeline), right_after), act
    return Binary("par", i.left, right_after), act


def execute(i: Term, p: Position, simplified: bool = True) -> tuple[Term, Action]:
    """Execute the frontier action at ``p``; return the residual term and the action.

    With ``simplified`` (the default) the residual is passed through
    :func:`simplify`.
    """
    p = tuple(p)
    if p not in frontier(i):
        raise NotInFrontier(f"position {format_position(p)} is not in the frontier of {to_text(i)}")
    after, act = _chi(i, p)
    return (simplify(after) if simplified else after), act


@lru_cache(maxsize=1 << 16)
def simplify(i: Term) -> Term:
    """Drop ∅ operands of strict/seq/par, everywhere in the term."""
    if isinstance(i, Binary):
        left, right = simplify(i.left), simplify(i.right)
        if i.op != "alt":
            if isinstance(left, Empty):
                return right
            if isinstance(right, Empty):
                return left
        if left is i.left and right is i.right:
            return i
        return Binary(i.op, left, right)
    if isinstance(i, Loop):
        body = simplify(i.body)
        return i if body is i.body else Loop(i.op, body, i.budget)
    return i


def with_loop_budget(i: Term, budget: Optional[int]) -> Term:
    """Copy of ``i`` where every loop carries ``budget`` remaining iterations."""
    if isinstance(i, Binary):
        return Binary(i.op, with_loop_budget(i.left, budget), with_loop_budget(i.right, budget))
    if isinstance(i, Loop):
        return Loop(i.op, with_loop_budget(i.body, budget), budget)
    return i
