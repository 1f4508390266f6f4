"""Shared fixtures for the test-suite: worked examples, an independent
denotational oracle for trace sets, and random interaction generators."""

from __future__ import annotations

import random
from functools import lru_cache

from hypothesis import strategies as st

from intercheck.interaction import EMPTY, Binary, Empty, Leaf, Loop, Term, leaf
from intercheck.syntax import parse_term
from intercheck.trace import Action, Direction, Signature

RUNNING_TEXT = ("seq(loop_seq(seq(strict(a!m1,b?m1),seq(alt(strict(b!m2,c?m2),0),b!m3))),"
             "par(a!m1,strict(c!m4,a?m4)))")
CHOICE_TEXT = "seq(alt(strict(b!m2,c?m2),0),b!m3)"
RUNNING = parse_term(RUNNING_TEXT)
CHOICE = parse_term(CHOICE_TEXT)
RUNNING_SIG = Signature(("a", "b", "c"), ("m1", "m2", "m3", "m4"))
CHOICE_SIG = Signature(("b", "c"), ("m2", "m3"))

LIFELINES = ("a", "b", "c")
MESSAGES = ("m1", "m2", "m3")
RANDOM_SIG = Signature(LIFELINES, MESSAGES)


def T(text: str) -> Term:
    return parse_term(text)


def tr(text: str) -> tuple:
    """``"a!m.b?m"`` -> tuple of actions; ``"eps"`` -> ()."""
    if text in ("", "eps"):
        return ()
    out = []
    for part in text.split("."):
        d = "!" if "!" in part else "?"
        life, msg = part.split(d)
        out.append(Action(life, Direction(d), msg))
    return tuple(out)


# ------------------------------------------------------------------ oracle
# Denotational, length-bounded trace semantics, built only from the meaning
# of each operator on whole traces.  It never touches frontier/prune/execute.

@lru_cache(maxsize=None)
def _interleavings(t1: tuple, t2: tuple) -> frozenset:
    if not t1:
        return frozenset({t2})
    if not t2:
        return frozenset({t1})
    return frozenset({(t1[0],) + r for r in _interleavings(t1[1:], t2)}
                     | {(t2[0],) + r for r in _interleavings(t1, t2[1:])})


@lru_cache(maxsize=None)
def _weak_merges(t1: tuple, t2: tuple) -> frozenset:
    if not t1:
        return frozenset({t2})
    if not t2:
        return frozenset({t1})
    out = {(t1[0],) + r for r in _weak_merges(t1[1:], t2)}
    if all(a.lifeline != t2[0].lifeline for a in t1):
        out |= {(t2[0],) + r for r in _weak_merges(t1, t2[1:])}
    return frozenset(out)


def _compose(op, left, right, n):
    out = set()
    for t1 in left:
        for t2 in right:
            if len(t1) + len(t2) > n:
                continue
            if op == "strict":
                out.add(t1 + t2)
            elif op == "seq":
                out |= _weak_merges(t1, t2)
            else:
                out |= _interleavings(t1, t2)
    return out


@lru_cache(maxsize=None)
def denotation(i: Term, n: int) -> frozenset:
    """All accepted traces of ``i`` with length at most ``n``."""
    if isinstance(i, Empty):
        return frozenset({()})
    if isinstance(i, Leaf):
        return frozenset({(i.action,)}) if n >= 1 else frozenset()
    if isinstance(i, Binary):
        left, right = denotation(i.left, n), denotation(i.right, n)
        if i.op == "alt":
            return left | right
        return frozenset(_compose(i.op, left, right, n))
    # Iterations start in order: the first action of iteration k precedes
    # every action of iteration k+1.  Empty iterations contribute nothing.
    body = [t for t in denotation(i.body, n) if t]
    acc = frozenset({()})
    while True:
        nxt = set()
        for t1 in body:
            rest = _compose(i.op, [t1[1:]], acc, n - 1)
            nxt |= {(t1[0],) + r for r in rest}
        nxt = frozenset({()} | nxt)
        if nxt == acc:
            return acc
        acc = nxt


# --------------------------------------------------------------- generators

def count_loops(i: Term) -> int:
    if isinstance(i, Binary):
        return count_loops(i.left) + count_loops(i.right)
    if isinstance(i, Loop):
        return 1 + count_loops(i.body)
    return 0


def depth(i: Term) -> int:
    if isinstance(i, Binary):
        return 1 + max(depth(i.left), depth(i.right))
    if isinstance(i, Loop):
        return 1 + depth(i.body)
    return 0


def random_action(rng: random.Random) -> Action:
    return Action(rng.choice(LIFELINES), rng.choice(list(Direction)), rng.choice(MESSAGES))


def random_term(rng: random.Random, max_depth: int = 4, max_loops: int = 2) -> Term:
    """Random interaction with depth <= max_depth and at most max_loops loop nodes."""
    loops_left = [max_loops]

    def gen(d):
        if d == 0 or rng.random() < 0.2 + 0.1 * (max_depth - d):
            return EMPTY if rng.random() < 0.15 else leaf(random_action(rng))
        if loops_left[0] > 0 and rng.random() < 0.15:
            loops_left[0] -= 1
            return Loop(rng.choice(("strict", "seq", "par")), gen(d - 1))
        return Binary(rng.choice(("strict", "seq", "alt", "par")), gen(d - 1), gen(d - 1))

    return gen(max_depth)


actions = st.builds(Action, st.sampled_from(LIFELINES), st.sampled_from(list(Direction)),
                    st.sampled_from(MESSAGES))


@st.composite
def terms(draw, max_depth: int = 3, max_loops: int = 1):
    budget = [max_loops]

    def gen(d):
        choices = ["leaf", "empty"]
        if d > 0:
            choices += ["binary", "binary", "binary"]
            if budget[0] > 0:
                choices.append("loop")
        kind = draw(st.sampled_from(choices))
        if kind == "leaf":
            return leaf(draw(actions))
        if kind == "empty":
            return EMPTY
        if kind == "loop":
            budget[0] -= 1
            return Loop(draw(st.sampled_from(("strict", "seq", "par"))), gen(d - 1))
        op = draw(st.sampled_from(("strict", "seq", "alt", "par")))
        return Binary(op, gen(d - 1), gen(d - 1))

    return gen(max_depth)
