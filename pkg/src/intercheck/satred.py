"""1-in-3-SAT to multi-trace membership.

Each clause ``C_j`` gets a lifeline ``l<j>`` and the single message ``m``.
Variable ``v_k`` becomes ``alt(i_vk, i_not_vk)`` where ``i_x`` is the
weak-sequencing of one ``l<j>!m`` per occurrence of literal ``x`` in clause
``C_j`` (clauses in order).  The model is the ``par`` of those alternatives
and the multi-trace emits ``m`` exactly once on every clause lifeline.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional

from .analysis import SearchConfig, Verdict, omega
from .errors import MalformedFormula, TooLarge
from .interaction import EMPTY, Term, alt, leaf, par, seq
from .trace import MultiTrace, Signature, emit

BRUTE_FORCE_LIMIT = 24
MESSAGE = "m"


@dataclass(frozen=True)
class CnfFormula3:
    """``clauses`` are triples of non-zero ints; ``-k`` is the negation of variable ``k``."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 1:
            raise MalformedFormula("at least one variable is required")
        if not self.clauses:
            raise MalformedFormula("at least one clause is required")
        for c in self.clauses:
            if len(c) != 3:
                raise MalformedFormula(f"clause {c} does not have exactly three literals")
            for lit in c:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedFormula(f"literal {lit!r} out of range 1..{self.num_vars}")

    def __str__(self):
        def lit(x):
            return f"v{x}" if x > 0 else f"¬v{-x}"
        return " ∧ ".join("(" + " ∨ ".join(lit(x) for x in c) + ")" for c in self.clauses)


def clause_lifeline(j: int) -> str:
    return f"l{j + 1}"


def reduce(phi: CnfFormula3) -> tuple[Term, MultiTrace, Signature]:
    sig = Signature(tuple(clause_lifeline(j) for j in range(len(phi.clauses))), (MESSAGE,))

    def branch(literal):
        parts = []
        for j, clause in enumerate(phi.clauses):
            parts.extend(leaf(emit(clause_lifeline(j), MESSAGE)) for x in clause if x == literal)
        return seq(*parts) if parts else EMPTY

    alternatives = [alt(branch(k), branch(-k)) for k in range(1, phi.num_vars + 1)]
    term = par(*alternatives)
    mu = MultiTrace(sig, tuple((emit(l, MESSAGE),) for l in sig.lifelines))
    return term, mu, sig


def satisfies_1in3(phi: CnfFormula3, assignment: dict[int, bool]) -> bool:
    for clause in phi.clauses:
        true_lits = sum(1 for x in clause if assignment[abs(x)] == (x > 0))
        if true_lits != 1:
            return False
    return True


def all_1in3_solutions(phi: CnfFormula3):
    if phi.num_vars > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{phi.num_vars} variables exceed the brute-force limit of {BRUTE_FORCE_LIMIT}")
    for values in itertools.product((False, True), repeat=phi.num_vars):
        rho = dict(enumerate(values, start=1))
        if satisfies_1in3(phi, rho):
            yield rho


def brute_force_1in3(phi: CnfFormula3) -> Optional[dict[int, bool]]:
    return next(all_1in3_solutions(phi), None)


def verify_reduction(phi: CnfFormula3, cfg: SearchConfig = SearchConfig()) -> bool:
    term, mu, _ = reduce(phi)
    return (brute_force_1in3(phi) is not None) == (omega(term, mu, cfg) is Verdict.PASS)


def parse_dimacs(text: str) -> CnfFormula3:
    """Read DIMACS CNF restricted to three literals per clause line."""
    header = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line == "%":
            continue
        if line.startswith("p"):
            m = re.fullmatch(r"p\s+cnf\s+(\d+)\s+(\d+)", line)
            if not m or header is not None:
                raise MalformedFormula("bad or repeated header", lineno, 1)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        if header is None:
            raise MalformedFormula("clause before 'p cnf' header", lineno, 1)
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise MalformedFormula(f"non-integer token in {line!r}", lineno, 1) from None
        if not nums or nums[-1] != 0:
            raise MalformedFormula("clause line must end with 0", lineno, 1)
        lits = nums[:-1]
        if len(lits) != 3 or 0 in lits:
            raise MalformedFormula(f"expected exactly three literals, got {len(lits)}", lineno, 1)
        clauses.append(tuple(lits))
    if header is None:
        raise MalformedFormula("missing 'p cnf' header")
    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise MalformedFormula(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula3(num_vars, tuple(clauses))


def to_dimacs(phi: CnfFormula3) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"
