"""Command-line entry point: ``intercheck {check,explore,draw,gen-sat}``.

Exit codes of ``check``: 0 Pass, 1 Fail, 2 WeakPass, 3 Inconc.  Usage and
parse errors exit with 64, an exhausted node budget with 65.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import Mode, SearchConfig, Verdict, analysis_graph, analyze, omega
from .dot import render_dot
from .errors import BudgetExhausted, ParseError, TooLarge
from .explore import ExplorationBound, accepted_traces, explore_tree
from .satred import brute_force_1in3, parse_dimacs, reduce
from .syntax import format_model, format_multitrace, parse_model, parse_multitrace
from .trace import trace_str

EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.WEAK_PASS: 2, Verdict.INCONC: 3}
EXIT_USAGE = 64
EXIT_BUDGET = 65


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would read as WeakPass
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _cmd_check(args) -> int:
    sig, term = parse_model(_read(args.model))
    mu = parse_multitrace(_read(args.trace), sig)
    mode = Mode.EXTENDED if args.extended else Mode.STANDARD
    cfg = SearchConfig(strategy=args.search, memoize=not args.no_memo, node_budget=args.budget)
    result = analyze(term, mu, cfg, mode)
    print(result.verdict.value)
    if args.witness and result.witness is not None:
        print(f"witness: {trace_str(result.witness)}")
    if args.dot_out:
        graph = analysis_graph(term, mu, mode, memoize=not args.no_memo, node_budget=args.budget)
        _write(args.dot_out, render_dot(graph))
    return EXIT_CODES[result.verdict]


def _cmd_explore(args) -> int:
    _, term = parse_model(_read(args.model))
    bound = ExplorationBound(args.loop_bound, args.max_len)
    traces = accepted_traces(term, bound)
    print(f"{len(traces)} accepted trace(s)")
    if args.list_traces:
        for t in sorted(traces, key=lambda t: (len(t), [str(a) for a in t])):
            print(trace_str(t))
    if args.dot_out:
        _write(args.dot_out, render_dot(explore_tree(term, bound)))
    return 0


def _cmd_draw(args) -> int:
    _, term = parse_model(_read(args.model))
    text = render_dot(term)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_gen_sat(args) -> int:
    phi = parse_dimacs(_read(args.formula))
    term, mu, sig = reduce(phi)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    _write(str(out / "model.isd"), format_model(sig, term))
    _write(str(out / "trace.mtr"), format_multitrace(mu))
    rho = brute_force_1in3(phi)
    if rho is None:
        print("oracle: no 1-in-3 assignment")
    else:
        print("oracle: 1-in-3 satisfiable by " + " ".join(f"v{k}={int(b)}" for k, b in rho.items()))
    if not args.no_check:
        print(f"omega: {omega(term, mu).value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="intercheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("check", help="check a multi-trace against a model")
    p.add_argument("model")
    p.add_argument("trace")
    p.add_argument("--extended", action="store_true",
                   help="use the Pass/WeakPass/Inconc/Fail verdicts")
    p.add_argument("--search", choices=("dfs", "bfs"), default="dfs")
    p.add_argument("--no-memo", action="store_true", help="do not merge identical vertices")
    p.add_argument("--budget", type=int, metavar="N", help="maximum number of expanded vertices")
    p.add_argument("--dot-out", metavar="PATH", help="write the full analysis graph as DOT")
    p.add_argument("--witness", action="store_true", help="print the path deciding the verdict")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("explore", help="enumerate accepted traces of a model")
    p.add_argument("model")
    p.add_argument("--loop-bound", type=int, default=1, metavar="K",
                   help="repetitions allowed per loop instance after its first iteration")
    p.add_argument("--max-len", type=int, metavar="N")
    p.add_argument("--dot-out", metavar="PATH", help="write the execution tree as DOT")
    p.add_argument("--list-traces", action="store_true")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("draw", help="render the interaction term as DOT")
    p.add_argument("model")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=_cmd_draw)

    p = sub.add_parser("gen-sat", help="build a membership instance from a 3-CNF formula")
    p.add_argument("formula")
    p.add_argument("outdir")
    p.add_argument("--no-check", action="store_true", help="skip running the analysis")
    p.set_defaults(func=_cmd_gen_sat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "budget", None) is not None and args.budget < 1:
            raise _UsageError("--budget must be >= 1")
        if getattr(args, "loop_bound", 0) < 0:
            raise _UsageError("--loop-bound must be >= 0")
        return args.func(args)
    except (_UsageError, ParseError, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
