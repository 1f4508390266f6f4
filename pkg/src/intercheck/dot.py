"""DOT (Graphviz) output for terms, execution trees and analysis graphs.

Node identifiers are derived from positions or traversal order, so the same
input always renders to the same bytes.
"""

from __future__ import annotations

from .analysis import AnalysisGraph, Coverage, Pair, Sink, Step
from .explore import ExecutionTree
from .interaction import Binary, Empty, Leaf, Loop, Term, format_position, to_text

_SINK_COLORS = {
    Coverage.COV: "palegreen",
    Coverage.UNCOV: "lightcoral",
    Coverage.TOO_SHORT: "khaki",
    Coverage.OUT: "lightcoral",
    Coverage.LACK_OBS: "lightblue",
}


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _node_label(t: Term) -> str:
    if isinstance(t, Empty):
        return "∅"
    if isinstance(t, Leaf):
        return str(t.action)
    if isinstance(t, Binary):
        return t.op
    return f"loop_{t.op}"


def term_to_dot(term: Term, name: str = "interaction") -> str:
    lines = [f"digraph {_q(name)} {{", "  node [shape=plaintext];"]

    def walk(t, p):
        nid = "n_" + (format_position(p) if p else "e")
        lines.append(f"  {nid} [label={_q(_node_label(t))}];")
        kids = []
        if isinstance(t, Binary):
            kids = [(t.left, p + (1,)), (t.right, p + (2,))]
        elif isinstance(t, Loop):
            kids = [(t.body, p + (1,))]
        for child, cp in kids:
            cid = walk(child, cp)
            lines.append(f"  {nid} -> {cid};")
        return nid

    walk(term, ())
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: ExecutionTree, name: str = "execution") -> str:
    lines = [f"digraph {_q(name)} {{", "  node [shape=box, fontname=monospace];"]
    counter = 0

    def walk(node):
        nonlocal counter
        nid = f"t{counter}"
        counter += 1
        style = ", peripheries=2" if node.accepting else ""
        lines.append(f"  {nid} [label={_q(to_text(node.term))}{style}];")
        for p, act, child in node.children:
            cid = walk(child)
            lines.append(f"  {nid} -> {cid} [label={_q(f'{act}@{format_position(p)}')}];")
        return nid

    walk(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(graph: AnalysisGraph, name: str = "analysis") -> str:
    lines = [f"digraph {_q(name)} {{", "  node [fontname=monospace];"]
    for k, v in enumerate(graph.vertices):
        if isinstance(v, Pair):
            label = f"{to_text(v.term)}\n{v.mu}"
            lines.append(f"  v{k} [shape=box, label={_q(label)}];")
        else:
            lines.append(f"  v{k} [shape=box, style=filled, fillcolor={_SINK_COLORS[v]}, "
                         f"label={_q(v.value)}];")
    for s, d, label in graph.edges:
        if isinstance(label, Step):
            text = f"{label.action}@{format_position(label.position)}"
        else:
            assert isinstance(label, Sink)
            text = label.rule
        lines.append(f"  v{s} -> v{d} [label={_q(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_dot(subject) -> str:
    if isinstance(subject, Term):
        return term_to_dot(subject)
    if isinstance(subject, ExecutionTree):
        return tree_to_dot(subject)
    if isinstance(subject, AnalysisGraph):
        return graph_to_dot(subject)
    raise TypeError(f"cannot render {type(subject).__name__} as DOT")
