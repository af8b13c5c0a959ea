"""Graphviz text for the color-shift digraph and single color graphs.

Nodes are filled with a palette color for alpha and outlined with one for
beta; the label repeats both as integers.
"""

from __future__ import annotations

from .coloring_model import Instance, color_graph, color_shift

PALETTE = (
    "lightblue", "salmon", "palegreen", "violet", "gold", "orange",
    "cyan", "pink", "khaki", "lightgray", "tan", "plum",
)


def _swatch(c: int) -> str:
    return PALETTE[c % len(PALETTE)]


def _node(inst: Instance, v: int) -> str:
    a, b = inst.alpha[v], inst.beta[v]
    return (f'  {v} [label="{v}\\nalpha={a} beta={b}", style="filled,bold", '
            f'fillcolor="{_swatch(a)}", color="{_swatch(b)}", penwidth=3];')


def shift_dot(inst: Instance) -> str:
    """Color-shift digraph: u -> v when uv is an edge and beta(u) == alpha(v)."""
    lines = ["digraph shift {"]
    lines += [_node(inst, v) for v in range(inst.n)]
    for u, v in sorted(color_shift(inst.graph, inst.alpha, inst.beta)):
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def color_dot(inst: Instance, c: int) -> str:
    """Color graph of ``c``: its vertices and conflict edges."""
    cg = color_graph(inst.graph, inst.alpha, inst.beta, c)
    lines = [f"graph color_{c} {{"]
    lines += [_node(inst, v) for v in sorted(cg.vertices)]
    for u, v in sorted(cg.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(inst: Instance, what: str) -> str:
    """``what`` is ``shift`` or ``color:<c>``."""
    if what == "shift":
        return shift_dot(inst)
    if what.startswith("color:"):
        try:
            c = int(what.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad color in {what!r}") from None
        return color_dot(inst, c)
    raise ValueError(f"unknown export {what!r}; use shift or color:<c>")
