"""Graphviz DOT text for the sigma-tau digraph and for rotation systems."""

from __future__ import annotations

from .perms import all_perms, apply_sigma, apply_tau, format_perm
from .rotation import RotationSystem


def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def digraph_dot(n: int, cover=None) -> str:
    """D(n) with sigma edges solid and tau edges dashed.

    With a ``CycleCover`` the cover's edges are drawn bold.
    """
    chosen = cover.edges() if cover is not None else frozenset()
    chosen_pairs = {(e.tail, e.head) for e in chosen}
    lines = [f"digraph D{n} {{", "  node [shape=plaintext];"]
    perms = all_perms(n)
    for p in perms:
        lines.append(f"  {_quote(format_perm(p))};")
    for p in perms:
        for head, style in ((apply_sigma(p), "solid"), (apply_tau(p), "dashed")):
            attrs = [f"style={style}"]
            if (p, head) in chosen_pairs:
                attrs.append("penwidth=2")
            lines.append(f"  {_quote(format_perm(p))} -> {_quote(format_perm(head))} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rotation_dot(R: RotationSystem, name: str = "R") -> str:
    """Undirected multigraph; each vertex carries its rotation as a ``theta`` attribute."""
    ids = {v: f"v{i}" for i, v in enumerate(R.vertices)}
    lines = [f"graph {_quote(name)} {{"]
    for v in R.vertices:
        theta = " ".join(R.edge_labels.get(e, f"e{e}") + ("+" if s == 0 else "-") for e, s in R.theta[v])
        lines.append(f"  {ids[v]} [label={_quote(v)}, theta={_quote(theta)}];")
    for e in sorted(R.edges):
        a, b = R.edges[e]
        label = R.edge_labels.get(e, f"e{e}")
        lines.append(f"  {ids[a]} -- {ids[b]} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
