"""Plain-text graph files.

::

    group z2            # or: group zk 3
    n 4
    e 0 1 1 0           # tail head color...
"""
from __future__ import annotations

from pathlib import Path

from .colored import Z2, ColoredGraph, GraphError, validate, zk


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"{what} must be integers") from None


def parse(text: str) -> ColoredGraph:
    group = None
    n = None
    edges = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            lines.append((lineno, body))
    for lineno, tok in lines:
        key = tok[0]
        if group is None:
            if key != "group":
                raise ParseError(lineno, "expected 'group z2' or 'group zk <k>'")
            if tok[1:] == ["z2"]:
                group = Z2
            elif len(tok) == 3 and tok[1] == "zk":
                (k,) = _ints(tok[2:], lineno, "modulus")
                if k < 2:
                    raise ParseError(lineno, "modulus must be at least 2")
                group = zk(k)
            else:
                raise ParseError(lineno, "expected 'group z2' or 'group zk <k>'")
        elif n is None:
            if key != "n" or len(tok) != 2:
                raise ParseError(lineno, "expected 'n <count>'")
            (n,) = _ints(tok[1:], lineno, "vertex count")
            if n < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
        else:
            if key != "e":
                raise ParseError(lineno, f"unknown record {key!r}")
            width = 2 if group.is_z2 else 1
            if len(tok) != 3 + width:
                raise ParseError(lineno, f"edge needs tail, head and {width} color value(s)")
            vals = _ints(tok[1:], lineno, "edge fields")
            color = (vals[2], vals[3]) if group.is_z2 else vals[2]
            edges.append((vals[0], vals[1], color, lineno))
    if group is None:
        raise ParseError(1, "missing 'group' line")
    if n is None:
        raise ParseError(lines[-1][0] if lines else 1, "missing 'n' line")
    graph = ColoredGraph(group, n, tuple(e[:3] for e in edges))
    try:
        validate(graph)
    except GraphError as err:
        raise ParseError(edges[err.edge][3], err.reason) from None
    return graph


def serialize(graph: ColoredGraph) -> str:
    g = graph.group
    out = ["group z2" if g.is_z2 else f"group zk {g.modulus}", f"n {graph.n}"]
    for t, h, c in graph.edges:
        col = f"{c[0]} {c[1]}" if g.is_z2 else str(c)
        out.append(f"e {t} {h} {col}")
    return "\n".join(out) + "\n"


def load(path) -> ColoredGraph:
    return parse(Path(path).read_text())


def dump(graph: ColoredGraph, path) -> None:
    Path(path).write_text(serialize(graph))
