"""Colored directed multigraphs over Z^2 or Z/kZ.

A colored graph is a list of directed edges ``(tail, head, color)`` on the
vertices ``0 .. n-1``.  Colors live in an abelian group described by a
:class:`GroupDescriptor`; for ``Z^2`` a color is a pair of ints, for ``Z/kZ``
it is a residue in ``[0, k)``.  Loops and parallel edges are legal.  Edge
order is significant: every greedy algorithm in the package processes edges in
list order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

Color = Union[int, Tuple[int, int]]
Edge = Tuple[int, int, Color]

# |coordinate| bound for Z^2 colors, keeps path sums inside int64
COORD_BOUND = 2**30


class GraphError(ValueError):
    """Malformed colored graph, or a graph handed to the wrong algorithm."""

    def __init__(self, reason: str, edge: int | None = None):
        self.reason = reason
        self.edge = edge
        if edge is None:
            super().__init__(reason)
        else:
            super().__init__(f"edge {edge}: {reason}")


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "z2":
            if self.modulus is not None:
                raise ValueError("Z^2 takes no modulus")
        elif self.kind == "zk":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError(f"Z/kZ needs modulus >= 2, got {self.modulus!r}")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def is_z2(self) -> bool:
        return self.kind == "z2"

    def zero(self) -> Color:
        return (0, 0) if self.kind == "z2" else 0

    def add(self, a: Color, b: Color) -> Color:
        if self.kind == "z2":
            return (a[0] + b[0], a[1] + b[1])
        return (a + b) % self.modulus

    def neg(self, a: Color) -> Color:
        if self.kind == "z2":
            return (-a[0], -a[1])
        return (-a) % self.modulus

    def sub(self, a: Color, b: Color) -> Color:
        return self.add(a, self.neg(b))

    def is_identity(self, a: Color) -> bool:
        if self.kind == "z2":
            return a[0] == 0 and a[1] == 0
        return a == 0

    def check(self, color) -> str | None:
        """Return why ``color`` is not an element of this group, or None."""
        if self.kind == "z2":
            if not (isinstance(color, tuple) and len(color) == 2):
                return "color is not a pair of integers"
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in color):
                return "color is not a pair of integers"
            if any(abs(c) > COORD_BOUND for c in color):
                return f"color coordinate exceeds {COORD_BOUND}"
            return None
        if not isinstance(color, int) or isinstance(color, bool):
            return "color is not an integer residue"
        if not 0 <= color < self.modulus:
            return "color not reduced"
        return None

    def __str__(self) -> str:
        return "Z^2" if self.kind == "z2" else f"Z/{self.modulus}Z"


Z2 = GroupDescriptor("z2")


def zk(k: int) -> GroupDescriptor:
    return GroupDescriptor("zk", k)


@dataclass(frozen=True)
class ColoredGraph:
    """Directed multigraph with one group element per edge."""

    group: GroupDescriptor
    n: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]


def validate(graph: ColoredGraph) -> None:
    """Raise :class:`GraphError` naming the first offending edge, if any."""
    if not isinstance(graph.n, int) or graph.n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {graph.n!r}")
    for eid, edge in enumerate(graph.edges):
        if len(edge) != 3:
            raise GraphError("edge is not a (tail, head, color) triple", eid)
        tail, head, color = edge
        for v in (tail, head):
            if not isinstance(v, int) or not 0 <= v < graph.n:
                raise GraphError("endpoint out of range", eid)
        why = graph.group.check(color)
        if why is not None:
            raise GraphError(why, eid)


def require_group(graph: ColoredGraph, kind: str, modulus: int | None = None) -> None:
    validate(graph)
    g = graph.group
    if g.kind != kind or (modulus is not None and g.modulus != modulus):
        want = "Z^2" if kind == "z2" else (f"Z/{modulus}Z" if modulus else "Z/kZ")
        raise GraphError(f"expected a {want}-colored graph, got {g}")


def spanned(subset: Iterable[int], graph: ColoredGraph) -> tuple[int, int, frozenset[int]]:
    """Return ``(n', m', vertices)`` for the edges in ``subset``."""
    edges = set(subset)
    verts = set()
    for eid in edges:
        tail, head, _ = graph.edges[eid]
        verts.add(tail)
        verts.add(head)
    return len(verts), len(edges), frozenset(verts)


def subgraph(subset: Iterable[int], graph: ColoredGraph) -> tuple[ColoredGraph, dict[int, int]]:
    """Colored subgraph on the spanned vertices plus the old->new vertex map.

    Vertices keep their relative order and edges keep graph order.
    """
    eids = sorted(set(subset))
    _, _, verts = spanned(eids, graph)
    relabel = {v: i for i, v in enumerate(sorted(verts))}
    edges = tuple(
        (relabel[t], relabel[h], c) for t, h, c in (graph.edges[e] for e in eids)
    )
    return ColoredGraph(graph.group, len(relabel), edges), relabel


def restrict(graph: ColoredGraph, subset: Iterable[int]) -> ColoredGraph:
    """Same vertex set, only the edges in ``subset`` (graph order kept)."""
    keep = set(subset)
    return ColoredGraph(
        graph.group, graph.n, tuple(e for i, e in enumerate(graph.edges) if i in keep)
    )


@dataclass(frozen=True)
class Component:
    """A rigid component: its vertex set and the edge ids it spans."""

    vertices: frozenset[int]
    edges: frozenset[int]

    def as_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "edges": sorted(self.edges)}


ComponentReport = list  # list[Component], sorted by smallest vertex


def sort_components(comps: Iterable[Component]) -> list[Component]:
    return sorted(comps, key=lambda c: (min(c.vertices), sorted(c.vertices)))
