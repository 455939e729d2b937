"""The order-three development and the fast cone-Laman path for k = 3.

Base vertex ``i`` lifts to ``3*i + g`` for ``g`` in 0, 1, 2; base edge ``e =
(i, j, c)`` lifts to ``3*e + z`` joining ``(i, z)`` and ``(j, z + c mod 3)``.
The shift ``alpha_z`` adds ``z`` to every layer index, on vertices and on
edges alike, so lifted edge ``3*e + z'`` maps to ``3*e + (z' + z) % 3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .colored import ColoredGraph, Component, require_group, sort_components
from .pebble import PebbleGame

K = 3


@dataclass(frozen=True)
class LiftedSubgraph:
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()


@dataclass(frozen=True)
class Development:
    base: ColoredGraph
    n_lifted: int
    lifted_edges: tuple      # (u, v) per lifted edge id
    edge_fibers: tuple       # base edge -> 3 lifted edge ids
    vertex_fibers: tuple     # base vertex -> 3 lifted vertex ids

    @property
    def m_lifted(self) -> int:
        return len(self.lifted_edges)

    def full(self) -> LiftedSubgraph:
        return LiftedSubgraph(frozenset(range(self.n_lifted)),
                              frozenset(range(self.m_lifted)))

    def lift(self, base_edges: Iterable[int]) -> LiftedSubgraph:
        """Preimage of a base edge set, with the lifted endpoints."""
        edges = frozenset(3 * e + z for e in base_edges for z in range(K))
        verts = frozenset(v for s in edges for v in self.lifted_edges[s])
        return LiftedSubgraph(verts, edges)


def develop(graph: ColoredGraph) -> Development:
    require_group(graph, "zk", K)
    lifted = []
    for i, j, c in graph.edges:
        for z in range(K):
            lifted.append((K * i + z, K * j + (z + c) % K))
    return Development(
        base=graph,
        n_lifted=K * graph.n,
        lifted_edges=tuple(lifted),
        edge_fibers=tuple(tuple(range(K * e, K * e + K)) for e in range(graph.m)),
        vertex_fibers=tuple(tuple(range(K * i, K * i + K)) for i in range(graph.n)),
    )


def alpha_vertex(v: int, z: int) -> int:
    return K * (v // K) + (v % K + z) % K


def alpha_edge(s: int, z: int) -> int:
    return K * (s // K) + (s % K + z) % K


def alpha(sub: LiftedSubgraph, z: int) -> LiftedSubgraph:
    return LiftedSubgraph(frozenset(alpha_vertex(v, z) for v in sub.vertices),
                          frozenset(alpha_edge(s, z) for s in sub.edges))


def project(dev: Development, sub: LiftedSubgraph) -> frozenset[int]:
    """Base edges whose fiber meets the lifted subgraph."""
    return frozenset(s // K for s in sub.edges)


def project_vertices(sub: LiftedSubgraph) -> frozenset[int]:
    return frozenset(v // K for v in sub.vertices)


def orbit(dev: Development, sub: LiftedSubgraph) -> LiftedSubgraph:
    a1, a2 = alpha(sub, 1), alpha(sub, 2)
    return LiftedSubgraph(sub.vertices | a1.vertices | a2.vertices,
                          sub.edges | a1.edges | a2.edges)


def is_symmetric(dev: Development, sub: LiftedSubgraph) -> bool:
    # alpha_2 = alpha_1 twice, so closure under alpha_1 is enough
    return alpha(sub, 1) == sub


def is_automorphism(dev: Development, z: int) -> bool:
    """Does ``alpha_z`` map the lifted edge multiset onto itself?"""
    for s, (u, v) in enumerate(dev.lifted_edges):
        img = dev.lifted_edges[alpha_edge(s, z)]
        if img != (alpha_vertex(u, z), alpha_vertex(v, z)):
            return False
    return True


def lifted_labels(dev: Development, base_edges: Iterable[int]) -> dict[int, int]:
    """Connected-component label of every lifted vertex touched by the lift."""
    sub = dev.lift(base_edges)
    verts = sorted(sub.vertices)
    if not verts:
        return {}
    loc = {v: k for k, v in enumerate(verts)}
    pairs = [dev.lifted_edges[s] for s in sorted(sub.edges)]
    rows = np.array([loc[u] for u, _ in pairs], dtype=np.int64)
    cols = np.array([loc[v] for _, v in pairs], dtype=np.int64)
    adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(verts),) * 2)
    _, labels = connected_components(adj, directed=False)
    return {v: int(labels[k]) for v, k in loc.items()}


@dataclass
class Cone3Run:
    dev: Development
    game: PebbleGame = field(init=False)
    rejected: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.game = PebbleGame(3, self.dev.n_lifted)

    def run(self, stop_on_reject: bool = False) -> "Cone3Run":
        # fibers in base edge order, layers 0, 1, 2 inside a fiber
        for s, (u, v) in enumerate(self.dev.lifted_edges):
            if not self.game.try_insert(u, v, s):
                self.rejected.append(s)
                if stop_on_reject:
                    break
        return self

    def split(self) -> tuple[list[Component], list[LiftedSubgraph]]:
        """Symmetric components projected to the base, and the rest."""
        good, other = [], []
        for comp in self.game.components():
            sub = LiftedSubgraph(comp.vertices, comp.edges)
            if is_symmetric(self.dev, sub):
                good.append(Component(project_vertices(sub), project(self.dev, sub)))
            else:
                other.append(sub)
        return sort_components(good), other


def cone3_components(graph: ColoredGraph):
    """``(components, diagnostics)``; diagnostics lists the non-symmetric
    rigid components of the development."""
    return Cone3Run(develop(graph)).run().split()


def cone3_decide(graph: ColoredGraph) -> bool:
    dev = develop(graph)
    if dev.m_lifted != 2 * dev.n_lifted - 3:
        return False
    return not Cone3Run(dev).run(stop_on_reject=True).rejected


def to_dot(dev: Development) -> str:
    lines = ["graph development {"]
    for v in range(dev.n_lifted):
        lines.append(f'  {v} [label="{v // K}_{v % K}"];')
    for s, (u, v) in enumerate(dev.lifted_edges):
        lines.append(f'  {u} -- {v} [label="{s // K}.{s % K}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lifted_graph(dev: Development) -> ColoredGraph:
    """The development as an identity-colored Z/3Z graph (for the file format)."""
    return ColoredGraph(dev.base.group, dev.n_lifted,
                        tuple((u, v, 0) for u, v in dev.lifted_edges))
