"""Rigidity of fixed-lattice periodic frameworks (Ross graphs).

A (2,3) game and a (2,2) game run side by side over the edges in order:

A. an edge spanned by a (2,2)-component is discarded;
B. an edge outside every (2,3)-component goes into both games;
C. otherwise its fundamental Laman circuit (probe included) is tested; a
   trivial image discards the edge;
D. a non-trivial image sends the edge into the (2,2) game.

The (2,2) game then holds a maximum Ross-sparse subset and its components are
the rigid components.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .colored import ColoredGraph, Component, require_group, subgraph, validate
from .gamma import is_trivial_image
from .pebble import PebbleGame

SPAN22 = "span22"
TRIVIAL_CIRCUIT = "trivial-circuit-image"


@dataclass
class RossRun:
    graph: ColoredGraph
    game23: PebbleGame = field(init=False)
    game22: PebbleGame = field(init=False)
    kept: list[int] = field(default_factory=list)
    discarded: list[tuple[int, str]] = field(default_factory=list)

    def __post_init__(self):
        self.game23 = PebbleGame(3, self.graph.n)
        self.game22 = PebbleGame(2, self.graph.n)

    @property
    def processed(self) -> int:
        return len(self.kept) + len(self.discarded)

    def step(self, eid: int) -> bool:
        """Process one edge; return whether it was kept."""
        t, h, _ = self.graph.edges[eid]
        if self.game22.in_component_span(t, h):
            self.discarded.append((eid, SPAN22))
            return False
        if not self.game23.in_component_span(t, h):
            self.game23.try_insert(t, h, eid)
            self.game22.try_insert(t, h, eid)
            self.kept.append(eid)
            return True
        circuit = self.game23.fundamental_circuit(t, h, eid)
        if is_trivial_image(self.graph, circuit):
            self.discarded.append((eid, TRIVIAL_CIRCUIT))
            return False
        accepted = self.game22.try_insert(t, h, eid)
        assert accepted, "edge outside every (2,2)-component was rejected"
        self.kept.append(eid)
        return True

    def run(self, stop_on_discard: bool = False, limit: int | None = None) -> "RossRun":
        for eid in range(self.graph.m):
            if limit is not None and self.processed >= limit:
                break
            if not self.step(eid) and stop_on_discard:
                break
        return self

    def components(self) -> list[Component]:
        return self.game22.components()


def run_ross(graph: ColoredGraph, stop_on_discard: bool = False) -> RossRun:
    """Run the Ross pebble game over any colored graph (Z^2 or Z/kZ)."""
    validate(graph)
    return RossRun(graph).run(stop_on_discard)


def _z2(graph: ColoredGraph) -> None:
    require_group(graph, "z2")


def ross_components(graph: ColoredGraph) -> list[Component]:
    _z2(graph)
    return RossRun(graph).run().components()


def ross_extract(graph: ColoredGraph) -> list[int]:
    """Edge ids of a maximum Ross-sparse subset, in processing order."""
    _z2(graph)
    return RossRun(graph).run().kept


def decide_run(graph: ColoredGraph) -> RossRun:
    """Decision run: stops on the first discard and never looks past edge 2n-2."""
    limit = max(2 * graph.n - 2, 0)
    run = RossRun(graph)
    for eid in range(graph.m):
        if eid >= limit:
            break
        if not run.step(eid):
            break
    return run


def ross_decide(graph: ColoredGraph, minimal: bool = True) -> bool:
    """Is the graph a Ross graph?

    With ``minimal=False`` the question becomes whether the graph contains a
    spanning Ross graph, i.e. whether a redundant input is rigid.
    """
    _z2(graph)
    target = 2 * graph.n - 2
    if not minimal:
        return len(RossRun(graph).run().kept) == target
    if graph.m != target:
        return False
    run = decide_run(graph)
    return not run.discarded and len(run.kept) == target


def is_ross_sparse(graph: ColoredGraph) -> bool:
    """Ross sparsity for either group; Z/kZ colors are allowed here."""
    validate(graph)
    if graph.m and graph.m > 2 * graph.n - 2:
        return False
    return not RossRun(graph).run(stop_on_discard=True).discarded


def is_ross_sparse_subset(graph: ColoredGraph, subset) -> bool:
    sub, _ = subgraph(subset, graph)
    return is_ross_sparse(sub)

