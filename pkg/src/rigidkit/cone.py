"""Cone-Laman rigidity for Z/kZ-colored graphs, any k >= 2.

Three pebble games run in parallel.  ``game21`` holds the kept edges;
``game22`` and ``game23`` always hold a (2,2)-basis and a Laman basis of the
kept edges.  For each edge in order:

A. spanned by a (2,1)-component: discard;
B. outside every (2,2)- and every (2,3)-component: keep;
C. outside every (2,2)-component but Laman-spanned: keep iff the fundamental
   Laman circuit has non-trivial image;
D. (2,2)-spanned: take the fundamental (2,2)-circuit ``C`` of the edge and
   keep iff ``C - f`` is Ross-sparse for every edge ``f`` of ``C``.

A lone loop is its own (2,2)-circuit; it is kept iff its color is non-zero.
Every kept edge is offered to all three games.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .colored import ColoredGraph, Component, require_group
from .fixed_lattice import is_ross_sparse_subset
from .gamma import is_trivial_image
from .pebble import PebbleGame

SPAN21 = "span21"
TRIVIAL_LAMAN = "trivial-laman-circuit"
NOT_ROBUST = "circuit-not-ross-robust"


def robust_circuit(graph: ColoredGraph, circuit) -> bool:
    """True iff removing any one edge from the (2,2)-circuit leaves a Ross graph."""
    circuit = sorted(circuit)
    if len(circuit) == 1:
        t, h, c = graph.edges[circuit[0]]
        if t == h:
            return not graph.group.is_identity(c)
    return all(
        is_ross_sparse_subset(graph, [e for e in circuit if e != f]) for f in circuit
    )


@dataclass
class ConeRun:
    graph: ColoredGraph
    game21: PebbleGame = field(init=False)
    game22: PebbleGame = field(init=False)
    game23: PebbleGame = field(init=False)
    kept: list[int] = field(default_factory=list)
    discarded: list[tuple[int, str]] = field(default_factory=list)

    def __post_init__(self):
        n = self.graph.n
        self.game21 = PebbleGame(1, n)
        self.game22 = PebbleGame(2, n)
        self.game23 = PebbleGame(3, n)

    def _keep(self, eid: int) -> bool:
        t, h, _ = self.graph.edges[eid]
        ok = self.game21.try_insert(t, h, eid)
        assert ok, "edge outside every (2,1)-component was rejected"
        self.game22.try_insert(t, h, eid)
        self.game23.try_insert(t, h, eid)
        self.kept.append(eid)
        return True

    def step(self, eid: int) -> bool:
        t, h, _ = self.graph.edges[eid]
        if self.game21.in_component_span(t, h):
            self.discarded.append((eid, SPAN21))
            return False
        if not self.game22.in_component_span(t, h):
            if self.game23.in_component_span(t, h):
                circuit = self.game23.fundamental_circuit(t, h, eid)
                if is_trivial_image(self.graph, circuit):
                    self.discarded.append((eid, TRIVIAL_LAMAN))
                    return False
            return self._keep(eid)
        circuit = self.game22.fundamental_circuit(t, h, eid)
        if not robust_circuit(self.graph, circuit):
            self.discarded.append((eid, NOT_ROBUST))
            return False
        return self._keep(eid)

    def run(self, stop_on_discard: bool = False) -> "ConeRun":
        for eid in range(self.graph.m):
            if not self.step(eid) and stop_on_discard:
                break
        return self

    def components(self) -> list[Component]:
        return self.game21.components()


def _zk(graph: ColoredGraph) -> None:
    require_group(graph, "zk")


def cone_components(graph: ColoredGraph) -> list[Component]:
    _zk(graph)
    return ConeRun(graph).run().components()


def cone_extract(graph: ColoredGraph) -> list[int]:
    _zk(graph)
    return ConeRun(graph).run().kept


def cone_decide(graph: ColoredGraph, minimal: bool = True) -> bool:
    """Is the graph cone-Laman?  ``minimal=False``: does it contain a spanning one?"""
    _zk(graph)
    target = 2 * graph.n - 1
    if not minimal:
        return len(ConeRun(graph).run().kept) == target
    if graph.m != target:
        return False
    run = ConeRun(graph).run(stop_on_discard=True)
    return not run.discarded and len(run.kept) == target
