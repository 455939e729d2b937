"""Brute-force definitional checkers.

Everything here works straight from the counting definitions by enumerating
edge subsets as bitmasks, and decides cycle images by walking cycles
explicitly.  Nothing in this module touches the pebble game or the LCA
machinery, so it can serve as ground truth for both.

Subset tables are built with numpy: a subset ``S`` (bit ``e`` set iff edge
``e`` is in ``S``) is *bad* when some subset of ``S`` breaks the family's
count.  ``S`` is sparse iff it is not bad, and the family rank of ``S`` is the
largest sparse subset inside it.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .colored import (
    Z2,
    ColoredGraph,
    Component,
    GroupDescriptor,
    sort_components,
    zk,
)

DEFAULT_BOUND = 20


class OracleBoundError(ValueError):
    pass


def oracle_bound() -> int:
    raw = os.environ.get("RIGIDKIT_ORACLE_BOUND")
    return int(raw) if raw else DEFAULT_BOUND


@dataclass(frozen=True)
class SparsityFamily:
    """A hereditary count ``m' <= 2n' - ell``; colored families tighten it
    to ``m' <= 2n' - 3`` on subgraphs with trivial image."""

    name: str
    ell: int
    group: GroupDescriptor | None = None

    @property
    def colored(self) -> bool:
        return self.group is not None

    def __str__(self) -> str:
        return self.name if self.group is None else f"{self.name}({self.group})"


LAMAN = SparsityFamily("laman", 3)
TWO_TWO = SparsityFamily("two-two", 2)
TWO_ONE = SparsityFamily("two-one", 1)


def ross(group: GroupDescriptor = Z2) -> SparsityFamily:
    return SparsityFamily("ross", 2, group)


def cone_laman(k: int) -> SparsityFamily:
    return SparsityFamily("cone-laman", 1, zk(k))


def pebble_family(ell: int) -> SparsityFamily:
    return {1: TWO_ONE, 2: TWO_TWO, 3: LAMAN}[ell]


# -- cycle images by explicit walking -------------------------------------

def walk_trivial(graph: ColoredGraph, edges: Iterable[int]) -> bool:
    """Decide triviality by walking every fundamental cycle edge by edge."""
    grp = graph.group
    eids = list(edges)
    adj: dict[int, list[int]] = {}
    for e in eids:
        t, h, _ = graph.edges[e]
        adj.setdefault(t, []).append(e)
        adj.setdefault(h, []).append(e)
    up: dict[int, int] = {}      # vertex -> tree edge towards its root
    used = set()
    for start in sorted(adj):
        if start in up:
            continue
        up[start] = -1
        todo = deque([start])
        while todo:
            u = todo.popleft()
            for e in adj[u]:
                t, h, _ = graph.edges[e]
                w = h if t == u else t
                if w not in up:
                    up[w] = e
                    used.add(e)
                    todo.append(w)

    def path_to_root(v):
        path = [v]
        while up[path[-1]] != -1:
            t, h, _ = graph.edges[up[path[-1]]]
            path.append(h if t == path[-1] else t)
        return path

    for e in eids:
        if e in used:
            continue
        i, j, g = graph.edges[e]
        pi, pj = path_to_root(i), path_to_root(j)
        on_j = set(pj)
        meet = next(v for v in pi if v in on_j)
        # cycle: i -> j along e, then j up to meet, then meet down to i
        total = g
        for a, b in zip(pj, pj[1:pj.index(meet) + 1]):
            total = grp.add(total, _step(graph, up[a], a, b))
        down = pi[:pi.index(meet) + 1][::-1]
        for a, b in zip(down, down[1:]):
            total = grp.add(total, _step(graph, up[b], a, b))
        if not grp.is_identity(total):
            return False
    return True


def _step(graph: ColoredGraph, e: int, a: int, b: int):
    t, h, c = graph.edges[e]
    return c if (t, h) == (a, b) else graph.group.neg(c)


def oracle_image_trivial(graph: ColoredGraph, subset: Iterable[int] | None = None) -> bool:
    return walk_trivial(graph, range(graph.m) if subset is None else subset)


# -- subset tables ---------------------------------------------------------

def _bit_or_closure(arr: np.ndarray, m: int) -> np.ndarray:
    """``out[S] = OR of arr[T] over T subset of S``."""
    out = arr.copy()
    for e in range(m):
        view = out.reshape(-1, 2, 1 << e)
        view[:, 1, :] |= view[:, 0, :]
    return out


class OracleGraph:
    """Subset tables for one graph, built lazily per family."""

    def __init__(self, graph: ColoredGraph, bound: int | None = None):
        bound = oracle_bound() if bound is None else bound
        if graph.m > bound:
            raise OracleBoundError(
                f"{graph.m} edges exceed the exhaustive bound of {bound}")
        self.graph = graph
        m = self.m = graph.m
        N = 1 << m
        self.verts = sorted({v for t, h, _ in graph.edges for v in (t, h)})
        loc = {v: i for i, v in enumerate(self.verts)}
        pop = np.zeros(N, dtype=np.int16)
        vm = np.zeros(N, dtype=np.uint64)
        for e, (t, h, _) in enumerate(graph.edges):
            emask = np.uint64((1 << loc[t]) | (1 << loc[h]))
            view_p = pop.reshape(-1, 2, 1 << e)
            view_p[:, 1, :] = view_p[:, 0, :] + 1
            view_v = vm.reshape(-1, 2, 1 << e)
            view_v[:, 1, :] = view_v[:, 0, :] | emask
        self.pop = pop
        self.vmask = vm
        self.nspan = np.bitwise_count(vm).astype(np.int16)
        self._trivial: dict[int, bool] = {}
        self._tables: dict[SparsityFamily, tuple] = {}

    def trivial(self, mask: int) -> bool:
        hit = self._trivial.get(mask)
        if hit is None:
            hit = walk_trivial(self.graph, [e for e in range(self.m) if mask >> e & 1])
            self._trivial[mask] = hit
        return hit

    def tables(self, family: SparsityFamily):
        """``(bad, rank)`` arrays over all subsets."""
        cached = self._tables.get(family)
        if cached is not None:
            return cached
        pop, nsp = self.pop, self.nspan
        hard = pop > 2 * nsp - family.ell
        hard[0] = False
        if family.colored:
            window = (pop > 2 * nsp - 3) & ~hard
            window[0] = False
            todo = np.flatnonzero(window & ~_bit_or_closure(hard, self.m))
            viol = hard.copy()
            for s in todo.tolist():
                if self.trivial(s):
                    viol[s] = True
        else:
            viol = hard
        bad = _bit_or_closure(viol, self.m)
        rank = np.where(bad, -1, pop).astype(np.int16)
        for e in range(self.m):
            view = rank.reshape(-1, 2, 1 << e)
            np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
        self._tables[family] = (bad, rank)
        return bad, rank

    def full(self) -> int:
        return (1 << self.m) - 1

    def is_sparse(self, family, mask: int | None = None) -> bool:
        bad, _ = self.tables(family)
        return not bad[self.full() if mask is None else mask]

    def rank(self, family, mask: int | None = None) -> int:
        _, rank = self.tables(family)
        return int(rank[self.full() if mask is None else mask])

    def circuits(self, family, within: int | None = None) -> list[int]:
        """Minimal non-sparse edge subsets (as bitmasks)."""
        bad, _ = self.tables(family)
        sub_bad = np.zeros_like(bad)
        for e in range(self.m):
            src = bad.reshape(-1, 2, 1 << e)[:, 0, :]
            dst = sub_bad.reshape(-1, 2, 1 << e)
            dst[:, 1, :] |= src
        minimal = np.flatnonzero(bad & ~sub_bad).tolist()
        if within is not None:
            minimal = [c for c in minimal if c & ~within == 0]
        return minimal

    def bases(self, family, within: int | None = None) -> list[int]:
        """All maximal sparse subsets of ``within`` (default: every edge)."""
        within = self.full() if within is None else within
        bad, rank = self.tables(family)
        r = int(rank[within])
        idx = np.arange(1 << self.m)
        sel = (~bad) & (self.pop == r) & ((idx & ~within) == 0)
        return np.flatnonzero(sel).tolist()

    def tight_vertex_sets(self, family) -> list[int]:
        bad, _ = self.tables(family)
        sel = (~bad) & (self.pop >= 1) & (self.pop == 2 * self.nspan - family.ell)
        return sorted(set(self.vmask[sel].tolist()))

    def components(self, family) -> list[Component]:
        tight = self.tight_vertex_sets(family)
        maximal = [v for v in tight if not any(v != w and v & w == v for w in tight)]
        out = []
        for vmask in maximal:
            verts = frozenset(v for i, v in enumerate(self.verts) if vmask >> i & 1)
            edges = frozenset(
                e for e, (t, h, _) in enumerate(self.graph.edges)
                if t in verts and h in verts)
            out.append(Component(verts, edges))
        return sort_components(out)


def mask_of(edges: Iterable[int]) -> int:
    out = 0
    for e in edges:
        out |= 1 << e
    return out


def edges_of(mask: int) -> frozenset[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def oracle_is_sparse(graph: ColoredGraph, family: SparsityFamily, bound: int | None = None) -> bool:
    return OracleGraph(graph, bound).is_sparse(family)


def oracle_is_tight(graph: ColoredGraph, family: SparsityFamily, bound: int | None = None) -> bool:
    return graph.m == 2 * graph.n - family.ell and oracle_is_sparse(graph, family, bound)


def oracle_max_independent(graph: ColoredGraph, family: SparsityFamily, bound: int | None = None) -> int:
    return OracleGraph(graph, bound).rank(family)


def oracle_components(graph: ColoredGraph, family: SparsityFamily, bound: int | None = None) -> list[Component]:
    return OracleGraph(graph, bound).components(family)
