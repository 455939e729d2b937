"""Linear-time test for a trivial cycle image.

A BFS spanning forest is rooted at the lowest-index vertex of every
component.  Each vertex ``v`` gets a potential ``sigma[v]``: the signed color
sum along the tree path from its root.  For a non-tree edge ``(i, j, g)`` with
least common ancestor ``a`` the fundamental cycle, crossed from ``i`` to
``j``, has image ``(sigma[i] - sigma[a]) + g - (sigma[j] - sigma[a])``.  The
graph has trivial image iff every such value is the identity.

The BFS itself runs in scipy from a virtual vertex joined to every
component's lowest vertex; potentials and depths are then filled in by
pointer jumping.  LCA queries use an Euler tour with a sparse-table range
minimum (``O(n log n)`` build, ``O(1)`` query), built on first use.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .colored import Color, ColoredGraph


class ForestIndex:
    """Rooted spanning forest with per-vertex potentials and an LCA index.

    ``vertices`` lists the graph vertices covered (all of them when the
    forest was built for the whole graph); every per-vertex array below is
    indexed by position in that list.
    """

    def __init__(self, graph: ColoredGraph, edges: Sequence[int] | None = None,
                 reverse: bool = False):
        self.group = graph.group
        if edges is None:
            eids = np.arange(graph.m, dtype=np.int64)
            self.vertices = None
            nv = graph.n
        else:
            eids = np.asarray(sorted(set(edges)), dtype=np.int64)
            verts = sorted({v for e in eids.tolist() for v in graph.edges[e][:2]})
            self.vertices = verts
            nv = len(verts)
        self.nv = nv
        self.edge_ids = eids
        m = len(eids)

        # local endpoints and color components
        if self.vertices is None:
            local = None
        else:
            local = {v: i for i, v in enumerate(self.vertices)}
        self._local = local
        sel = [graph.edges[e] for e in eids.tolist()]
        if local is None:
            tails = [t for t, _, _ in sel]
            heads = [h for _, h, _ in sel]
        else:
            tails = [local[t] for t, _, _ in sel]
            heads = [local[h] for _, h, _ in sel]
        z2 = self.group.is_z2
        if z2:
            cx = [c[0] for _, _, c in sel]
            cy = [c[1] for _, _, c in sel]
        else:
            cx = [c for _, _, c in sel]
            cy = None
        self._tails = np.asarray(tails, dtype=np.int64)
        self._heads = np.asarray(heads, dtype=np.int64)
        self._cx = np.asarray(cx, dtype=np.int64)
        self._cy = np.asarray(cy, dtype=np.int64) if z2 else None

        # adjacency in edge-list order (entry 2k = edge k seen from its tail)
        src = np.empty(2 * m, dtype=np.int64)
        dst = np.empty(2 * m, dtype=np.int64)
        src[0::2], src[1::2] = self._tails, self._heads
        dst[0::2], dst[1::2] = self._heads, self._tails
        order = np.argsort(src, kind="stable")
        if reverse:
            # scan every adjacency list back to front
            order = order[np.lexsort((-np.arange(2 * m), src[order]))]
        a_src, a_dst, a_eid = src[order], dst[order], order // 2

        # BFS from a virtual vertex `nv` whose neighbours are the lowest vertex
        # of every component; inside a component the tree is the plain BFS tree
        ncomp, label = connected_components(
            csr_matrix((np.ones(2 * m), (src, dst)), shape=(nv, nv)), directed=True,
            connection="weak") if nv else (0, np.zeros(0, np.int64))
        roots = np.full(ncomp, nv, dtype=np.int64)
        np.minimum.at(roots, label, np.arange(nv))
        roots.sort()
        indptr = np.zeros(nv + 2, dtype=np.int64)
        indptr[1:nv + 1] = np.cumsum(np.bincount(a_src, minlength=nv))
        indptr[nv + 1] = indptr[nv] + ncomp
        indices = np.concatenate([a_dst, roots])
        graph_csr = csr_matrix((np.ones(len(indices)), indices, indptr),
                               shape=(nv + 1, nv + 1))
        bfs, pred = breadth_first_order(graph_csr, nv, directed=True,
                                        return_predecessors=True)
        bfs = bfs[1:]
        parent = pred[:nv].astype(np.int64)
        is_root = parent == nv
        parent[is_root] = -1

        # tree edge of a child: first entry of its parent's list pointing at it
        hit = np.flatnonzero(parent[a_dst] == a_src)
        child, first_hit = np.unique(a_dst[hit], return_index=True)
        pedge = np.full(nv, -1, dtype=np.int64)
        pedge[child] = a_eid[hit[first_hit]]
        toward_root = np.zeros(nv, dtype=bool)
        toward_root[child] = self._tails[pedge[child]] == child

        sign = np.where(toward_root, -1, 1)
        sx = np.zeros(nv, dtype=np.int64)
        sx[child] = sign[child] * self._cx[pedge[child]]
        sy = None
        if z2:
            sy = np.zeros(nv, dtype=np.int64)
            sy[child] = sign[child] * self._cy[pedge[child]]
        depth = (~is_root).astype(np.int64)
        anc = np.where(is_root, np.arange(nv), parent)
        # pointer jumping; each vertex holds the sum up to anc[v], roots hold 0
        while not np.array_equal(anc, anc[anc]):
            sx += sx[anc]
            if z2:
                sy += sy[anc]
            depth += depth[anc]
            anc = anc[anc]
        if not z2:
            sx %= self.group.modulus

        self.parent = parent
        self.parent_edge = pedge
        self.toward_root = toward_root
        self.depth = depth
        self.root = anc
        self._sx = sx
        self._sy = sy
        tree = np.zeros(m, dtype=bool)
        tree[pedge[child]] = True
        self._tree_mask = tree
        self._bfs = bfs
        self._table = None

    # -- LCA machinery -------------------------------------------------
    def _build_euler(self) -> None:
        """Euler tour over the BFS forest plus a sparse table on its depths."""
        nv = self.nv
        bfs = self._bfs
        par = self.parent[bfs]
        kids_of = bfs[par >= 0]
        kid_par = par[par >= 0]
        order = np.argsort(kid_par, kind="stable")   # children in BFS order
        kids = kids_of[order].tolist()
        cstart = np.searchsorted(kid_par[order], np.arange(nv + 1)).tolist()
        ptr = cstart[:-1]
        euler: list[int] = []
        first = [0] * nv
        for r in np.flatnonzero(self.parent < 0).tolist():
            first[r] = len(euler)
            euler.append(r)
            stack = [r]
            while stack:
                u = stack[-1]
                p = ptr[u]
                if p < cstart[u + 1]:
                    ptr[u] = p + 1
                    c = kids[p]
                    first[c] = len(euler)
                    euler.append(c)
                    stack.append(c)
                else:
                    stack.pop()
                    if stack:
                        euler.append(stack[-1])
        self.euler = np.asarray(euler, dtype=np.int32)
        self.first = np.asarray(first, dtype=np.int64)
        depth_at = self.depth.astype(np.int32)[self.euler]
        self._depth_at = depth_at
        L = len(euler)
        table = [np.arange(L, dtype=np.int32)]
        k = 1
        while (1 << k) <= L:
            prev = table[-1]
            half = 1 << (k - 1)
            width = L - (1 << k) + 1
            left = prev[:width]
            right = prev[half:half + width]
            table.append(np.where(depth_at[left] <= depth_at[right], left, right))
            k += 1
        self._table = table

    def _loc(self, v: int) -> int:
        if self._local is None:
            if not 0 <= v < self.nv:
                raise ValueError(f"vertex {v} not in forest")
            return v
        try:
            return self._local[v]
        except KeyError:
            raise ValueError(f"vertex {v} not in forest") from None

    def _glob(self, v: int) -> int:
        return v if self.vertices is None else self.vertices[v]

    def _lca_local(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        if self._table is None:
            self._build_euler()
        lo = self.first[i]
        hi = self.first[j]
        lo, hi = np.minimum(lo, hi), np.maximum(lo, hi)
        span = hi - lo + 1
        k = np.floor(np.log2(span)).astype(np.int64)
        out = np.empty(len(lo), dtype=np.int64)
        for level in np.unique(k).tolist():
            sel = k == level
            tab = self._table[level]
            a = tab[lo[sel]]
            b = tab[hi[sel] - (1 << level) + 1]
            best = np.where(self._depth_at[a] <= self._depth_at[b], a, b)
            out[sel] = self.euler[best]
        return out

    def lca(self, i: int, j: int) -> int:
        li, lj = self._loc(i), self._loc(j)
        if self.root[li] != self.root[lj]:
            raise ValueError(f"vertices {i} and {j} lie in different components")
        a = self._lca_local(np.array([li]), np.array([lj]))[0]
        return self._glob(int(a))

    # -- potentials ----------------------------------------------------
    def sigma(self, v: int) -> Color:
        lv = self._loc(v)
        if self.group.is_z2:
            return (int(self._sx[lv]), int(self._sy[lv]))
        return int(self._sx[lv])

    def roots(self) -> list[int]:
        return [self._glob(v) for v in np.flatnonzero(self.parent < 0).tolist()]

    def component_of(self, v: int) -> int:
        return self._glob(self.root[self._loc(v)])

    def non_tree_edges(self) -> list[int]:
        return self.edge_ids[~self._tree_mask].tolist()

    def tree_edges(self) -> list[int]:
        return self.edge_ids[self._tree_mask].tolist()

    def non_tree_images(self):
        """Images of every fundamental cycle, as arrays aligned with
        :meth:`non_tree_edges` (``(x, y)`` for Z^2, ``(r, None)`` for Z/kZ)."""
        mask = ~self._tree_mask
        i = self._tails[mask]
        j = self._heads[mask]
        if len(i) == 0:
            empty = np.zeros(0, dtype=np.int64)
            return empty, (empty if self.group.is_z2 else None)
        a = self._lca_local(i, j)
        x = (self._sx[i] - self._sx[a]) + self._cx[mask] - (self._sx[j] - self._sx[a])
        if self.group.is_z2:
            y = (self._sy[i] - self._sy[a]) + self._cy[mask] - (self._sy[j] - self._sy[a])
            return x, y
        return x % self.group.modulus, None


def build_forest(graph: ColoredGraph, edges: Iterable[int] | None = None,
                 reverse: bool = False) -> ForestIndex:
    """BFS forest rooted at the lowest vertex of each component.

    With ``edges`` given, the forest covers only the vertices those edges
    span.  ``reverse`` scans each adjacency list back to front, which gives a
    different (equally valid) forest.
    """
    return ForestIndex(graph, None if edges is None else list(edges), reverse)


def lca(index: ForestIndex, i: int, j: int) -> int:
    return index.lca(i, j)


def fundamental_cycle_image(index: ForestIndex, edge: tuple) -> Color:
    """Image of the cycle closed by ``edge = (i, j, color)``, crossed i -> j."""
    i, j, g = edge
    a = index.lca(i, j)
    grp = index.group
    up_i = grp.sub(index.sigma(i), index.sigma(a))
    up_j = grp.sub(index.sigma(j), index.sigma(a))
    return grp.sub(grp.add(up_i, g), up_j)


def _all_identity(x: np.ndarray, y: np.ndarray | None) -> bool:
    if y is None:
        return not x.any()
    return not (x.any() or y.any())


# below this many edges the array setup costs more than it saves
SMALL = 64


def _trivial_small(graph: ColoredGraph, eids: list[int]) -> bool:
    grp = graph.group
    adj: dict[int, list[int]] = {}
    for e in eids:
        t, h, _ = graph.edges[e]
        adj.setdefault(t, []).append(e)
        adj.setdefault(h, []).append(e)
    sigma: dict[int, Color] = {}
    tree = set()
    for r in sorted(adj):
        if r in sigma:
            continue
        sigma[r] = grp.zero()
        queue = [r]
        for u in queue:
            for e in adj[u]:
                t, h, c = graph.edges[e]
                w = h if t == u else t
                if w not in sigma:
                    sigma[w] = grp.add(sigma[u], c) if t == u else grp.sub(sigma[u], c)
                    tree.add(e)
                    queue.append(w)
    for e in eids:
        if e not in tree:
            t, h, c = graph.edges[e]
            if not grp.is_identity(grp.sub(grp.add(sigma[t], c), sigma[h])):
                return False
    return True


def is_trivial_image(graph: ColoredGraph, subset: Iterable[int] | None = None,
                     reverse: bool = False, method: str = "auto") -> bool:
    """True iff every cycle in the (sub)graph maps to the identity.

    ``method`` is ``"auto"``, ``"lca"`` or ``"small"``.  Small inputs skip the
    LCA index under ``"auto"``: with both potentials measured from the same
    root the ``sigma[a]`` terms cancel.
    """
    if method not in ("auto", "lca", "small"):
        raise ValueError(f"unknown method {method!r}")
    eids = list(range(graph.m)) if subset is None else sorted(set(subset))
    if not eids:
        return True
    small = len(eids) < SMALL and not reverse if method == "auto" else method == "small"
    if small:
        return _trivial_small(graph, eids)
    index = build_forest(graph, subset, reverse)
    return _all_identity(*index.non_tree_images())


def component_images(graph: ColoredGraph) -> list[tuple[list[int], bool]]:
    """Per connected component: sorted vertex list and whether its image is trivial."""
    index = build_forest(graph)
    x, y = index.non_tree_images()
    nt = index.non_tree_edges()
    bad_roots = set()
    for k, e in enumerate(nt):
        nonzero = x[k] != 0 or (y is not None and y[k] != 0)
        if nonzero:
            bad_roots.add(index.component_of(graph.edges[e][0]))
    comps: dict[int, list[int]] = {}
    for v in range(graph.n):
        comps.setdefault(index.component_of(v), []).append(v)
    return [(vs, r not in bad_roots) for r, vs in sorted(comps.items())]

