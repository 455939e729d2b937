"""The (2, l) pebble game for l in {1, 2, 3}.

Every vertex starts with two pebbles.  An accepted edge is oriented out of an
endpoint that gives up one pebble, so ``pebbles[v] + outdeg(v) == 2`` always
holds.  An edge ``ij`` can be added iff ``l + 1`` pebbles can be gathered on
``{i, j}``; a pebble is gathered by finding a free pebble along a directed
path and reversing that path.

Besides the accepted orientation the game keeps the registry of maximal tight
vertex sets ("components", ``m' = 2n' - l``) and an ``n x n`` table telling
whether two vertices share a component, which answers span queries in O(1).

Loops are only ever insertable when ``l == 1``: a loop on one vertex spans
``m' = 1 > 2 - l`` otherwise.
"""
from __future__ import annotations

import numpy as np

from .colored import Component, sort_components


class PebbleAuditError(AssertionError):
    pass


class PebbleGame:
    """State of one (2, l) pebble game on vertices ``0 .. n-1``.

    Accepted edges live in slots ``0, 1, ...`` in acceptance order; each slot
    carries the caller's label (the graph edge id for the rigidity
    algorithms).
    """

    # set to True to audit the state after every operation (tests do this)
    AUDIT = False
    audits_run = 0

    def __init__(self, ell: int, n: int):
        if ell not in (1, 2, 3):
            raise ValueError(f"ell must be 1, 2 or 3, got {ell!r}")
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.ell = ell
        self.n = n
        self.pebbles = [2] * n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.inn: list[set[int]] = [set() for _ in range(n)]
        self.tail: list[int] = []
        self.head: list[int] = []
        self.labels: list = []
        self.comps: dict[int, frozenset[int]] = {}
        self.comps_of: list[set[int]] = [set() for _ in range(n)]
        self.pair = np.zeros((n, n), dtype=bool)
        self._next_cid = 0
        self._mark = [0] * n
        self._stamp = 0

    # -- queries ---------------------------------------------------------
    @property
    def accepted(self) -> int:
        return len(self.tail)

    def in_component_span(self, i: int, j: int) -> bool:
        if i == j:
            return self.ell >= 2 or bool(self.pair[i, i])
        return bool(self.pair[i, j])

    def components(self) -> list[Component]:
        """Maximal tight vertex sets with the accepted edges they span."""
        spans: dict[int, set] = {cid: set() for cid in self.comps}
        for s, (t, h) in enumerate(zip(self.tail, self.head)):
            for cid in self.comps_of[t] & self.comps_of[h]:
                spans[cid].add(self.labels[s])
        return sort_components(
            Component(vs, frozenset(spans[cid])) for cid, vs in self.comps.items()
        )

    def accepted_labels(self) -> list:
        return list(self.labels)

    # -- pebble movement -------------------------------------------------
    def _search(self, v: int, protected: tuple, log: list) -> bool:
        """Move one free pebble to ``v`` from a vertex outside ``protected``."""
        self._stamp += 1
        stamp = self._stamp
        mark = self._mark
        mark[v] = stamp
        via = {v: -1}
        stack = [v]
        pebbles, out, head = self.pebbles, self.out, self.head
        found = -1
        while stack:
            u = stack.pop()
            if pebbles[u] and u not in protected:
                found = u
                break
            for s in reversed(out[u]):
                w = head[s]
                if mark[w] != stamp:
                    mark[w] = stamp
                    via[w] = s
                    stack.append(w)
        if found < 0:
            return False
        w = found
        while w != v:
            s = via[w]
            u = self.tail[s]
            self._reverse(s, log)
            w = u
        pebbles[found] -= 1
        pebbles[v] += 1
        log.append(("move", found, v))
        return True

    def _reverse(self, s: int, log: list) -> None:
        u, x = self.tail[s], self.head[s]
        idx = self.out[u].index(s)
        del self.out[u][idx]
        self.out[x].append(s)
        self.inn[x].discard(s)
        self.inn[u].add(s)
        self.tail[s], self.head[s] = x, u
        log.append(("rev", s, u, idx))

    def _undo(self, log: list) -> None:
        for entry in reversed(log):
            if entry[0] == "move":
                _, src, dst = entry
                self.pebbles[src] += 1
                self.pebbles[dst] -= 1
            else:
                _, s, u, idx = entry
                x = self.tail[s]
                popped = self.out[x].pop()
                assert popped == s
                self.out[u].insert(idx, s)
                self.inn[u].discard(s)
                self.inn[x].add(s)
                self.tail[s], self.head[s] = u, x
        log.clear()

    def _gather(self, i: int, j: int, want: int, log: list) -> int:
        """Gather up to ``want`` pebbles on ``{i, j}``; return how many sit there."""
        protected = (i, j)
        pebbles = self.pebbles
        if i == j:
            while pebbles[i] < min(want, 2) and self._search(i, protected, log):
                pass
            return pebbles[i]
        while pebbles[i] + pebbles[j] < want:
            if pebbles[i] < 2 and self._search(i, protected, log):
                continue
            if pebbles[j] < 2 and self._search(j, protected, log):
                continue
            break
        return pebbles[i] + pebbles[j]

    def _reach(self, roots) -> set[int]:
        seen = set(roots)
        stack = list(seen)
        while stack:
            u = stack.pop()
            for s in self.out[u]:
                w = self.head[s]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    # -- mutation ----------------------------------------------------------
    def try_insert(self, i: int, j: int, label=None) -> bool:
        """Insert edge ``ij`` if the accepted graph stays (2, l)-sparse.

        Rejection leaves the state untouched.  The new edge is oriented out
        of ``i`` unless ``i`` ended up without a pebble.
        """
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
        before = self.snapshot() if self.AUDIT else None
        if self.in_component_span(i, j):
            self._after(before, rejected=True)
            return False
        log: list = []
        if self._gather(i, j, self.ell + 1, log) < self.ell + 1:
            # span table said insertable; only reachable if the registry is stale
            self._undo(log)
            self._after(before, rejected=True)
            return False
        s = len(self.tail)
        t, h = (i, j) if self.pebbles[i] > 0 else (j, i)
        self.tail.append(t)
        self.head.append(h)
        self.labels.append(s if label is None else label)
        self.out[t].append(s)
        self.inn[h].add(s)
        self.pebbles[t] -= 1
        self._update_components(i, j)
        self._after(None)
        return True

    def _update_components(self, i: int, j: int) -> None:
        log: list = []
        if self._gather(i, j, self.ell + 1, log) > self.ell:
            return
        # every vertex of the maximal tight set can reach i or j and only
        # reaches pebbles sitting on i or j
        ends = {i, j}
        cand = set(ends)
        bad = set()
        stack = list(ends)
        pebbles, inn, tail = self.pebbles, self.inn, self.tail
        while stack:
            u = stack.pop()
            for s in inn[u]:
                x = tail[s]
                if x not in cand:
                    cand.add(x)
                    if pebbles[x]:
                        # x and everything reaching it stay outside
                        bad.add(x)
                    else:
                        stack.append(x)
        head = self.head
        for w in cand:
            if w in ends or w in bad:
                continue
            if any(head[s] not in cand for s in self.out[w]):
                bad.add(w)
        stack = list(bad)
        while stack:
            w = stack.pop()
            for s in self.inn[w]:
                x = self.tail[s]
                if x in cand and x not in bad:
                    bad.add(x)
                    stack.append(x)
        block = frozenset(cand - bad)
        assert ends <= block, "endpoints left the tight set"
        self._register(block)

    def _register(self, block: frozenset[int]) -> None:
        touched = set().union(*(self.comps_of[v] for v in block))
        absorbed = {cid for cid in touched if self.comps[cid] <= block}
        parts = [self.comps[cid] for cid in absorbed]
        covered = set().union(*parts) if parts else set()
        parts.extend(frozenset([v]) for v in block - covered)
        keep = max((self.comps[cid] for cid in absorbed), key=len, default=None)
        members = np.fromiter(sorted(block), dtype=np.int64)
        for part in parts:
            if part is keep:
                continue
            rows = np.fromiter(sorted(part), dtype=np.int64)
            self.pair[np.ix_(rows, members)] = True
            self.pair[np.ix_(members, rows)] = True
        for cid in absorbed:
            for v in self.comps[cid]:
                self.comps_of[v].discard(cid)
            del self.comps[cid]
        cid = self._next_cid
        self._next_cid += 1
        self.comps[cid] = block
        for v in block:
            self.comps_of[v].add(cid)

    def fundamental_circuit(self, i: int, j: int, label=-1) -> frozenset:
        """Labels of the unique circuit formed by probing ``ij`` (probe included).

        The probe must be rejectable.  The state is restored afterwards.
        """
        if not self.in_component_span(i, j):
            raise ValueError(f"edge ({i}, {j}) is insertable; it closes no circuit")
        before = self.snapshot() if self.AUDIT else None
        log: list = []
        self._gather(i, j, self.ell + 1, log)
        region = self._reach({i, j})
        circuit = {self.labels[s] for v in region for s in self.out[v]}
        self._undo(log)
        self._after(before, rejected=True)
        circuit.add(label)
        return frozenset(circuit)

    # -- auditing --------------------------------------------------------
    def snapshot(self) -> tuple:
        return (
            tuple(self.pebbles),
            tuple(tuple(o) for o in self.out),
            tuple(frozenset(s) for s in self.inn),
            tuple(self.tail),
            tuple(self.head),
            tuple(self.labels),
            tuple(sorted(self.comps.values(), key=sorted)),
            self.pair.tobytes(),
        )

    def audit(self) -> None:
        """Raise :class:`PebbleAuditError` if any state invariant is broken."""
        PebbleGame.audits_run += 1
        n = self.n
        for v in range(n):
            if self.pebbles[v] + len(self.out[v]) != 2:
                raise PebbleAuditError(f"vertex {v}: pebbles + outdeg != 2")
        if sum(self.pebbles) != 2 * n - self.accepted:
            raise PebbleAuditError("pebble total does not match accepted edges")
        for s, (t, h) in enumerate(zip(self.tail, self.head)):
            if s not in self.out[t] or s not in self.inn[h]:
                raise PebbleAuditError(f"slot {s} adjacency out of sync")
        if sum(len(x) for x in self.inn) != self.accepted:
            raise PebbleAuditError("in-adjacency has stray slots")
        for cid, block in self.comps.items():
            for v in block:
                if cid not in self.comps_of[v]:
                    raise PebbleAuditError(f"component {cid} registry out of sync")

    def _after(self, before, rejected: bool = False) -> None:
        if not self.AUDIT:
            return
        self.audit()
        if rejected and before is not None and self.snapshot() != before:
            raise PebbleAuditError("rejected operation changed the state")


def new_game(ell: int, n: int) -> PebbleGame:
    return PebbleGame(ell, n)
