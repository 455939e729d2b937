"""Finite checks of the structural lemmas behind the algorithms.

Each check takes a colored graph and returns True when the lemma's
conclusion holds (or its hypothesis fails, so the instance says nothing).
Failures are shrunk by greedy edge deletion and written as graph files.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .colored import Z2, ColoredGraph, zk
from .development import develop, lifted_labels
from .gamma import is_trivial_image
from .graphio import serialize
from .oracle import (
    LAMAN,
    TWO_ONE,
    TWO_TWO,
    OracleGraph,
    cone_laman,
    edges_of,
    ross,
)

Check = Callable[[ColoredGraph], bool]


@dataclass
class LemmaResult:
    name: str
    instances: int = 0
    failures: int = 0
    skipped: int = 0
    reproducers: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"name": self.name, "instances": self.instances, "failures": self.failures,
                "skipped": self.skipped, "reproducers": self.reproducers}


# -- enumeration of uncolored patterns ---------------------------------------

def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def tight_patterns(n: int, ell: int, loops: bool) -> list[tuple]:
    """Every (2, ell)-graph on n vertices, one per isomorphism class."""
    m = 2 * n - ell
    if m < 0:
        return []
    slots = [(a, b) for a in range(n) for b in range(a + (0 if loops else 1), n)]
    fam = {1: TWO_ONE, 2: TWO_TWO, 3: LAMAN}[ell]
    seen = set()
    out = []
    for combo in itertools.combinations_with_replacement(slots, m):
        key = _canonical(n, combo)
        if key in seen:
            continue
        seen.add(key)
        g = ColoredGraph(Z2, n, tuple((a, b, (0, 0)) for a, b in key))
        if OracleGraph(g).is_sparse(fam):
            out.append(key)
    return out


def _colored(pattern, n, group, rng: random.Random | None) -> ColoredGraph:
    def color():
        if rng is None:
            return group.zero()
        if group.is_z2:
            return (rng.randint(0, 1), rng.randint(0, 1))
        return rng.randrange(group.modulus)
    return ColoredGraph(group, n, tuple((a, b, color()) for a, b in pattern))


# -- helpers on top of the oracle ------------------------------------------

def _fundamental(og: OracleGraph, family, basis: int, e: int) -> int:
    found = [c for c in og.circuits(family, basis | 1 << e) if c >> e & 1]
    assert len(found) == 1, "basis plus one edge holds exactly one circuit"
    return found[0]


def _fundamentals(og: OracleGraph, family, basis: int) -> set[int]:
    return {_fundamental(og, family, basis, e)
            for e in range(og.m) if not basis >> e & 1}


def _pairwise_disjoint(masks) -> bool:
    return all(a & b == 0 for a, b in itertools.combinations(masks, 2))


def _is_tight(og: OracleGraph, family) -> bool:
    g = og.graph
    return g.m == 2 * g.n - family.ell and og.is_sparse(family)


# -- the checks -----------------------------------------------------------

def check_laman_circuits_disjoint(g: ColoredGraph) -> bool:
    og = OracleGraph(g)
    if not _is_tight(og, TWO_TWO):
        return True
    return _pairwise_disjoint(og.circuits(LAMAN))


def check_elim(g: ColoredGraph) -> bool:
    """Disjoint Laman circuits: every basis has all of them as fundamental circuits."""
    og = OracleGraph(g)
    circuits = og.circuits(LAMAN)
    if not _pairwise_disjoint(circuits):
        return True
    return all(_fundamentals(og, LAMAN, b) == set(circuits) for b in og.bases(LAMAN))


def check_ross_by_basis(g: ColoredGraph) -> bool:
    """On a (2,2)-graph: Ross iff fundamental Laman circuits of a basis are
    non-trivial, for every basis."""
    og = OracleGraph(g)
    if not _is_tight(og, TWO_TWO):
        return True
    is_ross = og.is_sparse(ross(g.group))
    for b in og.bases(LAMAN):
        nontrivial = all(not og.trivial(c) for c in _fundamentals(og, LAMAN, b))
        if nontrivial != is_ross:
            return False
    return True


def check_22_circuits_disjoint(g: ColoredGraph) -> bool:
    og = OracleGraph(g)
    if not _is_tight(og, TWO_ONE):
        return True
    return _pairwise_disjoint(og.circuits(TWO_TWO))


def check_22_or_laman(g: ColoredGraph) -> bool:
    og = OracleGraph(g)
    if not _is_tight(og, TWO_ONE):
        return True
    c22 = og.circuits(TWO_TWO)
    bases = og.bases(LAMAN)
    fund = [_fundamentals(og, LAMAN, b) for b in bases]
    for c in og.circuits(LAMAN):
        if any(c & ~d == 0 for d in c22):
            continue
        if not all(c in f for f in fund):
            return False
    return True


def _is_lone_loop(g: ColoredGraph) -> bool:
    return g.m == 1 and g.edges[0][0] == g.edges[0][1]


def check_22_circuit(g: ColoredGraph) -> bool:
    """A (2,2)-circuit is cone-Laman iff every one-edge deletion is Ross."""
    og = OracleGraph(g)
    full = og.full()
    if g.m == 0 or og.circuits(TWO_TWO) != [full] or _is_lone_loop(g):
        return True
    k = g.group.modulus
    cone = og.is_sparse(cone_laman(k))
    every = all(og.is_sparse(ross(g.group), full & ~(1 << e)) for e in range(g.m))
    return cone == every


def _connected_pieces(g: ColoredGraph, eids) -> list[list[int]]:
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in eids:
        t, h, _ = g.edges[e]
        parent[find(t)] = find(h)
    pieces: dict[int, list[int]] = {}
    for e in eids:
        pieces.setdefault(find(g.edges[e][0]), []).append(e)
    return list(pieces.values())


def check_z3_path(g: ColoredGraph, subsets=None) -> bool:
    """Non-trivial image iff the lift joins two vertices of one fiber."""
    dev = develop(g)
    for sub in subsets if subsets is not None else [range(g.m)]:
        sub = list(sub)
        labels = lifted_labels(dev, sub)
        joined = any(len({labels[3 * v + z] for z in range(3)}) < 3
                     for v in {x for e in sub for x in g.edges[e][:2]})
        if joined == is_trivial_image(g, sub):
            return False
    return True


def check_cone_two_types(g: ColoredGraph, subsets=None) -> bool:
    """Connected subgraph: trivial -> three disjoint copies, else connected lift."""
    dev = develop(g)
    for sub in subsets if subsets is not None else [range(g.m)]:
        for piece in _connected_pieces(g, list(sub)):
            labels = lifted_labels(dev, piece)
            verts = {x for e in piece for x in g.edges[e][:2]}
            comps = set(labels.values())
            if is_trivial_image(g, piece):
                if len(comps) != 3:
                    return False
                # each copy meets every fiber once
                for c in comps:
                    hits = [v for v in labels if labels[v] == c]
                    if sorted(v // 3 for v in hits) != sorted(verts):
                        return False
            elif len(comps) != 1:
                return False
    return True


# -- shrinking and the driver ------------------------------------------------

def minimize(g: ColoredGraph, check: Check) -> ColoredGraph:
    """Drop edges (then trailing vertices) while the check keeps failing."""
    edges = list(g.edges)
    changed = True
    while changed:
        changed = False
        for idx in range(len(edges)):
            trial = edges[:idx] + edges[idx + 1:]
            if not check(ColoredGraph(g.group, g.n, tuple(trial))):
                edges = trial
                changed = True
                break
    used = sorted({v for t, h, _ in edges for v in (t, h)})
    loc = {v: i for i, v in enumerate(used)}
    small = ColoredGraph(g.group, len(used),
                         tuple((loc[t], loc[h], c) for t, h, c in edges))
    return small if not check(small) else ColoredGraph(g.group, g.n, tuple(edges))


def _record(res: LemmaResult, g: ColoredGraph, check: Check, out_dir: Path | None):
    res.instances += 1
    if check(g):
        return
    res.failures += 1
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"{res.name}-{res.failures}.graph"
        small = minimize(g, check)
        path.write_text(f"# counterexample to {res.name}\n" + serialize(small))
        res.reproducers.append(str(path))


DEFAULT_COUNTS = {"two_two_n": 4, "two_one_n": 4, "z3_graphs": 1000, "colorings": 8}


def lemma_suite(seed: int = 0, counts: dict | None = None,
                out_dir: str | Path | None = None) -> list[LemmaResult]:
    counts = {**DEFAULT_COUNTS, **(counts or {})}
    out = Path(out_dir) if out_dir is not None else None
    rng = random.Random(seed)
    results = {name: LemmaResult(name) for name in (
        "laman-circuits-disjoint", "elim", "circuits-any-basis",
        "22circuitsdisjoint", "22orlamancircuits", "22circuit",
        "Z3path", "conetwotypes")}

    for n in range(1, counts["two_two_n"] + 1):
        for pat in tight_patterns(n, 2, loops=False):
            g = _colored(pat, n, Z2, None)
            _record(results["laman-circuits-disjoint"], g, check_laman_circuits_disjoint, out)
            _record(results["elim"], g, check_elim, out)
            for c in range(counts["colorings"] + 1):
                cg = _colored(pat, n, Z2, rng if c else None)
                _record(results["circuits-any-basis"], cg, check_ross_by_basis, out)

    for n in range(1, counts["two_one_n"] + 1):
        for pat in tight_patterns(n, 1, loops=True):
            g = _colored(pat, n, Z2, None)
            _record(results["22circuitsdisjoint"], g, check_22_circuits_disjoint, out)
            _record(results["22orlamancircuits"], g, check_22_or_laman, out)
            og = OracleGraph(g)
            for c in og.circuits(TWO_TWO):
                sub = [pat[e] for e in sorted(edges_of(c))]
                if len(sub) == 1 and sub[0][0] == sub[0][1]:
                    results["22circuit"].skipped += 1
                    continue
                used = sorted({v for e in sub for v in e})
                loc = {v: i for i, v in enumerate(used)}
                sub = [(loc[a], loc[b]) for a, b in sub]
                for _ in range(counts["colorings"]):
                    k = rng.choice((2, 3, 4, 5))
                    cg = _colored(sub, len(used), zk(k), rng)
                    _record(results["22circuit"], cg, check_22_circuit, out)

    for _ in range(counts["z3_graphs"]):
        n = rng.randint(1, 7)
        m = rng.randint(0, 12)
        g = ColoredGraph(zk(3), n, tuple(
            (rng.randrange(n), rng.randrange(n), rng.randrange(3)) for _ in range(m)))
        subs = [range(m)] + [[e for e in range(m) if rng.random() < 0.5] for _ in range(3)]
        _record(results["Z3path"], g, lambda h, s=subs: check_z3_path(h, _clip(s, h)), out)
        _record(results["conetwotypes"], g,
                lambda h, s=subs: check_cone_two_types(h, _clip(s, h)), out)
    return list(results.values())


def _clip(subsets, g: ColoredGraph):
    # shrinking removes edges, so keep only ids that still exist
    return [[e for e in s if e < g.m] for s in subsets]

