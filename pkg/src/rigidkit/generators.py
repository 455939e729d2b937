"""Seeded generators for colored graphs."""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .colored import Z2, ColoredGraph, GroupDescriptor, zk


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    m: int
    group: GroupDescriptor = Z2
    color_range: int = 2          # Z^2 coordinate bound; ignored for Z/kZ
    family_bias: str | None = None  # "ross" or "cone": first 2n-2 / 2n-1 edges
                                    # come from the tight family, the rest random


def _color(rng: random.Random, group: GroupDescriptor, bound: int):
    if group.is_z2:
        return (rng.randint(-bound, bound), rng.randint(-bound, bound))
    return rng.randrange(group.modulus)


def random_colored(spec: GenSpec) -> ColoredGraph:
    if spec.n < 1 and spec.m > 0:
        raise ValueError("edges need at least one vertex")
    rng = random.Random(spec.seed)
    edges = []
    if spec.family_bias == "ross":
        edges = list(ross_family(spec.n).edges)[:spec.m]
    elif spec.family_bias == "cone":
        k = 3 if spec.group.is_z2 else spec.group.modulus
        edges = list(cone_family(spec.n, k).edges)[:spec.m]
    elif spec.family_bias is not None:
        raise ValueError(f"unknown family bias {spec.family_bias!r}")
    while len(edges) < spec.m:
        edges.append((rng.randrange(spec.n), rng.randrange(spec.n),
                      _color(rng, spec.group, spec.color_range)))
    if spec.family_bias:
        rng.shuffle(edges)
    return ColoredGraph(spec.group, spec.n, tuple(edges))


def ross_family(n: int) -> ColoredGraph:
    """Chain of doubled edges; each pair has one zero and one (1, 0) copy."""
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = []
    for i in range(n - 1):
        edges.append((i, i + 1, (0, 0)))
        edges.append((i, i + 1, (1, 0)))
    return ColoredGraph(Z2, n, tuple(edges))


def cone_family(n: int, k: int) -> ColoredGraph:
    """Loop colored 1 at vertex 0, then a chain of doubled edges colored 0 and 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = [(0, 0, 1)]
    for i in range(n - 1):
        edges.append((i, i + 1, 0))
        edges.append((i, i + 1, 1))
    return ColoredGraph(zk(k), n, tuple(edges))


def path_plus_chords(n: int, seed: int = 0, chords: int | None = None) -> ColoredGraph:
    """A Z^2 path on n vertices plus ``chords`` random chords (default n).

    Colors come from random vertex potentials, so every cycle has trivial
    image and the image test has to visit every fundamental cycle.
    """
    rng = np.random.default_rng(seed)
    chords = (n if chords is None else chords) if n > 1 else 0
    pot = rng.integers(-1000, 1001, size=(n, 2))
    tails = np.concatenate([np.arange(n - 1), rng.integers(0, n, chords)])
    heads = np.concatenate([np.arange(1, n), rng.integers(0, n, chords)])
    col = pot[heads] - pot[tails]
    edges = zip(tails.tolist(), heads.tolist(), map(tuple, col.tolist()))
    return ColoredGraph(Z2, n, tuple(edges))


def random_suite(seed: int, count: int, n_max: int = 7, m_max: int = 13,
                 ks=(2, 3, 4, 5), z2_bound: int = 2, z2_share: float = 0.2):
    """Seeded stream of small graphs: Z^2 with colors in [-b, b]^2 and Z/kZ."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        group = Z2 if rng.random() < z2_share else zk(rng.choice(ks))
        m = rng.randint(0, m_max)
        if rng.random() < 0.25:
            # tight counts are where the algorithms have to work hardest
            m = min(m_max, 2 * n - (2 if group.is_z2 else 1))
        yield random_colored(GenSpec(rng.getrandbits(64), n, m, group, z2_bound))
