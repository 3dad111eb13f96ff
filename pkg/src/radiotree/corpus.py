"""Seeded random trees for property suites and CLI corpora."""

from __future__ import annotations

import random

import networkx as nx

from .tree_core import Tree, from_edges


def random_tree(p: int, rng: random.Random) -> Tree:
    """Uniform labeled tree on ``p`` vertices via a random Pruefer sequence."""
    if p == 1:
        return from_edges(1, [])
    if p == 2:
        return from_edges(2, [(0, 1)])
    seq = [rng.randrange(p) for _ in range(p - 2)]
    return from_edges(p, nx.from_prufer_sequence(seq).edges())


def random_trees(count: int, p_min: int, p_max: int, seed: int) -> list[Tree]:
    """``count`` trees with orders drawn uniformly from ``p_min..p_max``."""
    rng = random.Random(seed)
    return [random_tree(rng.randint(p_min, p_max), rng) for _ in range(count)]
