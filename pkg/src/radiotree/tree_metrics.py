"""Weight centers, levels and the two lower bounds on the radio number."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tree_core import DiameterError, Tree, diameter

NO_BRANCH = -1


@dataclass(frozen=True)
class TreeProfile:
    """Center-relative metrics of a tree.

    ``branch_of[u]`` is the neighbor of ``u``'s nearest center that roots
    the branch containing ``u``; ``center_of[u]`` is that center.  Both are
    ``NO_BRANCH`` for centers.  Two vertices lie in opposite branches iff
    their ``center_of`` entries differ.
    """

    p: int
    diameter: int
    weights: tuple[int, ...]
    weight_of_tree: int
    centers: tuple[int, ...]
    epsilon: int
    levels: tuple[int, ...]
    total_level: int
    branch_of: tuple[int, ...]
    center_of: tuple[int, ...]

    @property
    def two_centers(self) -> bool:
        return len(self.centers) == 2


def vertex_weights(tree: Tree) -> np.ndarray:
    """Sum of distances from each vertex to all others."""
    return tree.dist.sum(axis=0)


def weight_centers(tree: Tree) -> tuple[int, ...]:
    w = vertex_weights(tree)
    return tuple(int(v) for v in np.flatnonzero(w == w.min()))


def profile(tree: Tree) -> TreeProfile:
    p = tree.p
    d = diameter(tree)
    weights = vertex_weights(tree)
    w_min = int(weights.min())
    centers = tuple(int(v) for v in np.flatnonzero(weights == w_min))
    if len(centers) > 2:
        raise AssertionError(f"tree has {len(centers)} weight centers")

    levels = tree.dist[list(centers)].min(axis=0)
    branch_of = [NO_BRANCH] * p
    center_of = [NO_BRANCH] * p
    cset = set(centers)
    for c in centers:
        for b in tree.adj[c]:
            if b in cset:
                continue
            # DFS away from the center; the other center is never entered
            stack = [(b, c)]
            while stack:
                u, par = stack.pop()
                branch_of[u] = b
                center_of[u] = c
                stack.extend((x, u) for x in tree.adj[u] if x != par)

    return TreeProfile(
        p=p,
        diameter=d,
        weights=tuple(int(x) for x in weights),
        weight_of_tree=w_min,
        centers=centers,
        epsilon=1 if len(centers) == 1 else 0,
        levels=tuple(int(x) for x in levels),
        total_level=int(levels.sum()),
        branch_of=tuple(branch_of),
        center_of=tuple(center_of),
    )


def _need_diameter_two(prof: TreeProfile) -> None:
    if prof.diameter < 2:
        raise DiameterError(
            f"lower bounds are stated for diameter >= 2 (got {prof.diameter})")


def liu_lower_bound(tree: Tree, prof: TreeProfile | None = None) -> int:
    """``(p-1)(d+1) + 1 - 2 w(T)``."""
    prof = prof or profile(tree)
    _need_diameter_two(prof)
    return (prof.p - 1) * (prof.diameter + 1) + 1 - 2 * prof.weight_of_tree


def bantva_lower_bound(tree: Tree, prof: TreeProfile | None = None) -> int:
    """``(p-1)(d+eps) - 2 L(T) + eps``; the level-based bound."""
    prof = prof or profile(tree)
    _need_diameter_two(prof)
    eps = prof.epsilon
    return (prof.p - 1) * (prof.diameter + eps) - 2 * prof.total_level + eps


def center_components(tree: Tree, prof: TreeProfile) -> tuple[int, int]:
    """Component sizes after deleting the edge between the two centers."""
    if not prof.two_centers:
        raise ValueError("tree has a single weight center")
    a, b = prof.centers
    if b not in tree.adj[a]:
        raise ValueError(f"weight centers {a} and {b} are not adjacent")
    seen = {a, b}
    stack = [a]
    while stack:
        u = stack.pop()
        for x in tree.adj[u]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    size_a = len(seen) - 1
    return size_a, tree.p - size_a
