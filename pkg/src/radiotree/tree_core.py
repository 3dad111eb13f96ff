"""Tree representation, text parsing/serialization and hop distances.

Trees live on dense vertex ids ``0..p-1``.  All-pairs distances are computed
eagerly at construction since every downstream computation reads them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np


class TreeFormatError(ValueError):
    """Raised for malformed or non-tree input; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DiameterError(ValueError):
    """Raised when an operation needs diameter >= 2 (or p >= 2)."""


@dataclass(frozen=True, eq=False)
class Tree:
    """Immutable tree on vertices ``0..p-1``.

    ``dist`` is a read-only ``p x p`` integer matrix of hop distances.
    Construct through :func:`from_edges` or :func:`parse_tree`; both validate.
    """

    p: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    dist: np.ndarray = field(repr=False)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __len__(self) -> int:
        return self.p

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.p == other.p and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.edges)))


@dataclass(frozen=True)
class TreeStats:
    diameter: int
    eccentricity: tuple[int, ...]


def _bfs(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(p: int, adj: Sequence[Sequence[int]]) -> np.ndarray:
    """Hop distance matrix from one BFS per vertex."""
    mat = np.empty((p, p), dtype=np.int64)
    for s in range(p):
        mat[s] = _bfs(adj, s)
    mat.setflags(write=False)
    return mat


def from_edges(p: int, edges: Iterable[tuple[int, int]],
               lines: Sequence[int] | None = None) -> Tree:
    """Build a validated :class:`Tree`.

    ``lines`` optionally maps each edge to its source line number so errors
    can point back at the input.
    """
    if p < 1:
        raise TreeFormatError(f"vertex count must be >= 1, got {p}")
    edges = [tuple(e) for e in edges]
    if lines is None:
        lines = [None] * len(edges)

    # union-find catches cycles at the edge that closes them
    parent = list(range(p))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(p)]
    norm: list[tuple[int, int]] = []
    for (u, v), ln in zip(edges, lines):
        for x in (u, v):
            if not 0 <= x < p:
                raise TreeFormatError(f"vertex id {x} out of range 0..{p - 1}", ln)
        if u == v:
            raise TreeFormatError(f"self-loop at vertex {u}", ln)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise TreeFormatError(f"duplicate edge {key[0]} {key[1]}", ln)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeFormatError(f"cycle detected at edge {u} {v}", ln)
        parent[ru] = rv
        seen.add(key)
        norm.append(key)
        adj[u].append(v)
        adj[v].append(u)

    if len(norm) != p - 1:
        raise TreeFormatError(
            f"disconnected: expected {p - 1} edges for {p} vertices, got {len(norm)}")
    adj_t = tuple(tuple(sorted(a)) for a in adj)
    return Tree(p=p, edges=tuple(norm), adj=adj_t, dist=all_pairs_distances(p, adj_t))


def iter_data_lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield n, s


def parse_tree(text: str) -> Tree:
    """Parse the edge-list text format.

    First data line is ``p``; the next ``p-1`` data lines are ``u v``.
    Blank lines and ``#`` comments are skipped.
    """
    rows = list(iter_data_lines(text))
    if not rows:
        raise TreeFormatError("empty input: expected vertex count")
    ln, head = rows[0]
    try:
        p = int(head)
    except ValueError:
        raise TreeFormatError(f"expected vertex count, got {head!r}", ln) from None
    if p < 1:
        raise TreeFormatError(f"vertex count must be >= 1, got {p}", ln)

    edges, where = [], []
    for ln, s in rows[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise TreeFormatError(f"malformed edge line {s!r}", ln)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeFormatError(f"malformed edge line {s!r}", ln) from None
        edges.append((u, v))
        where.append(ln)
    if len(edges) > p - 1:
        raise TreeFormatError(
            f"too many edges: expected {p - 1}, got {len(edges)}", where[p - 1])
    return from_edges(p, edges, where)


def read_tree(path) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def format_tree(tree: Tree, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(str(tree.p))
    out.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(out) + "\n"


def to_dot(tree: Tree, labels: Mapping[int, int] | Sequence[int] | None = None) -> str:
    """Undirected DOT graph; with ``labels`` nodes are annotated ``id:f(id)``."""
    out = ["graph T {"]
    for v in range(tree.p):
        if labels is not None:
            out.append(f'  {v} [label="{v}:{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in tree.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def stats(tree: Tree) -> TreeStats:
    ecc = tree.dist.max(axis=1)
    return TreeStats(diameter=int(ecc.max()), eccentricity=tuple(int(e) for e in ecc))


def diameter(tree: Tree) -> int:
    if tree.p < 2:
        raise DiameterError("diameter undefined for a single-vertex tree")
    return int(tree.dist.max())


def diameter_double_sweep(tree: Tree) -> int:
    """Diameter by two BFS sweeps; independent of the distance matrix."""
    if tree.p < 2:
        raise DiameterError("diameter undefined for a single-vertex tree")
    first = _bfs(tree.adj, 0)
    far = max(range(tree.p), key=first.__getitem__)
    return max(_bfs(tree.adj, far))


def relabel(tree: Tree, perm: Sequence[int]) -> Tree:
    """Copy of ``tree`` with vertex ``v`` renamed ``perm[v]``."""
    return from_edges(tree.p, [(perm[u], perm[v]) for u, v in tree.edges])


def path_tree(n: int) -> Tree:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(k: int) -> Tree:
    return from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
