"""Radio labelings, the ordering certificate, and labels built from it."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .tree_core import Tree, TreeFormatError, iter_data_lines
from .tree_metrics import TreeProfile


@dataclass(frozen=True)
class RadioLabeling:
    """Vertex-indexed labels ``labels[v] = f(v)``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be non-negative")

    @property
    def span(self) -> int:
        return span(self)

    def ordering(self) -> "VertexOrdering":
        return VertexOrdering(sorted(range(len(self.labels)), key=self.labels.__getitem__))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(x) for x in self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"not a permutation of 0..{len(self.order) - 1}: {self.order}")

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.  Truthy iff it passed.

    On failure ``clause`` names what broke, ``pair`` the offending vertex
    pair (``verify_radio``) or index pair (``ordering_valid``) and
    ``deficit`` how far short the inequality fell.
    """

    ok: bool
    clause: str = ""
    pair: tuple[int, int] | None = None
    deficit: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "PASS" if self.ok else f"FAIL: {self.message}"


PASS = Verdict(True)


def span(labeling: RadioLabeling | Sequence[int]) -> int:
    labels = labeling.labels if isinstance(labeling, RadioLabeling) else labeling
    if len(labels) == 0:
        raise ValueError("span of an empty labeling")
    return max(labels) - min(labels)


def verify_radio(tree: Tree, labeling: RadioLabeling | Sequence[int]) -> Verdict:
    """Check ``d(u,v) + |f(u) - f(v)| >= diam + 1`` for every pair.

    Pairs are scanned in lexicographic order so the reported violation is
    deterministic.
    """
    f = labeling.labels if isinstance(labeling, RadioLabeling) else tuple(labeling)
    if len(f) != tree.p:
        raise ValueError(f"labeling covers {len(f)} vertices, tree has {tree.p}")
    if tree.p == 1:
        return PASS
    dist = tree.dist.tolist()
    need = max(max(row) for row in dist) + 1
    for u in range(tree.p):
        du, fu = dist[u], f[u]
        for v in range(u + 1, tree.p):
            deficit = need - du[v] - abs(fu - f[v])
            if deficit > 0:
                return Verdict(False, "radio", (u, v), deficit,
                               f"pair ({u},{v}): d={du[v]}, |f(u)-f(v)|={abs(fu - f[v])}, "
                               f"need {need}, deficit {deficit}")
    return PASS


def _level_prefix(prof: TreeProfile, order: Sequence[int]) -> list[int]:
    # prefix[j] = sum_{t<j} (L(u_t) + L(u_{t+1}))
    lv = prof.levels
    steps = [lv[order[t]] + lv[order[t + 1]] for t in range(len(order) - 1)]
    return [0, *accumulate(steps)]


def check_endpoints(tree: Tree, prof: TreeProfile, order: Sequence[int]) -> Verdict:
    """Condition (a) on the first and last vertex of a certificate ordering."""
    first, last = order[0], order[-1]
    if prof.two_centers:
        if {first, last} != set(prof.centers):
            return Verdict(False, "a", (0, len(order) - 1), None,
                           f"{{u_0, u_{len(order) - 1}}} = {{{first}, {last}}} "
                           f"is not the center pair {set(prof.centers)}")
        return PASS
    (w,) = prof.centers
    if first != w:
        return Verdict(False, "a", (0, len(order) - 1), None,
                       f"u_0 = {first} is not the weight center {w}")
    if last not in tree.adj[w]:
        return Verdict(False, "a", (0, len(order) - 1), None,
                       f"u_{len(order) - 1} = {last} is not adjacent to the weight center {w}")
    return PASS


def ordering_valid(tree: Tree, prof: TreeProfile,
                   ordering: VertexOrdering | Sequence[int]) -> Verdict:
    """Whether ``ordering`` certifies that the level bound is attained.

    Checks the endpoint condition, then for every ``i < j``::

        d(u_i, u_j) >= sum_{t=i}^{j-1} (L(u_t) + L(u_{t+1})) - (j-i)(d+eps) + d + 1
    """
    order = ordering.order if isinstance(ordering, VertexOrdering) else tuple(ordering)
    if sorted(order) != list(range(tree.p)):
        return Verdict(False, "permutation", None, None,
                       f"not a permutation of the {tree.p} vertices")
    ends = check_endpoints(tree, prof, order)
    if not ends:
        return ends
    d, eps = prof.diameter, prof.epsilon
    dist = tree.dist.tolist()
    pre = _level_prefix(prof, order)
    for i in range(tree.p - 1):
        di = dist[order[i]]
        for j in range(i + 1, tree.p):
            rhs = pre[j] - pre[i] - (j - i) * (d + eps) + d + 1
            have = di[order[j]]
            if have < rhs:
                return Verdict(False, "b", (i, j), rhs - have,
                               f"indices ({i},{j}) vertices ({order[i]},{order[j]}): "
                               f"d={have} < {rhs}")
    return PASS


class InvalidOrderingError(ValueError):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        super().__init__(f"ordering is not a certificate: {verdict.message}")


def label_from_ordering(tree: Tree, prof: TreeProfile,
                        ordering: VertexOrdering | Sequence[int]) -> RadioLabeling:
    """Labels ``f(u_0) = 0``, ``f(u_{i+1}) = f(u_i) + d + eps - L(u_i) - L(u_{i+1})``."""
    verdict = ordering_valid(tree, prof, ordering)
    if not verdict:
        raise InvalidOrderingError(verdict)
    order = ordering.order if isinstance(ordering, VertexOrdering) else tuple(ordering)
    step = prof.diameter + prof.epsilon
    lv = prof.levels
    f = [0] * tree.p
    for a, b in zip(order, order[1:]):
        inc = step - lv[a] - lv[b]
        assert inc >= 1, f"non-increasing step {a}->{b} passed the certificate check"
        f[b] = f[a] + inc
    return RadioLabeling(f)


def parse_labeling(text: str, p: int | None = None) -> RadioLabeling:
    """Parse ``vertex label`` lines (``#`` comments allowed)."""
    found: dict[int, int] = {}
    for ln, s in iter_data_lines(text):
        parts = s.split()
        if len(parts) != 2:
            raise TreeFormatError(f"malformed labeling line {s!r}", ln)
        try:
            v, f = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeFormatError(f"malformed labeling line {s!r}", ln) from None
        if v in found:
            raise TreeFormatError(f"vertex {v} labeled twice", ln)
        if f < 0:
            raise TreeFormatError(f"negative label {f} for vertex {v}", ln)
        found[v] = f
    n = len(found)
    if sorted(found) != list(range(n)):
        raise TreeFormatError(f"labeled vertices are not 0..{n - 1}")
    if p is not None and n != p:
        raise TreeFormatError(f"labeling has {n} vertices, tree has {p}")
    return RadioLabeling([found[v] for v in range(n)])


def read_labeling(path, p: int | None = None) -> RadioLabeling:
    with open(path, encoding="utf-8") as fh:
        return parse_labeling(fh.read(), p)


def format_labeling(labeling: RadioLabeling, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.extend(f"{v} {f}" for v, f in enumerate(labeling.labels))
    return "\n".join(out) + "\n"
