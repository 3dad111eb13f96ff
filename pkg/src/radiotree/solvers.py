"""Certificate-ordering search and an exhaustive radio-number oracle.

The two procedures share no pruning code on purpose: the oracle is used to
cross-check the certificate search, so neither may lean on the other's
shortcuts.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass

from .labeling import RadioLabeling, VertexOrdering, label_from_ordering, ordering_valid
from .tree_core import DiameterError, Tree
from .tree_metrics import TreeProfile, profile

DEFAULT_BUDGET = 2_000_000
DEFAULT_EXACT_BUDGET = 20_000_000
DEFAULT_CAP = 10


class Status(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED = "EXHAUSTED"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    ordering: VertexOrdering | None = None
    labeling: RadioLabeling | None = None
    nodes_explored: int = 0
    phase: int | None = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    @property
    def span(self) -> int | None:
        return None if self.labeling is None else self.labeling.span


@dataclass(frozen=True)
class ExactResult:
    rn: int
    witness: RadioLabeling
    nodes_explored: int


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, budget: int):
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"node budget {budget} exhausted after {nodes} nodes; no value proven")


class CapExceeded(ValueError):
    pass


class _OutOfBudget(Exception):
    pass


# --------------------------------------------------------------------------
# certificate search
# --------------------------------------------------------------------------

def _greedy_order(tree: Tree, prof: TreeProfile) -> list[int]:
    """Phase 1: alternate branches, deepest vertex of the fullest branch first."""
    lv, branch, side = prof.levels, prof.branch_of, prof.center_of
    if prof.two_centers:
        first, last = prof.centers
    else:
        first, last = prof.centers[0], None

    pools: dict[int, list[int]] = {}
    for v in range(tree.p):
        if branch[v] >= 0:
            pools.setdefault(branch[v], []).append(v)
    for vs in pools.values():
        vs.sort(key=lambda v: (-lv[v], v))

    order = [first]
    prev = first
    while pools:
        if prof.two_centers:
            # consecutive vertices must sit on opposite sides
            here = first if prev == first else side[prev]
            cands = [b for b in pools if side[pools[b][0]] != here] or list(pools)
        else:
            cands = [b for b in pools if b != branch[prev]] or list(pools)
        b = min(cands, key=lambda b: (-len(pools[b]), -lv[pools[b][0]], pools[b][0]))
        v = pools[b].pop(0)
        if not pools[b]:
            del pools[b]
        order.append(v)
        prev = v
    if last is not None:
        order.append(last)
    return order


def search_ordering(tree: Tree, prof: TreeProfile | None = None,
                    budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Look for a vertex ordering certifying that the level bound is exact.

    Phase 1 tries a single greedy ordering.  Phase 2 backtracks over all
    orderings allowed by the endpoint condition, checking each new vertex
    against the placed prefix and caching dead states (remaining vertices
    plus the label gaps that can still constrain the future).  EXHAUSTED
    means no certificate exists at all.
    """
    prof = prof or profile(tree)
    if prof.diameter < 2:
        raise DiameterError("certificate search needs diameter >= 2")

    greedy = _greedy_order(tree, prof)
    nodes = len(greedy)
    if ordering_valid(tree, prof, greedy):
        return SearchOutcome(Status.FOUND, VertexOrdering(greedy),
                             label_from_ordering(tree, prof, greedy), nodes, phase=1)

    p, d, eps = tree.p, prof.diameter, prof.epsilon
    step = d + eps
    lv = prof.levels
    dist = tree.dist.tolist()
    # deepest first tends to reach a certificate sooner
    pref = sorted(range(p), key=lambda v: (-lv[v], v))

    if prof.two_centers:
        starts = [(prof.centers[0], prof.centers[1]), (prof.centers[1], prof.centers[0])]
        enders_mask = None
    else:
        w = prof.centers[0]
        starts = [(w, None)]
        enders_mask = 0
        for x in tree.adj[w]:
            enders_mask |= 1 << x

    dead: set = set()
    order: list[int] = []
    label: dict[int, int] = {}
    counter = [nodes]
    limit = max(budget, 0)

    def extend(remaining: int, f_last: int, reserved: int | None) -> bool:
        if remaining == 0:
            return True
        a = order[-1]
        key = (remaining, tuple((v, f_last - label[v]) for v in order
                                if f_last - label[v] <= d - 2))
        if key in dead:
            return False
        la = lv[a]
        for x in pref:
            bit = 1 << x
            if not remaining & bit:
                continue
            rest = remaining & ~bit
            if reserved is not None:
                if x == reserved and rest:
                    continue
            elif rest and not rest & enders_mask:
                continue
            elif not rest and not bit & enders_mask:
                continue
            fx = f_last + step - la - lv[x]
            dx = dist[x]
            ok = True
            # only recent vertices can be too close in label
            for v in reversed(order):
                gap = fx - label[v]
                if gap >= d:
                    break
                if dx[v] + gap < d + 1:
                    ok = False
                    break
            if not ok:
                continue
            counter[0] += 1
            if counter[0] > limit:
                raise _OutOfBudget
            order.append(x)
            label[x] = fx
            if extend(rest, fx, reserved):
                return True
            order.pop()
            del label[x]
        dead.add(key)
        return False

    full = (1 << p) - 1
    old_limit = sys.getrecursionlimit()
    if p + 100 > old_limit:
        sys.setrecursionlimit(p + 100)
    try:
        for u0, reserved in starts:
            order[:] = [u0]
            label.clear()
            label[u0] = 0
            dead.clear()
            if extend(full & ~(1 << u0), 0, reserved):
                ordv = VertexOrdering(order)
                return SearchOutcome(Status.FOUND, ordv,
                                     label_from_ordering(tree, prof, ordv), counter[0], phase=2)
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, nodes_explored=counter[0])
    finally:
        sys.setrecursionlimit(old_limit)
    return SearchOutcome(Status.EXHAUSTED, nodes_explored=counter[0])


# --------------------------------------------------------------------------
# brute-force oracle
# --------------------------------------------------------------------------

def greedy_labels(tree: Tree, order) -> list[int]:
    """Smallest labels increasing along ``order`` that satisfy every pair.

    Each label is the least value clearing all earlier vertices, which is
    optimal for the fixed order.
    """
    d = int(tree.dist.max())
    dist = tree.dist.tolist()
    f = [0] * tree.p
    placed: list[int] = []
    for x in order:
        if placed:
            f[x] = max(f[placed[-1]] + 1,
                       max(f[v] + d + 1 - dist[v][x] for v in placed))
        placed.append(x)
    return f


def exact_rn(tree: Tree, cap: int = DEFAULT_CAP, budget: int = DEFAULT_EXACT_BUDGET,
             incumbent: RadioLabeling | None = None,
             use_certificate: bool = True) -> ExactResult:
    """Radio number by exhaustive branch and bound over vertex orderings.

    The incumbent comes from ``incumbent`` if given, else from the
    certificate search when it succeeds (``use_certificate``), else from
    labeling vertices in id order.  Raises :class:`BudgetExceeded` rather
    than return an unproven value.
    """
    p = tree.p
    if p > cap:
        raise CapExceeded(f"tree has {p} vertices, exact solver cap is {cap} "
                          f"(raise the cap explicitly; cost grows like p!)")
    if p == 1:
        return ExactResult(0, RadioLabeling([0]), 0)

    d = int(tree.dist.max())
    dist = tree.dist.tolist()

    best_f: list[int] | None = None
    if incumbent is not None:
        best_f = list(incumbent.labels)
    elif use_certificate and d >= 2:
        found = search_ordering(tree)
        if found.found:
            best_f = list(found.labeling.labels)
    if best_f is None:
        best_f = greedy_labels(tree, range(p))
    lo = min(best_f)
    best_f = [x - lo for x in best_f]
    best = max(best_f)

    f = [0] * p
    seq: list[int] = []
    used = [False] * p
    nodes = 0

    def dfs(f_last: int, depth: int) -> None:
        nonlocal best, best_f, nodes
        if depth == p:
            if f_last < best:
                best = f_last
                best_f = f[:]
            return
        # every further vertex costs at least one
        if f_last + (p - depth) >= best:
            return
        for x in range(p):
            if used[x]:
                continue
            dx = dist[x]
            fx = f_last + 1
            for v in seq:
                need = f[v] + d + 1 - dx[v]
                if need > fx:
                    fx = need
            if fx + (p - depth - 1) >= best:
                continue
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            used[x] = True
            f[x] = fx
            seq.append(x)
            dfs(fx, depth + 1)
            seq.pop()
            used[x] = False

    try:
        for x0 in range(p):
            nodes += 1
            used[x0] = True
            f[x0] = 0
            seq.append(x0)
            dfs(0, 1)
            seq.pop()
            used[x0] = False
    except _OutOfBudget:
        raise BudgetExceeded(nodes, budget) from None
    return ExactResult(best, RadioLabeling(best_f), nodes)
