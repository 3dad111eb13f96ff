"""Stars, double stars and the three center-identifying tree compositions.

``wk``  identify the weight centers of k trees into one vertex.
``sk``  hang k copies of a tree, by their weight centers, off a k-star's leaves.
``dk``  hang 2k copies off the leaves of a k-double star.

:func:`reconcile` compares the closed-form radio number of a composed tree
with the level bound, the certificate search and (within the cap) the
brute-force oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .solvers import (DEFAULT_BUDGET, DEFAULT_CAP, DEFAULT_EXACT_BUDGET, BudgetExceeded,
                      Status, exact_rn, search_ordering)
from .tree_core import Tree, diameter, from_edges, star_tree
from .tree_metrics import bantva_lower_bound, profile, weight_centers

HUB = "hub"


class Family(str, enum.Enum):
    WK = "wk"
    SK = "sk"
    DK = "dk"


class CompositionError(ValueError):
    pass


@dataclass(frozen=True)
class CompositionSpec:
    """How a composed tree was built.

    ``provenance[v]`` is ``(base_index, base_vertex)`` for vertices copied
    from a base tree and ``HUB`` for star / double-star hubs.  Merged base
    centers carry the provenance of the copy they came from, except in
    ``wk`` where the single merged vertex is the hub.
    """

    family: Family
    bases: tuple[Tree, ...]
    k: int
    provenance: tuple[object, ...] = field(repr=False)
    base_centers: tuple[int, ...] = ()

    @property
    def base_orders(self) -> tuple[int, ...]:
        return tuple(b.p for b in self.bases)

    def expected_order(self) -> int:
        if self.family is Family.WK:
            return sum(self.base_orders) - self.k + 1
        n0 = self.bases[0].p
        if self.family is Family.SK:
            return self.k * n0 + 1
        return 2 * (self.k * n0 + 1)


def make_kstar(k: int) -> Tree:
    if k < 1:
        raise CompositionError(f"k-star needs k >= 1, got {k}")
    return star_tree(k)


def make_kdoublestar(k: int) -> Tree:
    """Hubs 0 and 1; leaves ``2..k+1`` on hub 0 and ``k+2..2k+1`` on hub 1."""
    if k < 1:
        raise CompositionError(f"k-double star needs k >= 1, got {k}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(k)]
    edges += [(1, 2 + k + i) for i in range(k)]
    return from_edges(2 * k + 2, edges)


def _unique_center(tree: Tree, idx: int) -> int:
    if tree.p == 1:
        return 0
    centers = weight_centers(tree)
    if len(centers) != 1:
        raise CompositionError(
            f"base {idx} has two weight centers {centers}; identification at "
            f"a weight center is only defined for single-center bases")
    return centers[0]


def _attach(base: Tree, center: int, anchor: int, next_id: int, idx: int,
            edges: list, prov: list) -> int:
    """Copy ``base`` with ``center`` glued onto existing vertex ``anchor``."""
    ids = {center: anchor}
    for v in range(base.p):
        if v != center:
            ids[v] = next_id
            prov.append((idx, v))
            next_id += 1
    edges.extend((ids[u], ids[v]) for u, v in base.edges)
    return next_id


def _check_centers(tree: Tree, expect: Sequence[int], family: Family) -> None:
    got = weight_centers(tree)
    if tuple(sorted(got)) != tuple(sorted(expect)):
        raise CompositionError(
            f"{family.value}: composed tree has weight centers {got}, expected {tuple(expect)}")


def compose_wk(bases: Sequence[Tree]) -> tuple[Tree, CompositionSpec]:
    """Merge the weight centers of all ``bases`` into vertex 0."""
    k = len(bases)
    if k < 2:
        raise CompositionError(f"wk needs at least 2 base trees, got {k}")
    centers = [_unique_center(b, i) for i, b in enumerate(bases)]
    edges: list = []
    prov: list = [HUB]
    nxt = 1
    for i, (b, c) in enumerate(zip(bases, centers)):
        nxt = _attach(b, c, 0, nxt, i, edges, prov)
    tree = from_edges(nxt, edges)
    spec = CompositionSpec(Family.WK, tuple(bases), k, tuple(prov), tuple(centers))
    _check_centers(tree, [0], Family.WK)
    return tree, spec


def compose_sk(base: Tree, k: int) -> tuple[Tree, CompositionSpec]:
    """k-star hub is vertex 0; copy ``i``'s center sits on leaf ``i + 1``."""
    if k < 2:
        raise CompositionError(f"sk needs k >= 2, got {k}")
    c = _unique_center(base, 0)
    edges = [(0, i + 1) for i in range(k)]
    prov: list = [HUB] + [(i, c) for i in range(k)]
    nxt = k + 1
    for i in range(k):
        nxt = _attach(base, c, i + 1, nxt, i, edges, prov)
    tree = from_edges(nxt, edges)
    spec = CompositionSpec(Family.SK, (base,), k, tuple(prov), (c,))
    _check_centers(tree, [0], Family.SK)
    return tree, spec


def compose_dk(base: Tree, k: int) -> tuple[Tree, CompositionSpec]:
    """Double-star hubs are 0 and 1; copies ``0..k-1`` hang off hub 0."""
    if k < 1:
        raise CompositionError(f"dk needs k >= 1, got {k}")
    c = _unique_center(base, 0)
    ds = make_kdoublestar(k)
    edges = list(ds.edges)
    prov: list = [HUB, HUB] + [(i, c) for i in range(2 * k)]
    nxt = 2 * k + 2
    for i in range(2 * k):
        nxt = _attach(base, c, 2 + i, nxt, i, edges, prov)
    tree = from_edges(nxt, edges)
    spec = CompositionSpec(Family.DK, (base,), k, tuple(prov), (c,))
    _check_centers(tree, [0, 1], Family.DK)
    return tree, spec


def compose(family: Family | str, bases: Sequence[Tree], k: int | None = None
            ) -> tuple[Tree, CompositionSpec]:
    family = Family(family)
    if family is Family.WK:
        if k is not None and k != len(bases):
            raise CompositionError(f"wk: k={k} but {len(bases)} base trees given")
        return compose_wk(bases)
    if len(bases) != 1:
        raise CompositionError(f"{family.value} takes exactly one base tree, got {len(bases)}")
    if k is None:
        raise CompositionError(f"{family.value} needs k")
    if family is Family.SK:
        return compose_sk(bases[0], k)
    return compose_dk(bases[0], k)


def predicted_rn(spec: CompositionSpec, base_rns: Sequence[int], composed_d: int) -> int:
    """Closed-form radio number of the composed tree from its bases'.

    ``composed_d`` must be the measured diameter of the composed tree.
    """
    if len(base_rns) != len(spec.bases) or any(r is None for r in base_rns):
        raise CompositionError(
            f"need one radio number per base ({len(spec.bases)}), got {list(base_rns)}")
    d = composed_d
    if spec.family is Family.WK:
        total = sum(rn + (b.p - 1) * (d - diameter(b)) for rn, b in zip(base_rns, spec.bases))
        return total - spec.k + 1
    (rn,) = base_rns
    n0, d0, k = spec.bases[0].p, diameter(spec.bases[0]), spec.k
    if spec.family is Family.SK:
        return k * (rn + n0 * (d - d0 - 2) + d0) + 1
    return 2 * k * (rn + n0 * (d - d0 - 3) + d0) + d


def format_provenance(spec: CompositionSpec) -> str:
    out = []
    for v, src in enumerate(spec.provenance):
        out.append(f"{v} hub" if src == HUB else f"{v} {src[0]} {src[1]}")
    return "\n".join(out) + "\n"


@dataclass
class PredictionReport:
    family: Family
    k: int
    p: int
    d: int
    bases_certified: bool
    base_rns: tuple[int | None, ...]
    predicted_rn: int | None = None
    bound: int | None = None
    search_status: Status | None = None
    search_span: int | None = None
    exact_rn: int | None = None
    exact_note: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def flags(self) -> dict[str, bool]:
        """Agreement flags; a leg that produced no value counts as disagreement."""
        out = {"bases_certified": self.bases_certified,
               "predicted_eq_bound": self.predicted_rn is not None
               and self.predicted_rn == self.bound,
               "search_found": self.search_status is Status.FOUND,
               "search_eq_predicted": self.search_span is not None
               and self.search_span == self.predicted_rn}
        if self.exact_note != "skipped":
            out["exact_eq_predicted"] = self.exact_rn is not None \
                and self.exact_rn == self.predicted_rn
        return out

    @property
    def all_agree(self) -> bool:
        return all(self.flags.values())

    def as_pairs(self) -> list[tuple[str, object]]:
        status = None if self.search_status is None else self.search_status.value
        pairs = [
            ("family", self.family.value), ("k", self.k), ("p", self.p), ("d", self.d),
            ("base_rn", ",".join("-" if r is None else str(r) for r in self.base_rns)),
            ("predicted", self.predicted_rn), ("bound", self.bound),
            ("search", status), ("search_span", self.search_span),
            ("exact", self.exact_rn if self.exact_rn is not None else self.exact_note or None),
        ]
        pairs += list(self.flags.items())
        pairs.append(("agree", self.all_agree))
        return pairs


def reconcile(spec: CompositionSpec, tree: Tree, cap: int = DEFAULT_CAP,
              budget: int = DEFAULT_BUDGET,
              exact_budget: int = DEFAULT_EXACT_BUDGET) -> PredictionReport:
    """Run every leg (prediction, bound, search, oracle) on a composed tree.

    A base certified by the search contributes the level bound it attains.
    An uncertified base within the cap contributes its brute-force value, so
    the prediction is still shown, but ``bases_certified`` stays false.
    Disagreements land in the flags, never in exceptions.
    """
    base_rns: list[int | None] = []
    certified = True
    notes = []
    for i, b in enumerate(spec.bases):
        bp = profile(b) if b.p >= 2 else None
        if bp is None or bp.diameter < 2:
            base_rns.append(None)
            certified = False
            notes.append(f"base {i}: diameter < 2, no certificate")
            continue
        out = search_ordering(b, bp, budget)
        if out.found:
            base_rns.append(out.span)
            continue
        certified = False
        notes.append(f"base {i}: certificate search {out.status.value}")
        rn = None
        if b.p <= cap:
            try:
                rn = exact_rn(b, cap=cap, budget=exact_budget).rn
                notes.append(f"base {i}: exact rn {rn} vs level bound {bantva_lower_bound(b, bp)}")
            except BudgetExceeded:
                pass
        base_rns.append(rn)

    prof = profile(tree)
    report = PredictionReport(spec.family, spec.k, tree.p, prof.diameter,
                              bases_certified=certified, base_rns=tuple(base_rns), notes=notes)
    if all(r is not None for r in base_rns):
        report.predicted_rn = predicted_rn(spec, base_rns, prof.diameter)
    report.bound = bantva_lower_bound(tree, prof)
    found = search_ordering(tree, prof, budget)
    report.search_status = found.status
    report.search_span = found.span
    if tree.p <= cap:
        try:
            report.exact_rn = exact_rn(tree, cap=cap, budget=exact_budget).rn
        except BudgetExceeded as exc:
            report.exact_note = "budget"
            notes.append(str(exc))
    else:
        report.exact_note = "skipped"
    return report
