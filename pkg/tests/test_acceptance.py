"""Exit criteria.  One test per criterion; a PASS/FAIL line for each is
printed in the terminal summary (see ``conftest.pytest_terminal_summary``).

Every check is exact integer equality; there are no tolerances.
"""

from itertools import product

import pytest

from radiotree.compositions import compose, reconcile
from radiotree.corpus import random_trees
from radiotree.labeling import label_from_ordering, verify_radio
from radiotree.solvers import exact_rn, search_ordering
from radiotree.tree_core import path_tree, star_tree
from radiotree.tree_metrics import bantva_lower_bound, center_components, liu_lower_bound, profile

RESULTS: dict[int, tuple[bool, str]] = {}

CORPUS_SEED = 2024
STRUCTURE_SEED = 99
IDENTITY_SEED = 1234


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def l21_number(tree) -> int:
    """Smallest span of a labeling with gap >= 2 at distance 1, >= 1 at distance 2."""
    p, dist = tree.p, tree.dist
    span = 0
    while True:
        for f in product(range(span + 1), repeat=p):
            if all(abs(f[u] - f[v]) >= (2 if dist[u, v] == 1 else 1 if dist[u, v] == 2 else 0)
                   for u in range(p) for v in range(u + 1, p)):
                return span
        span += 1


def test_criterion_1_oracle_baselines():
    want = {"P_3": (path_tree(3), 3), "P_4": (path_tree(4), 5),
            "K_1,3": (star_tree(3), 4), "K_1,4": (star_tree(4), 5)}
    bad = []
    for name, (t, rn) in want.items():
        got = exact_rn(t, use_certificate=False).rn
        lb = bantva_lower_bound(t)
        if not got == rn == lb:
            bad.append(f"{name}: exact {got}, expected {rn}, bound {lb}")
    record(1, not bad, "; ".join(bad) or "exact rn 3,5,4,5 equal the level bound")


def test_criterion_2_bound_identity():
    trees = random_trees(1000, 4, 50, seed=IDENTITY_SEED)
    bad = [t for t in trees if liu_lower_bound(t) != bantva_lower_bound(t)]
    record(2, not bad, f"{len(trees) - len(bad)}/1000 trees with identical bounds")


@pytest.fixture(scope="module")
def small_corpus():
    rows = []
    for t in random_trees(500, 4, 9, seed=CORPUS_SEED):
        pr = profile(t)
        rows.append((t, pr, bantva_lower_bound(t, pr),
                     exact_rn(t, use_certificate=False).rn, search_ordering(t, pr)))
    return rows


def test_criterion_3_lower_bound_soundness(small_corpus):
    bad = [(t.edges, rn, lb) for t, _, lb, rn, _ in small_corpus if rn < lb]
    strict = sum(rn > lb for _, _, lb, rn, _ in small_corpus)
    record(3, not bad, f"{len(bad)} violations over {len(small_corpus)} trees "
                       f"({strict} with rn above the bound)")


def test_criterion_4_certificate_equivalence(small_corpus):
    bad = []
    found = 0
    for t, pr, lb, rn, out in small_corpus:
        if out.found != (rn == lb):
            bad.append(f"{t.edges}: search {out.status.value}, rn {rn}, bound {lb}")
            continue
        if out.found:
            found += 1
            f = label_from_ordering(t, pr, out.ordering)
            if not verify_radio(t, f) or f.span != lb:
                bad.append(f"{t.edges}: certificate labeling span {f.span}, bound {lb}")
    record(4, not bad, "; ".join(bad[:3]) or
           f"{found} FOUND with rn = bound, {len(small_corpus) - found} EXHAUSTED with rn > bound")


def _legs(name, family, bases, k=None, exact_expected=None):
    """predicted = bound = search span, and = exact wherever the cap allows."""
    t, spec = compose(family, bases, k)
    rep = reconcile(spec, t)
    vals = {"predicted": rep.predicted_rn, "bound": rep.bound, "search": rep.search_span}
    if t.p <= 10:
        vals["exact"] = rep.exact_rn
    ok = None not in vals.values() and len(set(vals.values())) == 1
    if exact_expected is not None:
        ok = ok and "exact" in vals and vals["exact"] == exact_expected
    shown = " ".join(f"{key}={'-' if v is None else v}" for key, v in vals.items())
    return ok, f"{name}: {shown}"


def _criterion(n, cases):
    results = [_legs(*c) for c in cases]
    record(n, all(ok for ok, _ in results),
           "; ".join(f"{'ok' if ok else 'MISMATCH'} {msg}" for ok, msg in results))


def test_criterion_5_wk_family():
    p3, p5 = path_tree(3), path_tree(5)
    _criterion(5, [("wk 2xP_3", "wk", [p3, p3], None, 5),
                   ("wk 3xP_3", "wk", [p3, p3, p3]),
                   ("wk 2xP_5", "wk", [p5, p5])])


def test_criterion_6_sk_family():
    p3, k13 = path_tree(3), star_tree(3)
    _criterion(6, [("sk P_3 k=2", "sk", [p3], 2, 11),
                   ("sk P_3 k=3", "sk", [p3], 3),
                   ("sk K_1,3 k=2", "sk", [k13], 2)])


def test_criterion_7_dk_family():
    p3 = path_tree(3)
    _criterion(7, [("dk P_3 k=1", "dk", [p3], 1, 15),
                   ("dk P_3 k=2", "dk", [p3], 2)])


def test_criterion_8_structure():
    sizes = {1: 0, 2: 0}
    bad = []
    for t in random_trees(1000, 4, 50, seed=STRUCTURE_SEED):
        pr = profile(t)
        n = len(pr.centers)
        if n not in sizes:
            bad.append(f"{n} centers")
            continue
        sizes[n] += 1
        if n == 2:
            a, b = pr.centers
            if t.dist[a, b] != 1 or center_components(t, pr) != (t.p // 2, t.p - t.p // 2) \
                    or t.p % 2:
                bad.append(f"{t.edges}: bad two-center split")
    record(8, not bad, f"{sizes[1]} one-center, {sizes[2]} two-center trees, "
                       f"{len(bad)} violations")


def test_criterion_9_diameter_two_coincidence():
    bad = []
    for k in range(2, 7):
        t = star_tree(k)
        rn, lam = exact_rn(t, use_certificate=False).rn, l21_number(t)
        if not rn == lam == k + 1:
            bad.append(f"K_1,{k}: rn {rn}, lambda {lam}")
    record(9, not bad, "; ".join(bad) or "rn(K_1,k) = lambda(K_1,k) = k+1 for k = 2..6")
