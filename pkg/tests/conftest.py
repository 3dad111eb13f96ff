import networkx as nx
import pytest
from hypothesis import strategies as st

from radiotree.compositions import compose_dk, compose_sk
from radiotree.tree_core import from_edges, parse_tree, path_tree, star_tree


def to_nx(tree):
    g = nx.Graph()
    g.add_nodes_from(range(tree.p))
    g.add_edges_from(tree.edges)
    return g


@st.composite
def trees(draw, min_p=2, max_p=30):
    p = draw(st.integers(min_p, max_p))
    if p == 2:
        return from_edges(2, [(0, 1)])
    seq = draw(st.lists(st.integers(0, p - 1), min_size=p - 2, max_size=p - 2))
    return from_edges(p, nx.from_prufer_sequence(seq).edges())


@pytest.fixture
def p3():
    return parse_tree("3\n0 1\n1 2")


@pytest.fixture
def p4():
    return parse_tree("4\n0 1\n1 2\n2 3")


@pytest.fixture
def k13():
    return star_tree(3)


@pytest.fixture
def k14():
    return star_tree(4)


@pytest.fixture
def td1_p3():
    return compose_dk(path_tree(3), 1)[0]


@pytest.fixture
def ts2_p3():
    return compose_sk(path_tree(3), 2)[0]


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance as acc
    if not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acc.RESULTS):
        ok, detail = acc.RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
