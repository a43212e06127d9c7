import networkx as nx
import pytest

from ltq_ceist.ceist import (
    CeistSet,
    SpanningTree,
    base_case,
    construct,
    even_step,
    odd_step,
    translate_tree,
)
from ltq_ceist.topology import build_ltq_direct, is_adjacent

# hand-executed construction at n = 4
LTQ4_T1 = {
    (8, 9), (9, 11), (10, 11),
    (12, 13), (13, 15), (14, 15),
    (4, 5), (5, 7), (6, 7),
    (8, 12), (4, 12),
    (0, 4), (1, 7), (2, 6), (3, 5),
}
LTQ4_T2 = {
    (0, 1), (1, 3), (2, 3), (0, 8), (10, 14), (6, 14), (1, 13), (3, 15),
    (11, 13), (9, 15), (5, 9), (7, 11), (8, 10), (12, 14), (4, 6),
}


def _nx_tree(t, n):
    g = nx.Graph()
    g.add_nodes_from(range(2 ** n))
    g.add_edges_from(t.edges)
    return g


def test_base_case():
    cs = base_case()
    assert cs.n == 2
    assert [t.edges for t in cs.trees] == [{(0, 1), (1, 3), (2, 3)}]
    assert cs.path == (0, 2)
    assert build_ltq_direct(2).edges - cs.trees[0].edges == {(0, 2)}
    assert nx.is_tree(_nx_tree(cs.trees[0], 2))


@pytest.mark.parametrize("offset, expected", [
    (8, {(8, 9), (9, 11), (10, 11)}),
    (12, {(12, 13), (13, 15), (14, 15)}),
    (4, {(4, 5), (5, 7), (6, 7)}),
])
def test_translate_tree(offset, expected):
    t = base_case().trees[0]
    out = translate_tree(t, offset, 4)
    assert out.edges == expected
    assert all(is_adjacent(u, v, 4) for u, v in out.edges)


@pytest.mark.parametrize("offset", [0, 2, 5, 16, -4])
def test_translate_tree_rejects_bad_offset(offset):
    with pytest.raises(ValueError):
        translate_tree(base_case().trees[0], offset, 4)


def test_odd_step_n3():
    cs = odd_step(base_case(), 3)
    assert cs.path is None
    assert cs.trees[0].edges == {(0, 1), (1, 3), (2, 3), (4, 5), (5, 7), (6, 7), (0, 4)}


def test_odd_step_n5_splices():
    cs = construct(5)
    assert (0, 16) in cs.trees[0].edges
    assert (2, 18) in cs.trees[1].edges
    # the last vertex of the input path (10) anchors nothing
    assert (10, 26) not in cs.trees[0].edges | cs.trees[1].edges


def test_odd_step_preconditions():
    with pytest.raises(ValueError):
        odd_step(base_case(), 5)
    with pytest.raises(ValueError):
        odd_step(CeistSet(2, base_case().trees, None), 3)
    with pytest.raises(ValueError):
        odd_step(construct(4), 4)


def test_even_step_n4_hand_executed():
    cs = even_step(base_case(), 4)
    assert cs.trees[0].edges == LTQ4_T1
    assert cs.trees[1].edges == LTQ4_T2
    assert cs.path == (0, 2, 10)
    everything = LTQ4_T1 | LTQ4_T2 | {(0, 2), (2, 10)}
    assert len(everything) == 32
    assert everything == build_ltq_direct(4).edges


def test_even_step_n6_example():
    cs = construct(6)
    t1, t2, t3 = (t.edges for t in cs.trees)
    assert {(0, 32), (32, 48), (16, 48)} <= t1
    assert {(34, 50), (18, 50)} <= t2
    assert {(v, v + 16) for v in range(16) if v % 2 == 0} <= t2  # even A-D edges
    assert {(32, 34), (34, 42), (48, 50), (50, 58), (16, 18), (18, 26)} <= t3
    assert not {(0, 32), (10, 42), (32, 48), (34, 50), (16, 48), (18, 50)} & t3
    assert cs.path == (0, 2, 10, 42)


def test_even_step_preconditions():
    with pytest.raises(ValueError):
        even_step(base_case(), 6)
    with pytest.raises(ValueError):
        even_step(CeistSet(2, base_case().trees, (0,)), 4)
    with pytest.raises(ValueError):
        even_step(construct(4), 5)


def test_construct_domain():
    with pytest.raises(ValueError):
        construct(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_construct_trees_are_spanning_and_disjoint(n):
    cs = construct(n)
    topo = build_ltq_direct(n)
    assert len(cs.trees) == n // 2
    assert (cs.path is not None) == (n % 2 == 0)
    seen = set()
    for t in cs.trees:
        assert t.n == n
        assert len(t.array) == 2 ** n - 1
        assert t.edges <= topo.edges
        assert nx.is_tree(_nx_tree(t, n))
        assert not seen & t.edges
        seen |= t.edges
    if n % 2 == 0:
        assert topo.edges - seen == set(cs.path_edges)
        assert len(cs.path) == n // 2 + 1
    else:
        assert len(topo.edges - seen) == 2 ** (n - 1) + (n - 1) // 2


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_path_extends_previous(n):
    prev, cur = construct(n - 2), construct(n)
    assert cur.path[:-1] == prev.path
    assert cur.path[-1] == prev.path[-1] + 2 ** (n - 1)
    assert all(v % 2 == 0 for v in cur.path)


@pytest.mark.parametrize("n", [3, 5, 6, 7, 8, 9, 10])
def test_splice_edges_even_and_valid(n):
    cs = construct(n)
    used = set().union(*(t.edges for t in cs.trees))
    if n % 2:
        anchors = construct(n - 1).path[: n // 2]
        splices = [(a, a + 2 ** (n - 1)) for a in anchors]
    else:
        anchors = construct(n - 2).path
        q = 2 ** (n - 2)
        splices = []
        for a in anchors:
            splices += [(a, a + 2 * q), (a + 2 * q, a + 3 * q), (a + q, a + 3 * q)]
    assert all(a % 2 == 0 for a in anchors)
    for u, v in splices:
        assert is_adjacent(u, v, n)
    if n % 2:
        assert set(splices) <= used


@pytest.mark.parametrize("n", [5, 8])
def test_tree_order_extends_previous_level(n):
    cur = construct(n)
    prev = construct(n - 1) if n % 2 else construct(n - 2)
    # tree i keeps the A-subcube copy of tree i one level down (the last is rebuilt at even n)
    keep = len(prev.trees) if n % 2 else len(prev.trees) - 1
    for i in range(keep):
        assert prev.trees[i].edges <= cur.trees[i].edges


def test_spanning_tree_value_semantics():
    a = SpanningTree(2, [(1, 0), (3, 1), (2, 3)])
    b = SpanningTree(2, [(0, 1), (1, 3), (2, 3)])
    assert a == b
    assert a.sorted_edges() == [(0, 1), (1, 3), (2, 3)]
    assert len(a) == 3
