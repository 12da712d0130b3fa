import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecore.graph import (
    EvenClosedWalk,
    Graph,
    GraphError,
    Kind,
    NotApplicable,
    builtin_graph,
    check_walk,
    classify,
    counterexample_graph,
    cycle_graph,
    cyclic_reorder,
    find_even_closed_walk,
    in_cycle_normal_form,
    is_whiskered,
    parse_graph,
    whiskered_cycle,
    whiskered_normal_form,
)


def test_parse_examples():
    g = parse_graph("x1 x2\nx2 x3")
    assert (g.s, g.n) == (2, 3)
    g = parse_graph("# square\na b\nb c\n\nc d\na d\n")
    assert (g.n, g.s) == (4, 4)
    assert g.edge_names() == [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]


@pytest.mark.parametrize("text", [
    "x1 x2\nx1 x2",          # duplicate
    "x1 x2\nx2 x1",          # duplicate, reversed
    "x1 x1",                 # loop
    "x1 x2\nx3 x4",          # disconnected
    "",                      # empty
    "# only comments\n",
    "x1 x2 x3",              # malformed line
])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_classify_examples():
    c = classify(parse_graph("x1 x2\nx2 x3"))
    assert c.kind is Kind.TREE and c.is_basic
    c = classify(cycle_graph(4))
    assert (c.kind, c.d, c.s, c.n, c.analytic_spread) == (Kind.UNIQUE_EVEN_CYCLE, 4, 4, 4, 3)
    assert not c.is_basic
    c = classify(counterexample_graph())
    assert c.kind is Kind.GENERAL and c.analytic_spread == 5
    assert c.cycle_edges == (1, 2, 3, 4)
    c = classify(cycle_graph(5))
    assert c.kind is Kind.UNIQUE_ODD_CYCLE and c.is_basic and c.analytic_spread == 5


def test_classify_as_dict_keys():
    assert classify(cycle_graph(4)).as_dict() == {
        "kind": "UniqueEvenCycle", "s": 4, "n": 4, "d": 4, "ell": 3, "is_basic": False,
        "cycle_edges": [1, 2, 3, 4]}


def test_whiskered_examples():
    assert is_whiskered(cycle_graph(6))
    g = whiskered_cycle(4, [1, 3, 3])
    assert is_whiskered(g) and classify(g).kind is Kind.WHISKERED_EVEN_CYCLE
    assert classify(g).analytic_spread == g.s - 1
    assert not is_whiskered(counterexample_graph())


def test_walk_examples():
    assert find_even_closed_walk(cycle_graph(3)) is None
    w = find_even_closed_walk(cycle_graph(6))
    assert sorted(w.edge_sequence) == [1, 2, 3, 4, 5, 6]
    # two triangles joined by an edge
    g = parse_graph("a b\nb c\na c\nc d\nd e\ne f\nd f")
    w = find_even_closed_walk(g)
    assert len(w) == 8 and check_walk(g, w)
    # bowtie: triangles sharing a vertex give a 6-walk without repeats
    g = parse_graph("a b\nb c\na c\nc d\nd e\nc e")
    w = find_even_closed_walk(g)
    assert len(w) == 6 and sorted(w.edge_sequence) == [1, 2, 3, 4, 5, 6] and check_walk(g, w)


def test_walk_parity_rejects_bad_repeats():
    assert not EvenClosedWalk((1, 2, 2, 3)).is_irreducible()
    assert not EvenClosedWalk((1, 2, 3, 1)).is_irreducible()
    assert EvenClosedWalk((1, 2, 1, 3)).is_irreducible()


def test_cyclic_reorder_examples():
    g = cycle_graph(4)
    g2, c2 = cyclic_reorder(g, classify(g), 4)
    assert g2 == g
    g2, c2 = cyclic_reorder(g, classify(g), 2)
    assert in_cycle_normal_form(g2, c2)
    assert len(g2.edge_set()) == 4 and c2.kind is Kind.UNIQUE_EVEN_CYCLE
    # names rotate: old e2 = x2 x3 is now the closing edge x1 x_d
    assert set(g2.edge_names()[3]) == {"x2", "x3"}
    w = whiskered_cycle(4, [1])
    w2, wc = cyclic_reorder(w, classify(w), 3)
    assert is_whiskered(w2, wc) and in_cycle_normal_form(w2, wc)
    leaf_edge = w2.edge_names()[4]
    assert "x5" in leaf_edge and "x1" in leaf_edge
    with pytest.raises(NotApplicable):
        cyclic_reorder(w, classify(w), 5)


def _names(g):
    return frozenset(frozenset(e) for e in g.edge_names())


def test_cyclic_reorder_composes():
    g = whiskered_cycle(6, [2, 5])
    c = classify(g)
    for j, k in itertools.product(c.cycle_edges, repeat=2):
        gj, cj = cyclic_reorder(g, c, j)
        # the edge that was e_k in g, located in gj by vertex names
        names_k = frozenset(g.edge_names()[k - 1])
        kk = [i for i, e in enumerate(gj.edge_names(), start=1) if frozenset(e) == names_k][0]
        g2, c2 = cyclic_reorder(gj, cj, kk)
        g1, c1 = cyclic_reorder(g, c, k)
        assert _names(g2) == _names(g1) and c2 == c1


def test_whiskered_normal_form_puts_leaf_on_own_edge():
    g = parse_graph("p a\na b\nb c\nc d\nd a")
    g2, c2 = whiskered_normal_form(g)
    assert in_cycle_normal_form(g2, c2)
    u, v = sorted(g2.edge(5))
    assert u < 4 and v == 4


def test_builtins():
    assert classify(builtin_graph("whiskered-c4")).s == 5
    with pytest.raises(GraphError):
        builtin_graph("k5")


def _connected_graphs(max_n):
    for n in range(2, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for k in range(n - 1, len(pairs) + 1):
            for es in itertools.combinations(pairs, k):
                G = nx.Graph(es)
                if G.number_of_nodes() != n or not nx.is_connected(G):
                    continue
                key = nx.weisfeiler_lehman_graph_hash(G)
                if any(nx.is_isomorphic(G, H) for H in seen_by(seen, key)):
                    continue
                seen.add((key, G))
                yield es


def seen_by(seen, key):
    return [H for k, H in seen if k == key]


def test_walk_exists_iff_not_basic_exhaustive():
    """All connected graphs on <= 6 vertices, up to isomorphism."""
    count = 0
    for es in _connected_graphs(6):
        g = Graph([str(v) for v in range(max(max(e) for e in es) + 1)], list(es))
        c = classify(g)
        w = find_even_closed_walk(g)
        G = nx.Graph(es)
        # networkx oracle: linear type iff tree or unicyclic with odd cycle
        cyc = nx.cycle_basis(G)
        basic = len(cyc) == 0 or (len(cyc) == 1 and len(cyc[0]) % 2 == 1)
        assert c.is_basic == basic
        assert (w is None) == basic
        if w is not None:
            assert check_walk(g, w)
        assert (c.kind is Kind.TREE) == (g.s == g.n - 1)
        assert c.unicyclic == (g.s == g.n)
        count += 1
    assert count == 1 + 2 + 6 + 21 + 112  # connected graphs on 2..6 vertices


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 6, 8]), st.lists(st.integers(1, 8), max_size=4), st.data())
def test_reorder_keeps_whiskered_structure(d, att, data):
    att = [a for a in att if a <= d]
    g = whiskered_cycle(d, att)
    c = classify(g)
    target = data.draw(st.sampled_from(c.cycle_edges))
    g2, c2 = cyclic_reorder(g, c, target)
    assert in_cycle_normal_form(g2, c2)
    assert is_whiskered(g2, c2) and c2.s == c.s and c2.d == d
    assert _names(g2) == _names(g)
    assert frozenset(g2.edge_names()[d - 1]) == frozenset(g.edge_names()[target - 1])
