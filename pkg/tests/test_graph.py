import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from doubly_resolving import graph as G
from doubly_resolving.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphParseError,
    apsp,
    find_cycle,
    is_connected,
    leaves,
    parse_graph,
    to_edge_list,
    to_json,
    twin_partition,
)

from conftest import connected_graphs, trees, unicyclic_graphs


def paw():
    # triangle 0-1-2 with pendant 3 on 0
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


# --- parsing ----------------------------------------------------------------

def test_parse_p3():
    g = parse_graph("0 1\n1 2")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_rejects_self_loop():
    with pytest.raises(GraphParseError, match="self-loop"):
        parse_graph("0 0")


def test_parse_rejects_duplicate_edge():
    with pytest.raises(GraphParseError, match="duplicate") as exc:
        parse_graph("0 1\n0 1")
    assert exc.value.line == 2


def test_parse_reversed_duplicate():
    with pytest.raises(GraphParseError, match="duplicate"):
        parse_graph("0 1\n1 0")


def test_parse_comments_and_header():
    g = parse_graph("# a comment\nn 4\n0 1\n\n# another\n1 2\n")
    assert g.n == 4
    assert g.degrees() == [1, 2, 1, 0]


def test_parse_out_of_range_against_header():
    with pytest.raises(GraphParseError, match="out of range") as exc:
        parse_graph("n 3\n0 1\n1 3")
    assert exc.value.line == 3


@pytest.mark.parametrize("text, line", [("0 1\n1 x", 2), ("0 1 2", 1), ("n\n", 1), ("-1 2", 1)])
def test_parse_syntax_errors_report_line(text, line):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_parse_empty_is_error():
    with pytest.raises(GraphParseError):
        parse_graph("# nothing\n")


def test_parse_single_vertex_header():
    assert parse_graph("n 1\n").n == 1


def test_parse_json():
    g = parse_graph('{"n": 4, "edges": [[0, 1], [1, 2]]}')
    assert g.n == 4 and g.m == 2


@pytest.mark.parametrize("doc", [
    '{"n": 2, "edges": [[0, 2]]}',
    '{"edges": [[0, 0]]}',
    '{"edges": [[0, 1], [1, 0]]}',
    '{"edges": [[0, 1, 2]]}',
    '{"n": 2, "edges": [[0, 1]',
    '[1, 2]',
])
def test_parse_json_errors(doc):
    with pytest.raises(GraphParseError):
        parse_graph(doc)


@given(connected_graphs(min_n=1, max_n=12))
def test_round_trip(g):
    assert parse_graph(to_edge_list(g)) == g
    assert parse_graph(to_json(g)) == g


def test_serializer_sorts_edges():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert to_edge_list(g) == "n 3\n0 1\n1 2\n"


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


# --- distances --------------------------------------------------------------

def test_apsp_p3():
    dm = apsp(G.path(3))
    assert dm(0, 2) == 2 and dm.diam == 2


def test_apsp_c5_rows_are_permutations():
    dm = apsp(G.cycle(5))
    assert dm.diam == 2
    for row in dm.rows():
        assert sorted(row) == [0, 1, 1, 2, 2]


def test_apsp_star():
    dm = apsp(G.star(5))
    assert dm.diam == 2
    assert dm(1, 2) == 2


def test_apsp_disconnected_reports_pair():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError) as exc:
        apsp(g)
    u, v = exc.value.pair
    assert nx.has_path(nx.Graph(g.edges()), u, v) is False


@given(connected_graphs(min_n=1, max_n=12))
def test_apsp_metric_properties(g):
    d = apsp(g).d
    assert np.all(np.diag(d) == 0)
    assert np.array_equal(d, d.T)
    # triangle inequality: d[u,w] <= d[u,v] + d[v,w]
    assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :])
    for u, v in itertools.combinations(range(g.n), 2):
        assert (d[u, v] == 1) == (v in g.adj[u])


@given(connected_graphs(min_n=2, max_n=12))
def test_apsp_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ref = dict(nx.all_pairs_shortest_path_length(h))
    d = apsp(g)
    assert all(d(u, v) == ref[u][v] for u in range(g.n) for v in range(g.n))


@pytest.mark.parametrize("g, expected", [
    (G.complete(3), True),
    (Graph.from_edges(2, []), False),
    (G.cycle(6), True),
])
def test_is_connected(g, expected):
    assert is_connected(g) is expected


# --- leaves and twins -------------------------------------------------------

def test_leaves():
    assert leaves(G.path(5)) == (0, 4)
    assert leaves(G.cycle(4)) == ()
    assert leaves(G.star(5)) == (1, 2, 3, 4)


def test_twins_k23():
    tp = twin_partition(G.complete_bipartite(2, 3))
    assert [(c.kind, c.members) for c in tp.classes] == [("open", (0, 1)), ("open", (2, 3, 4))]


def test_twins_k4():
    tp = twin_partition(G.complete(4))
    assert [(c.kind, c.members) for c in tp.classes] == [("closed", (0, 1, 2, 3))]


def _twin_pairs_brute(g):
    return {
        (u, v) for u, v in itertools.combinations(range(g.n), 2)
        if g.adj[u] - {v} == g.adj[v] - {u}
    }


def test_twins_p4_none():
    # all six pairs of P4 checked against the definition
    assert _twin_pairs_brute(G.path(4)) == set()
    assert twin_partition(G.path(4)).classes == ()


@given(connected_graphs(min_n=2, max_n=9))
def test_twin_partition_matches_definition(g):
    tp = twin_partition(g)
    assert set(tp.pairs()) == _twin_pairs_brute(g)
    seen = [v for c in tp.classes for v in c.members]
    assert len(seen) == len(set(seen))


@given(connected_graphs(min_n=2, max_n=9))
def test_twins_equidistant(g):
    dm = apsp(g)
    for u, v in twin_partition(g).pairs():
        assert all(dm(u, x) == dm(v, x) for x in range(g.n) if x not in (u, v))


# --- cycles -----------------------------------------------------------------

def test_find_cycle_paw():
    cs = find_cycle(paw())
    assert cs.m == 3
    assert set(cs.cycle) == {0, 1, 2}
    assert cs.attachment == {0: frozenset({3})}


def test_find_cycle_bare():
    cs = find_cycle(G.cycle(6))
    assert cs.m == 6 and cs.attachment == {}
    assert cs.cycle == (0, 1, 2, 3, 4, 5)


def test_find_cycle_rejects_tree():
    with pytest.raises(GraphError, match="not unicyclic"):
        find_cycle(G.path(4))


def test_find_cycle_rejects_disconnected():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)])
    with pytest.raises(GraphError, match="disconnected"):
        find_cycle(g)


@given(unicyclic_graphs(min_n=3, max_n=12))
def test_find_cycle_structure(g):
    cs = find_cycle(g)
    assert cs.m >= 3 and len(set(cs.cycle)) == cs.m
    for i, v in enumerate(cs.cycle):
        assert cs.cycle[(i + 1) % cs.m] in g.adj[v]
    parts = [set(cs.cycle)] + [set(s) for s in cs.attachment.values()]
    assert sum(map(len, parts)) == g.n and set().union(*parts) == set(range(g.n))
    dm = apsp(g)
    for x, hanging in cs.attachment.items():
        assert g.degree(x) >= 3
        for v in hanging:
            assert all(dm(v, x) < dm(v, y) for y in cs.cycle if y != x)
        t = G.Graph.from_edges(0 + len(hanging) + 1, _relabel(g, [x, *sorted(hanging)]))
        assert G.is_tree(t)


def _relabel(g, keep):
    idx = {v: i for i, v in enumerate(keep)}
    return [(idx[u], idx[v]) for u, v in g.edges() if u in idx and v in idx]


# --- generators -------------------------------------------------------------

def test_generate_path():
    assert G.generate("path", 5).m == 4


def test_generate_join():
    g = G.generate("join_k2_empty", 3)
    assert g.n == 5
    assert sorted(g.degrees(), reverse=True) == [4, 4, 2, 2, 2]


def test_generate_random_unicyclic():
    for seed in range(20):
        g = G.generate("random_unicyclic", 10, seed=seed)
        assert is_connected(g) and g.m == 10


def test_generate_is_deterministic():
    assert G.random_connected(9, 0.3, 42) == G.random_connected(9, 0.3, 42)
    assert G.random_tree(12, 7) == G.random_tree(12, 7)


@pytest.mark.parametrize("kind, params", [
    ("cycle", (2,)), ("complete_bipartite", (0, 3)), ("join_k2_empty", (0,)), ("nope", (3,)),
])
def test_generate_invalid(kind, params):
    with pytest.raises(GraphError):
        G.generate(kind, *params)


def test_prufer_matches_networkx():
    for seq in itertools.product(range(5), repeat=3):
        ours = G.tree_from_prufer(seq).edges()
        ref = sorted(tuple(sorted(e)) for e in nx.from_prufer_sequence(list(seq)).edges())
        assert ours == ref


@given(trees(min_n=1, max_n=15))
def test_trees_are_trees(t):
    assert G.is_tree(t)
