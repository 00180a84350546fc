from flagcalc import are_isomorphic, clique_complex, comparability_graph
from flagcalc.corpus import (
    FIXTURES,
    dunce_hat_graph,
    dunce_hat_poset,
    edge_link_graph,
    prism_graph,
    six_regular_graph,
    verify_corpus,
)
from flagcalc.textio import parse_graph, parse_poset


def test_every_fixture_assertion_passes():
    failures = [a.line() for a in verify_corpus() if not a.passed]
    assert not failures, failures


def test_fixture_payloads_parse_back():
    for name, fixture in FIXTURES.items():
        text = fixture.payload()
        if fixture.kind == "graph":
            parsed = parse_graph(text)
        else:
            parsed = parse_poset(text)
        assert parsed == fixture.builder(), name


def test_shape_fixtures():
    prism = prism_graph()
    assert len(prism.vertices) == 6 and len(prism.edges) == 9
    assert all(prism.degree(v) == 3 for v in prism.vertices)
    three = edge_link_graph()
    assert len(three.vertices) == 3 and len(three.edges) == 1


def test_dunce_structures_are_cross_consistent():
    d = dunce_hat_graph()
    p = dunce_hat_poset()
    assert are_isomorphic(comparability_graph(p), d) is not None
    k = clique_complex(d)
    assert len(k.vertex_set) == 17
    assert sum(1 for s in k.simplices if len(s) == 3) == 36


def test_six_regular_graph_is_vertex_transitive_enough():
    g = six_regular_graph()
    first = g.open_neighborhood_subgraph("1")
    for v in g.sorted_vertices():
        assert are_isomorphic(g.open_neighborhood_subgraph(v), first) is not None
