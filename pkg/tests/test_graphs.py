import json

import pytest

from fedlab import graphs
from fedlab.errors import GraphFormatError, InvalidParamsError
from fedlab.graphs import ClassTag, closed_neighborhood, generate


def invariants_ok(g):
    assert all(all(0 <= u < g.n for u in a) for a in g.adjacency)
    for u in range(g.n):
        for v in g.adjacency[u]:
            assert u != v
            assert u in g.adjacency[v]
        assert list(g.adjacency[u]) == sorted(set(g.adjacency[u]))


def test_petersen_is_kneser_52():
    g = graphs.kneser(5, 2)
    invariants_ok(g)
    assert g.n == 10
    assert g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_single_vertex_complete():
    g = graphs.complete(1)
    assert g.n == 1 and g.m == 0


def test_gtd_3_2_construction():
    g = graphs.gtd(3, 2)
    invariants_ok(g)
    assert g.n == 9
    for x in range(3):
        assert g.degree(x) == 6  # clique (2) plus two copies of two subsets
    for y in range(3, 9):
        assert g.degree(y) == 2


def test_kneser_regularity():
    for n in (5, 6, 7):
        g = graphs.kneser(n, 2)
        deg = (n - 2) * (n - 3) // 2
        assert all(g.degree(v) == deg for v in range(g.n))


def test_hypercube_regular():
    for d in (1, 2, 3, 4):
        g = graphs.hypercube(d)
        assert g.n == 2**d
        assert all(g.degree(v) == d for v in range(g.n))


def test_products():
    c4 = graphs.product(graphs.path(2), graphs.path(2), "cartesian")
    assert graphs.isomorphic(c4, graphs.cycle(4))
    k4 = graphs.product(graphs.path(2), graphs.path(2), "strong")
    assert graphs.isomorphic(k4, graphs.complete(4))
    c6k2 = graphs.product(graphs.cycle(6), graphs.complete(2), "cartesian")
    assert c6k2.n == 12 and c6k2.m == 18
    assert graphs.isomorphic(c6k2, graphs.prism(6))


def test_product_commutes_up_to_isomorphism():
    cases = [
        (graphs.path(3), graphs.path(4)),
        (graphs.cycle(3), graphs.path(2)),
        (graphs.path(2), graphs.cycle(5)),
    ]
    for a, b in cases:
        for kind in ("cartesian", "strong"):
            assert graphs.isomorphic(
                graphs.product(a, b, kind), graphs.product(b, a, kind)
            )


def test_prism_and_moebius_indexing():
    p = graphs.prism(5)
    assert p.has_edge(0, 1)  # rung at column 0
    assert p.has_edge(0, 2) and p.has_edge(8, 0)  # cycle in layer 0
    m = graphs.moebius(4)
    for i in range(8):
        assert m.has_edge(i, (i + 1) % 8)
    for i in range(4):
        assert m.has_edge(i, i + 4)
    assert all(m.degree(v) == 3 for v in range(8))


def test_closed_neighborhood_examples():
    c5 = graphs.cycle(5)
    assert closed_neighborhood(c5, [0]) == (0, 1, 4)
    c7 = graphs.cycle(7)
    assert closed_neighborhood(c7, [0, 3]) == (0, 1, 2, 3, 4, 6)
    assert closed_neighborhood(c7, []) == ()


def test_random_tree_deterministic_and_uniformish():
    t1 = graphs.random_tree(9, 7)
    t2 = graphs.random_tree(9, 7)
    assert t1.adjacency == t2.adjacency
    assert graphs.is_tree(t1)
    t3 = graphs.random_tree(9, 8)
    assert graphs.is_tree(t3)
    seen = {graphs.random_tree(5, s).adjacency for s in range(40)}
    assert len(seen) > 10  # seeds genuinely vary the tree


def test_generate_dispatch_and_errors():
    g = generate(ClassTag("cycle", (6,)))
    assert g.tag.family == "cycle"
    with pytest.raises(InvalidParamsError):
        generate(ClassTag("kneser", (3, 2)))  # needs n >= 2k
    with pytest.raises(InvalidParamsError):
        generate(ClassTag("gtd", (2, 3)))
    with pytest.raises(InvalidParamsError):
        generate(ClassTag("moebius", (2,)))
    with pytest.raises(InvalidParamsError):
        ClassTag("nosuch", (1,))


def test_caterpillar_shape():
    g = graphs.caterpillar(2)
    assert g.n == 10
    assert g.degree(1) == 4 and g.degree(4) == 4
    assert all(g.degree(v) == 1 for v in range(6, 10))


def test_edge_list_roundtrip_and_validation():
    g = graphs.cycle(5)
    text = graphs.format_edge_list(g)
    h = graphs.parse_edge_list(text)
    assert h.adjacency == g.adjacency
    with pytest.raises(GraphFormatError):
        graphs.parse_edge_list("2 1\n0 0\n")
    with pytest.raises(GraphFormatError):
        graphs.parse_edge_list("2 2\n0 1\n1 0\n")
    with pytest.raises(GraphFormatError):
        graphs.parse_edge_list("2 1\n0 5\n")


def test_json_roundtrip():
    g = graphs.kneser(5, 2)
    doc = json.loads(json.dumps(graphs.to_json_dict(g)))
    h = graphs.from_json_dict(doc)
    assert h.adjacency == g.adjacency and h.tag == g.tag
    with pytest.raises(GraphFormatError):
        graphs.from_json_dict({"n": 2, "edges": [[0, 1], [1, 0]], "tag": None})


def test_gq_blowup():
    g = graphs.gq(3, 2, 2)
    assert g.n == 3 + 2 * 3 * 2
    # every blown-up pair is a clique joined to its subset
    assert g.has_edge(3, 4)
    assert g.has_edge(0, 3) or g.has_edge(1, 3)
