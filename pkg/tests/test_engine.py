import pytest

from fedlab import engine, graphs, lp
from fedlab.engine import (
    big_F,
    bounds,
    build_program_a_model,
    closed_form_fed,
    f_value,
    gamma_f,
    is_fully_fd_critical,
    med_tree,
    solve_program_A,
    split_equality_check,
    split_fed,
)
from fedlab.errors import (
    InvalidPartitionError,
    NotATreeError,
    SizeLimitExceededError,
)
from fedlab.game import verify_certificate
from fedlab.rational import Rat, rat_ceil


def triangle_with_pendants():
    return graphs.graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    )


def test_gamma_f_examples():
    assert gamma_f(graphs.cycle(5))[0] == Rat(5, 3)
    value, witness = gamma_f(graphs.gtd(3, 2))
    assert value == Rat(3, 2)
    assert witness.is_dominating(graphs.gtd(3, 2))
    assert gamma_f(graphs.caterpillar(2))[0] == 2
    assert gamma_f(graphs.graph_from_edges(0, []))[0] == 0


def test_gamma_f_degree_bounds():
    # n/(max_deg+1) <= gamma_f <= n/(min_deg+1)
    for g in [graphs.cycle(6), graphs.kneser(5, 2), graphs.prism(5), graphs.path(6)]:
        value, _ = gamma_f(g)
        assert Rat(g.n, g.max_degree() + 1) <= value <= Rat(g.n, g.min_degree() + 1)


def test_f_value_examples():
    for n in (2, 4, 6):
        assert f_value(graphs.complete(n), n - 1)[0] == 1
    pet = graphs.kneser(5, 2)
    for v in (0, 3, 9):
        assert f_value(pet, v)[0] == 3
    assert f_value(graphs.star(3), 1)[0] == 2


def test_big_F_examples():
    assert big_F(graphs.complete(7)) == (Rat(1), 0)
    assert big_F(graphs.kneser(6, 2))[0] == 3
    assert big_F(graphs.star(3))[0] == 2
    # ties resolved to the least vertex index
    assert big_F(graphs.cycle(5))[1] == 0


def test_gamma_f_le_F():
    for g in [graphs.cycle(7), graphs.gtd(3, 2), graphs.star(4), graphs.prism(4)]:
        assert gamma_f(g)[0] <= big_F(g)[0]


def test_med_tree_examples():
    assert med_tree(graphs.path(1)) == 1
    assert med_tree(graphs.path(2)) == 1
    assert med_tree(graphs.path(4)) == 2
    assert med_tree(graphs.star(5)) == 2
    assert med_tree(graphs.caterpillar(2)) == 4
    for n in range(1, 13):
        assert med_tree(graphs.path(n)) == rat_ceil(Rat(n, 2))
    with pytest.raises(NotATreeError):
        med_tree(graphs.cycle(4))


def test_split_fed_examples():
    value, cert = split_fed(graphs.star(3), ((0,), (1, 2, 3)))
    assert value == 2
    assert verify_certificate(graphs.star(3), cert).ok

    g = graphs.gtd(3, 2)
    value, cert = split_fed(g, ((0, 1, 2), tuple(range(3, 9))))
    assert value == Rat(5, 2)
    assert verify_certificate(g, cert).ok

    value, _ = split_fed(graphs.complete(5), (tuple(range(5)), ()))
    assert value == 1

    with pytest.raises(InvalidPartitionError):
        split_fed(graphs.cycle(5), ((0, 1), (2, 3, 4)))


def test_split_fed_equals_big_F():
    g = triangle_with_pendants()
    value, _ = split_fed(g, ((0, 1, 2), (3, 4, 5)))
    assert value == big_F(g)[0] == 3


def test_criticality():
    g = graphs.gtd(3, 2)
    assert not is_fully_fd_critical(g, 4)
    assert not is_fully_fd_critical(graphs.star(3), 1)
    tri = triangle_with_pendants()
    for leaf in (3, 4, 5):
        assert is_fully_fd_critical(tri, leaf)
    # deleting the only vertex drops gamma_f from 1 to 0
    assert is_fully_fd_critical(graphs.complete(1), 0)
    # K_2 - v is a single vertex that still needs weight 1
    assert not is_fully_fd_critical(graphs.complete(2), 0)


def test_split_equality_check():
    assert split_equality_check(triangle_with_pendants(), ((0, 1, 2), (3, 4, 5)))
    assert not split_equality_check(graphs.star(3), ((0,), (1, 2, 3)))
    g = graphs.gtd(3, 2)
    assert not split_equality_check(g, ((0, 1, 2), tuple(range(3, 9))))
    with pytest.raises(InvalidPartitionError):
        split_equality_check(graphs.complete(4), (tuple(range(4)), ()))


def test_program_a_examples():
    value, cert = solve_program_A(graphs.complete(2))
    assert value == 1
    assert {s.weights for s in cert.states} == {(Rat(1), Rat(0)), (Rat(0), Rat(1))}
    assert verify_certificate(graphs.complete(2), cert).ok

    value, cert = solve_program_A(graphs.path(3))
    assert value == 2
    assert verify_certificate(graphs.path(3), cert).ok

    value, cert = solve_program_A(graphs.moebius(4))
    assert value == Rat(8, 3)
    assert verify_certificate(graphs.moebius(4), cert).ok


def test_program_a_value_sandwich():
    for g in [
        graphs.path(4),
        graphs.cycle(5),
        graphs.star(3),
        graphs.gtd(3, 2),
        graphs.kneser(5, 2),
    ]:
        value, cert = solve_program_A(g)
        gv, _ = gamma_f(g)
        fv, _ = big_F(g)
        assert gv <= fv <= value <= 2 * gv
        assert cert.weight == value


def test_program_a_matches_monolithic_model():
    for g in [
        graphs.complete(2),
        graphs.path(3),
        graphs.complete(3),
        graphs.path(4),
        graphs.cycle(4),
    ]:
        mono = lp.solve(build_program_a_model(g))
        assert mono.status == lp.OPTIMAL
        value, _ = solve_program_A(g)
        assert mono.value == value


def test_program_a_budget():
    with pytest.raises(SizeLimitExceededError):
        solve_program_A(graphs.cycle(13))
    value, _ = solve_program_A(graphs.cycle(13), budget=13)
    assert value == 5


def test_program_a_budget_env(monkeypatch):
    monkeypatch.setenv(engine.LP_A_BUDGET_ENV, "3")
    with pytest.raises(SizeLimitExceededError):
        solve_program_A(graphs.cycle(4))
    monkeypatch.delenv(engine.LP_A_BUDGET_ENV)


def test_disconnected_program_a():
    g = graphs.graph_from_edges(2, [])
    value, _ = solve_program_A(g)
    assert value == 2


def test_closed_forms_basic():
    assert closed_form_fed(graphs.cycle(9)).exact == 3
    assert closed_form_fed(graphs.kneser(7, 2)).exact == Rat(8, 3)
    assert closed_form_fed(graphs.hypercube(7)).exact == 16
    assert closed_form_fed(graphs.complete(6)).exact == 1
    assert closed_form_fed(graphs.path(9)).exact == 5
    assert closed_form_fed(graphs.star(4)).exact == 2
    assert closed_form_fed(graphs.complete_multipartite((2, 3))).exact == 2
    assert closed_form_fed(graphs.gtd(4, 3)).exact == Rat(7, 3)
    assert closed_form_fed(graphs.gq(3, 2, 2)).exact == Rat(5, 2)
    assert closed_form_fed(graphs.kneser(5, 2)).exact == 3
    assert closed_form_fed(graphs.grid(7, 2)).exact == 5
    assert closed_form_fed(graphs.grid(2, 7)).exact == 5


def test_closed_form_hypercube_intervals():
    cf = closed_form_fed(graphs.hypercube(2))
    assert cf.exact is None
    assert (cf.interval.lo, cf.interval.hi) == (Rat(4, 3), Rat(2))
    assert closed_form_fed(graphs.hypercube(1)).exact == 1
    assert closed_form_fed(graphs.hypercube(3)).exact == 2


def test_closed_form_prism_moebius():
    for n in (3, 4, 5, 7, 8, 9, 11, 12):
        cf = closed_form_fed(graphs.prism(n))
        assert cf.exact == rat_ceil(Rat(n, 2)), n
    cf = closed_form_fed(graphs.prism(6))
    assert cf.exact is None
    assert cf.interval == engine.Interval(Rat(7, 2), Rat(15, 4), lo_strict=True)
    assert closed_form_fed(graphs.prism(10)).exact == Rat(28, 5)
    cf = closed_form_fed(graphs.prism(14))
    assert cf.exact is None and cf.interval.hi == Rat(31, 4)

    for n in (3, 5, 6, 7, 9):
        cf = closed_form_fed(graphs.moebius(n))
        assert cf.exact == rat_ceil(Rat(n, 2)), n
    assert closed_form_fed(graphs.moebius(4)).exact == Rat(8, 3)
    cf = closed_form_fed(graphs.moebius(8))
    assert cf.exact is None and cf.interval.hi == Rat(19, 4)
    cf = closed_form_fed(graphs.moebius(16))
    assert cf.exact is None
    assert cf.interval.lo == Rat(18 * 20, 2 * 21)  # 4 mod 12 family


def test_closed_form_grid_and_strong_grid():
    cf = closed_form_fed(graphs.grid(4, 4))
    assert cf.exact is None
    assert cf.interval.hi == Rat(16, 5) + Rat(16, 15) + Rat(39, 15)
    cf = closed_form_fed(graphs.strong_grid(4, 4))
    assert cf.interval.hi == Rat(16, 9) + Rat(16 * 8, 9) + Rat(114, 9)
    assert closed_form_fed(graphs.strong_grid(1, 9)).exact == 5


def test_closed_form_untagged_graphs():
    # tags stripped: classification must still resolve these
    pet = graphs.kneser(5, 2)
    bare = graphs.graph_from_edges(pet.n, list(pet.edges()))
    # Petersen is not cubic Cayley, not split, not multipartite: no closed form
    assert closed_form_fed(bare) is None

    prism7 = graphs.prism(7)
    bare = graphs.graph_from_edges(prism7.n, list(prism7.edges()))
    assert closed_form_fed(bare).exact == 4  # matched by isomorphism

    tri = triangle_with_pendants()
    assert closed_form_fed(tri).exact == 3  # tree? no: split graph via big_F

    tree = graphs.random_tree(9, 3)
    bare = graphs.graph_from_edges(tree.n, list(tree.edges()))
    assert closed_form_fed(bare).exact == med_tree(tree)


def test_bounds_petersen():
    report = bounds(graphs.kneser(5, 2))
    assert report.exact == 3
    kinds = {e.kind: e for e in report.upper}
    assert kinds["connectivity"].value == Rat(13, 4)
    assert kinds["closed_form"].value == 3
    lower_kinds = {e.kind: e for e in report.lower}
    assert lower_kinds["big_F"].value == 3


def test_bounds_trivial_and_cycles():
    assert bounds(graphs.complete(9)).exact == 1
    report = bounds(graphs.cycle(7))
    assert report.exact == 3
    kinds = {e.kind: e for e in report.lower}
    assert kinds["two_packing"].value == 3
    assert kinds["two_packing"].payload["strict"]


def test_bounds_chain_on_assorted_graphs():
    for g in [
        graphs.cycle(6),
        graphs.gtd(3, 2),
        graphs.prism(5),
        graphs.star(5),
        graphs.hypercube(3),
    ]:
        report = bounds(g)
        assert report.best_lower <= report.best_upper
        gv, _ = gamma_f(g)
        assert report.best_lower >= gv
        assert report.best_upper <= 2 * gv


def test_bounds_with_lp_a():
    report = bounds(graphs.cycle(5), include_lp_a=True)
    kinds = {e.kind: e for e in report.upper}
    assert kinds["program_a"].value == 2
    assert report.exact == 2


def test_bounds_efficient_dominating_entry():
    report = bounds(graphs.hypercube(3))
    kinds = {e.kind: e for e in report.lower}
    assert kinds["efficient_dominating"].value == 2
    assert report.exact == 2


def test_program_a_within_connectivity_bound_on_transitive_graphs():
    from fedlab.search import connectivity

    for g in [
        graphs.cycle(5),
        graphs.cycle(8),
        graphs.complete(4),
        graphs.hypercube(3),
        graphs.moebius(4),
        graphs.prism(4),
        graphs.kneser(5, 2),
    ]:
        value, _ = solve_program_A(g)
        kappa = connectivity(g)
        assert value <= Rat(g.n + kappa, kappa + 1), g.tag


def test_program_a_sandwich_on_random_graphs():
    rng = graphs.SplitMix64(31337)
    for trial in range(10):
        n = 3 + rng.randrange(4)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.randrange(3) < 2
        ]
        g = graphs.graph_from_edges(n, edges)
        gv, _ = gamma_f(g)
        fv, _ = big_F(g)
        av, cert = solve_program_A(g)
        assert gv <= fv <= av <= 2 * gv, (trial, gv, fv, av)
        assert verify_certificate(g, cert).ok


def test_complete_graphs_collapse_to_one():
    for n in (1, 3, 5):
        g = graphs.complete(n)
        assert gamma_f(g)[0] == 1
        assert f_value(g, 0)[0] == 1
        assert big_F(g)[0] == 1
        assert solve_program_A(g)[0] == 1


def test_closed_form_inside_bounds():
    for g in [
        graphs.cycle(9),
        graphs.kneser(5, 2),
        graphs.prism(7),
        graphs.star(4),
        graphs.gtd(3, 2),
        graphs.hypercube(3),
    ]:
        cf = closed_form_fed(g)
        assert cf is not None and cf.exact is not None
        report = bounds(g)
        assert report.best_lower <= cf.exact <= report.best_upper


def test_bounds_omits_searches_beyond_budget():
    report = bounds(graphs.cycle(40))
    assert "two_packing" in report.omitted
    assert "independence" in report.omitted
    # closed form and gamma_f still pin the value exactly
    assert report.exact == 14


def test_gamma_f_on_disconnected_graphs():
    g = graphs.graph_from_edges(2, [])
    assert gamma_f(g)[0] == 2
    two_triangles = graphs.graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert gamma_f(two_triangles)[0] == 2


def test_bounds_json():
    report = bounds(graphs.cycle(7))
    doc = report.to_json_dict()
    assert doc["exact"] == "3"
    assert doc["best_lower"] == "3" and doc["best_upper"] == "3"
    assert any(e["kind"] == "two_packing" for e in doc["lower"])
    cf = closed_form_fed(graphs.prism(6))
    assert str(cf.interval) == "(7/2, 15/4]"


def test_certificate_json_roundtrip():
    g = graphs.path(3)
    value, cert = solve_program_A(g)
    doc = cert.to_json_dict()
    back = engine.StrategyCertificate.from_json_dict(doc, g)
    assert back.weight == cert.weight
    assert [s.weights for s in back.states] == [s.weights for s in cert.states]
    assert back.cover == cert.cover
    assert back.to_json_dict() == doc
