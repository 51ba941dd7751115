import pytest

from fedlab import graphs
from fedlab.errors import IllegalMoveError, TotalWeightMismatchError
from fedlab.rational import Rat
from fedlab.reconfig import (
    FDFunction,
    MovePlan,
    apply_move_plan,
    build_reconfig_network,
    can_reconfigure,
    deficient_set,
    max_flow,
    reconfigurable_brute_force,
)


def random_graph(n, seed):
    rng = graphs.SplitMix64(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.randrange(2)
    ]
    return graphs.graph_from_edges(n, edges)


def test_network_shape_c4():
    c4 = graphs.cycle(4)
    net = build_reconfig_network(
        c4, FDFunction((1, 0, 0, 0)), FDFunction((0, 1, 0, 0))
    )
    assert net.num_arcs() == 4 + 12 + 4
    assert len(net.middle_arcs) == sum(len(c4.closed_neighborhood(v)) for v in range(4))


def test_network_k1():
    k1 = graphs.complete(1)
    net = build_reconfig_network(k1, FDFunction((1,)), FDFunction((1,)))
    assert net.num_arcs() == 3
    value, flows = max_flow(net)
    assert value == 1
    assert flows[(0, 0)] == 1


def test_p3_middle_arcs_enable_shift():
    p3 = graphs.path(3)
    net = build_reconfig_network(
        p3, FDFunction((1, 0, 1)), FDFunction((0, 1, 1))
    )
    assert (0, 1) in net.middle_arcs
    value, _ = max_flow(net)
    assert value == 2


def test_identity_flow_is_total():
    g = graphs.cycle(5)
    w = FDFunction((Rat(1, 3),) * 5)
    net = build_reconfig_network(g, w, w)
    value, _ = max_flow(net)
    assert value == w.total()


def test_isolated_vertices_cannot_exchange():
    g = graphs.graph_from_edges(2, [])
    assert can_reconfigure(g, FDFunction((1, 0)), FDFunction((0, 1))) is None
    assert deficient_set(g, FDFunction((1, 0)), FDFunction((0, 1))) == (0,)


def test_can_reconfigure_examples():
    c4 = graphs.cycle(4)
    w = FDFunction((Rat(1, 2), Rat(1, 2), 0, 1))
    plan = can_reconfigure(c4, w, w)
    assert plan.moves == MovePlan.identity(w).moves

    plan = can_reconfigure(c4, FDFunction((1, 0, 0, 0)), FDFunction((0, 1, 0, 0)))
    assert plan.moves == ((0, 1, Rat(1)),)

    p3 = graphs.path(3)
    plan = can_reconfigure(p3, FDFunction((1, 0, 1)), FDFunction((1, 1, 0)))
    assert plan.moves == ((0, 0, Rat(1)), (2, 1, Rat(1)))


def test_total_mismatch_raises():
    g = graphs.path(2)
    with pytest.raises(TotalWeightMismatchError):
        can_reconfigure(g, FDFunction((1, 0)), FDFunction((1, 1)))


def test_apply_move_plan():
    c4 = graphs.cycle(4)
    w = FDFunction((1, 0, 0, 0))
    assert apply_move_plan(c4, w, MovePlan.identity(w)).weights == w.weights
    shifted = apply_move_plan(c4, w, MovePlan(((0, 1, Rat(1)),)))
    assert shifted.weights == (0, 1, 0, 0)
    with pytest.raises(IllegalMoveError):
        apply_move_plan(c4, w, MovePlan(((0, 1, Rat(2)),)))
    with pytest.raises(IllegalMoveError):
        apply_move_plan(c4, w, MovePlan(((0, 2, Rat(1)),)))  # not adjacent


def test_apply_after_reconfigure_lands_exactly():
    rng = graphs.SplitMix64(5)
    for seed in range(20):
        g = random_graph(5, seed + 1000)
        den = 1 + rng.randrange(3)
        ws = [Rat(rng.randrange(3), den) for _ in range(5)]
        w1 = FDFunction(tuple(ws))
        pool = list(ws)
        for i in range(len(pool) - 1, 0, -1):
            j = rng.randrange(i + 1)
            pool[i], pool[j] = pool[j], pool[i]
        w2 = FDFunction(tuple(pool))
        plan = can_reconfigure(g, w1, w2)
        if plan is not None:
            assert apply_move_plan(g, w1, plan).weights == w2.weights


def test_symmetry_of_reconfigurability():
    rng = graphs.SplitMix64(17)
    for seed in range(25):
        g = random_graph(6, seed + 4)
        den = 1 + rng.randrange(3)
        a = [Rat(rng.randrange(3), den) for _ in range(6)]
        b = [Rat(rng.randrange(3), den) for _ in range(6)]
        diff = sum(a, start=Rat(0)) - sum(b, start=Rat(0))
        if diff > 0:
            b[0] += diff
        else:
            a[0] -= diff
        w1, w2 = FDFunction(tuple(a)), FDFunction(tuple(b))
        fwd = can_reconfigure(g, w1, w2) is not None
        bwd = can_reconfigure(g, w2, w1) is not None
        assert fwd == bwd


def test_flow_decision_matches_lp_feasibility_oracle():
    rng = graphs.SplitMix64(23)
    agree = 0
    for seed in range(40):
        n = 2 + rng.randrange(4)
        g = random_graph(n, seed + 71)
        den = 1 + rng.randrange(3)
        vals = [Rat(rng.randrange(3), den) for _ in range(n)]
        w1 = FDFunction(tuple(vals))
        pool = list(vals)
        for i in range(len(pool) - 1, 0, -1):
            j = rng.randrange(i + 1)
            pool[i], pool[j] = pool[j], pool[i]
        w2 = FDFunction(tuple(pool))
        assert (can_reconfigure(g, w1, w2) is not None) == (
            reconfigurable_brute_force(g, w1, w2)
        )
        agree += 1
    assert agree == 40


def test_flow_conservation():
    g = graphs.prism(4)
    w1 = FDFunction(tuple(Rat(1, 4) for _ in range(8)))
    w2 = FDFunction((1, Rat(1, 4), Rat(1, 4), 0, Rat(1, 4), 0, Rat(1, 4), 0))
    net = build_reconfig_network(g, w1, w2)
    value, flows = max_flow(net)
    source_total = sum(
        (f for (a, b), f in flows.items() if a == "s"), start=Rat(0)
    )
    sink_total = sum(
        (f for (a, b), f in flows.items() if b == "t"), start=Rat(0)
    )
    assert value == source_total == sink_total
    for k in range(g.n):
        inflow = flows.get(("s", k), Rat(0))
        outflow = sum(
            (f for (a, b), f in flows.items() if a == k and b != "t"),
            start=Rat(0),
        )
        assert inflow == outflow


def test_move_plan_json_roundtrip():
    plan = MovePlan(((0, 1, Rat(2, 3)), (2, 2, Rat(1, 3))))
    doc = plan.to_json_list()
    assert doc == [
        {"from": 0, "to": 1, "amount": "2/3"},
        {"from": 2, "to": 2, "amount": "1/3"},
    ]
    assert MovePlan.from_json_list(doc).moves == plan.moves


def test_fdfunction_json_roundtrip():
    w = FDFunction((Rat(1), Rat(2, 5), Rat(0)))
    doc = w.to_json_dict()
    assert doc == {"weights": ["1", "2/5", "0"]}
    assert FDFunction.from_json_dict(doc).weights == w.weights
