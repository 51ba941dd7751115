"""Weight reconfiguration between fractional dominating functions.

One round of the defense game redistributes each vertex's weight within its
closed neighborhood.  w1 transforms into w2 in one round exactly when the
bipartite source/sink network built here carries a flow saturating every
source arc; the middle arcs (closed-neighborhood pairs) are uncapacitated
and are materialized with capacity total(w1), a safe finite surrogate.
"""

import json
from dataclasses import dataclass

from .errors import (
    DimensionMismatchError,
    IllegalMoveError,
    TotalWeightMismatchError,
)
from .rational import Rat, format_rat, parse_rat


@dataclass(frozen=True)
class FDFunction:
    """Nonnegative vertex weighting; the basic object the defender moves."""

    weights: tuple

    def __post_init__(self):
        ws = tuple(Rat(w) for w in self.weights)
        if any(w < 0 for w in ws):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "weights", ws)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, v):
        return self.weights[v]

    def total(self):
        return sum(self.weights, start=Rat(0))

    def is_dominating(self, graph):
        """Every closed neighborhood carries total weight at least 1."""
        for v in range(graph.n):
            s = self.weights[v]
            for u in graph.adjacency[v]:
                s += self.weights[u]
            if s < 1:
                return False
        return True

    def to_json_dict(self):
        return {"weights": [format_rat(w) for w in self.weights]}

    @classmethod
    def from_json_dict(cls, doc):
        return cls(tuple(parse_rat(w) for w in doc["weights"]))

    @classmethod
    def uniform(cls, n, value):
        return cls((Rat(value),) * n)

    @classmethod
    def unit(cls, n, v, value=1):
        ws = [Rat(0)] * n
        ws[v] = Rat(value)
        return cls(tuple(ws))

    def scaled(self, factor):
        f = Rat(factor)
        return FDFunction(tuple(w * f for w in self.weights))

    def plus(self, other):
        return FDFunction(tuple(a + b for a, b in zip(self.weights, other.weights)))


@dataclass(frozen=True)
class MovePlan:
    """Weight movements (x -> y, amount) with y in N[x]; x == y means stay."""

    moves: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "moves",
            tuple(
                sorted((int(x), int(y), Rat(a)) for x, y, a in self.moves)
            ),
        )

    def to_json_list(self):
        return [
            {"from": x, "to": y, "amount": format_rat(a)} for x, y, a in self.moves
        ]

    @classmethod
    def from_json_list(cls, docs):
        return cls(tuple((d["from"], d["to"], parse_rat(d["amount"])) for d in docs))

    @classmethod
    def identity(cls, w):
        return cls(tuple((v, v, w[v]) for v in range(len(w)) if w[v] > 0))


UNBOUNDED = None  # middle-arc capacity marker


@dataclass(frozen=True)
class ReconfigNetwork:
    """s -> left copies -> right copies -> t network for one reconfiguration.

    Node ids: s = 0, left vertex k = 1 + k, right vertex k = 1 + n + k,
    t = 1 + 2n.
    """

    n: int
    source_caps: tuple  # w1, capacity of s -> k
    sink_caps: tuple  # w2, capacity of k' -> t
    middle_arcs: tuple  # (k, l) pairs with l in N[k]

    @property
    def s(self):
        return 0

    @property
    def t(self):
        return 1 + 2 * self.n

    def left(self, k):
        return 1 + k

    def right(self, k):
        return 1 + self.n + k

    def num_arcs(self):
        return 2 * self.n + len(self.middle_arcs)


def build_reconfig_network(graph, w1, w2):
    if len(w1) != graph.n or len(w2) != graph.n:
        raise DimensionMismatchError("weightings must have one entry per vertex")
    middle = []
    for k in range(graph.n):
        for l in graph.closed_neighborhood(k):
            middle.append((k, l))
    return ReconfigNetwork(graph.n, w1.weights, w2.weights, tuple(middle))


def _run_edmonds_karp(net):
    """Shared core: returns (value, residual cap dict, adjacency lists)."""
    n = net.n
    num_nodes = 2 * n + 2
    total = sum(net.source_caps, start=Rat(0))
    arcs = []
    for k in range(n):
        arcs.append((net.s, net.left(k), Rat(net.source_caps[k])))
    for k, l in net.middle_arcs:
        arcs.append((net.left(k), net.right(l), total))
    for k in range(n):
        arcs.append((net.right(k), net.t, Rat(net.sink_caps[k])))

    cap = {}
    adj = [[] for _ in range(num_nodes)]
    for u, v, c in arcs:
        if (u, v) not in cap and (v, u) not in cap:
            adj[u].append(v)
            adj[v].append(u)
        cap[(u, v)] = cap.get((u, v), Rat(0)) + c
        cap.setdefault((v, u), Rat(0))
    for lst in adj:
        lst.sort()

    value = Rat(0)
    while True:
        parent = {net.s: None}
        queue = [net.s]
        while queue and net.t not in parent:
            nxt = []
            for u in queue:
                for v in adj[u]:
                    if v not in parent and cap[(u, v)] > 0:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if net.t not in parent:
            break
        aug = None
        v = net.t
        while parent[v] is not None:
            u = parent[v]
            aug = cap[(u, v)] if aug is None else min(aug, cap[(u, v)])
            v = u
        v = net.t
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= aug
            cap[(v, u)] += aug
            v = u
        value += aug
    return value, cap, adj


def max_flow(net):
    """Exact Edmonds-Karp on the reconfiguration network.

    Returns (value, flows) where flows maps (k, l) middle arcs plus
    ('s', k) / (k, 't') arcs to exact rational amounts.
    """
    n = net.n
    total = sum(net.source_caps, start=Rat(0))
    value, cap, _ = _run_edmonds_karp(net)
    flows = {}
    for k in range(n):
        f = Rat(net.source_caps[k]) - cap[(net.s, net.left(k))]
        if f:
            flows[("s", k)] = f
    for k, l in net.middle_arcs:
        f = total - cap[(net.left(k), net.right(l))]
        if f:
            flows[(k, l)] = f
    for k in range(n):
        f = Rat(net.sink_caps[k]) - cap[(net.right(k), net.t)]
        if f:
            flows[(k, "t")] = f
    return value, flows


def deficient_set(graph, w1, w2):
    """None if w1 reconfigures to w2; otherwise a Hall-violating vertex set S
    with w1(S) > w2(N[S]), extracted from the min cut."""
    net = build_reconfig_network(graph, w1, w2)
    total = sum(net.source_caps, start=Rat(0))
    value, cap, adj = _run_edmonds_karp(net)
    if value == total:
        return None
    reachable = {net.s}
    queue = [net.s]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in reachable and cap[(u, v)] > 0:
                reachable.add(v)
                queue.append(v)
    side = tuple(k for k in range(net.n) if net.left(k) in reachable)
    return side


def can_reconfigure(graph, w1, w2):
    """A MovePlan transforming w1 into w2 in one round, or None."""
    t1, t2 = w1.total(), w2.total()
    if t1 != t2:
        raise TotalWeightMismatchError(f"totals differ: {t1} vs {t2}")
    net = build_reconfig_network(graph, w1, w2)
    value, flows = max_flow(net)
    if value != t1:
        return None
    moves = [
        (k, l, f)
        for (k, l), f in flows.items()
        if isinstance(k, int) and isinstance(l, int) and f > 0
    ]
    return MovePlan(tuple(moves))


def apply_move_plan(graph, w, plan):
    """Apply a plan, validating neighborhood legality and per-vertex budgets."""
    n = graph.n
    adjsets = graph._adjsets()
    out = [Rat(0)] * n
    into = [Rat(0)] * n
    for x, y, a in plan.moves:
        if a <= 0:
            raise IllegalMoveError(f"non-positive amount on {x}->{y}", x)
        if not (0 <= x < n and 0 <= y < n):
            raise IllegalMoveError(f"move {x}->{y} out of range", x)
        if x != y and y not in adjsets[x]:
            raise IllegalMoveError(f"{y} not in the closed neighborhood of {x}", x)
        out[x] += a
        into[y] += a
    for x in range(n):
        if out[x] > w[x]:
            raise IllegalMoveError(
                f"vertex {x} moves {out[x]} but holds only {w[x]}", x
            )
    return FDFunction(tuple(w[v] - out[v] + into[v] for v in range(n)))


def move_plan_to_json(plan):
    return json.dumps(plan.to_json_list())


def reconfigurable_brute_force(graph, w1, w2, solve_lp=None):
    """Independent oracle: movement-variable LP feasibility (no flow code).

    Variables m[x][y] for y in N[x] (stays included); row sums fixed to w1,
    column sums to w2.  Used by tests to cross-check the max-flow decision.
    """
    from . import lp as lpmod

    if w1.total() != w2.total():
        raise TotalWeightMismatchError("totals differ")
    pairs = []
    for x in range(graph.n):
        for y in graph.closed_neighborhood(x):
            pairs.append((x, y))
    idx = {p: i for i, p in enumerate(pairs)}
    cons = []
    for x in range(graph.n):
        row = [0] * len(pairs)
        for y in graph.closed_neighborhood(x):
            row[idx[(x, y)]] = 1
        cons.append((row, lpmod.EQ, w1[x]))
    for y in range(graph.n):
        row = [0] * len(pairs)
        for x in graph.closed_neighborhood(y):
            row[idx[(x, y)]] = 1
        cons.append((row, lpmod.EQ, w2[y]))
    model = lpmod.make_model(len(pairs), [0] * len(pairs), cons)
    return lpmod.solve(model).status == lpmod.OPTIMAL
