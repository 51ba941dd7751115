"""Defense-number computations: exact values, bounds and certificates.

The central quantity is the least total weight that survives an infinite
attack sequence.  This module computes:

* gamma_f / pinned variants (f_value, big_F) as exact LPs,
* the n-state pairwise-reconfigurable LP relaxation (solve_program_A),
  an upper bound on the defense number that is exact on split graphs,
* the tree recursion, split-graph formulas and criticality checks,
* a closed-form dispatcher for every resolved graph family, and
* a bounds aggregator pairing each bound with a machine-checkable witness.

solve_program_A works by row generation: the pairwise reconfigurability
constraints are equivalent to the family of Hall-type inequalities
w_a(S) <= w_b(N[S]), and violated members are separated exactly from
max-flow min-cuts.  The monolithic arc-variable model (build_program_a_model)
is kept for cross-validation on small graphs; the dense tableau it needs at
12 vertices is far beyond what exact pivots can do in reasonable time.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import lp
from .errors import (
    FedlabError,
    InvalidPartitionError,
    NotATreeError,
    SizeLimitExceededError,
)
from .graphs import (
    Graph,
    closed_neighborhood,
    connected_components,
    delete_vertex,
    induced_subgraph,
    is_connected,
    is_tree,
)
from .rational import Rat, format_rat, rat_ceil
from .reconfig import FDFunction, MovePlan, can_reconfigure, deficient_set
from .search import (
    SEARCH_BUDGET,
    classify,
    connectivity,
    domination_number,
    efficient_dominating_set,
    independence_number,
    is_split_partition,
    two_packing_lower,
)

DEFAULT_LP_A_BUDGET = 12
LP_A_BUDGET_ENV = "FEDLAB_LP_BUDGET"


def lp_a_budget():
    raw = os.environ.get(LP_A_BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_LP_A_BUDGET


# ---------------------------------------------------------------------------
# certificates and reports


@dataclass
class StrategyCertificate:
    """A family of equal-weight dominating functions that defends the graph.

    cover names, for every vertex, a state placing weight >= 1 there;
    transitions are either the literal string "pairwise" (every ordered pair
    of states is one-round reconfigurable) or an explicit verified list.
    """

    graph: Graph
    weight: object
    states: tuple
    cover: dict
    transitions: object  # "pairwise" | tuple of (from_idx, to_idx, MovePlan)
    provenance: str

    def to_json_dict(self):
        if self.transitions == "pairwise":
            trans = "pairwise"
        else:
            trans = [
                {"from": i, "to": j, "plan": plan.to_json_list()}
                for i, j, plan in self.transitions
            ]
        return {
            "weight": format_rat(self.weight),
            "states": [s.to_json_dict() for s in self.states],
            "cover": {str(v): idx for v, idx in sorted(self.cover.items())},
            "transitions": trans,
            "provenance": self.provenance,
        }

    @classmethod
    def from_json_dict(cls, doc, graph):
        from .rational import parse_rat

        if doc["transitions"] == "pairwise":
            trans = "pairwise"
        else:
            trans = tuple(
                (t["from"], t["to"], MovePlan.from_json_list(t["plan"]))
                for t in doc["transitions"]
            )
        return cls(
            graph=graph,
            weight=parse_rat(doc["weight"]),
            states=tuple(FDFunction.from_json_dict(s) for s in doc["states"]),
            cover={int(v): idx for v, idx in doc["cover"].items()},
            transitions=trans,
            provenance=doc["provenance"],
        )


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    lo_strict: bool = False
    hi_strict: bool = False

    def __str__(self):
        lb = "(" if self.lo_strict else "["
        rb = ")" if self.hi_strict else "]"
        return f"{lb}{format_rat(self.lo)}, {format_rat(self.hi)}{rb}"


@dataclass(frozen=True)
class ClosedForm:
    exact: Optional[object]
    interval: Optional[Interval]
    reason: str


@dataclass(frozen=True)
class BoundEntry:
    value: object
    kind: str
    payload: object = None
    strict: bool = False


@dataclass
class BoundsReport:
    lower: list
    upper: list
    best_lower: object
    best_upper: object
    exact: Optional[object]
    omitted: tuple = ()

    def to_json_dict(self):
        def enc(entries):
            out = []
            for e in entries:
                d = {"value": format_rat(e.value), "kind": e.kind}
                if e.strict:
                    d["strict"] = True
                if e.payload is not None:
                    d["payload"] = e.payload
                out.append(d)
            return out

        return {
            "lower": enc(self.lower),
            "upper": enc(self.upper),
            "best_lower": format_rat(self.best_lower),
            "best_upper": format_rat(self.best_upper),
            "exact": None if self.exact is None else format_rat(self.exact),
            "omitted": list(self.omitted),
        }


# ---------------------------------------------------------------------------
# fractional domination LPs


def _domination_model(graph, pinned=None):
    n = graph.n
    cons = []
    for v in range(n):
        row = [0] * n
        for u in graph.closed_neighborhood(v):
            row[u] = 1
        cons.append((row, lp.GEQ, 1))
    if pinned is not None:
        row = [0] * n
        row[pinned] = 1
        cons.append((row, lp.GEQ, 1))
    return lp.make_model(n, [1] * n, cons)


@lru_cache(maxsize=512)
def _gamma_f_cached(graph):
    if graph.n == 0:
        return Rat(0), FDFunction(())
    sol = lp.solve(_domination_model(graph))
    assert sol.status == lp.OPTIMAL
    return sol.value, FDFunction(sol.assignment)


def gamma_f(graph):
    """Minimum total weight of a fractional dominating function, exactly."""
    value, witness = _gamma_f_cached(graph)
    return value, witness


@lru_cache(maxsize=2048)
def _f_value_cached(graph, v):
    sol = lp.solve(_domination_model(graph, pinned=v))
    assert sol.status == lp.OPTIMAL
    return sol.value, FDFunction(sol.assignment)


def f_value(graph, v):
    """Least dominating weight with weight >= 1 pinned on v."""
    if not (0 <= v < graph.n):
        raise FedlabError(f"vertex {v} out of range")
    return _f_value_cached(graph, v)


def big_F(graph):
    """max_v f(v) with the least attaining vertex; a defense lower bound."""
    best = None
    arg = None
    for v in range(graph.n):
        val, _ = f_value(graph, v)
        if best is None or val > best:
            best, arg = val, v
    return best, arg


def is_fully_fd_critical(graph, v):
    """gamma_f drops by exactly 1 when v is deleted."""
    if not (0 <= v < graph.n):
        raise FedlabError(f"vertex {v} out of range")
    whole, _ = gamma_f(graph)
    reduced, _ = gamma_f(delete_vertex(graph, v))
    return whole - reduced == 1


# ---------------------------------------------------------------------------
# trees


def med_tree(tree):
    """Exact defense number of a tree (equals the all-guards-move number).

    Recursion: strip the deepest support vertex together with its unique
    leaf, or all its leaves when it has several, charging one guard per step.
    """
    if not is_tree(tree):
        raise NotATreeError("med_tree requires a tree")
    return _med_connected(tree)


def _med_connected(g):
    n = g.n
    if n <= 2:
        return 1
    if any(g.degree(v) == n - 1 for v in range(n)):
        return 2
    ecc = [_eccentricity(g, v) for v in range(n)]
    supports = [
        v
        for v in range(n)
        if ecc[v] >= 2 and any(g.degree(u) == 1 for u in g.adjacency[v])
    ]
    x = min(supports, key=lambda v: (-ecc[v], v))
    leaf_nbrs = [u for u in g.adjacency[x] if g.degree(u) == 1]
    if len(leaf_nbrs) == 1:
        removed = {x, leaf_nbrs[0]}
    else:
        removed = set(leaf_nbrs)
    keep = [v for v in range(n) if v not in removed]
    rest = induced_subgraph(g, keep)
    return 1 + sum(
        _med_connected(induced_subgraph(rest, comp))
        for comp in connected_components(rest)
    )


def _eccentricity(g, v):
    dist = {v: 0}
    queue = [v]
    far = 0
    while queue:
        nxt = []
        for u in queue:
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    far = max(far, dist[w])
                    nxt.append(w)
        queue = nxt
    return far


# ---------------------------------------------------------------------------
# split graphs


def split_fed(graph, partition):
    """Exact defense number of a split graph with a pinned-vertex certificate.

    Builds one least-weight state per vertex, pushes independent-set weight
    into the clique, pads every state to the common maximum, and verifies
    every ordered pair reconfigurable.
    """
    if not is_split_partition(graph, partition):
        raise InvalidPartitionError("not a (clique, independent set) partition")
    xs, ys = tuple(partition[0]), tuple(partition[1])
    yset = set(ys)
    n = graph.n
    states = []
    values = []
    for v in range(n):
        val, witness = f_value(graph, v)
        w = list(witness.weights)
        for y in ys:
            if y == v or w[y] == 0:
                continue
            targets = [u for u in graph.adjacency[y] if u in set(xs)]
            if targets:
                w[targets[0]] += w[y]
                w[y] = Rat(0)
        if v in yset and w[v] > 1:
            targets = [u for u in graph.adjacency[v] if u in set(xs)]
            if targets:
                w[targets[0]] += w[v] - 1
                w[v] = Rat(1)
        states.append(w)
        values.append(val)
    best = max(values)
    pad_target = min(xs) if xs else None
    final = []
    for v, w in enumerate(states):
        total = sum(w, start=Rat(0))
        if total < best:
            if pad_target is None:
                raise AssertionError("edgeless split graph states must be equal")
            w[pad_target] += best - total
        final.append(FDFunction(tuple(w)))
    transitions = []
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            plan = can_reconfigure(graph, final[a], final[b])
            if plan is None:
                raise AssertionError(
                    f"split-graph states {a} -> {b} failed to reconfigure"
                )
            transitions.append((a, b, plan))
    cert = StrategyCertificate(
        graph=graph,
        weight=best,
        states=tuple(final),
        cover={v: v for v in range(n)},
        transitions=tuple(transitions),
        provenance="constructed",
    )
    return best, cert


def split_equality_check(graph, partition):
    """Whether the static and eternal fractional numbers agree (split only)."""
    if not is_split_partition(graph, partition):
        raise InvalidPartitionError("not a (clique, independent set) partition")
    xs, ys = partition
    if not ys:
        raise InvalidPartitionError("check applies to non-complete split graphs")
    yset = set(ys)
    every_x_sees_y = all(any(u in yset for u in graph.adjacency[x]) for x in xs)
    cond = every_x_sees_y and all(is_fully_fd_critical(graph, y) for y in ys)
    fval, _ = big_F(graph)
    gval, _ = gamma_f(graph)
    if cond != (fval == gval):
        raise AssertionError("split criticality characterization violated")
    return cond


# ---------------------------------------------------------------------------
# program A: n pairwise-reconfigurable states of minimum common weight


def _master_model(graph, cuts):
    """LP over state weights x[i*n+j] with pins, domination rows, equal
    totals, and the accumulated Hall cuts."""
    n = graph.n
    nv = n * n
    cons = []
    for i in range(n):
        row = [0] * nv
        row[i * n + i] = 1
        cons.append((row, lp.EQ, 1))
    hood = [graph.closed_neighborhood(k) for k in range(n)]
    for i in range(n):
        for k in range(n):
            row = [0] * nv
            for j in hood[k]:
                row[i * n + j] = 1
            cons.append((row, lp.GEQ, 1))
    for i in range(1, n):
        row = [0] * nv
        for j in range(n):
            row[i * n + j] = 1
            row[j] -= 1
        cons.append((row, lp.EQ, 0))
    for a, b, sset in cuts:
        row = [0] * nv
        nbhd = closed_neighborhood(graph, sset)
        for l in nbhd:
            row[b * n + l] += 1
        for k in sset:
            row[a * n + k] -= 1
        cons.append((row, lp.GEQ, 0))
    objective = [0] * nv
    for j in range(n):
        objective[j] = 1
    return lp.make_model(nv, objective, cons)


def solve_program_A(graph, budget=None, max_rounds=4096):
    """Minimum common weight of n pinned states, every ordered pair
    one-round reconfigurable; returns the exact value and a verified
    pairwise certificate.

    The value upper-bounds the defense number and is >= big_F(graph).
    """
    n = graph.n
    limit = budget if budget is not None else lp_a_budget()
    if n > limit:
        raise SizeLimitExceededError(
            f"program A limited to {limit} vertices (override via "
            f"{LP_A_BUDGET_ENV} or budget=)",
            limit,
        )
    cuts = []
    seen = set()
    for _ in range(max_rounds):
        sol = lp.solve(_master_model(graph, cuts))
        if sol.status != lp.OPTIMAL:
            raise AssertionError(
                "program A master must be feasible (doubling strategy exists)"
            )
        states = [
            FDFunction(sol.assignment[i * n : (i + 1) * n]) for i in range(n)
        ]
        violated = []
        for a in range(n):
            for b in range(n):
                if a == b:
                    continue
                side = deficient_set(graph, states[a], states[b])
                if side is not None:
                    key = (a, b, side)
                    if key not in seen:
                        seen.add(key)
                        violated.append(key)
        if not violated:
            transitions = []
            for a in range(n):
                for b in range(n):
                    if a == b:
                        continue
                    plan = can_reconfigure(graph, states[a], states[b])
                    if plan is None:
                        raise AssertionError("separation claimed pairwise feasibility")
                    transitions.append((a, b, plan))
            cert = StrategyCertificate(
                graph=graph,
                weight=sol.value,
                states=tuple(states),
                cover={v: v for v in range(n)},
                transitions=tuple(transitions),
                provenance="lp_a",
            )
            return sol.value, cert
        cuts.extend(violated)
    raise AssertionError("row generation failed to converge")


def build_program_a_model(graph):
    """The literal arc-variable LP (source, middle and sink flows per ordered
    pair).  Exponentially cheaper row generation replaces it for solving; this
    stays as the cross-validation target on small graphs."""
    n = graph.n
    hood = [graph.closed_neighborhood(k) for k in range(n)]
    mid_arcs = [(k, l) for k in range(n) for l in hood[k]]
    per_pair = n + len(mid_arcs) + n
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    nv = n * n + len(pairs) * per_pair

    def xvar(i, j):
        return i * n + j

    def block(p):
        return n * n + p * per_pair

    cons = []
    for i in range(n):
        row = [0] * nv
        row[xvar(i, i)] = 1
        cons.append((row, lp.EQ, 1))
        for k in range(n):
            row = [0] * nv
            for j in hood[k]:
                row[xvar(i, j)] = 1
            cons.append((row, lp.GEQ, 1))
    for i in range(1, n):
        row = [0] * nv
        for j in range(n):
            row[xvar(i, j)] += 1
            row[xvar(0, j)] -= 1
        cons.append((row, lp.EQ, 0))

    for p, (i, j) in enumerate(pairs):
        base = block(p)
        src = lambda k: base + k
        mid = {arc: base + n + t for t, arc in enumerate(mid_arcs)}
        snk = lambda k: base + n + len(mid_arcs) + k
        for k in range(n):
            row = [0] * nv
            row[src(k)] = 1
            for l in hood[k]:
                row[mid[(k, l)]] -= 1
            cons.append((row, lp.EQ, 0))
        for l in range(n):
            row = [0] * nv
            for k in hood[l]:  # l in N[k] iff k in N[l]
                row[mid[(k, l)]] += 1
            row[snk(l)] = -1
            cons.append((row, lp.EQ, 0))
        for k in range(n):
            row = [0] * nv
            row[src(k)] = 1
            row[xvar(i, k)] = -1
            cons.append((row, lp.LEQ, 0))
        for l in range(n):
            row = [0] * nv
            row[snk(l)] = 1
            row[xvar(j, l)] = -1
            cons.append((row, lp.LEQ, 0))
        row = [0] * nv
        for k in range(n):
            row[src(k)] += 1
            row[xvar(i, k)] -= 1
        cons.append((row, lp.EQ, 0))

    objective = [0] * nv
    for j in range(n):
        objective[xvar(0, j)] = 1
    return lp.make_model(nv, objective, cons)


# ---------------------------------------------------------------------------
# closed forms


def _cayley_interval_lower(n_param):
    # (n+2)(n+4) / (2(n+5)) from the round-robin weight-counting argument
    return Rat((n_param + 2) * (n_param + 4), 2 * (n_param + 5))


def _connectivity_upper_cubic(n_vertices):
    return Rat(n_vertices + 3, 4)


def _prism_closed_form(graph, n):
    if n % 4 != 2:
        return ClosedForm(Rat(rat_ceil(Rat(n, 2))), None, "prism congruence")
    if n == 6:
        return ClosedForm(
            None,
            Interval(Rat(7, 2), Rat(15, 4), lo_strict=True),
            "prism n=6 exceptional",
        )
    if n == 10:
        return ClosedForm(Rat(28, 5), None, "prism n=10 exceptional")
    hi = _connectivity_upper_cubic(2 * n)
    if n % 12 == 10:
        return ClosedForm(
            None, Interval(_cayley_interval_lower(n), hi), "prism 10 mod 12"
        )
    gv, _ = gamma_f(graph)
    fv, _ = big_F(graph)
    return ClosedForm(None, Interval(max(gv, fv), hi), "prism 2 mod 4 generic")


def _moebius_closed_form(graph, n):
    if n % 4 != 0:
        return ClosedForm(Rat(rat_ceil(Rat(n, 2))), None, "moebius congruence")
    if n == 4:
        return ClosedForm(Rat(8, 3), None, "moebius n=4 exceptional")
    hi = _connectivity_upper_cubic(2 * n)
    if n % 12 == 4:
        return ClosedForm(
            None, Interval(_cayley_interval_lower(n), hi), "moebius 4 mod 12"
        )
    gv, _ = gamma_f(graph)
    fv, _ = big_F(graph)
    return ClosedForm(None, Interval(max(gv, fv), hi), "moebius 0 mod 4 generic")


def closed_form_fed(graph):
    """Dispatch on the graph's family tag (or classification) to the strongest
    resolved formula; None when the graph matches nothing resolved."""
    tag = graph.tag
    report = None
    if tag is None or tag.family == "generic":
        report = classify(graph)
        if report.is_complete:
            return ClosedForm(Rat(1), None, "complete")
        for t in report.tags:
            if t.family in ("path", "cycle", "star", "complete_multipartite"):
                tag = t
                break
        if tag is None or tag.family == "generic":
            if report.is_tree:
                return ClosedForm(Rat(med_tree(graph)), None, "tree recursion")
            if report.cubic_cayley_matches:
                m = report.cubic_cayley_matches[0]
                tagged = graph.with_tag(m)
                return closed_form_fed(tagged)
            if report.split_partition is not None:
                val, _ = big_F(graph)
                return ClosedForm(val, None, "split graph: pinned-LP maximum")
            return None

    fam, params = tag.family, tag.params
    if fam == "complete":
        return ClosedForm(Rat(1), None, "complete")
    if fam == "path":
        return ClosedForm(Rat(rat_ceil(Rat(params[0], 2))), None, "path")
    if fam == "cycle":
        return ClosedForm(Rat(rat_ceil(Rat(params[0], 3))), None, "cycle")
    if fam == "star":
        return ClosedForm(Rat(2 if params[0] >= 2 else 1), None, "star")
    if fam == "complete_multipartite":
        if all(p == 1 for p in params):
            return ClosedForm(Rat(1), None, "complete")
        return ClosedForm(Rat(2), None, "complete multipartite")
    if fam == "kneser":
        kn, kk = params
        if kk == 1:
            return ClosedForm(Rat(1), None, "complete")
        if kk == 2 and kn == 5:
            return ClosedForm(Rat(3), None, "Petersen")
        if kk == 2 and kn >= 6:
            return ClosedForm(Rat(2 * kn - 6, kn - 4), None, "Kneser k=2")
        return None
    if fam == "hypercube":
        d = params[0]
        lo = Rat(1 << d, d + 1)
        if (d + 1) & d == 0:  # d + 1 a power of two, i.e. d = 2^r - 1
            return ClosedForm(lo, None, "hypercube with perfect code")
        return ClosedForm(
            None, Interval(lo, Rat((1 << d) + d, d + 1)), "hypercube bounds"
        )
    if fam in ("gtd", "gq"):
        t, d = params[0], params[1]
        return ClosedForm(Rat(1) + Rat(t, d), None, "split construction")
    if fam == "tree":
        return ClosedForm(Rat(med_tree(graph)), None, "tree recursion")
    if fam == "prism":
        return _prism_closed_form(graph, params[0])
    if fam == "moebius":
        return _moebius_closed_form(graph, params[0])
    if fam == "grid":
        m, nn = params
        if min(m, nn) == 1:
            return ClosedForm(Rat(rat_ceil(Rat(max(m, nn), 2))), None, "path")
        if min(m, nn) == 2:
            k = max(m, nn)
            return ClosedForm(Rat(rat_ceil(Rat(2 * k, 3))), None, "ladder")
        gv, _ = gamma_f(graph)
        hi = Rat(m * nn, 5) + Rat(2 * (m + nn), 15) + Rat(39, 15)
        return ClosedForm(None, Interval(gv, hi), "grid strategy bound")
    if fam == "strong_grid":
        m, nn = params
        if min(m, nn) == 1:
            return ClosedForm(Rat(rat_ceil(Rat(max(m, nn), 2))), None, "path")
        gv, _ = gamma_f(graph)
        hi = Rat(m * nn, 9) + Rat(16 * (m + nn), 9) + Rat(114, 9)
        return ClosedForm(None, Interval(gv, hi), "strong grid strategy bound")
    return None


# ---------------------------------------------------------------------------
# bounds aggregation


def bounds(graph, include_lp_a=False, lp_a_vertex_budget=None):
    """Aggregate every implemented lower/upper bound with its witness."""
    lower = []
    upper = []
    omitted = []
    n = graph.n

    gv, gw = gamma_f(graph)
    lower.append(BoundEntry(gv, "gamma_f", gw.to_json_dict()))
    upper.append(BoundEntry(2 * gv, "doubled_gamma_f", gw.to_json_dict()))

    fv, farg = big_F(graph)
    lower.append(BoundEntry(fv, "big_F", {"vertex": farg}))

    report = classify(graph)
    if not report.is_complete and n >= 1:
        lower.append(BoundEntry(Rat(2), "noncomplete"))
    if report.has_universal_vertex or report.every_edge_dominating:
        upper.append(
            BoundEntry(
                Rat(2),
                "universal_or_dominating_edge",
                {"universal": report.has_universal_vertex},
            )
        )

    if n <= SEARCH_BUDGET:
        bound, witness, strict = two_packing_lower(graph)
        lower.append(
            BoundEntry(
                Rat(bound),
                "two_packing",
                {"witness": list(witness), "strict": strict},
            )
        )
        gamma = domination_number(graph)
        eff = efficient_dominating_set(graph)
        if eff is not None:
            lower.append(
                BoundEntry(Rat(gamma), "efficient_dominating", {"witness": list(eff)})
            )
        else:
            rho = bound - (1 if strict else 0)
            if rho == gamma:
                lower.append(
                    BoundEntry(Rat(gamma), "packing_matches_domination", {"size": rho})
                )
        alpha = independence_number(graph)
        upper.append(BoundEntry(Rat(alpha), "independence"))
    else:
        omitted.extend(["two_packing", "domination", "independence"])

    if n >= 2 and is_connected(graph):
        kappa = connectivity(graph)
        if kappa >= 1:
            upper.append(
                BoundEntry(Rat(n + kappa, kappa + 1), "connectivity", {"kappa": kappa})
            )

    cf = closed_form_fed(graph)
    if cf is not None:
        if cf.exact is not None:
            lower.append(BoundEntry(cf.exact, "closed_form", cf.reason))
            upper.append(BoundEntry(cf.exact, "closed_form", cf.reason))
        else:
            lower.append(
                BoundEntry(
                    cf.interval.lo, "closed_form_interval", cf.reason,
                    strict=cf.interval.lo_strict,
                )
            )
            upper.append(
                BoundEntry(
                    cf.interval.hi, "closed_form_interval", cf.reason,
                    strict=cf.interval.hi_strict,
                )
            )

    if include_lp_a:
        limit = lp_a_vertex_budget if lp_a_vertex_budget is not None else lp_a_budget()
        if n <= limit:
            value, _ = solve_program_A(graph, budget=limit)
            upper.append(BoundEntry(value, "program_a"))
        else:
            omitted.append("program_a")

    best_lower = max(e.value for e in lower)
    best_upper = min(e.value for e in upper)
    exact = best_lower if best_lower == best_upper else None
    return BoundsReport(lower, upper, best_lower, best_upper, exact, tuple(omitted))
