"""Exact combinatorial primitives at desk scale.

Everything here is exhaustive search over bitmask-encoded vertex sets with
branch-and-bound pruning.  Budgets are deliberate: the verifiable instances
in this problem domain are all small, and exceeding a budget raises
SizeLimitExceededError instead of silently approximating.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import InsufficientConnectivityError, SizeLimitExceededError
from .graphs import (
    ClassTag,
    complete,
    connected_components,
    hypercube,
    is_connected,
    is_tree,
    isomorphic,
    moebius,
    prism,
)

SEARCH_BUDGET = 32
ISO_BUDGET = 24


def _check_budget(graph, op):
    if graph.n > SEARCH_BUDGET:
        raise SizeLimitExceededError(
            f"{op} is exact-search limited to {SEARCH_BUDGET} vertices", SEARCH_BUDGET
        )


def _mask_vertices(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def domination_number(graph):
    """Exact gamma(G) by branch and bound over closed-neighborhood covers."""
    _check_budget(graph, "domination_number")
    n = graph.n
    if n == 0:
        return 0
    masks = graph.neighbor_masks()
    full = (1 << n) - 1

    # greedy cover for the initial upper bound
    best = 0
    covered = 0
    while covered != full:
        v = max(range(n), key=lambda u: bin(masks[u] & ~covered).count("1"))
        covered |= masks[v]
        best += 1

    maxcover = max(bin(m).count("1") for m in masks)

    def bound(uncovered_count):
        return -(-uncovered_count // maxcover)

    best_size = best

    def recurse(covered, size):
        nonlocal best_size
        if covered == full:
            best_size = min(best_size, size)
            return
        remaining = full & ~covered
        if size + bound(bin(remaining).count("1")) >= best_size:
            return
        u = (remaining & -remaining).bit_length() - 1  # least uncovered vertex
        for w in [u] + list(graph.adjacency[u]):
            recurse(covered | masks[w], size + 1)

    recurse(0, 0)
    return best_size


def independence_number(graph):
    """Exact alpha(G) by branch and bound."""
    _check_budget(graph, "independence_number")
    n = graph.n
    if n == 0:
        return 0
    open_masks = tuple(sum(1 << u for u in graph.adjacency[v]) for v in range(n))
    best = 0

    def recurse(candidates, size):
        nonlocal best
        if size + bin(candidates).count("1") <= best:
            return
        if candidates == 0:
            best = max(best, size)
            return
        # branch on a candidate of maximum degree within the candidate set
        v = max(
            _mask_vertices(candidates),
            key=lambda u: bin(open_masks[u] & candidates).count("1"),
        )
        recurse(candidates & ~(1 << v) & ~open_masks[v], size + 1)
        recurse(candidates & ~(1 << v), size)

    recurse((1 << n) - 1, 0)
    return best


def _packing_extensions(masks, n, chosen_union, start):
    return [v for v in range(start, n) if not (masks[v] & chosen_union)]


def two_packing_lower(graph):
    """Best packing-based lower bound on the defense weight.

    Searches all 2-packings P (pairwise disjoint closed neighborhoods) and
    returns max(|P| + 1 over non-covering P, |P| over covering P) with a
    deterministic witness: a covering witness is preferred on ties, then the
    lexicographically least vertex set.
    """
    _check_budget(graph, "two_packing_lower")
    n = graph.n
    masks = graph.neighbor_masks()
    full = (1 << n) - 1

    best_score = 0

    def search_score(start, union, size):
        nonlocal best_score
        score = size + (1 if union != full else 0)
        best_score = max(best_score, score)
        ext = _packing_extensions(masks, n, union, start)
        if size + len(ext) + 1 <= best_score:
            return
        for i, v in enumerate(ext):
            search_score(v + 1, union | masks[v], size + 1)

    search_score(0, 0, 0)

    def find_exact(size, want_cover):
        found = None

        def rec(start, union, chosen):
            nonlocal found
            if found is not None:
                return
            if len(chosen) == size:
                if (union == full) == want_cover:
                    found = tuple(chosen)
                return
            ext = _packing_extensions(masks, n, union, start)
            if len(chosen) + len(ext) < size:
                return
            for v in ext:
                chosen.append(v)
                rec(v + 1, union | masks[v], chosen)
                chosen.pop()
                if found is not None:
                    return

        rec(0, 0, [])
        return found

    cover_witness = find_exact(best_score, want_cover=True)
    if cover_witness is not None:
        return best_score, cover_witness, False
    witness = find_exact(best_score - 1, want_cover=False)
    return best_score, witness, True


def efficient_dominating_set(graph):
    """Exact cover of V by closed neighborhoods, if one exists."""
    _check_budget(graph, "efficient_dominating_set")
    n = graph.n
    if n == 0:
        return ()
    masks = graph.neighbor_masks()
    full = (1 << n) - 1

    def rec(covered, chosen):
        if covered == full:
            return tuple(sorted(chosen))
        u = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        for w in sorted((u,) + graph.adjacency[u]):
            if masks[w] & covered:
                continue
            res = rec(covered | masks[w], chosen + [w])
            if res is not None:
                return res
        return None

    return rec(0, [])


# ---------------------------------------------------------------------------
# connectivity via vertex-split max flow (Menger)


def _unit_max_flow(num_nodes, arcs, source, sink, need=None):
    """Integer max flow with unit-ish capacities; returns (value, flow dict)."""
    cap = {}
    adj = [[] for _ in range(num_nodes)]
    for u, v, c in arcs:
        if (u, v) not in cap:
            adj[u].append(v)
            adj[v].append(u)
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)
    value = 0
    while need is None or value < need:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for u in queue:
                for v in adj[u]:
                    if v not in parent and cap[(u, v)] > 0:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        if sink not in parent:
            break
        aug = None
        v = sink
        while parent[v] is not None:
            u = parent[v]
            aug = cap[(u, v)] if aug is None else min(aug, cap[(u, v)])
            v = u
        v = sink
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= aug
            cap[(v, u)] += aug
            v = u
        value += aug
    return value, cap


def _split_network(graph, s, t):
    """Vertex-split digraph: v_in = 2v, v_out = 2v + 1.

    Unit capacities everywhere suffice: internally disjoint paths use every
    vertex and every edge at most once (this also caps the direct s-t edge,
    which counts as a single path).
    """
    arcs = []
    for v in range(graph.n):
        if v not in (s, t):
            arcs.append((2 * v, 2 * v + 1, 1))
    for u, v in graph.edges():
        arcs.append((2 * u + 1, 2 * v, 1))
        arcs.append((2 * v + 1, 2 * u, 1))
    return arcs


def local_connectivity(graph, s, t):
    """Max number of internally disjoint s-t paths (s != t, nonadjacent ok)."""
    arcs = _split_network(graph, s, t)
    value, _ = _unit_max_flow(2 * graph.n, arcs, 2 * s + 1, 2 * t)
    return value


def connectivity(graph):
    """kappa(G): 0 for disconnected or single-vertex, n-1 for complete."""
    n = graph.n
    if n <= 1 or not is_connected(graph):
        return 0
    adjsets = graph._adjsets()
    nonadj = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if v not in adjsets[u]
    ]
    if not nonadj:
        return n - 1
    kappa = graph.min_degree()
    for u, v in nonadj:
        kappa = min(kappa, local_connectivity(graph, u, v))
        if kappa == 0:
            break
    return kappa


def disjoint_paths(graph, s, t, k):
    """k internally disjoint s-t paths from an integral max flow."""
    if s == t:
        raise InsufficientConnectivityError("s and t must differ")
    arcs = _split_network(graph, s, t)
    source, sink = 2 * s + 1, 2 * t
    value, residual = _unit_max_flow(2 * graph.n, arcs, source, sink, need=None)
    if value < k:
        raise InsufficientConnectivityError(
            f"only {value} internally disjoint paths exist, {k} requested"
        )
    # flow on (u, v) = original capacity minus residual capacity
    orig = {}
    for u, v, c in arcs:
        orig[(u, v)] = orig.get((u, v), 0) + c
    out = {}
    for (u, v), c in orig.items():
        f = c - residual[(u, v)]
        if f > 0:
            out.setdefault(u, []).append(v)
    for lst in out.values():
        lst.sort()
    paths = []
    for _ in range(k):
        # BFS on positive-flow arcs avoids walking any stray flow cycle
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for u in queue:
                for v in out.get(u, ()):
                    if v not in parent:
                        parent[v] = u
                        nxt.append(v)
            queue = nxt
        chain = []
        node = sink
        while node is not None:
            chain.append(node)
            node = parent[node]
        chain.reverse()
        for a, b in zip(chain, chain[1:]):
            out[a].remove(b)
        path = [s]
        for nd in chain[1:]:
            if nd % 2 == 0 and nd // 2 != path[-1]:
                path.append(nd // 2)
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassifyReport:
    is_complete: bool
    has_universal_vertex: bool
    every_edge_dominating: bool
    is_tree: bool
    is_complete_multipartite: bool
    multipartite_parts: Optional[tuple]
    split_partition: Optional[tuple]  # (clique X, independent Y) as tuples
    cubic_cayley_matches: tuple = ()
    tags: tuple = ()
    flags: dict = field(default_factory=dict)


def _complement(graph):
    adjsets = graph._adjsets()
    edges = [
        (u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if v not in adjsets[u]
    ]
    from .graphs import graph_from_edges

    return graph_from_edges(graph.n, edges)


def find_split_partition(graph):
    """Degree-based split recognition with verification and a small fallback."""
    n = graph.n
    if n == 0:
        return ((), ())
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    degs = [graph.degree(v) for v in order]
    m = max((i + 1 for i in range(n) if degs[i] >= i), default=0)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    adjsets = graph._adjsets()

    def valid(xs, ys):
        xset = set(xs)
        for i, u in enumerate(xs):
            for v in xs[i + 1 :]:
                if v not in adjsets[u]:
                    return False
        for i, u in enumerate(ys):
            for v in ys[i + 1 :]:
                if v in adjsets[u]:
                    return False
        return True

    xs, ys = order[:m], order[m:]
    if valid(xs, ys):
        return (tuple(sorted(xs)), tuple(sorted(ys)))
    # boundary ties can need one swap; try all same-degree exchanges
    for i, u in enumerate(xs):
        for j, v in enumerate(ys):
            if graph.degree(u) == graph.degree(v):
                xs2 = xs[:i] + [v] + xs[i + 1 :]
                ys2 = ys[:j] + [u] + ys[j + 1 :]
                if valid(xs2, ys2):
                    return (tuple(sorted(xs2)), tuple(sorted(ys2)))
    return None


def is_split_partition(graph, partition):
    """Check a claimed (clique, independent) partition."""
    xs, ys = partition
    if sorted(list(xs) + list(ys)) != list(range(graph.n)):
        return False
    adjsets = graph._adjsets()
    xs, ys = list(xs), list(ys)
    for i, u in enumerate(xs):
        for v in xs[i + 1 :]:
            if v not in adjsets[u]:
                return False
    for i, u in enumerate(ys):
        for v in ys[i + 1 :]:
            if v in adjsets[u]:
                return False
    return True


def classify(graph):
    """Structural flags, split partition and cubic Cayley matching."""
    n = graph.n
    adjsets = graph._adjsets()
    iscomplete = graph.m == n * (n - 1) // 2
    universal = any(len(graph.adjacency[v]) == n - 1 for v in range(n))
    full = set(range(n))
    every_edge_dom = n > 0 and all(
        (adjsets[u] | adjsets[v] | {u, v}) == full for u, v in graph.edges()
    ) and graph.m > 0
    tree = is_tree(graph)

    comp = _complement(graph)
    parts = connected_components(comp)
    multipartite = all(
        all(b in comp._adjsets()[a] for a in p for b in p if a != b) for p in parts
    )
    part_sizes = tuple(sorted(len(p) for p in parts)) if multipartite else None

    split = find_split_partition(graph)

    tags = []
    if iscomplete:
        tags.append(ClassTag("complete", (n,)))
    if n >= 1 and tree and graph.max_degree() <= 2:
        tags.append(ClassTag("path", (n,)))
    if n >= 3 and graph.m == n and all(graph.degree(v) == 2 for v in range(n)) and is_connected(graph):
        tags.append(ClassTag("cycle", (n,)))
    if universal and tree and n >= 2 and graph.m == n - 1:
        center = max(range(n), key=graph.degree)
        if graph.degree(center) == n - 1:
            tags.append(ClassTag("star", (n - 1,)))
    if multipartite and not iscomplete and part_sizes and len(part_sizes) >= 2:
        tags.append(ClassTag("complete_multipartite", part_sizes))

    matches = []
    if n <= ISO_BUDGET and n >= 4 and all(graph.degree(v) == 3 for v in range(n)):
        candidates = []
        if n == 4:
            candidates.append(("complete", complete(4)))
        if n == 8:
            candidates.append(("hypercube", hypercube(3)))
        if n % 2 == 0 and n >= 6:
            candidates.append(("prism", prism(n // 2)))
            candidates.append(("moebius", moebius(n // 2)))
        for name, cand in candidates:
            if isomorphic(graph, cand):
                matches.append(cand.tag if name != "complete" else ClassTag("complete", (4,)))

    return ClassifyReport(
        is_complete=iscomplete,
        has_universal_vertex=universal,
        every_edge_dominating=every_edge_dom,
        is_tree=tree,
        is_complete_multipartite=multipartite and len(parts) >= 2,
        multipartite_parts=part_sizes,
        split_partition=split,
        cubic_cayley_matches=tuple(matches),
        tags=tuple(tags),
    )
