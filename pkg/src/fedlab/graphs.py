"""Immutable simple graphs, family generators and graph I/O.

Vertex labels are always 0..n-1.  Generator index conventions are fixed so
that strategy fixtures can name specific vertices:

* ``product(G, H, kind)`` maps the pair (u, v) to index ``u * |V(H)| + v``.
* ``prism(n)`` is ``product(cycle(n), complete(2))``, so (i, j) -> 2i + j.
* ``moebius(n)`` is the circulant on Z_{2n} with connections {+-1, n}.
* ``gtd(t, d)`` lists the t clique vertices first, then the d-subsets in
  lexicographic order, then their duplicates in the same order.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import GraphFormatError, InvalidParamsError

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "star",
    "kneser",
    "hypercube",
    "prism",
    "moebius",
    "gtd",
    "gq",
    "tree",
    "grid",
    "strong_grid",
    "generic",
)

# families with a fixed parameter count; complete_multipartite takes >= 1
_FIXED_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "kneser": 2,
    "hypercube": 1,
    "prism": 1,
    "moebius": 1,
    "gtd": 2,
    "gq": 3,
    "tree": 2,
    "grid": 2,
    "strong_grid": 2,
    "generic": 0,
}


@dataclass(frozen=True)
class ClassTag:
    """Family name plus integer parameters, attached by generators."""

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParamsError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity = _FIXED_ARITY.get(self.family)
        if arity is not None and len(self.params) != arity:
            raise InvalidParamsError(
                f"{self.family} takes {arity} parameter(s), got {len(self.params)}"
            )
        if self.family == "complete_multipartite" and not self.params:
            raise InvalidParamsError("complete_multipartite needs part sizes")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 0..n-1 and sorted adjacency."""

    n: int
    adjacency: tuple
    tag: Optional[ClassTag] = None

    @property
    def m(self):
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v):
        return self.adjacency[v]

    def closed_neighborhood(self, v):
        return tuple(sorted(self.adjacency[v] + (v,)))

    def degree(self, v):
        return len(self.adjacency[v])

    def min_degree(self):
        return min((len(a) for a in self.adjacency), default=0)

    def max_degree(self):
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self):
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u, v):
        return v in self._adjsets()[u]

    def _adjsets(self):
        # cached frozensets for O(1) adjacency tests on an immutable graph
        sets = getattr(self, "_adjset_cache", None)
        if sets is None:
            sets = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_adjset_cache", sets)
        return sets

    def neighbor_masks(self):
        """Closed-neighborhood bitmasks, cached (searches rely on these)."""
        masks = getattr(self, "_mask_cache", None)
        if masks is None:
            masks = tuple(
                (1 << v) | sum(1 << u for u in self.adjacency[v])
                for v in range(self.n)
            )
            object.__setattr__(self, "_mask_cache", masks)
        return masks

    def with_tag(self, tag):
        return Graph(self.n, self.adjacency, tag)


def graph_from_edges(n, edges, tag=None, check=True):
    """Build a Graph from an edge list, validating simplicity."""
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    adj = [[] for _ in range(n)]
    seen = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if check:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if (min(u, v), max(u, v)) in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})")
        seen.add((min(u, v), max(u, v)))
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj), tag)


def closed_neighborhood(graph, vertices):
    """N[S]: union of closed neighborhoods over a vertex set."""
    out = set()
    for v in vertices:
        out.add(v)
        out.update(graph.adjacency[v])
    return tuple(sorted(out))


def induced_subgraph(graph, keep):
    """Subgraph induced on `keep`, relabeled 0..k-1 in sorted keep order."""
    keep = sorted(keep)
    index = {v: i for i, v in enumerate(keep)}
    keepset = set(keep)
    edges = [
        (index[u], index[v])
        for u, v in graph.edges()
        if u in keepset and v in keepset
    ]
    return graph_from_edges(len(keep), edges)


def delete_vertex(graph, v):
    return induced_subgraph(graph, [u for u in range(graph.n) if u != v])


def is_connected(graph):
    if graph.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in graph.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.n


def connected_components(graph):
    comp = [-1] * graph.n
    parts = []
    for start in range(graph.n):
        if comp[start] >= 0:
            continue
        cid = len(parts)
        comp[start] = cid
        stack = [start]
        members = [start]
        while stack:
            u = stack.pop()
            for w in graph.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = cid
                    stack.append(w)
                    members.append(w)
        parts.append(sorted(members))
    return parts


def is_tree(graph):
    return graph.n >= 1 and graph.m == graph.n - 1 and is_connected(graph)


# ---------------------------------------------------------------------------
# generators


def path(n):
    if n < 1:
        raise InvalidParamsError("path needs n >= 1")
    return graph_from_edges(
        n, [(i, i + 1) for i in range(n - 1)], ClassTag("path", (n,))
    )


def cycle(n):
    if n < 3:
        raise InvalidParamsError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return graph_from_edges(n, edges, ClassTag("cycle", (n,)))


def complete(n):
    if n < 1:
        raise InvalidParamsError("complete needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return graph_from_edges(n, edges, ClassTag("complete", (n,)))


def star(leaves):
    """K_{1,k}: center 0, leaves 1..k."""
    if leaves < 1:
        raise InvalidParamsError("star needs >= 1 leaf")
    return graph_from_edges(
        leaves + 1, [(0, i) for i in range(1, leaves + 1)], ClassTag("star", (leaves,))
    )


def complete_multipartite(parts):
    parts = tuple(int(p) for p in parts)
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise InvalidParamsError("part sizes must be positive")
    n = sum(parts)
    block = []
    offset = 0
    for p in parts:
        block.extend([offset] * p)
        offset += 1
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if block[i] != block[j]
    ]
    return graph_from_edges(n, edges, ClassTag("complete_multipartite", parts))


def kneser(n, k):
    """KG_{n,k}: k-subsets of [n], adjacent iff disjoint."""
    if k < 1 or n < 2 * k:
        raise InvalidParamsError("kneser needs n >= 2k >= 2")
    verts = list(combinations(range(n), k))
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not set(verts[i]) & set(verts[j])
    ]
    return graph_from_edges(len(verts), edges, ClassTag("kneser", (n, k)))


def kneser_vertex_sets(n, k):
    """The k-subset labeling matching kneser(n, k) vertex indices."""
    return list(combinations(range(n), k))


def hypercube(d):
    if d < 1:
        raise InvalidParamsError("hypercube needs d >= 1")
    n = 1 << d
    edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)]
    return graph_from_edges(n, edges, ClassTag("hypercube", (d,)))


def product(g, h, kind):
    """Cartesian or strong product; (u, v) -> u * |V(h)| + v."""
    if kind not in ("cartesian", "strong"):
        raise InvalidParamsError(f"unknown product kind {kind!r}")
    if g.n == 0 or h.n == 0:
        raise InvalidParamsError("product needs nonempty factors")
    hn = h.n
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * hn + v
            for w in h.adjacency[v]:
                if v < w:
                    edges.append((a, u * hn + w))
            for x in g.adjacency[u]:
                if u < x:
                    edges.append((a, x * hn + v))
                    if kind == "strong":
                        for w in h.adjacency[v]:
                            edges.append((a, x * hn + w))
    return graph_from_edges(g.n * hn, edges)


def prism(n):
    """C_n box K_2 with (i, j) -> 2i + j."""
    if n < 3:
        raise InvalidParamsError("prism needs n >= 3")
    return product(cycle(n), complete(2), "cartesian").with_tag(ClassTag("prism", (n,)))


def moebius(n):
    """Cay(Z_{2n}, {+-1, n}): vertex i adjacent to i+-1 and i+n (mod 2n)."""
    if n < 3:
        raise InvalidParamsError("moebius needs n >= 3")
    m2 = 2 * n
    edges = [(i, (i + 1) % m2) for i in range(m2)]
    edges += [(i, i + n) for i in range(n)]
    return graph_from_edges(m2, edges, ClassTag("moebius", (n,)))


def gtd(t, d):
    """Split construction on a t-clique X and duplicated d-subsets Y, Y'."""
    if not (t >= d >= 1):
        raise InvalidParamsError("gtd needs t >= d >= 1")
    subsets = list(combinations(range(t), d))
    c = len(subsets)
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    for idx, sub in enumerate(subsets):
        y = t + idx
        y2 = t + c + idx
        for x in sub:
            edges.append((x, y))
            edges.append((x, y2))
    return graph_from_edges(t + 2 * c, edges, ClassTag("gtd", (t, d)))


def gq(t, d, r):
    """gtd(t, d) with every independent-set vertex blown up into a K_r."""
    if not (t >= d >= 1) or r < 1:
        raise InvalidParamsError("gq needs t >= d >= 1 and r >= 1")
    subsets = list(combinations(range(t), d))
    c = len(subsets)
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    base = t
    for sub in subsets + subsets:
        members = list(range(base, base + r))
        for i in range(r):
            for j in range(i + 1, r):
                edges.append((members[i], members[j]))
            for x in sub:
                edges.append((x, members[i]))
        base += r
    return graph_from_edges(t + 2 * c * r, edges, ClassTag("gq", (t, d, r)))


def grid(m, n):
    if m < 1 or n < 1:
        raise InvalidParamsError("grid needs m, n >= 1")
    return product(path(m), path(n), "cartesian").with_tag(ClassTag("grid", (m, n)))


def strong_grid(m, n):
    if m < 1 or n < 1:
        raise InvalidParamsError("strong_grid needs m, n >= 1")
    return product(path(m), path(n), "strong").with_tag(
        ClassTag("strong_grid", (m, n))
    )


class SplitMix64:
    """Small deterministic 64-bit generator for reproducible corpora."""

    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def randrange(self, bound):
        # rejection sampling keeps the distribution exactly uniform
        limit = (self.MASK + 1) - ((self.MASK + 1) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def random_tree(n, seed):
    """Uniform labeled tree via a random parent sequence (Pruefer decode)."""
    if n < 1:
        raise InvalidParamsError("tree needs n >= 1")
    tag = ClassTag("tree", (n, seed))
    if n == 1:
        return graph_from_edges(1, [], tag)
    if n == 2:
        return graph_from_edges(2, [(0, 1)], tag)
    rng = SplitMix64(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return graph_from_edges(n, edges, tag)


def caterpillar(k):
    """Spine P_{3k} with two extra leaves on each spine vertex = 1 (mod 3).

    Spine vertices are 0..3k-1; the j-th leaf pair (attached at spine vertex
    3j + 1) gets indices 3k + 2j and 3k + 2j + 1.
    """
    if k < 1:
        raise InvalidParamsError("caterpillar needs k >= 1")
    n0 = 3 * k
    edges = [(i, i + 1) for i in range(n0 - 1)]
    nxt = n0
    for j in range(k):
        spine = 3 * j + 1
        edges.append((spine, nxt))
        edges.append((spine, nxt + 1))
        nxt += 2
    return graph_from_edges(nxt, edges)


_GENERATORS = {
    "path": lambda p: path(*p),
    "cycle": lambda p: cycle(*p),
    "complete": lambda p: complete(*p),
    "complete_multipartite": lambda p: complete_multipartite(p),
    "star": lambda p: star(*p),
    "kneser": lambda p: kneser(*p),
    "hypercube": lambda p: hypercube(*p),
    "prism": lambda p: prism(*p),
    "moebius": lambda p: moebius(*p),
    "gtd": lambda p: gtd(*p),
    "gq": lambda p: gq(*p),
    "tree": lambda p: random_tree(*p),
    "grid": lambda p: grid(*p),
    "strong_grid": lambda p: strong_grid(*p),
}


def generate(tag):
    """Generate the graph described by a ClassTag."""
    if isinstance(tag, tuple):
        tag = ClassTag(tag[0], tuple(tag[1]))
    if tag.family not in _GENERATORS:
        raise InvalidParamsError(f"no generator for family {tag.family!r}")
    return _GENERATORS[tag.family](tag.params)


# ---------------------------------------------------------------------------
# isomorphism (small budget; used for cubic Cayley matching and product tests)

ISO_BUDGET = 24


def isomorphic(g, h, budget=ISO_BUDGET):
    """Exact isomorphism test by backtracking; intended for n <= budget."""
    if g.n != h.n or g.m != h.m:
        return False
    if g.n > budget:
        from .errors import SizeLimitExceededError

        raise SizeLimitExceededError(
            f"isomorphism test limited to {budget} vertices", budget
        )
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False

    def signature(graph, v):
        return (len(graph.adjacency[v]), tuple(sorted(len(graph.adjacency[u]) for u in graph.adjacency[v])))

    gsig = {v: signature(g, v) for v in range(g.n)}
    hsig = {v: signature(h, v) for v in range(h.n)}
    if sorted(gsig.values()) != sorted(hsig.values()):
        return False

    order = sorted(range(g.n), key=lambda v: (gsig[v], v))
    hset = h._adjsets()
    gadj = g.adjacency
    mapping = {}
    used = [False] * h.n

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or hsig[w] != gsig[v]:
                continue
            ok = True
            for u in gadj[v]:
                if u in mapping and mapping[u] not in hset[w]:
                    ok = False
                    break
            if ok:
                # also forbid extra edges: mapped non-neighbors must stay clear
                for u, mu in mapping.items():
                    if (u in gadj[v]) != (mu in hset[w]):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# I/O

def to_json_dict(graph):
    tag = None
    if graph.tag is not None:
        tag = {"family": graph.tag.family, "params": list(graph.tag.params)}
    return {"n": graph.n, "edges": [list(e) for e in graph.edges()], "tag": tag}


def from_json_dict(doc):
    try:
        n = int(doc["n"])
        edges = doc["edges"]
        tagdoc = doc.get("tag")
    except (KeyError, TypeError) as exc:
        raise GraphFormatError(f"bad graph JSON: {exc}") from exc
    tag = None
    if tagdoc is not None:
        tag = ClassTag(tagdoc["family"], tuple(tagdoc["params"]))
    return graph_from_edges(n, edges, tag)


def parse_edge_list(text):
    """Parse the 'n m' + edge-lines text format."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def format_edge_list(graph):
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
