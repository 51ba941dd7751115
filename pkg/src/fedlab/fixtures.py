"""Built-in strategy certificates for the exceptional cubic Cayley graphs
and the two-element Kneser family.

The tables below store one response row per attack from a base state;
the loader expands them over the graph's symmetry group (rotation, layer
swap, and the reflection stabilizing the base state) into a closed
strategy.  Every expanded plan is mechanically re-verified at load time
against the rotation/swap image it must land on, so a bad row fails
loudly instead of shipping.
"""

from functools import lru_cache

from .engine import StrategyCertificate
from .errors import UnknownFixtureError
from .graphs import kneser, kneser_vertex_sets, moebius, prism
from .rational import Rat, parse_rat
from .reconfig import FDFunction, MovePlan, apply_move_plan

# ---------------------------------------------------------------------------
# Cay(Z_8, {+-1, 4}): base state 1 on v0, 2/3 on v2 and v6, 1/3 on v4.
# Response rows: attack v_d from the base state lands on the base state
# rotated by d.

_Z8_BASE = ["1", "0", "2/3", "0", "1/3", "0", "2/3", "0"]

_Z8_ROWS = {
    0: [],
    1: [(0, 1, "1"), (2, 3, "2/3"), (4, 5, "1/3"), (6, 7, "2/3")],
    2: [(6, 2, "1/3"), (0, 4, "1/3")],
    3: [(2, 3, "2/3"), (4, 3, "1/3"), (0, 1, "2/3"), (0, 7, "1/3"), (6, 5, "2/3")],
    4: [(0, 4, "2/3")],
    5: [(4, 5, "1/3"), (6, 5, "2/3"), (0, 1, "1/3"), (0, 7, "2/3"), (2, 3, "2/3")],
    6: [(2, 6, "1/3"), (0, 4, "1/3")],
    7: [(0, 7, "1"), (2, 1, "2/3"), (6, 5, "2/3"), (4, 3, "1/3")],
}


def _build_z8():
    graph = moebius(4)
    n = 8
    base = FDFunction(tuple(parse_rat(w) for w in _Z8_BASE))

    def rot_state(state, k):
        return FDFunction(tuple(state[(v - k) % n] for v in range(n)))

    states = tuple(rot_state(base, k) for k in range(n))
    cover = {v: v for v in range(n)}
    transitions = []
    for i in range(n):
        for d in range(1, n):
            j = (i + d) % n
            moves = tuple(
                ((x + i) % n, (y + i) % n, parse_rat(a)) for x, y, a in _Z8_ROWS[d]
            )
            plan = MovePlan(moves)
            result = apply_move_plan(graph, states[i], plan)
            if result.weights != states[j].weights:
                raise AssertionError(f"z8 row {d} rotated by {i} mismatches")
            transitions.append((i, j, plan))
    return StrategyCertificate(
        graph=graph,
        weight=Rat(8, 3),
        states=states,
        cover=cover,
        transitions=tuple(transitions),
        provenance="fixture",
    )


# ---------------------------------------------------------------------------
# C_10 box K_2: base state of weight 28/5; one response row per attack on
# v1..v5 and u0..u5; the reflection i -> -i fixes the base state and fills
# in the remaining attacks.

_C10_V = ["1", "0", "1/5", "2/5", "1/5", "1/5", "1/5", "2/5", "1/5", "0"]
_C10_U = ["2/5", "1/5", "2/5", "1/5", "1/5", "2/5", "1/5", "1/5", "2/5", "1/5"]

_C10_ROWS = {
    "v1": [
        ("v0", "v1", "1"), ("v2", "v3", "1/5"), ("v3", "v4", "2/5"),
        ("v4", "v5", "1/5"), ("v5", "v6", "1/5"), ("v6", "v7", "1/5"),
        ("v7", "v8", "2/5"), ("v8", "v9", "1/5"), ("u0", "u1", "2/5"),
        ("u1", "u2", "1/5"), ("u2", "u3", "2/5"), ("u3", "u4", "1/5"),
        ("u4", "u5", "1/5"), ("u5", "u6", "2/5"), ("u6", "u7", "1/5"),
        ("u7", "u8", "1/5"), ("u8", "u9", "2/5"), ("u9", "u0", "1/5"),
    ],
    "v2": [
        ("v0", "v9", "2/5"), ("v0", "u0", "2/5"), ("v3", "v2", "2/5"),
        ("v6", "v5", "1/5"), ("v7", "v6", "1/5"), ("u0", "u1", "1/5"),
        ("u0", "u9", "1/5"), ("u1", "u2", "1/5"), ("u2", "v2", "2/5"),
        ("u3", "u2", "1/5"), ("u4", "u3", "1/5"), ("u5", "u4", "2/5"),
        ("u6", "u5", "1/5"), ("u7", "u6", "1/5"), ("u8", "u7", "2/5"),
        ("u9", "u8", "1/5"),
    ],
    "v3": [
        ("v0", "v1", "1/5"), ("v0", "v9", "1/5"), ("v0", "u0", "1/5"),
        ("v2", "v3", "1/5"), ("v4", "v3", "1/5"), ("v7", "v6", "1/5"),
        ("u0", "u1", "1/5"), ("u0", "u9", "1/5"), ("u2", "u3", "1/5"),
        ("u3", "v3", "1/5"),
        ("u4", "u3", "1/5"), ("u5", "u4", "1/5"), ("u6", "u5", "1/5"),
        ("u7", "u6", "1/5"), ("u8", "u7", "1/5"), ("u9", "u8", "1/5"),
    ],
    "v4": [
        ("v0", "v1", "2/5"),
        ("v0", "v9", "1/5"), ("v0", "u0", "1/5"), ("v3", "v4", "2/5"),
        ("v5", "v4", "1/5"),
        ("u4", "v4", "1/5"),
        ("u0", "u1", "1/5"), ("u0", "u9", "1/5"), ("u1", "u2", "1/5"),
        ("u2", "u3", "1/5"), ("u3", "u4", "1/5"), ("u5", "u4", "1/5"),
        ("u7", "u6", "1/5"), ("u8", "u7", "1/5"),
    ],
    "v5": [
        ("v0", "v1", "1/5"), ("v0", "v9", "1/5"), ("v0", "u0", "2/5"),
        ("v3", "v2", "1/5"),
        ("v4", "v5", "1/5"), ("v6", "v5", "1/5"),
        ("v7", "v8", "1/5"),
        ("u5", "v5", "2/5"),
        ("u0", "u1", "1/5"), ("u0", "u9", "1/5"), ("u1", "u2", "1/5"),
        ("u2", "u3", "2/5"), ("u3", "u4", "1/5"), ("u4", "u5", "1/5"),
        ("u6", "u5", "1/5"), ("u7", "u6", "1/5"), ("u8", "u7", "2/5"),
        ("u9", "u8", "1/5"),
    ],
    "u0": [
        ("v0", "v1", "1/5"), ("v0", "v9", "1/5"), ("v0", "u0", "1/5"),
        ("v3", "v2", "1/5"), ("v7", "v8", "1/5"), ("u1", "u0", "1/5"),
        ("u2", "u3", "1/5"), ("u5", "v5", "1/5"), ("u8", "u7", "1/5"),
        ("u9", "u0", "1/5"),
    ],
    "u1": [
        ("v0", "v1", "2/5"), ("v0", "v9", "2/5"), ("v7", "v6", "1/5"),
        ("u0", "u1", "2/5"), ("u2", "u1", "2/5"), ("u5", "u4", "1/5"),
    ],
    "u2": [
        ("v0", "v1", "1/5"), ("v0", "v9", "1/5"), ("v0", "u0", "1/5"),
        ("v2", "u2", "1/5"), ("v3", "v2", "2/5"), ("v4", "v3", "1/5"),
        ("v5", "v4", "1/5"), ("v6", "v5", "1/5"), ("v7", "v6", "1/5"),
        ("v8", "v7", "1/5"), ("u0", "u9", "2/5"), ("u1", "u2", "1/5"),
        ("u3", "u2", "1/5"), ("u4", "v4", "1/5"), ("u5", "u4", "1/5"),
        ("u6", "u5", "1/5"), ("u7", "u6", "1/5"), ("u8", "u7", "1/5"),
        ("u8", "v8", "1/5"), ("u9", "u8", "1/5"),
    ],
    "u3": [
        ("v0", "v1", "2/5"), ("v0", "v9", "1/5"), ("v0", "u0", "1/5"),
        ("v3", "u3", "1/5"), ("v4", "v3", "1/5"), ("v5", "v4", "1/5"),
        ("v6", "v5", "1/5"), ("v7", "v6", "1/5"), ("u0", "u9", "1/5"),
        ("u2", "u3", "2/5"),
        ("u3", "u3", "1/5"),  # explicit stay
        ("u4", "u3", "1/5"),
        ("u5", "v5", "1/5"), ("u7", "u6", "1/5"), ("u8", "u7", "1/5"),
        ("u9", "u8", "1/5"), ("u8", "v8", "1/5"),
    ],
    "u4": [
        ("v0", "v1", "1/5"), ("v0", "v9", "2/5"), ("v0", "u0", "1/5"),
        ("v3", "v4", "1/5"), ("v4", "u4", "1/5"), ("v5", "v4", "1/5"),
        ("v6", "v5", "1/5"), ("v7", "v6", "2/5"), ("u0", "u1", "1/5"),
        ("u0", "u9", "1/5"),
        ("u2", "v2", "1/5"),
        ("u3", "u4", "1/5"),
        ("u5", "u4", "2/5"),
        ("u7", "v7", "1/5"),
        ("u8", "u7", "2/5"), ("u9", "u8", "1/5"),
    ],
    "u5": [
        ("v0", "v1", "1/5"), ("v0", "v9", "1/5"), ("v0", "u0", "1/5"),
        ("v2", "v3", "1/5"), ("v3", "v4", "1/5"), ("v4", "v5", "1/5"),
        ("v5", "u5", "1/5"), ("v6", "v5", "1/5"), ("v7", "v6", "1/5"),
        ("v8", "v7", "1/5"), ("u0", "u1", "1/5"), ("u0", "u9", "1/5"),
        ("u1", "u2", "1/5"), ("u2", "v2", "1/5"), ("u4", "u5", "1/5"),
        ("u6", "u5", "1/5"), ("u8", "v8", "1/5"), ("u9", "u8", "1/5"),
    ],
}


def _c10_vertex(label):
    layer = 0 if label[0] == "v" else 1
    return 2 * int(label[1:]) + layer


def _c10_perm(shift, swap):
    perm = [0] * 20
    for i in range(10):
        for j in range(2):
            perm[2 * i + j] = 2 * ((i + shift) % 10) + (j ^ swap)
    return perm


def _c10_reflect():
    perm = [0] * 20
    for i in range(10):
        for j in range(2):
            perm[2 * i + j] = 2 * ((10 - i) % 10) + j
    return perm


def _apply_perm_state(state, perm):
    ws = [Rat(0)] * len(perm)
    for v, w in enumerate(state.weights):
        ws[perm[v]] = w
    return FDFunction(tuple(ws))


def _apply_perm_moves(moves, perm):
    return tuple((perm[x], perm[y], a) for x, y, a in moves)


def _build_c10k2():
    graph = prism(10)
    base = FDFunction(
        tuple(
            parse_rat(_C10_V[i]) if j == 0 else parse_rat(_C10_U[i])
            for i in range(10)
            for j in range(2)
        )
    )
    refl = _c10_reflect()
    if _apply_perm_state(base, refl).weights != base.weights:
        raise AssertionError("base state must be reflection-invariant")

    # response rows for every attack from the base state
    rows = {}
    rows[("v", 0)] = ()
    for lbl, moves in _C10_ROWS.items():
        layer, d = lbl[0], int(lbl[1:])
        rows[(layer, d)] = tuple(
            (_c10_vertex(x), _c10_vertex(y), parse_rat(a)) for x, y, a in moves
        )
    for layer, d in [("v", 6), ("v", 7), ("v", 8), ("v", 9),
                     ("u", 6), ("u", 7), ("u", 8), ("u", 9)]:
        rows[(layer, d)] = _apply_perm_moves(rows[(layer, (10 - d) % 10)], refl)

    # state index: k = rotation by k; 10 + k = layer swap then rotation by k
    states = []
    for s in range(2):
        for k in range(10):
            states.append(_apply_perm_state(base, _c10_perm(k, s)))
    states = tuple(states)
    cover = {}
    for k in range(10):
        cover[2 * k] = k
        cover[2 * k + 1] = 10 + k

    transitions = []
    for s in range(2):
        for k in range(10):
            si = 10 * s + k
            perm = _c10_perm(k, s)
            inv = [0] * 20
            for v, pv in enumerate(perm):
                inv[pv] = v
            for attack in range(20):
                x = inv[attack]
                layer, d = ("v", x // 2) if x % 2 == 0 else ("u", x // 2)
                ts = s ^ (0 if layer == "v" else 1)
                tk = (k + d) % 10
                tj = 10 * ts + tk
                if tj == si:
                    continue
                plan = MovePlan(_apply_perm_moves(rows[(layer, d)], perm))
                result = apply_move_plan(graph, states[si], plan)
                if result.weights != states[tj].weights:
                    raise AssertionError(
                        f"row {layer}{d} transported to state {si} mismatches"
                    )
                transitions.append((si, tj, plan))
    return StrategyCertificate(
        graph=graph,
        weight=Rat(28, 5),
        states=states,
        cover=cover,
        transitions=tuple(transitions),
        provenance="fixture",
    )


# ---------------------------------------------------------------------------
# Kneser canonical families


def _build_kneser(nset):
    graph = kneser(nset, 2)
    sets = kneser_vertex_sets(nset, 2)
    n = graph.n
    states = []
    for pin in range(n):
        ws = [Rat(0)] * n
        ws[pin] = Rat(1)
        if nset == 5:
            for v in range(n):
                if v != pin and (set(sets[pin]) & set(sets[v])):
                    ws[v] = Rat(1, 3)
        else:
            b = (nset - 3) * (nset - 4) // 2
            for v in graph.adjacency[pin]:
                ws[v] = Rat(1, b)
        states.append(FDFunction(tuple(ws)))
    weight = Rat(3) if nset == 5 else Rat(2 * nset - 6, nset - 4)
    return StrategyCertificate(
        graph=graph,
        weight=weight,
        states=tuple(states),
        cover={v: v for v in range(n)},
        transitions="pairwise",
        provenance="fixture",
    )


_BUILDERS = {
    "z8": _build_z8,
    "c10k2": _build_c10k2,
    "petersen": lambda: _build_kneser(5),
    "kneser6": lambda: _build_kneser(6),
    "kneser7": lambda: _build_kneser(7),
    "kneser8": lambda: _build_kneser(8),
    "kneser9": lambda: _build_kneser(9),
}

FIXTURE_NAMES = tuple(sorted(_BUILDERS))


@lru_cache(maxsize=None)
def _load_by_key(key):
    return _BUILDERS[key]()


def load_fixture(name):
    """A built-in verified StrategyCertificate by name."""
    key = name.strip().lower().replace("(", "").replace(")", "")
    if key not in _BUILDERS:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        )
    return _load_by_key(key)
