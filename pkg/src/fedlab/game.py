"""Attack/defense game loop, defender policies and certificate checking.

A round: the attacker names a vertex, the defender redistributes weight
(each vertex within its closed neighborhood), and the resulting weighting
must dominate fractionally with weight >= 1 on the attacked vertex.
Failure at the finite horizon is reported as survival: finite runs only
ever falsify a defense, never prove one.
"""

from dataclasses import dataclass, field

from . import lp
from .engine import gamma_f
from .errors import (
    FedlabError,
    InvalidInitialError,
    WrongShapeError,
)
from .graphs import SplitMix64, kneser_vertex_sets
from .rational import Rat
from .reconfig import FDFunction, MovePlan, apply_move_plan, can_reconfigure
from .search import connectivity, disjoint_paths


@dataclass(frozen=True)
class GameState:
    weights: FDFunction
    round: int
    total: object


@dataclass(frozen=True)
class GameEvent:
    attack: int
    plan: MovePlan
    resulting: FDFunction


@dataclass
class Transcript:
    initial: FDFunction
    events: list
    outcome: str

    def survived(self):
        return self.outcome == "survived"

    def failure_round(self):
        if self.outcome.startswith("defender_failed_at_round_"):
            return int(self.outcome.rsplit("_", 1)[1])
        return None

    def to_json_dict(self):
        return {
            "initial": self.initial.to_json_dict(),
            "events": [
                {
                    "attack": e.attack,
                    "plan": e.plan.to_json_list(),
                    "resulting": e.resulting.to_json_dict(),
                }
                for e in self.events
            ],
            "outcome": self.outcome,
        }

    @classmethod
    def from_json_dict(cls, doc):
        return cls(
            initial=FDFunction.from_json_dict(doc["initial"]),
            events=[
                GameEvent(
                    attack=e["attack"],
                    plan=MovePlan.from_json_list(e["plan"]),
                    resulting=FDFunction.from_json_dict(e["resulting"]),
                )
                for e in doc["events"]
            ],
            outcome=doc["outcome"],
        )


# ---------------------------------------------------------------------------
# defender policies


def _check_fixed_total(policy_name, state, total):
    if total is not None and Rat(total) != state.total():
        raise FedlabError(
            f"{policy_name} fixes its initial total at {state.total()}, "
            f"got {total}"
        )


class LpOnlineDefender:
    """Feasibility LP over movement variables, maximizing the minimum
    closed-neighborhood slack of the resulting weighting."""

    name = "lp_online"

    def respond(self, graph, state, attack):
        n = graph.n
        w = state.weights
        pairs = []
        for x in range(n):
            for y in graph.closed_neighborhood(x):
                pairs.append((x, y))
        idx = {p: i for i, p in enumerate(pairs)}
        nv = len(pairs) + 1
        zcol = len(pairs)
        cons = []
        for x in range(n):
            row = [0] * nv
            for y in graph.closed_neighborhood(x):
                row[idx[(x, y)]] = 1
            cons.append((row, lp.EQ, w[x]))
        row = [0] * nv
        for x in graph.closed_neighborhood(attack):
            row[idx[(x, attack)]] = 1
        cons.append((row, lp.GEQ, 1))
        for v in range(n):
            row = [0] * nv
            for u in graph.closed_neighborhood(v):
                for x in graph.closed_neighborhood(u):
                    row[idx[(x, u)]] += 1
            row[zcol] = -1
            cons.append((row, lp.GEQ, 1))
        objective = [0] * nv
        objective[zcol] = -1  # maximize the slack variable
        sol = lp.solve(lp.make_model(nv, objective, cons))
        if sol.status != lp.OPTIMAL:
            return None
        moves = [
            (x, y, sol.assignment[i])
            for i, (x, y) in enumerate(pairs)
            if sol.assignment[i] > 0
        ]
        return MovePlan(tuple(moves))

    def initial_state(self, graph, total=None):
        value, witness = gamma_f(graph)
        if total is None:
            total = 2 * value
        return witness.scaled(Rat(total) / value)


class TableDefender:
    """Plays a strategy certificate: always moves to the covering state."""

    name = "table"

    def __init__(self, certificate):
        self.cert = certificate
        self._plans = None
        if certificate.transitions != "pairwise":
            self._plans = {
                (i, j): plan for i, j, plan in certificate.transitions
            }

    def _state_index(self, weights):
        for i, s in enumerate(self.cert.states):
            if s.weights == weights.weights:
                return i
        return None

    def respond(self, graph, state, attack):
        i = self._state_index(state.weights)
        if i is None:
            raise WrongShapeError("current state is not a certificate state")
        j = self.cert.cover.get(attack)
        if j is None:
            return None
        if i == j:
            return MovePlan.identity(state.weights)
        if self._plans is not None:
            plan = self._plans.get((i, j))
            return plan
        return can_reconfigure(graph, self.cert.states[i], self.cert.states[j])

    def initial_state(self, graph, total=None):
        state = self.cert.states[self.cert.cover.get(0, 0)]
        _check_fixed_total(self.name, state, total)
        return state


class ConnectivityUniformDefender:
    """Rover of weight 1 plus 1/(kappa+1) everywhere else; responds by
    shifting 1/(kappa+1) along kappa internally disjoint rover-attack paths."""

    name = "connectivity_uniform"

    def __init__(self, graph=None):
        self._kappa = None

    def _ensure_kappa(self, graph):
        if self._kappa is None:
            self._kappa = connectivity(graph)
            if graph.n > 1 and self._kappa < 1:
                raise FedlabError("connectivity policy needs a connected graph")
        return self._kappa

    def respond(self, graph, state, attack):
        n = graph.n
        if n == 1:
            return MovePlan.identity(state.weights)
        kappa = self._ensure_kappa(graph)
        base = Rat(1, kappa + 1)
        w = state.weights
        rovers = [v for v in range(n) if w[v] == 1]
        if len(rovers) != 1 or any(
            w[v] != base for v in range(n) if v != rovers[0]
        ):
            raise WrongShapeError("state is not rover + uniform 1/(kappa+1)")
        rover = rovers[0]
        if attack == rover:
            return MovePlan.identity(w)
        paths = disjoint_paths(graph, rover, attack, kappa)
        moves = []
        for p in paths:
            for a, b in zip(p, p[1:]):
                moves.append((a, b, base))
        return MovePlan(tuple(moves))

    def initial_state(self, graph, total=None):
        kappa = self._ensure_kappa(graph) if graph.n > 1 else 0
        base = Rat(1, kappa + 1)
        ws = [base] * graph.n
        ws[0] = Rat(1)
        state = FDFunction(tuple(ws))
        _check_fixed_total(self.name, state, total)
        return state


class DoubleGammaFDefender:
    """Two superimposed copies of a least-weight dominating function: the
    copy at home concentrates the attacked neighborhood, the displaced copy
    walks its parcels one step back home."""

    name = "double_gamma_f"

    def __init__(self):
        self._home = None
        self._copies = None  # two dicts {(home, location): amount}
        self._active = 0

    def _ensure(self, graph):
        if self._home is None:
            _, witness = gamma_f(graph)
            self._home = witness
            self._copies = [
                {(v, v): witness[v] for v in range(graph.n) if witness[v] > 0},
                {(v, v): witness[v] for v in range(graph.n) if witness[v] > 0},
            ]
            self._active = 0

    def _position_weights(self, n):
        ws = [Rat(0)] * n
        for copy in self._copies:
            for (_, loc), amt in copy.items():
                ws[loc] += amt
        return tuple(ws)

    def respond(self, graph, state, attack):
        self._ensure(graph)
        n = graph.n
        if state.weights.weights != self._position_weights(n):
            raise WrongShapeError("state does not match the tracked parcels")
        h = self._home
        active = self._copies[self._active]
        passive = self._copies[1 - self._active]
        moves = {}

        def add(x, y, amt):
            if x != y and amt > 0:
                moves[(x, y)] = moves.get((x, y), Rat(0)) + amt

        new_passive = {}
        for (home, loc), amt in passive.items():
            add(loc, home, amt)
            new_passive[(home, home)] = new_passive.get((home, home), Rat(0)) + amt
        new_active = {}
        hood = set(graph.closed_neighborhood(attack))
        for (home, loc), amt in active.items():
            if loc != home:
                raise WrongShapeError("active copy expected at home")
            if home in hood:
                add(home, attack, amt)
                new_active[(home, attack)] = amt
            else:
                new_active[(home, home)] = amt
        self._copies[self._active] = new_active
        self._copies[1 - self._active] = new_passive
        self._active = 1 - self._active
        return MovePlan(tuple((x, y, a) for (x, y), a in moves.items()))

    def initial_state(self, graph, total=None):
        self._ensure(graph)
        state = FDFunction(self._position_weights(graph.n))
        _check_fixed_total(self.name, state, total)
        return state


def _bipartite_matching(left, right, adj):
    """Perfect matching left -> right via augmenting paths; None if absent."""
    match_l = {a: None for a in left}
    match_r = {b: None for b in right}

    def augment(a, seen):
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if match_r[b] is None or augment(match_r[b], seen):
                match_l[a] = b
                match_r[b] = a
                return True
        return False

    for a in left:
        if not augment(a, set()):
            return None
    return match_l


class KneserCanonicalDefender:
    """Canonical-state strategy on the two-element Kneser graphs."""

    name = "kneser_canonical"

    def __init__(self, n):
        if n < 5:
            raise FedlabError("kneser policy needs n >= 5")
        self.nset = n
        self.sets = kneser_vertex_sets(n, 2)

    def _adj(self, a, b):
        return not (set(self.sets[a]) & set(self.sets[b]))

    def canonical_state(self, graph, pin):
        n = graph.n
        ws = [Rat(0)] * n
        ws[pin] = Rat(1)
        if self.nset == 5:
            for v in range(n):
                if v != pin and not self._adj(pin, v):
                    ws[v] = Rat(1, 3)
        else:
            b = _choose2(self.nset - 3)
            for v in graph.adjacency[pin]:
                ws[v] = Rat(1, b)
        return FDFunction(tuple(ws))

    def _find_pin(self, graph, weights):
        pins = [v for v in range(graph.n) if weights[v] >= 1]
        if len(pins) != 1:
            raise WrongShapeError("no unique pinned vertex")
        pin = pins[0]
        if weights.weights != self.canonical_state(graph, pin).weights:
            raise WrongShapeError("state is not the canonical weighting")
        return pin

    def initial_state(self, graph, total=None):
        state = self.canonical_state(graph, 0)
        _check_fixed_total(self.name, state, total)
        return state

    def respond(self, graph, state, attack):
        pin = self._find_pin(graph, state.weights)
        if attack == pin:
            return MovePlan.identity(state.weights)
        if self.nset == 5:
            return self._respond_petersen(graph, state, pin, attack)
        return self._respond_large(graph, state, pin, attack)

    def _respond_large(self, graph, state, pin, attack):
        b = _choose2(self.nset - 3)
        share = Rat(1, b)
        nbr_p = set(graph.adjacency[pin])
        nbr_v = set(graph.adjacency[attack])
        moves = []
        if attack in nbr_p:
            moves.append((pin, attack, Rat(b - 1, b)))
            a_side = sorted(nbr_p - nbr_v - {attack})
            b_side = sorted(nbr_v - nbr_p - {pin})
            adj = {a: [c for c in b_side if self._adj(a, c)] for a in a_side}
            matching = _bipartite_matching(a_side, b_side, adj)
            if matching is None:
                raise WrongShapeError("no perfect matching between shifted shells")
            for a, c in matching.items():
                moves.append((a, c, share))
        else:
            common = sorted(nbr_p & nbr_v)
            for c in common:
                moves.append((c, attack, share))
                moves.append((pin, c, share))
            a_side = sorted(nbr_p - nbr_v)
            b_side = sorted(nbr_v - nbr_p)
            adj = {a: [c for c in b_side if self._adj(a, c)] for a in a_side}
            matching = _bipartite_matching(a_side, b_side, adj)
            if matching is None:
                raise WrongShapeError("no perfect matching between shifted shells")
            for a, c in matching.items():
                moves.append((a, c, share))
        return MovePlan(tuple(moves))

    def _respond_petersen(self, graph, state, pin, attack):
        third = Rat(1, 3)
        n = graph.n
        nonnbr = lambda v: {
            u for u in range(n) if u != v and not self._adj(v, u)
        }
        n2_p = nonnbr(pin)
        n2_v = nonnbr(attack)
        moves = []
        if self._adj(pin, attack):
            moves.append((pin, attack, Rat(1)))
            vanish = sorted(n2_p - n2_v - {attack})
            appear = sorted(n2_v - n2_p - {pin})
            kept = (n2_p & n2_v)
            # route each vanishing third through a kept middle vertex
            assignment = _route_pipelines(self, vanish, appear, kept)
            if assignment is None:
                raise WrongShapeError("no disjoint pipelines found")
            for a, (mid, c) in assignment.items():
                moves.append((a, mid, third))
                moves.append((mid, c, third))
        else:
            senders = sorted(u for u in graph.adjacency[attack] if u in n2_p)
            for u in senders:
                moves.append((u, attack, third))
            targets = sorted(n2_v - n2_p - {pin})
            for tgt in targets:
                moves.append((pin, tgt, third))
        return MovePlan(tuple(moves))


def _route_pipelines(policy, vanish, appear, kept):
    """Match vanish[i] -> appear[j] through distinct kept middles (a -> mid,
    mid -> target), each hop an edge."""

    def backtrack(i, used_mid, used_tgt, acc):
        if i == len(vanish):
            return dict(acc)
        a = vanish[i]
        for c in appear:
            if c in used_tgt:
                continue
            for mid in sorted(kept):
                if mid in used_mid:
                    continue
                if policy._adj(a, mid) and policy._adj(mid, c):
                    acc.append((a, (mid, c)))
                    res = backtrack(
                        i + 1, used_mid | {mid}, used_tgt | {c}, acc
                    )
                    if res is not None:
                        return res
                    acc.pop()
        return None

    out = backtrack(0, set(), set(), [])
    if out is None:
        return None
    return dict(out)


def _choose2(k):
    return k * (k - 1) // 2


# ---------------------------------------------------------------------------
# attacker policies


class RandomAttacker:
    name = "random"

    def __init__(self, seed=0):
        self.rng = SplitMix64(seed)

    def next_attack(self, graph, state, round_index):
        return self.rng.randrange(graph.n)


class GreedyAttacker:
    """Attacks the vertex whose closed neighborhood currently holds the
    least weight (tie: least index)."""

    name = "greedy"

    def next_attack(self, graph, state, round_index):
        w = state.weights
        best_v = 0
        best = None
        for v in range(graph.n):
            s = sum((w[u] for u in graph.closed_neighborhood(v)), start=Rat(0))
            if best is None or s < best:
                best, best_v = s, v
        return best_v


class ScriptedAttacker:
    """Replays a fixed sequence, wrapping around when exhausted."""

    name = "scripted"

    def __init__(self, sequence):
        if not sequence:
            raise FedlabError("scripted attacker needs a nonempty sequence")
        self.sequence = list(sequence)

    def next_attack(self, graph, state, round_index):
        return self.sequence[round_index % len(self.sequence)]


def ladder_sweep(graph):
    """v_1, v_2', v_4, v_5', ... on a grid(k, 2) ladder (ids 0, 3, 6, ...)."""
    tag = graph.tag
    if tag is None or tag.family != "grid" or tag.params[1] != 2:
        raise FedlabError("ladder sweep needs a grid(k, 2) graph")
    rows = tag.params[0]
    seq = []
    t = 0
    while True:
        row, layer = (3 * (t // 2), 0) if t % 2 == 0 else (3 * (t // 2) + 1, 1)
        if row >= rows:
            break
        seq.append(2 * row + layer)
        t += 1
    return ScriptedAttacker(seq)


def path_sweep(graph):
    return ScriptedAttacker(list(range(0, graph.n, 2)))


def caterpillar_sweep(graph, k):
    """Leaf pairs of caterpillar(k) in left-to-right order."""
    return ScriptedAttacker(list(range(3 * k, graph.n)))


def cycle_sweep(graph):
    n = graph.n
    return ScriptedAttacker([(3 * t) % n for t in range(n)])


# ---------------------------------------------------------------------------
# the loop


def simulate(graph, defender, attacker, rounds, initial, validate_initial=True):
    """Run the finite-horizon game; survival only means no falsification."""
    if len(initial) != graph.n:
        raise InvalidInitialError("initial weighting has wrong dimension")
    if validate_initial and not initial.is_dominating(graph):
        raise InvalidInitialError("initial weighting does not dominate")
    total = initial.total()
    state = GameState(initial, 0, total)
    events = []
    outcome = "survived"
    for r in range(1, rounds + 1):
        attack = attacker.next_attack(graph, state, r - 1)
        plan = defender.respond(graph, state, attack)
        if plan is None:
            outcome = f"defender_failed_at_round_{r}"
            break
        neww = apply_move_plan(graph, state.weights, plan)
        if neww.total() != total:
            raise AssertionError("policy violated weight conservation")
        if neww[attack] < 1 or not neww.is_dominating(graph):
            raise AssertionError("policy produced an invalid response state")
        events.append(GameEvent(attack, plan, neww))
        state = GameState(neww, r, total)
    return Transcript(initial, events, outcome)


# ---------------------------------------------------------------------------
# certificate verification


@dataclass
class VerificationReport:
    ok: bool
    violations: list = field(default_factory=list)


def verify_certificate(graph, cert):
    """Check states, cover, and transition evidence of a certificate."""
    violations = []
    for i, s in enumerate(cert.states):
        if len(s) != graph.n:
            violations.append(f"state {i}: wrong dimension")
            continue
        if s.total() != cert.weight:
            violations.append(f"state {i}: total {s.total()} != {cert.weight}")
        if not s.is_dominating(graph):
            violations.append(f"state {i}: not fractionally dominating")
    for v in range(graph.n):
        j = cert.cover.get(v)
        if j is None or not (0 <= j < len(cert.states)):
            violations.append(f"vertex {v}: no covering state")
        elif cert.states[j][v] < 1:
            violations.append(f"vertex {v}: cover state {j} has weight < 1")
    if cert.transitions == "pairwise":
        for i in range(len(cert.states)):
            for j in range(len(cert.states)):
                if i != j and can_reconfigure(
                    graph, cert.states[i], cert.states[j]
                ) is None:
                    violations.append(f"states {i} -> {j}: not reconfigurable")
    else:
        arrives = {}
        for i, j, plan in cert.transitions:
            try:
                result = apply_move_plan(graph, cert.states[i], plan)
            except FedlabError as exc:
                violations.append(f"transition {i} -> {j}: illegal plan ({exc})")
                continue
            if result.weights != cert.states[j].weights:
                violations.append(f"transition {i} -> {j}: plan lands off-state")
            arrives.setdefault(i, set()).add(j)
        for i in range(len(cert.states)):
            for v in range(graph.n):
                if cert.states[i][v] >= 1:
                    continue
                ok = any(
                    cert.states[j][v] >= 1 for j in arrives.get(i, ())
                )
                if not ok:
                    violations.append(
                        f"state {i}, attack {v}: no usable transition"
                    )
    return VerificationReport(not violations, violations)
