"""Exact two-phase simplex over arbitrary-precision rationals.

No floating point is used anywhere: the tableau holds exact rationals
(zeros are stored as plain int 0, which mixes freely and keeps the
inner loops cheap).  Bland's pivot rule makes every solve deterministic
and termination-proof on degenerate models.  Every optimal assignment is
re-verified against the original constraints before it is returned.
"""

from dataclasses import dataclass
from typing import Optional

from .rational import Rat

LEQ = "<="
GEQ = ">="
EQ = "="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPModel:
    """Minimization model: min c.x  s.t.  rows, x >= lower bounds (default 0)."""

    num_vars: int
    objective: tuple
    constraints: tuple  # of (coeff tuple, relation, rhs)
    var_lower_bounds: Optional[tuple] = None
    labels: Optional[tuple] = None

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length mismatch")
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != self.num_vars:
                raise ValueError("constraint coefficient length mismatch")
            if rel not in (LEQ, GEQ, EQ):
                raise ValueError(f"bad relation {rel!r}")
        if self.var_lower_bounds is not None and len(self.var_lower_bounds) != self.num_vars:
            raise ValueError("lower bound length mismatch")


@dataclass(frozen=True)
class LPSolution:
    status: str
    value: Optional[object] = None
    assignment: Optional[tuple] = None


def make_model(num_vars, objective, constraints, lower_bounds=None, labels=None):
    return LPModel(
        num_vars,
        tuple(Rat(c) for c in objective),
        tuple((tuple(Rat(c) for c in coeffs), rel, Rat(rhs)) for coeffs, rel, rhs in constraints),
        None if lower_bounds is None else tuple(Rat(b) for b in lower_bounds),
        labels,
    )


def satisfies(model, assignment, tol_free=True):
    """Exact feasibility check of an assignment against all constraints."""
    for j, x in enumerate(assignment):
        lb = model.var_lower_bounds[j] if model.var_lower_bounds else 0
        if x < lb:
            return False
    for coeffs, rel, rhs in model.constraints:
        lhs = sum((c * x for c, x in zip(coeffs, assignment) if c), start=Rat(0))
        if rel == LEQ and lhs > rhs:
            return False
        if rel == GEQ and lhs < rhs:
            return False
        if rel == EQ and lhs != rhs:
            return False
    return True


def dump_model(model):
    """Debug text form: one line per constraint 'c_1 ... c_k REL rhs'."""
    from .rational import format_rat

    lines = [" ".join(format_rat(c) for c in model.objective) + " MIN"]
    for coeffs, rel, rhs in model.constraints:
        lines.append(
            " ".join(format_rat(c) for c in coeffs) + f" {rel} " + format_rat(rhs)
        )
    return "\n".join(lines) + "\n"


class _Tableau:
    """Dense rational tableau; rows carry the rhs in their last slot."""

    def __init__(self, num_cols):
        self.num_cols = num_cols  # structural + slack columns (no artificials)
        self.rows = []
        self.basis = []

    def pivot(self, r, c, cost_rows):
        prow = self.rows[r]
        piv = prow[c]
        if piv != 1:
            inv = 1 / Rat(piv)
            for k, val in enumerate(prow):
                if val:
                    v = val * inv
                    prow[k] = v if v else 0
        nz = [k for k, val in enumerate(prow) if val]
        for row in self.rows:
            if row is prow:
                continue
            f = row[c]
            if f:
                for k in nz:
                    v = row[k] - f * prow[k]
                    row[k] = v if v else 0
        for row in cost_rows:
            f = row[c]
            if f:
                for k in nz:
                    v = row[k] - f * prow[k]
                    row[k] = v if v else 0
        self.basis[r] = c

    def run_simplex(self, cost_row, col_limit):
        """Bland's rule minimization; cost_row is reduced in place."""
        rows = self.rows
        basis = self.basis
        while True:
            enter = -1
            for j in range(col_limit):
                if cost_row[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            ratio = None
            leave = -1
            for i, row in enumerate(rows):
                a = row[enter]
                if a > 0:
                    r = row[-1] / a
                    if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                        ratio = r
                        leave = i
            if leave < 0:
                return UNBOUNDED
            self.pivot(leave, enter, (cost_row,))


def solve(model):
    """Exact optimum of a minimization LP; status carries infeasible/unbounded."""
    n = model.num_vars
    lb = model.var_lower_bounds
    shift = [Rat(x) for x in lb] if lb else None

    # shifted rows: a.(y + lb) rel b  ->  a.y rel b - a.lb
    prepared = []
    for coeffs, rel, rhs in model.constraints:
        if shift:
            rhs = rhs - sum((c * s for c, s in zip(coeffs, shift) if c), start=Rat(0))
        prepared.append((coeffs, rel, rhs))

    num_eq = sum(1 for _, rel, _ in prepared if rel == EQ)
    total_cols = n + len(prepared) - num_eq  # one slack/surplus per inequality

    tab = _Tableau(total_cols)
    slack_at = n
    art_rows = []
    for coeffs, rel, rhs in prepared:
        row = [c if c else 0 for c in coeffs]
        neg = rhs < 0
        if neg:
            row = [-c if c else 0 for c in row]
            rhs = -rhs
            rel = {LEQ: GEQ, GEQ: LEQ, EQ: EQ}[rel]
        row.extend([0] * (total_cols - n))
        if rel == LEQ:
            row.append(rhs)
            row[slack_at] = Rat(1)
            tab.rows.append(row)
            tab.basis.append(slack_at)
            slack_at += 1
        elif rel == GEQ:
            row.append(rhs)
            row[slack_at] = Rat(-1)
            tab.rows.append(row)
            tab.basis.append(-1)  # artificial assigned below
            art_rows.append(len(tab.rows) - 1)
            slack_at += 1
        else:
            row.append(rhs)
            tab.rows.append(row)
            tab.basis.append(-1)
            art_rows.append(len(tab.rows) - 1)

    # artificial columns appended after all structural/slack columns
    num_art = len(art_rows)
    art_base = total_cols
    for row in tab.rows:
        row[-1:-1] = [0] * num_art
    for k, i in enumerate(art_rows):
        tab.rows[i][art_base + k] = Rat(1)
        tab.basis[i] = art_base + k

    width = total_cols + num_art + 1

    if num_art:
        cost = [0] * width
        for i in art_rows:
            row = tab.rows[i]
            for k, val in enumerate(row):
                if val:
                    v = cost[k] - val
                    cost[k] = v if v else 0
        # artificial columns cost 1; after reduction their entries cancel to 0
        for k in range(num_art):
            cost[art_base + k] = 0
        status = tab.run_simplex(cost, total_cols + num_art)
        if status != OPTIMAL or cost[-1] != 0:
            # phase-1 optimum is -cost[-1]; nonzero means infeasible
            if status == OPTIMAL and -cost[-1] > 0:
                return LPSolution(INFEASIBLE)
            if status == UNBOUNDED:  # cannot happen: phase 1 is bounded below
                raise AssertionError("phase 1 unbounded")
        # drive leftover artificials out of the basis
        for i in range(len(tab.rows)):
            if tab.basis[i] >= art_base:
                row = tab.rows[i]
                enter = next((j for j in range(total_cols) if row[j]), None)
                if enter is None:
                    continue  # redundant row; harmless to keep
                tab.pivot(i, enter, ())
        # freeze artificial columns at zero so they never re-enter
        for row in tab.rows:
            for k in range(num_art):
                row[art_base + k] = 0

    # phase 2 cost row reduced against the current basis
    cost = [0] * width
    for j in range(n):
        c = model.objective[j]
        cost[j] = c if c else 0
    for i, b in enumerate(tab.basis):
        if b < total_cols and cost[b]:
            f = cost[b]
            row = tab.rows[i]
            for k, val in enumerate(row):
                if val:
                    v = cost[k] - f * val
                    cost[k] = v if v else 0
            cost[b] = 0
    status = tab.run_simplex(cost, total_cols)
    if status == UNBOUNDED:
        return LPSolution(UNBOUNDED)

    assignment = [Rat(0)] * n
    for i, b in enumerate(tab.basis):
        if b < n:
            assignment[b] = Rat(tab.rows[i][-1])
    if shift:
        assignment = [a + s for a, s in zip(assignment, shift)]
    value = sum((c * a for c, a in zip(model.objective, assignment) if c), start=Rat(0))

    if not satisfies(model, assignment):
        raise AssertionError("simplex returned an assignment violating the model")
    return LPSolution(OPTIMAL, value, tuple(assignment))
