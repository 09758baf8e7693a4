"""Exact rational linear programming via the two-phase simplex method.

Bland's smallest-index pivot rule guarantees termination and makes every
answer deterministic.  Whenever an optimum is reported, a dual solution
with equal objective value is computed from the final basis and verified,
so callers never have to trust the pivoting itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, InternalError
from .linalg import Matrix, solve_linear, vec_dot

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Optional[Fraction] = None
    witness: Optional[tuple[Fraction, ...]] = None
    dual: Optional[tuple[Fraction, ...]] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(tableau, basis, row, col):
    inv = 1 / tableau[row][col]
    tableau[row] = [x * inv for x in tableau[row]]
    for r in range(len(tableau)):
        if r != row and tableau[r][col]:
            factor = tableau[r][col]
            tableau[r] = [x - factor * y for x, y in zip(tableau[r], tableau[row])]
    basis[row] = col


def _run_simplex(tableau, basis, cost) -> str:
    """Minimize cost over the tableau in place.  Last tableau column is rhs."""
    m = len(tableau)
    width = len(cost)
    while True:
        # reduced costs z_j = c_j - c_B . B^-1 A_j read off the tableau
        cb = [cost[b] for b in basis]
        entering = None
        for j in range(width):
            red = cost[j] - sum(cb[r] * tableau[r][j] for r in range(m))
            if red < 0:
                entering = j
                break  # Bland: first (smallest-index) improving column
        if entering is None:
            return OPTIMAL
        leaving = None
        best_ratio = None
        for r in range(m):
            coef = tableau[r][entering]
            if coef > 0:
                ratio = tableau[r][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = r
        if leaving is None:
            return UNBOUNDED
        _pivot(tableau, basis, leaving, entering)


def _solve_standard_form(c, a_rows, b) -> LpResult:
    """min c.x  s.t.  a_rows x = b,  x >= 0, all data Fractions."""
    m = len(a_rows)
    n = len(c)
    rows = [list(row) for row in a_rows]
    rhs = list(b)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial variables with unit cost
    tableau = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    phase1_cost = [Fraction(0)] * n + [Fraction(1)] * m
    status = _run_simplex(tableau, basis, phase1_cost)
    if status != OPTIMAL:
        raise InternalError("phase-1 simplex cannot be unbounded")
    infeas = sum(tableau[r][-1] * phase1_cost[basis[r]] for r in range(m))
    if infeas > 0:
        return LpResult(status=INFEASIBLE)
    # drive lingering artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, r, col)

    # phase 2 over the original columns; leftover artificials (redundant
    # rows) are pinned at zero by giving every artificial a huge cost of 0
    # while forbidding them from entering.
    phase2_cost = list(c) + [Fraction(0)] * m

    def run_phase2():
        mlocal = len(tableau)
        while True:
            cb = [phase2_cost[bidx] for bidx in basis]
            entering = None
            for j in range(n):  # artificial columns may not re-enter
                red = phase2_cost[j] - sum(cb[r] * tableau[r][j] for r in range(mlocal))
                if red < 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            leaving = None
            best_ratio = None
            for r in range(mlocal):
                coef = tableau[r][entering]
                if coef > 0:
                    ratio = tableau[r][-1] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[r] < basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = r
            if leaving is None:
                return UNBOUNDED
            _pivot(tableau, basis, leaving, entering)

    status = run_phase2()
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED)

    x = [Fraction(0)] * n
    for r, bidx in enumerate(basis):
        if bidx < n:
            x[bidx] = tableau[r][-1]
    value = vec_dot(c, x)

    # dual: y solves y . A_B = c_B over the basic columns (artificial
    # basics correspond to redundant rows and contribute unit columns).
    bt_rows = []
    cb = []
    for bidx in basis:
        if bidx < n:
            bt_rows.append([a_rows[i][bidx] for i in range(m)])
        else:
            bt_rows.append([Fraction(int(i == bidx - n)) for i in range(m)])
        cb.append(phase2_cost[bidx])
    y = solve_linear(Matrix(bt_rows), cb)
    if y is None:
        raise InternalError("singular basis at simplex optimum")
    # strong duality certificate, checked exactly
    if vec_dot(y, b) != value:
        raise InternalError("dual objective does not match primal optimum")
    for j in range(n):
        if vec_dot(y, [a_rows[i][j] for i in range(m)]) > c[j]:
            raise InternalError("dual certificate violates feasibility")
    return LpResult(status=OPTIMAL, value=value, witness=tuple(x), dual=tuple(y))


def lp_optimize(
    sense: str,
    objective: Sequence,
    eq_matrix: Sequence[Sequence],
    eq_rhs: Sequence,
    var_count: Optional[int] = None,
    nonneg: Optional[Sequence[int]] = None,
) -> LpResult:
    """Optimize objective . x subject to eq_matrix x = eq_rhs.

    Variables listed in ``nonneg`` (default: all) are constrained >= 0;
    the rest are free.  ``sense`` is "min" or "max".  The reported
    optimum carries an exactly-verified dual certificate.
    """
    if sense not in ("min", "max"):
        raise InputError(f"sense must be 'min' or 'max', got {sense!r}")
    c = [Fraction(x) for x in objective]
    n = var_count if var_count is not None else len(c)
    if len(c) != n:
        raise InputError("objective length does not match variable count")
    a_rows = [[Fraction(x) for x in row] for row in eq_matrix]
    b = [Fraction(x) for x in eq_rhs]
    if len(a_rows) != len(b):
        raise InputError("constraint matrix and right-hand side differ in length")
    for row in a_rows:
        if len(row) != n:
            raise InputError("constraint row length does not match variable count")

    nonneg_set = set(range(n)) if nonneg is None else {int(i) for i in nonneg}
    if not nonneg_set.issubset(range(n)):
        raise InputError("nonneg indices out of range")
    free = [j for j in range(n) if j not in nonneg_set]

    # free variables split as x = x+ - x-
    def expand_row(row):
        return [row[j] for j in range(n)] + [-row[j] for j in free]

    ext_c = c + [-c[j] for j in free]
    ext_rows = [expand_row(row) for row in a_rows]
    if sense == "max":
        ext_c = [-x for x in ext_c]
    result = _solve_standard_form(ext_c, ext_rows, b)
    if result.status != OPTIMAL:
        return result
    x = list(result.witness[:n])
    for pos, j in enumerate(free):
        x[j] -= result.witness[n + pos]
    value = result.value
    dual = result.dual
    if sense == "max":
        value = -value
        dual = tuple(-y for y in dual)
    # witness feasibility double-check on the caller's own data
    for row, target in zip(a_rows, b):
        if vec_dot(row, x) != target:
            raise InternalError("simplex witness fails an equality constraint")
    for j in nonneg_set:
        if x[j] < 0:
            raise InternalError("simplex witness violates nonnegativity")
    if vec_dot(c, x) != value:
        raise InternalError("simplex witness objective mismatch")
    return LpResult(status=OPTIMAL, value=value, witness=tuple(x), dual=dual)


def solve_lp(
    sense: str,
    objective: Sequence,
    eq: Optional[tuple[Sequence[Sequence], Sequence]] = None,
    ub: Optional[tuple[Sequence[Sequence], Sequence]] = None,
    nonneg: Optional[Sequence[int]] = None,
    var_count: Optional[int] = None,
) -> LpResult:
    """Convenience front end allowing <= rows; compiles to lp_optimize.

    ``ub`` rows mean row . x <= rhs and are given slack variables.  The
    returned witness is truncated back to the caller's variables.
    """
    c = [Fraction(x) for x in objective]
    n = var_count if var_count is not None else len(c)
    eq_rows = [list(map(Fraction, r)) for r in (eq[0] if eq else [])]
    eq_rhs = [Fraction(x) for x in (eq[1] if eq else [])]
    ub_rows = [list(map(Fraction, r)) for r in (ub[0] if ub else [])]
    ub_rhs = [Fraction(x) for x in (ub[1] if ub else [])]
    slacks = len(ub_rows)
    total = n + slacks
    rows = []
    for r in eq_rows:
        rows.append(r + [Fraction(0)] * slacks)
    for i, r in enumerate(ub_rows):
        rows.append(r + [Fraction(int(i == j)) for j in range(slacks)])
    rhs = eq_rhs + ub_rhs
    full_obj = c + [Fraction(0)] * slacks
    base_nonneg = set(range(n)) if nonneg is None else {int(i) for i in nonneg}
    full_nonneg = base_nonneg | set(range(n, total))
    if not rows:
        rows = [[Fraction(0)] * total]
        rhs = [Fraction(0)]
    result = lp_optimize(sense, full_obj, rows, rhs, total, full_nonneg)
    if result.status != OPTIMAL:
        return result
    return LpResult(
        status=OPTIMAL,
        value=result.value,
        witness=result.witness[:n],
        dual=result.dual,
    )
