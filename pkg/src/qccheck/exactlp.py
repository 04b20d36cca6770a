"""Exact rational linear programming over the standard simplex.

Systems are posed in the coordinates of a probability vector: the
constraints x >= 0 and sum(x) = 1 are always implicit, and callers add
equality, weak-inequality, and strict-inequality rows on top.  Everything is
solved with a dense two-phase simplex method over `fractions.Fraction` using
Bland's rule, so there are no tolerances anywhere: Infeasible means exactly
infeasible, and every witness satisfies its system under exact substitution
(this is re-verified before a result is returned).

Strict inequalities are decided by slack maximization: each row c.x > r is
rewritten as c.x >= r + t for a fresh variable t bounded by 1, and t is
maximized.  The open system has a solution over the simplex if and only if
the optimum t* is strictly positive; the compactness of the simplex makes
this criterion exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence, Union

from .errors import InternalInvariantError
from .problems import Belief, RationalLike, as_fraction

Relation = Literal[">=", "==", ">"]

_RELATIONS = (">=", "==", ">")
_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LinearRow:
    """One constraint over simplex coordinates: coefficients . x  <rel>  rhs."""

    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(as_fraction(c) for c in self.coefficients)
        )
        object.__setattr__(self, "rhs", as_fraction(self.rhs))
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    def evaluate(self, coords: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coefficients, coords)), _ZERO)

    def satisfied_by(self, coords: Sequence[Fraction]) -> bool:
        lhs = self.evaluate(coords)
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "==":
            return lhs == self.rhs
        return lhs > self.rhs


RowLike = Union[LinearRow, tuple]


@dataclass(frozen=True)
class LinearSystem:
    """A constraint system over the standard simplex in `dimension` coordinates.

    `interior_required` additionally demands x_i > 0 for every coordinate;
    it is honored by `strict_feasible`, which shares one slack variable
    between the strict rows and the interiority constraints.
    """

    dimension: int
    rows: tuple[LinearRow, ...] = ()
    objective: Optional[tuple[Fraction, ...]] = None
    interior_required: bool = False

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if len(row.coefficients) != self.dimension:
                raise ValueError(
                    f"row has {len(row.coefficients)} coefficients, "
                    f"system dimension is {self.dimension}"
                )
        if self.objective is not None:
            objective = tuple(as_fraction(c) for c in self.objective)
            object.__setattr__(self, "objective", objective)
            if len(objective) != self.dimension:
                raise ValueError("objective length must equal the system dimension")

    @classmethod
    def build(
        cls,
        dimension: int,
        rows: Iterable[RowLike] = (),
        objective: Optional[Sequence[RationalLike]] = None,
        interior_required: bool = False,
    ) -> "LinearSystem":
        """Construct a system from loose (coefficients, relation, rhs) triples."""
        built = []
        for row in rows:
            if isinstance(row, LinearRow):
                built.append(row)
            else:
                coeffs, relation, rhs = row
                built.append(LinearRow(tuple(coeffs), relation, rhs))
        obj = None if objective is None else tuple(objective)
        return cls(dimension, tuple(built), obj, interior_required)

    @property
    def has_strict_rows(self) -> bool:
        return any(row.relation == ">" for row in self.rows)


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    """Outcome of an exact solve: a verdict plus a substitutable witness.

    For strict systems, `slack` holds the maximized margin t*; the open
    system is feasible exactly when t* > 0, and `witness` is present only in
    that case.
    """

    status: LPStatus
    value: Optional[Fraction] = None
    witness: Optional[Belief] = None
    slack: Optional[Fraction] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL

    @property
    def open_feasible(self) -> bool:
        """Whether a strict system was found to have an exact solution."""
        return self.status is LPStatus.OPTIMAL and (
            self.slack is not None and self.slack > 0
        )


def _pivot(tableau: list[list[Fraction]], zrow: list[Fraction],
           basis: list[int], pr: int, pc: int) -> None:
    pivot_val = tableau[pr][pc]
    tableau[pr] = [v / pivot_val for v in tableau[pr]]
    prow = tableau[pr]
    for r in range(len(tableau)):
        if r != pr:
            f = tableau[r][pc]
            if f != 0:
                tableau[r] = [a - f * b for a, b in zip(tableau[r], prow)]
    f = zrow[pc]
    if f != 0:
        zrow[:] = [a - f * b for a, b in zip(zrow, prow)]
    basis[pr] = pc


def _bland_maximize(tableau: list[list[Fraction]], zrow: list[Fraction],
                    basis: list[int], num_real: int) -> None:
    """Pivot to optimality.  zrow holds z_j - c_j per column plus the current
    objective value in the last cell; only columns < num_real may enter.
    Bland's rule (lowest entering index, lowest basic index on ratio ties)
    guarantees termination."""
    while True:
        pc = -1
        for j in range(num_real):
            if zrow[j] < 0:
                pc = j
                break
        if pc < 0:
            return
        best_key = None
        best_row = -1
        for r, row in enumerate(tableau):
            a = row[pc]
            if a > 0:
                key = (row[-1] / a, basis[r])
                if best_key is None or key < best_key:
                    best_key = key
                    best_row = r
        if best_row < 0:
            raise InternalInvariantError(
                "lp-boundedness",
                "simplex found an unbounded direction over a compact region",
            )
        _pivot(tableau, zrow, basis, best_row, pc)


def _solve_standard_form(
    eq_rows: Sequence[Sequence[Fraction]],
    eq_rhs: Sequence[Fraction],
    objective: Sequence[Fraction],
) -> Optional[tuple[Fraction, list[Fraction]]]:
    """Maximize objective . x subject to eq_rows . x = eq_rhs, x >= 0.

    Returns (optimal value, solution vector) or None when infeasible.
    """
    num_real = len(objective)
    m = len(eq_rows)

    tableau: list[list[Fraction]] = []
    for row, rhs in zip(eq_rows, eq_rhs):
        if rhs < 0:
            tableau.append([-v for v in row] + [_ZERO] * m + [-rhs])
        else:
            tableau.append(list(row) + [_ZERO] * m + [rhs])
    for i in range(m):
        tableau[i][num_real + i] = _ONE
    basis = list(range(num_real, num_real + m))

    # Phase 1: maximize minus the sum of artificials; feasible iff optimum 0.
    zrow = [_ZERO] * (num_real + m + 1)
    for j in range(num_real):
        zrow[j] = -sum(tableau[i][j] for i in range(m))
    zrow[-1] = -sum(tableau[i][-1] for i in range(m))
    _bland_maximize(tableau, zrow, basis, num_real)
    if zrow[-1] != 0:
        return None

    # Drive any residual degenerate artificials out of the basis; a row with
    # no real-column pivot available is redundant and dropped.
    r = 0
    while r < len(tableau):
        if basis[r] >= num_real:
            pc = next((j for j in range(num_real) if tableau[r][j] != 0), -1)
            if pc < 0:
                del tableau[r]
                del basis[r]
                continue
            _pivot(tableau, zrow, basis, r, pc)
        r += 1

    # Phase 2 with the real objective.
    zrow = [_ZERO] * (num_real + m + 1)
    for j in range(num_real + m + 1):
        acc = _ZERO
        for i, row in enumerate(tableau):
            if basis[i] < num_real:
                acc += objective[basis[i]] * row[j]
        zrow[j] = acc
    for j in range(num_real):
        zrow[j] -= objective[j]
    _bland_maximize(tableau, zrow, basis, num_real)

    solution = [_ZERO] * num_real
    for i, var in enumerate(basis):
        if var < num_real:
            solution[var] = tableau[i][-1]
    return zrow[-1], solution


def _assemble(system: LinearSystem, include_t: bool):
    """Lower a system to standard equality form.

    Variable layout: simplex coordinates, then (optionally) the shared strict
    slack t, then one surplus/slack variable per inequality row.
    """
    d = system.dimension
    t_width = 1 if include_t else 0
    dense_rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_signs: list[Fraction] = []  # 0: none, -1: surplus (>=), +1: slack (<=)

    def push(dense: list[Fraction], r: Fraction, sign: int) -> None:
        dense_rows.append(dense)
        rhs.append(r)
        slack_signs.append(Fraction(sign))

    push([_ONE] * d + [_ZERO] * t_width, _ONE, 0)  # the simplex itself

    for row in system.rows:
        dense = list(row.coefficients) + [_ZERO] * t_width
        if row.relation == "==":
            push(dense, row.rhs, 0)
        elif row.relation == ">=":
            push(dense, row.rhs, -1)
        else:  # strict: c.x - t >= rhs
            dense[d] = -_ONE
            push(dense, row.rhs, -1)

    if include_t:
        if system.interior_required:
            for i in range(d):
                dense = [_ZERO] * (d + 1)
                dense[i] = _ONE
                dense[d] = -_ONE
                push(dense, _ZERO, -1)  # x_i >= t
        bound = [_ZERO] * (d + 1)
        bound[d] = _ONE
        push(bound, _ONE, +1)  # t <= 1 keeps the auxiliary LP bounded

    slack_cols = [i for i, s in enumerate(slack_signs) if s != 0]
    num_vars = d + t_width + len(slack_cols)
    eq_rows = []
    for i, dense in enumerate(dense_rows):
        full = dense + [_ZERO] * len(slack_cols)
        if slack_signs[i] != 0:
            full[d + t_width + slack_cols.index(i)] = slack_signs[i]
        eq_rows.append(full)
    return eq_rows, rhs, num_vars


def solve(system: LinearSystem) -> LPResult:
    """Exactly decide a weak system over the simplex, optimizing if asked.

    The system may not contain strict rows and may not require interiority;
    use `strict_feasible` for those.  On success the witness satisfies every
    row exactly (checked by substitution before returning).
    """
    if system.has_strict_rows or system.interior_required:
        raise ValueError("system has strict requirements; use strict_feasible")
    eq_rows, rhs, num_vars = _assemble(system, include_t=False)
    objective = [_ZERO] * num_vars
    if system.objective is not None:
        objective[: system.dimension] = list(system.objective)
    outcome = _solve_standard_form(eq_rows, rhs, objective)
    if outcome is None:
        return LPResult(LPStatus.INFEASIBLE)
    value, x = outcome
    witness = Belief(tuple(x[: system.dimension]))
    _verify_witness(system, witness, strict_must_hold=False)
    if system.objective is not None:
        attained = sum(
            (c * p for c, p in zip(system.objective, witness.coordinates)), _ZERO
        )
        if attained != value:
            raise InternalInvariantError(
                "lp-witness-value", f"witness attains {attained}, solver said {value}"
            )
        return LPResult(LPStatus.OPTIMAL, value=value, witness=witness)
    return LPResult(LPStatus.OPTIMAL, value=None, witness=witness)


def strict_feasible(system: LinearSystem) -> LPResult:
    """Decide feasibility of a system with strict rows over the closed simplex.

    Rewrites each strict row c.x > r as c.x >= r + t (plus x_i >= t for every
    coordinate when interiority is required), bounds t by 1, and maximizes t.
    The open system has a solution iff the returned slack is positive; only
    then is a witness attached, and it is verified to satisfy the original
    strict rows strictly.
    """
    eq_rows, rhs, num_vars = _assemble(system, include_t=True)
    objective = [_ZERO] * num_vars
    objective[system.dimension] = _ONE  # maximize the shared margin t
    outcome = _solve_standard_form(eq_rows, rhs, objective)
    if outcome is None:
        return LPResult(LPStatus.INFEASIBLE)
    t_star, x = outcome
    if t_star <= 0:
        return LPResult(LPStatus.OPTIMAL, value=t_star, slack=t_star)
    witness = Belief(tuple(x[: system.dimension]))
    _verify_witness(system, witness, strict_must_hold=True)
    return LPResult(LPStatus.OPTIMAL, value=t_star, witness=witness, slack=t_star)


def _verify_witness(system: LinearSystem, witness: Belief, strict_must_hold: bool) -> None:
    """Exact substitution check of a solver witness against the original rows."""
    for row in system.rows:
        if row.relation == ">" and not strict_must_hold:
            continue
        if not row.satisfied_by(witness.coordinates):
            raise InternalInvariantError(
                "lp-witness-substitution",
                f"witness {witness.coordinates} violates row "
                f"{row.coefficients} {row.relation} {row.rhs}",
            )
    if strict_must_hold and system.interior_required and not witness.is_interior:
        raise InternalInvariantError(
            "lp-witness-interior", f"witness {witness.coordinates} is not interior"
        )
