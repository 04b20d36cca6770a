"""Decide unimodality of expected payoffs over the entire belief simplex.

A problem fails exactly when some belief produces a strict interior dip in
the action-indexed expected-payoff sequence.  Each candidate dip pattern
(i, j, k) is a pair of strict linear inequalities in the belief, so the
whole-simplex property reduces to finitely many exact strict-feasibility
questions; any feasible one yields a counterexample belief that is
re-verified pointwise before being reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalInvariantError
from .exactlp import LinearSystem, strict_feasible
from .problems import Belief, DecisionProblem, is_unimodal


@dataclass(frozen=True)
class QccCounterexample:
    """A belief with a strict dip: the middle action of the triple is worse
    than both the lower and the higher one."""

    belief: Belief
    triple: tuple[int, int, int]
    values: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class QccVerdict:
    holds: bool
    counterexample: Optional[QccCounterexample]
    checked_triples: int


def unimodality_profile(
    problem: DecisionProblem, belief: Belief
) -> tuple[tuple[Fraction, ...], bool]:
    """Exact expected payoffs across actions at one belief, plus the
    unimodality flag.  This is the pointwise oracle counterexamples are
    validated against."""
    values = problem.payoff_profile(belief)
    return values, is_unimodal(values)


def check_qcc(problem: DecisionProblem) -> QccVerdict:
    """Decide whether every belief yields a unimodal payoff sequence.

    Triples are examined in lexicographic order and the first feasible dip
    is returned as the counterexample; with fewer than three actions the
    property holds vacuously.
    """
    count = 0
    for i, j, k in itertools.combinations(range(problem.num_actions), 3):
        count += 1
        row_i, row_j, row_k = problem.payoff[i], problem.payoff[j], problem.payoff[k]
        system = LinearSystem.build(
            problem.num_states,
            rows=[
                (tuple(a - b for a, b in zip(row_i, row_j)), ">", 0),
                (tuple(a - b for a, b in zip(row_k, row_j)), ">", 0),
            ],
        )
        result = strict_feasible(system)
        if result.open_feasible:
            belief = result.witness
            assert belief is not None
            values, unimodal = unimodality_profile(problem, belief)
            triple_values = (values[i], values[j], values[k])
            if unimodal or not (
                triple_values[1] < triple_values[0]
                and triple_values[1] < triple_values[2]
            ):
                raise InternalInvariantError(
                    "qcc-counterexample-substitution",
                    f"belief {belief.coordinates} does not realize the dip "
                    f"({i}, {j}, {k})",
                )
            return QccVerdict(
                holds=False,
                counterexample=QccCounterexample(belief, (i, j, k), triple_values),
                checked_triples=count,
            )
    return QccVerdict(holds=True, counterexample=None, checked_triples=count)
