"""Belief-simplex geometry of optimal-action regions.

Three related views of the same arrangement of affine payoff differences:

* convexity of the optimal-action set at every belief (no belief may make
  two actions optimal while skipping one strictly between them),
* the pairwise indifference hyperplanes given by payoff-row differences,
* the nesting structure of adjacent-comparison halfspaces, under which the
  region where action i beats everything above it is carved out by the
  single comparison against its immediate successor.

All checks are exact strict-feasibility questions over the closed simplex;
every reported failure belief is re-verified by substitution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalInvariantError
from .exactlp import LinearSystem, strict_feasible
from .problems import Belief, DecisionProblem


@dataclass(frozen=True)
class ConvexityCounterexample:
    """A belief where the outer two actions of the triple are optimal but the
    middle one is not."""

    belief: Belief
    triple: tuple[int, int, int]


@dataclass(frozen=True)
class ConvexityVerdict:
    holds: bool
    counterexample: Optional[ConvexityCounterexample]


@dataclass(frozen=True)
class NestingFailure:
    """A belief where action `index` beats its successor yet the successor
    fails to beat the next action: the adjacent halfspaces are not nested."""

    index: int
    belief: Belief


@dataclass(frozen=True)
class RegionFailure:
    """A belief where action `index` beats its successor but not action
    `other`, so the adjacent comparison does not identify the region."""

    index: int
    other: int
    belief: Belief


@dataclass(frozen=True)
class NestingReport:
    chain_holds: bool
    chain_failures: tuple[NestingFailure, ...]
    region_identification_holds: bool
    region_failures: tuple[RegionFailure, ...]


def indifference_hyperplane(
    problem: DecisionProblem, i: int, j: int
) -> tuple[Fraction, ...]:
    """Coefficient vector of the affine payoff difference between actions i
    and j; its inner product with a belief is the expected-payoff gap, and
    its zero set is the indifference hyperplane."""
    if i == j:
        raise ValueError("indifference hyperplane needs two distinct actions")
    problem._check_action(i)
    problem._check_action(j)
    return tuple(a - b for a, b in zip(problem.payoff[i], problem.payoff[j]))


def check_argmax_convexity(problem: DecisionProblem) -> ConvexityVerdict:
    """Decide whether the optimal-action set is a contiguous index range at
    every belief in the closed simplex.

    For each triple i < j < k the search fixes i and k to be optimal (one
    equality plus global weak comparisons) and demands that j be strictly
    worse; the first feasible triple in lexicographic order is reported.
    """
    for i, j, k in itertools.combinations(range(problem.num_actions), 3):
        rows = [(indifference_hyperplane(problem, i, k), "==", 0)]
        for other in range(problem.num_actions):
            if other != i:
                rows.append((indifference_hyperplane(problem, i, other), ">=", 0))
        rows.append((indifference_hyperplane(problem, i, j), ">", 0))
        result = strict_feasible(LinearSystem.build(problem.num_states, rows))
        if result.open_feasible:
            belief = result.witness
            assert belief is not None
            optimal = problem.argmax_set(belief)
            if i not in optimal or k not in optimal or j in optimal:
                raise InternalInvariantError(
                    "convexity-counterexample-substitution",
                    f"belief {belief.coordinates} does not realize the gap "
                    f"({i}, {j}, {k})",
                )
            return ConvexityVerdict(
                holds=False,
                counterexample=ConvexityCounterexample(belief, (i, j, k)),
            )
    return ConvexityVerdict(holds=True, counterexample=None)


def check_nesting(problem: DecisionProblem) -> NestingReport:
    """Probe the halfspace structure behind the equivalence theorem.

    Chain: for each adjacent pair boundary, the set where action i beats
    action i+1 must lie inside the set where i+1 beats i+2.  Region
    identification: beating the immediate successor must imply beating every
    later action.  Both are expected to hold on problems that pass the
    dominance certification and the whole-simplex unimodality check; the
    operation also runs on anything else, as a diagnostic of how the
    structure breaks.
    """
    chain_failures = []
    for i in range(problem.num_actions - 2):
        adjacent = indifference_hyperplane(problem, i, i + 1)
        successor = indifference_hyperplane(problem, i + 1, i + 2)
        system = LinearSystem.build(
            problem.num_states,
            rows=[
                (adjacent, ">", 0),
                (tuple(-c for c in successor), ">=", 0),
            ],
        )
        result = strict_feasible(system)
        if result.open_feasible:
            belief = result.witness
            assert belief is not None
            _verify_pair(problem, belief, adjacent, successor, "nesting-chain")
            chain_failures.append(NestingFailure(i, belief))

    region_failures = []
    for i in range(problem.num_actions - 2):
        adjacent = indifference_hyperplane(problem, i, i + 1)
        for j in range(i + 2, problem.num_actions):
            comparison = indifference_hyperplane(problem, i, j)
            system = LinearSystem.build(
                problem.num_states,
                rows=[
                    (adjacent, ">", 0),
                    (tuple(-c for c in comparison), ">=", 0),
                ],
            )
            result = strict_feasible(system)
            if result.open_feasible:
                belief = result.witness
                assert belief is not None
                _verify_pair(problem, belief, adjacent, comparison, "nesting-region")
                region_failures.append(RegionFailure(i, j, belief))

    return NestingReport(
        chain_holds=not chain_failures,
        chain_failures=tuple(chain_failures),
        region_identification_holds=not region_failures,
        region_failures=tuple(region_failures),
    )


def _verify_pair(
    problem: DecisionProblem,
    belief: Belief,
    positive: tuple[Fraction, ...],
    nonpositive: tuple[Fraction, ...],
    invariant: str,
) -> None:
    pos = sum((c * p for c, p in zip(positive, belief.coordinates)), Fraction(0))
    neg = sum((c * p for c, p in zip(nonpositive, belief.coordinates)), Fraction(0))
    if not (pos > 0 and neg <= 0):
        raise InternalInvariantError(
            invariant,
            f"belief {belief.coordinates} fails substitution: {pos} > 0 and "
            f"{neg} <= 0 expected",
        )
