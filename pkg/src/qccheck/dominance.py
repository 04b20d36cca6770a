"""Weak dominance analysis and the everyone-uniquely-optimal certificate.

An action is redundant when some mixture of the other actions matches or
beats it in every state; it is essential when some interior belief makes it
the unique optimizer.  These two conditions are mutually exclusive and
jointly exhaustive (an exact minimax fact), and both sides are computed
independently here: any disagreement is raised as an internal error rather
than papered over.

`iterated_elimination` removes duplicates and then mixture-dominated actions
until every survivor carries an interior unique-optimality witness, which
certifies the hypothesis the geometry checks rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import InternalInvariantError
from .exactlp import LinearSystem, solve, strict_feasible
from .problems import Belief, DecisionProblem

RemovalReason = Literal["duplicate", "mixed-dominated"]


@dataclass(frozen=True)
class RemovedAction:
    """One elimination step: which original action fell and why.

    `mixture` maps original action indices to the weights of a mixture that
    matches or beats the removed action in every state; for duplicates it is
    the single kept copy with weight 1.  Weights always refer to original
    indices so the certificate stays checkable against the input problem no
    matter what is removed later.
    """

    original_index: int
    reason: RemovalReason
    mixture: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class EliminationReport:
    """Result of iterated weak-dominance elimination with certificates.

    `witnesses[i]` is an interior belief at which action i of the surviving
    problem is uniquely optimal; its existence for every survivor is exactly
    the condition the equivalence theorem assumes.
    """

    surviving: DecisionProblem
    surviving_indices: tuple[int, ...]
    removed: tuple[RemovedAction, ...]
    witnesses: tuple[Belief, ...]


def unique_optimality_witness(
    problem: DecisionProblem, action_index: int
) -> Optional[Belief]:
    """Find an interior belief at which the action strictly beats all others.

    Returns None when no belief anywhere in the simplex makes the action
    uniquely optimal (an interior witness exists whenever any witness does,
    because the strict inequalities survive a small mix toward the uniform
    belief).
    """
    problem._check_action(action_index)
    target = problem.payoff[action_index]
    rows = []
    for j in range(problem.num_actions):
        if j == action_index:
            continue
        other = problem.payoff[j]
        rows.append((tuple(a - b for a, b in zip(target, other)), ">", 0))
    system = LinearSystem.build(problem.num_states, rows, interior_required=True)
    result = strict_feasible(system)
    if not result.open_feasible:
        return None
    witness = result.witness
    assert witness is not None
    if problem.argmax_set(witness) != {action_index}:
        raise InternalInvariantError(
            "unique-optimality-witness",
            f"witness {witness.coordinates} does not make action "
            f"{action_index} uniquely optimal",
        )
    return witness


def mixed_dominance_certificate(
    problem: DecisionProblem, action_index: int
) -> Optional[tuple[Fraction, ...]]:
    """Find mixture weights over the other actions that weakly dominate one.

    Returns a weight vector aligned with the problem's actions (the target's
    own weight is 0) whose mixture payoff matches or exceeds the target's in
    every state, or None when no such mixture exists.  Both this LP and the
    unique-optimality LP are always run; by exact duality exactly one of them
    can succeed, and disagreement raises an internal error.
    """
    problem._check_action(action_index)
    if problem.num_actions < 2:
        raise ValueError("mixed dominance needs at least two actions")
    others = [j for j in range(problem.num_actions) if j != action_index]
    target = problem.payoff[action_index]
    rows = []
    for state in range(problem.num_states):
        coeffs = tuple(problem.payoff[j][state] for j in others)
        rows.append((coeffs, ">=", target[state]))
    result = solve(LinearSystem.build(len(others), rows))

    witness = unique_optimality_witness(problem, action_index)
    if result.is_optimal == (witness is not None):
        raise InternalInvariantError(
            "dominance-duality",
            f"action {action_index}: dominating mixture "
            f"{'exists' if result.is_optimal else 'absent'} but unique-optimality "
            f"witness {'exists' if witness is not None else 'absent'}",
        )
    if not result.is_optimal:
        return None
    assert result.witness is not None
    weights = [Fraction(0)] * problem.num_actions
    for j, w in zip(others, result.witness.coordinates):
        weights[j] = w
    _verify_mixture(problem, action_index, tuple(weights))
    return tuple(weights)


def _verify_mixture(
    problem: DecisionProblem, action_index: int, weights: tuple[Fraction, ...]
) -> None:
    if weights[action_index] != 0 or sum(weights) != 1 or any(w < 0 for w in weights):
        raise InternalInvariantError(
            "dominance-mixture-shape", f"bad mixture {weights} for action {action_index}"
        )
    for state in range(problem.num_states):
        mixed = sum(
            (w * problem.payoff[j][state] for j, w in enumerate(weights)), Fraction(0)
        )
        if mixed < problem.payoff[action_index][state]:
            raise InternalInvariantError(
                "dominance-mixture-substitution",
                f"mixture {weights} fails to dominate action {action_index} "
                f"in state {state}",
            )


def iterated_elimination(problem: DecisionProblem) -> EliminationReport:
    """Remove duplicate and mixture-dominated actions, then certify survivors.

    Duplicate payoff rows are collapsed first (lowest index kept); then the
    lowest-index action with a dominating mixture over the current survivors
    is removed, repeatedly, until none remains.  Every survivor must then
    admit an interior unique-optimality witness; failure to certify one is an
    internal error because it contradicts the dominance duality.
    """
    removed: list[RemovedAction] = []

    seen: dict[tuple[Fraction, ...], int] = {}
    active: list[int] = []
    for i, row in enumerate(problem.payoff):
        if row in seen:
            removed.append(
                RemovedAction(i, "duplicate", ((seen[row], Fraction(1)),))
            )
        else:
            seen[row] = i
            active.append(i)

    while len(active) > 1:
        sub = problem.restrict_actions(active)
        for position, original in enumerate(active):
            weights = mixed_dominance_certificate(sub, position)
            if weights is not None:
                mixture = tuple(
                    (active[j], w) for j, w in enumerate(weights) if w != 0
                )
                removed.append(RemovedAction(original, "mixed-dominated", mixture))
                del active[position]
                break
        else:
            break

    surviving = problem.restrict_actions(active)
    witnesses = []
    for position in range(surviving.num_actions):
        witness = unique_optimality_witness(surviving, position)
        if witness is None:
            raise InternalInvariantError(
                "post-elimination-certification",
                f"surviving action {active[position]} has no interior "
                "unique-optimality witness",
            )
        witnesses.append(witness)

    for removal in removed:
        _verify_removal(problem, removal)

    return EliminationReport(
        surviving=surviving,
        surviving_indices=tuple(active),
        removed=tuple(removed),
        witnesses=tuple(witnesses),
    )


def _verify_removal(problem: DecisionProblem, removal: RemovedAction) -> None:
    """Re-check a stored elimination certificate against the original payoffs."""
    total = sum((w for _, w in removal.mixture), Fraction(0))
    if total != 1 or any(w <= 0 for _, w in removal.mixture):
        raise InternalInvariantError(
            "elimination-mixture-shape",
            f"stored mixture {removal.mixture} is not a probability vector",
        )
    for state in range(problem.num_states):
        mixed = sum(
            (w * problem.payoff[j][state] for j, w in removal.mixture), Fraction(0)
        )
        if mixed < problem.payoff[removal.original_index][state]:
            raise InternalInvariantError(
                "elimination-mixture-substitution",
                f"stored mixture for removed action {removal.original_index} "
                f"fails in state {state}",
            )
