"""Unimodality of expected payoffs over the belief simplex.

Two three-action problems over two states, identical up to the order of the
action rows.  The first has a unimodal expected-payoff sequence at every
belief; the second dips at interior beliefs, and the checker hands back an
exact belief that realizes the dip.
"""

from fractions import Fraction as F

from qccheck import Belief, DecisionProblem, check_qcc, unimodality_profile

# Quadratic-loss payoffs -(a - theta)^2 for actions {0, 1, 2} and states
# {0, 2}: the middle action hedges between the two states.
smooth = DecisionProblem.from_matrix(
    [[0, -4], [-1, -1], [-4, 0]], states=["theta=0", "theta=2"]
)

# Same rows, but the hedge is now the HIGHEST action: at beliefs that mix
# the states, the middle action is strictly worse than both neighbors.
bumpy = DecisionProblem.from_matrix(
    [[0, -4], [-4, 0], [-1, -1]], states=["theta=0", "theta=2"]
)

print("Pointwise profiles at the fifty-fifty belief:")
half = Belief((F(1, 2), F(1, 2)))
for name, problem in [("smooth", smooth), ("bumpy", bumpy)]:
    values, unimodal = unimodality_profile(problem, half)
    print(f"  {name}: values={[str(v) for v in values]} unimodal={unimodal}")

print()
print("Whole-simplex verdicts (every belief, decided exactly):")
for name, problem in [("smooth", smooth), ("bumpy", bumpy)]:
    verdict = check_qcc(problem)
    print(f"  {name}: holds={verdict.holds} triples_checked={verdict.checked_triples}")
    if verdict.counterexample is not None:
        ce = verdict.counterexample
        print(f"    dip at belief {[str(c) for c in ce.belief.coordinates]}")
        print(f"    actions {ce.triple} have payoffs {[str(v) for v in ce.values]}")
        print("    (the middle one is strictly below both neighbors)")

# The counterexample is an exact rational point: substituting it back into
# the payoff matrix reproduces the dip with integer-exact arithmetic.
ce = check_qcc(bumpy).counterexample
values, unimodal = unimodality_profile(bumpy, ce.belief)
assert not unimodal
print()
print("Counterexample re-verified by substitution: dip is real, not roundoff.")
