"""Weak dominance: interior witnesses, dominating mixtures, elimination.

Every action of a finite decision problem falls on exactly one side of a
duality: either some interior belief makes it the unique optimizer, or some
mixture of the other actions matches-or-beats it in every state.  Iterated
elimination strips the second kind until only certified actions remain.
"""

from qccheck import (
    DecisionProblem,
    iterated_elimination,
    mixed_dominance_certificate,
    unique_optimality_witness,
)

problem = DecisionProblem.from_matrix(
    [
        [0, 0],    # a safe action...
        [2, -1],   # ...sandwiched by two risky ones
        [-1, 2],
    ],
    states=["left", "right"],
)

print("Per-action duality:")
for action in range(problem.num_actions):
    witness = unique_optimality_witness(problem, action)
    mixture = mixed_dominance_certificate(problem, action)
    if witness is not None:
        coords = [str(c) for c in witness.coordinates]
        print(f"  action {action}: uniquely optimal at interior belief {coords}")
    else:
        weights = {m: str(w) for m, w in enumerate(mixture) if w != 0}
        print(f"  action {action}: dominated by the mixture {weights}")

print()
print("Iterated elimination on a problem with duplicates and dead weight:")
cluttered = DecisionProblem.from_matrix(
    [
        [4, 0],
        [4, 0],    # duplicate of the first row
        [0, 4],
        [1, 1],    # beaten by mixing rows 0 and 2
    ]
)
report = iterated_elimination(cluttered)
print(f"  survivors (original indices): {report.surviving_indices}")
for removal in report.removed:
    mixture = {j: str(w) for j, w in removal.mixture}
    print(f"  removed {removal.original_index}: {removal.reason}, mixture {mixture}")
print("  every survivor carries an interior belief where it is uniquely optimal:")
for i, witness in enumerate(report.witnesses):
    coords = [str(c) for c in witness.coordinates]
    print(f"    surviving action {i}: witness {coords}")
