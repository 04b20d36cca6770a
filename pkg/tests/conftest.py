from fractions import Fraction

import pytest

from qccheck import DecisionProblem

# Two hand-checked three-action, two-state fixtures used throughout: the
# first is unimodal at every belief, the second dips at interior beliefs
# (it is the first with its action rows reordered).
P1_MATRIX = [[0, -4], [-1, -1], [-4, 0]]
P2_MATRIX = [[0, -4], [-4, 0], [-1, -1]]


@pytest.fixture
def p1() -> DecisionProblem:
    return DecisionProblem.from_matrix(P1_MATRIX)


@pytest.fixture
def p2() -> DecisionProblem:
    return DecisionProblem.from_matrix(P2_MATRIX)


def frac(value) -> Fraction:
    return Fraction(value)
