"""Exact simplex solver: hand-checked LPs, witness substitution, and
differential tests against an independent grid sweep and scipy's solver."""

from fractions import Fraction as F

import pytest

from qccheck import (
    GridSpec,
    LinearSystem,
    LPStatus,
    SplitMix64,
    grid_beliefs,
    solve,
    strict_feasible,
)


def system(dim, rows=(), objective=None, interior=False):
    return LinearSystem.build(dim, rows, objective, interior)


class TestSolve:
    def test_maximize_first_coordinate(self):
        result = solve(system(2, objective=[1, 0]))
        assert result.status is LPStatus.OPTIMAL
        assert result.value == 1
        assert result.witness.coordinates == (F(1), F(0))

    def test_infeasible_bound(self):
        result = solve(system(2, rows=[((1, 0), ">=", 2)]))
        assert result.status is LPStatus.INFEASIBLE
        assert result.witness is None

    def test_constant_row_objective(self):
        # expected payoff of the first fixture's lowest action as objective
        result = solve(system(2, objective=[0, -4]))
        assert result.value == 0
        assert result.witness.coordinates == (F(1), F(0))

    def test_equality_pins_witness(self):
        result = solve(system(2, rows=[((1, -1), "==", 0)], objective=[1, 0]))
        assert result.value == F(1, 2)
        assert result.witness.coordinates == (F(1, 2), F(1, 2))

    def test_redundant_equalities_are_harmless(self):
        result = solve(
            system(
                3,
                rows=[((1, 1, 1), "==", 1), ((2, 2, 2), "==", 2), ((1, 0, 0), "==", 0)],
                objective=[0, 0, 1],
            )
        )
        assert result.value == 1
        assert result.witness.coordinates == (F(0), F(0), F(1))

    def test_rejects_strict_rows(self):
        with pytest.raises(ValueError):
            solve(system(2, rows=[((1, 0), ">", 0)]))
        with pytest.raises(ValueError):
            solve(system(2, interior=True))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            system(3, rows=[((1, 0), ">=", 0)])

    def test_deterministic(self):
        sys_a = system(3, rows=[((1, 2, -1), ">=", 0)], objective=[1, -1, 2])
        first = solve(sys_a)
        for _ in range(3):
            again = solve(sys_a)
            assert again.value == first.value
            assert again.witness.coordinates == first.witness.coordinates


class TestStrictFeasible:
    def test_interior_pair(self):
        result = strict_feasible(system(2, rows=[((1, 0), ">", 0), ((0, 1), ">", 0)]))
        assert result.open_feasible
        assert result.slack == F(1, 2)
        assert result.witness.coordinates == (F(1, 2), F(1, 2))

    def test_contradictory_pair(self):
        result = strict_feasible(system(2, rows=[((1, 0), ">", 0), ((-1, 0), ">", 0)]))
        assert not result.open_feasible
        assert result.witness is None

    def test_fixture_dip_system_is_open_infeasible(self):
        # the single dip pattern of the unimodal fixture needs both
        # coordinates below 1/4, impossible on the simplex
        result = strict_feasible(system(2, rows=[((1, -3), ">", 0), ((-3, 1), ">", 0)]))
        assert not result.open_feasible

    def test_boundary_only_gives_zero_slack(self):
        # p0 > 0 and -p0 >= 0 meet only at p0 = 0
        result = strict_feasible(system(2, rows=[((1, 0), ">", 0), ((-1, 0), ">=", 0)]))
        assert result.status is LPStatus.OPTIMAL
        assert result.slack == 0
        assert not result.open_feasible

    def test_no_rows_interior(self):
        result = strict_feasible(system(3, interior=True))
        assert result.open_feasible
        assert result.witness.coordinates == (F(1, 3), F(1, 3), F(1, 3))
        assert result.slack == F(1, 3)

    def test_witness_respects_weak_and_equality_rows(self):
        result = strict_feasible(
            system(
                3,
                rows=[((1, 0, -1), "==", 0), ((0, 1, 0), ">=", F(1, 4)), ((1, 1, 1), ">", F(1, 2))],
            )
        )
        assert result.open_feasible
        w = result.witness.coordinates
        assert w[0] == w[2] and w[1] >= F(1, 4) and sum(w) > F(1, 2)


def _random_system(rng, dim, num_rows):
    rows = []
    for _ in range(num_rows):
        coeffs = tuple(F(rng.next_int(-4, 4)) for _ in range(dim))
        relation = (">=", ">", "==")[rng.next_below(3)]
        # keep equalities satisfiable reasonably often
        rhs = F(rng.next_int(-2, 2), 4) if relation != "==" else F(0)
        rows.append((coeffs, relation, rhs))
    return LinearSystem.build(dim, rows)


class TestStrictAgainstGridOracle:
    """The slack criterion t* > 0 must agree with exhaustive grid search:
    a strict witness is itself a grid point at its own denominator, and an
    open-infeasible system admits no strict grid point at any denominator
    we can afford to sweep."""

    def test_random_strict_systems(self):
        rng = SplitMix64(977)
        feasible_seen = infeasible_seen = 0
        for _ in range(120):
            dim = rng.next_int(2, 3)
            sys_r = _random_system(rng, dim, rng.next_int(1, 3))
            result = strict_feasible(sys_r)
            if result.open_feasible:
                feasible_seen += 1
                witness = result.witness
                assert all(row.satisfied_by(witness.coordinates) for row in sys_r.rows)
            else:
                infeasible_seen += 1
                for denominator in range(1, 13):
                    for belief in grid_beliefs(GridSpec(denominator, dim)):
                        assert not all(
                            row.satisfied_by(belief.coordinates) for row in sys_r.rows
                        )
        assert feasible_seen > 10 and infeasible_seen > 10

    def test_witness_is_a_grid_point_at_its_denominator(self):
        result = strict_feasible(
            system(2, rows=[((1, 0), ">", F(1, 3)), ((0, 1), ">", F(1, 5))])
        )
        assert result.open_feasible
        import math

        d = math.lcm(*(c.denominator for c in result.witness.coordinates))
        grid = [b.coordinates for b in grid_beliefs(GridSpec(d, 2))]
        assert result.witness.coordinates in grid


class TestAgainstScipy:
    """Float cross-check of optimal values on random weak systems."""

    def test_optimal_values_match(self):
        scipy_opt = pytest.importorskip("scipy.optimize")
        rng = SplitMix64(4242)
        compared = 0
        for _ in range(60):
            dim = rng.next_int(2, 4)
            num_rows = rng.next_int(0, 3)
            rows = []
            for _ in range(num_rows):
                coeffs = tuple(F(rng.next_int(-4, 4)) for _ in range(dim))
                rows.append((coeffs, ">=", F(rng.next_int(-2, 1))))
            objective = tuple(F(rng.next_int(-5, 5)) for _ in range(dim))
            sys_r = LinearSystem.build(dim, rows, objective)
            exact = solve(sys_r)

            a_ub = [[-float(c) for c in row[0]] for row in rows]
            b_ub = [-float(row[2]) for row in rows]
            res = scipy_opt.linprog(
                [-float(c) for c in objective],
                A_ub=a_ub or None,
                b_ub=b_ub or None,
                A_eq=[[1.0] * dim],
                b_eq=[1.0],
                bounds=[(0, None)] * dim,
                method="highs",
            )
            if exact.status is LPStatus.INFEASIBLE:
                assert res.status == 2
            else:
                assert res.status == 0
                assert abs(float(exact.value) - (-res.fun)) < 1e-8
                compared += 1
        assert compared > 20
