from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qclift import ExponentMatrix, floor_lift, modulo_lift
from qclift.lifting import admissible_scales
from qclift.theory import (
    EnumerationBudgetError,
    TheoryParams,
    absence_probabilities,
    absence_probability_exact,
    brute_force_floor,
    brute_force_fsm_pair,
    brute_force_modulo,
    cycle_slice_counts,
    ec_fsml2_conditioned,
    ec_fsml2_formula,
    ec_fsml_exact,
    ec_fsml_montecarlo,
    emin_half_binomial,
    emin_half_binomial_printed,
    lifted_cycle_expectations,
    alternating_binomial_vanishes,
    alternating_binomial_sum,
    model_outcomes,
    p_fl,
    p_mod,
    pair_is_admissible,
    theory_report,
)
from qclift.verify import crossover_holds, negative_control, run_claim

F = Fraction


class TestFloorAndModulo:
    def test_floor_examples(self):
        assert brute_force_floor(4) == (F(3, 4), F(5, 28))
        assert brute_force_floor(3) == (F(3, 4), F(5, 20))

    def test_modulo_examples(self):
        assert brute_force_modulo(4) == (1, F(1, 7))
        assert brute_force_modulo(5) == (1, F(1, 9))

    @pytest.mark.parametrize("q", range(3, 13))
    def test_closed_forms(self, q):
        assert brute_force_floor(q) == (F(3, 4), p_fl(q))
        assert brute_force_modulo(q) == (1, p_mod(q))

    @pytest.mark.parametrize("q", [4, 7])
    def test_single_tuples(self, q):
        zero = ExponentMatrix([[0, 0, 0, 0]], 2 * q)
        assert floor_lift(zero, q).tolist() == [[0, 0, 0, 0]]
        # a - b - c + d = q: not a cycle at 2q, but closes after reduction mod q
        t = ExponentMatrix([[q, 0, 0, 0]], 2 * q)
        assert sum(modulo_lift(t, q).tolist()[0]) % q == 0

    @pytest.mark.parametrize("fn", [brute_force_floor, brute_force_modulo])
    def test_rejects_small_q(self, fn):
        with pytest.raises(ValueError):
            fn(2)


class TestFsmPairs:
    def test_admissible_example(self):
        assert pair_is_admissible(4, 1, 3) == (True, "")
        assert brute_force_fsm_pair(4, 1, 3) == 0

    def test_paired_scales_counted_anyway(self):
        ok, reason = pair_is_admissible(4, 1, 5)
        assert not ok and "(q+1)" in reason
        assert brute_force_fsm_pair(4, 1, 5) > 0

    @pytest.mark.parametrize("r1, r2, fragment", [(3, 3, "equal"), (2, 3, "coprime"), (0, 3, "outside")])
    def test_inadmissible_reasons(self, r1, r2, fragment):
        ok, reason = pair_is_admissible(4, r1, r2)
        assert not ok and fragment in reason

    @pytest.mark.parametrize("q", range(3, 9))
    def test_every_admissible_pair_is_zero(self, q):
        for r1, r2 in admissible_scales(2 * q).pairs():
            assert pair_is_admissible(q, r1, r2)[0]
            assert brute_force_fsm_pair(q, r1, r2) == 0

    @pytest.mark.parametrize("q", range(3, 9))
    def test_negative_control_exists(self, q):
        r1, r2, count = negative_control(q)
        assert count > 0 and not pair_is_admissible(q, r1, r2)[0]

    @pytest.mark.parametrize("q", [3, 4, 5, 6, 8])
    def test_cycle_slice_same_for_all_units(self, q):
        counts = cycle_slice_counts(q)
        assert len(set(counts.values())) == 1
        # the r = 1 slice is floor lifting: 3/4 of the (2q)^3 closing tuples
        assert counts[1] == (2 * q) ** 3 * 3 // 4


class TestExpectations:
    def test_examples(self):
        assert lifted_cycle_expectations(4, 0, 0) == (0, 0)
        assert lifted_cycle_expectations(4, 4, 0) == (3, 4)

    @pytest.mark.parametrize("q", [3, 4, 9])
    def test_crossover(self, q):
        assert crossover_holds(q)

    @given(st.integers(3, 30), st.integers(0, 20), st.integers(0, 300))
    def test_bounds(self, q, x, y):
        ec_fl, ec_mod = lifted_cycle_expectations(q, x, y)
        assert 0 <= ec_fl <= x + y and 0 <= ec_mod <= x + y


class TestTwoScaleExpectation:
    def test_empty_sum(self):
        assert ec_fsml2_formula(10, 4, 0) == 3
        assert ec_fsml_exact(10, 4, 0, 2) == 3

    def test_printed_single_column(self):
        assert ec_fsml2_formula(10, 0, 1) == p_fl(10) / 2

    def test_single_column_never_in_both_rows(self):
        assert ec_fsml_exact(10, 0, 1, 2) == 0
        assert ec_fsml_exact(10, 8, 1, 2) == 6

    @pytest.mark.parametrize("y", [0, 1, 2, 4, 6])
    def test_conditioning_matches_enumeration(self, y):
        assert ec_fsml2_conditioned(10, 0, y) == ec_fsml_exact(10, 0, y, 2)

    def test_half_binomial_minimum(self):
        assert [emin_half_binomial(n) for n in range(5)] == [0, 0, F(1, 2), F(3, 4), F(5, 4)]
        for n in range(0, 21, 2):
            assert emin_half_binomial(n) == emin_half_binomial_printed(n)
        for n in range(1, 21, 2):
            assert emin_half_binomial(n) != emin_half_binomial_printed(n)
        assert emin_half_binomial_printed(3) == F(15, 16)

    def test_printed_form_deviates_for_positive_y(self):
        for y in (1, 2, 4, 6):
            assert ec_fsml2_formula(10, 0, y) != ec_fsml_exact(10, 0, y, 2)

    @given(st.integers(3, 40), st.integers(0, 10), st.integers(0, 25))
    @settings(deadline=None)
    def test_single_scale_is_floor(self, q, x, y):
        assert ec_fsml_exact(q, x, y, 1) == F(3, 4) * x + p_fl(q) * y

    @given(st.integers(3, 20), st.integers(1, 3), st.integers(0, 12))
    @settings(deadline=None)
    def test_model_probabilities_sum_to_one(self, q, n_r, y):
        assert sum(prob for _, prob in model_outcomes(p_fl(q), n_r, y)) == 1

    def test_budget(self):
        with pytest.raises(EnumerationBudgetError):
            ec_fsml_exact(50, 0, 1000, 3)
        with pytest.raises(EnumerationBudgetError):
            list(model_outcomes(F(1, 10), 2, 10, budget=10))


class TestMonteCarlo:
    def test_no_columns(self):
        est = ec_fsml_montecarlo(10, 4, 0, 2, 1000, seed=1)
        assert est.mean == 3.0 and est.stderr == 0.0

    def test_single_scale_unbiased(self):
        est = ec_fsml_montecarlo(10, 0, 200, 1, 20_000, seed=3)
        assert abs(est.mean - float(p_fl(10) * 200)) <= 3 * est.stderr

    def test_matches_exact_enumeration(self):
        est = ec_fsml_montecarlo(10, 0, 30, 2, 50_000, seed=5)
        assert abs(est.mean - float(ec_fsml_exact(10, 0, 30, 2))) <= 4 * est.stderr

    def test_reproducible(self):
        a = ec_fsml_montecarlo(50, 0, 100, 2, 5000, seed=9)
        assert a == ec_fsml_montecarlo(50, 0, 100, 2, 5000, seed=9)
        assert a != ec_fsml_montecarlo(50, 0, 100, 2, 5000, seed=10)

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            ec_fsml_montecarlo(10, 0, 10, 2, 0, seed=0)


class TestAbsence:
    def test_single_column_two_scales(self):
        assert absence_probabilities(10, 1, 2)[2] == 1

    def test_no_columns(self):
        assert absence_probabilities(10, 0, 3) == (1, 1, 1)

    @given(st.integers(3, 60), st.integers(0, 15), st.integers(1, 3))
    @settings(deadline=None)
    def test_properties(self, q, y, n_r):
        P_mod, P_fl, P_fsml = absence_probabilities(q, y, n_r)
        assert absence_probabilities(q, y, 1)[2] == P_fl
        assert P_fl <= P_fsml <= 1
        assert (P_fsml == 1) == (y < n_r)
        assert P_fsml == absence_probability_exact(q, y, n_r)

    def test_too_many_scales(self):
        with pytest.raises(ValueError):
            absence_probabilities(3, 2, 5)


class TestBinomialIdentity:
    def test_examples(self):
        assert alternating_binomial_vanishes(2, [0, 1])
        assert alternating_binomial_vanishes(3, [0, 0, 1])
        assert alternating_binomial_sum(2, [0, 0, 1]) == 2
        assert not alternating_binomial_vanishes(2, [0, 0, 1])

    @given(st.integers(1, 20), st.data())
    def test_low_degree_vanishes(self, n, data):
        coeffs = data.draw(st.lists(st.integers(-100, 100), min_size=1, max_size=n))
        assert alternating_binomial_vanishes(n, coeffs)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_degree_n_monomial(self, n):
        assert alternating_binomial_sum(n, [0] * n + [1]) == (-1) ** n * factorial(n)


class TestReport:
    def test_report_is_bounded(self):
        rep = theory_report(TheoryParams(q=5, n_r=2, x=3, y=7, trials=2000, seed=1), monte_carlo=True)
        for prob in (rep.p_fl, rep.p_mod, *rep.floor, *rep.modulo, rep.P_mod, rep.P_fl, rep.P_fsml):
            assert 0 <= prob <= 1
        for ec in (rep.ec_fl, rep.ec_mod, rep.ec_fsml_exact):
            assert 0 <= ec <= 10
        assert rep.ec_fsml_mc.trials == 2000
        assert "p_fl=5/36" in rep.lines()

    @pytest.mark.parametrize("kwargs", [dict(q=2), dict(q=5, n_r=0), dict(q=5, y=-1)])
    def test_params_validated(self, kwargs):
        with pytest.raises(ValueError):
            TheoryParams(**kwargs)


class TestClaims:
    @pytest.mark.parametrize("name", ["prop2", "prop3", "prop4", "thm1", "thm3", "lemma1"])
    def test_exact_claims_pass(self, name):
        (result,) = run_claim(name)
        assert result.passed, result.line()

    def test_floor_claim_line(self):
        (result,) = run_claim("prop2", q=4)
        assert result.line() == "claim=prop2 status=PASS expected=3/4,5/28 got=3/4,5/28"

    def test_two_scale_claim_reports_odd_terms(self):
        (result,) = run_claim("prop5")
        assert not result.passed
        assert "n=1,3,5" in result.note

    def test_two_scale_claim_agrees_without_columns(self):
        (result,) = run_claim("prop5", y=0)
        assert result.passed

    def test_unknown_claim(self):
        with pytest.raises(KeyError):
            run_claim("prop9")

