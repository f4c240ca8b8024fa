import pytest
from hypothesis import given, settings, strategies as st

from k3curves.congruences import (
    CLAUSES,
    CongruenceClause,
    check_3dissection,
    check_clause,
    check_j_congruence,
    check_lehner,
    check_mod2_collapse,
    check_theta_ninth_power,
    odd_coefficient_gaps,
    parity_self_similarity,
    parity_sequence,
    sweep_clauses,
)
from k3curves.eta import InvalidTopologyError, RealTopology, all_topologies, welschinger_series, yau_zaslow_series
from k3curves.series import CoefficientRing, ts_factor_product

from oracles import naive_factor_product, naive_j_series, naive_mul

topologies = st.sampled_from(all_topologies())


class TestClauses:
    def test_clause_moduli(self):
        assert sorted(c.modulus for c in CLAUSES.values()) == [2, 3, 4, 8, 9, 16]

    def test_mod2_er0_odd_rows(self):
        report = check_clause("mod2", RealTopology(0), 20)
        assert report.status == "pass"
        w = welschinger_series(RealTopology(0), 20)
        c = yau_zaslow_series(20)
        odd = [g for g in range(1, 21) if w[g] % 2]
        assert odd == [8, 16]
        assert w[8] == 2535 and w[16] == 521235
        assert [g for g in range(1, 21) if c[g] % 2] == [8, 16]

    def test_mod3_er_minus18(self):
        report = check_clause("mod3", RealTopology(-18), 5)
        assert report.status == "pass"
        assert welschinger_series(RealTopology(-18), 5)[5] == 58284
        assert 58284 % 3 == 0 and 176256 % 3 == 0

    def test_not_applicable(self):
        report = check_clause("mod16", RealTopology(20), 50)
        assert report.status == "not-applicable"
        assert report.violations == []

    def test_subclaims_reported_separately(self):
        report = check_clause("mod4", RealTopology(-16), 60)
        assert report.subclaims == {"congruence": "pass", "vanishing": "pass"}
        report = check_clause("mod9", RealTopology(0), 60)
        assert report.subclaims == {"congruence": "not-claimed", "vanishing": "pass"}

    def test_failure_is_detected(self):
        # mod-4 statement forced onto e_R = 2, where it is not claimed
        forced = CongruenceClause("forced", 4, "", lambda e: True, CLAUSES["mod4"].vanishes)
        report = check_clause(forced, RealTopology(2), 20)
        assert report.status == "fail"
        assert report.violations[0].g == 1
        assert (report.violations[0].w_mod, report.violations[0].c_mod) == (-2 % 4, 24 % 4)

    def test_refuses_unchecked(self):
        with pytest.raises(InvalidTopologyError):
            check_clause("mod2", RealTopology(22, unchecked=True), 5)

    @pytest.mark.parametrize("clause", list(CLAUSES))
    def test_modular_and_exact_paths_agree(self, clause):
        for t in all_topologies():
            fast = check_clause(clause, t, 100)
            slow = check_clause(clause, t, 100, exact=True)
            assert fast.to_dict() == slow.to_dict()
            assert fast.status in ("pass", "not-applicable")

    def test_sweep_ordering(self):
        reports = sweep_clauses([RealTopology(20), RealTopology(-18)], 30)
        assert [r.e_r for r in reports] == [-18] * 6 + [20] * 6
        assert all(r.status in ("pass", "not-applicable") for r in reports)

    def test_status_fail_iff_violations(self):
        for r in sweep_clauses(all_topologies(), 40):
            assert (r.status == "fail") == bool(r.violations)


class TestParity:
    def test_first_bits(self):
        oracle = [x % 2 for x in naive_factor_product(1, -1, -3, 4)]
        assert naive_factor_product(1, -1, -3, 4) == [1, 3, 9, 22, 51]
        assert oracle == [1, 1, 1, 0, 1]
        assert parity_sequence(4) == [1, 1, 1, 0, 1]

    def test_matches_w_8n(self):
        bits = parity_sequence(12)
        w = welschinger_series(RealTopology(-6), 96)
        assert bits == [w[8 * n] % 2 for n in range(13)]

    def test_both_values_occur(self):
        for k in (3, 10, 128):
            bits = parity_sequence(k)
            assert 0 in bits and 1 in bits

    @pytest.mark.parametrize("k", [1, 5, 64])
    def test_self_similarity(self, k):
        assert parity_self_similarity(k).status == "pass"

    def test_odd_gap_observation(self):
        positions, gaps = odd_coefficient_gaps(400)
        # odd coefficients sit at 4n(n+1)
        assert positions == [4 * n * (n + 1) for n in range(10)]
        assert gaps == [8 * n for n in range(1, 10)]


class TestLehnerAndJ:
    def test_small_lehner_values(self):
        a = naive_j_series(4)[1:]
        assert a[2] % 2**11 == 0
        assert a[3] % 3**5 == 0
        assert a[1] % 2**11 != 0

    def test_lehner(self):
        assert check_lehner(40).status == "pass"

    def test_j_congruence(self):
        assert check_j_congruence(20, 16).status == "pass"
        assert check_j_congruence(20, 9).status == "pass"
        assert check_j_congruence(0, 16).status == "pass"
        assert 3200 % 16 == 0 and 25650 % 9 == 0

    def test_j_congruence_modulus_guard(self):
        with pytest.raises(ValueError):
            check_j_congruence(10, 4)


class TestDissectionAndTheta:
    def test_k1_small(self):
        oracle = naive_factor_product(1, -1, 3, 2)
        assert oracle == [1, -3, 0]
        assert check_3dissection(1, 2).status == "pass"

    @pytest.mark.parametrize("k", [-8, -4, -1, 0, 1, 2, 5])
    def test_dissection(self, k):
        assert check_3dissection(k, 300).status == "pass"

    def test_theta_ninth_q1(self):
        theta = [1, -2, 0, 0, 2]
        power = [1, 0, 0, 0, 0]
        for _ in range(9):
            power = naive_mul(power, theta, 4)
        assert power[1] == -18
        assert power[0] == 1

    def test_theta_ninth(self):
        assert check_theta_ninth_power(50).status == "pass"
        assert check_theta_ninth_power(500).status == "pass"


class TestMod2Collapse:
    @given(topologies)
    @settings(max_examples=20)
    def test_collapse(self, t):
        assert check_mod2_collapse(t, 300).status == "pass"

    def test_collapse_target_is_er_independent(self):
        z2 = CoefficientRing.mod(2)
        series = {welschinger_series(t, 200, z2) for t in all_topologies()}
        assert series == {ts_factor_product(8, -1, -3, 200, z2)}
