"""Parametric families: chain-cycle duals, perturbations, and tails."""
from __future__ import annotations

import pytest

from linkinv.errors import (
    HypothesisViolationError,
    NonCoprimeError,
    ParameterViolationError,
)
from linkinv.families import (
    ChainCycleParams,
    chain_cycle_dual,
    double_tail_dual,
    double_tail_obstruction_fast,
    g2_perturbation,
    iter_double_tail_params,
    iter_single_tail_params,
    obstructed_double_tail_params,
    obstructed_single_tail_params,
    prime_power_double_tail_params,
    single_tail_dual,
    single_tail_obstruction_fast,
    sphere_family_verdict,
    suspend,
)
from linkinv.obstruct import lichnerowicz
from linkinv.poly import parse_polynomial
from linkinv.weights import WeightSystem, solve_weights


def test_chain_cycle_record_loop_example():
    record = chain_cycle_dual(ChainCycleParams(3, 2, 10, 5, 14))
    assert record.base_ws.weights == (701, 701, 198, 381, 123)
    assert record.base_ws.degree == 2103
    assert record.dual_ws.weights == (701, 2103, 342, 786, 276)
    assert record.dual_ws.degree == 4206
    assert (record.m2, record.m3) == (3, 701)
    assert record.b3 == 0
    assert record.pattern_valid
    assert record.dual_u_pattern
    assert record.index_closed_form_holds
    assert record.dual_ws.index == 2
    assert record.structured is not None
    assert record.structured.is_rational_homology_sphere


def test_chain_cycle_b3_positive():
    # P = 3*3*3 + 1 = 28, m3 = 4: free rank 28/4 - 1 = 6
    record = chain_cycle_dual(ChainCycleParams(3, 2, 3, 3, 3))
    assert record.pattern_valid
    assert record.dual_u_pattern
    assert record.b3 == 6
    assert record.b3 == record.params.cycle_determinant // record.m3 - 1


def test_chain_cycle_dual_orders_off_pattern():
    # base split holds but the reduced dual orders do not: u2 = P, not m3.
    # the closed form for b3 is out of scope here and must not be asserted
    record = chain_cycle_dual(ChainCycleParams(3, 2, 2, 3, 4))
    assert record.pattern_valid
    assert record.dual_u_pattern is False
    assert record.b3 == 0
    assert (record.m2, record.m3) == (3, 5)
    assert record.params.cycle_determinant == 25


def test_chain_cycle_index_form_can_fail():
    # both patterns hold with b3 = 0, yet the index ratio is off:
    # the dual index is 46 at degree 78, not m2 - 1 = 2
    record = chain_cycle_dual(ChainCycleParams(3, 2, 2, 2, 3))
    assert record.b3 == 0
    assert record.dual_u_pattern
    assert record.index_closed_form_holds is False
    assert record.dual_ws.index == 46


def test_chain_cycle_index_form_skipped_off_pattern():
    # out of scope entirely: the ratio is not even evaluated
    record = chain_cycle_dual(ChainCycleParams(21, 4, 2, 2, 3))
    assert record.b3 == 0
    assert record.dual_u_pattern is False
    assert record.index_closed_form_holds is None


def test_chain_cycle_noncoprime_rejected():
    with pytest.raises(NonCoprimeError):
        chain_cycle_dual(ChainCycleParams(2, 2, 2, 2, 2))


def test_chain_cycle_params_validation():
    with pytest.raises(ParameterViolationError):
        ChainCycleParams(1, 2, 10, 5, 14)


def test_g2_perturbation_row_text():
    record = chain_cycle_dual(ChainCycleParams(3, 2, 10, 5, 14))
    g2 = g2_perturbation(record, extra_squares=1)
    assert g2.to_text() == "z0^6 + z1^2 + z2^10*z3 + z3^5*z4 + z2*z4^14 + z5^2"
    ws = solve_weights(g2)
    assert ws.weights == (701, 2103, 342, 786, 276, 2103)


def test_g2_perturbation_no_extra_squares():
    record = chain_cycle_dual(ChainCycleParams(3, 2, 10, 5, 14))
    g2 = g2_perturbation(record, extra_squares=0)
    assert g2.n_vars == 5
    assert solve_weights(g2).weights == (701, 2103, 342, 786, 276)


def test_g2_perturbation_even_m3():
    record = chain_cycle_dual(ChainCycleParams(5, 2, 3, 107, 11))
    g2 = g2_perturbation(record, extra_squares=1)
    assert g2.to_text() == "z0^10 + z1^2 + z2^3*z3 + z3^107*z4 + z2*z4^11 + z5^2"
    assert solve_weights(g2).weights == (1766, 8830, 5835, 155, 1075, 8830)


def test_suspend_even_degree():
    p = parse_polynomial("z0^3 + z1^22 + z2^2 + z3^26 + z4^2")
    ws = solve_weights(p)
    q, ws2 = suspend(p, ws, 2)
    assert q.n_vars == 7
    assert ws2.weights == ws.weights + (429, 429)
    assert ws2.degree == 858


def test_suspend_odd_degree_doubles():
    p = parse_polynomial("z0^3 + z0*z1^2 + z4*z2^10 + z2*z3^5 + z3*z4^14")
    ws = solve_weights(p)
    assert ws.degree == 2103
    q, ws2 = suspend(p, ws, 1)
    assert ws2.degree == 4206
    assert ws2.weights == (1402, 1402, 396, 762, 246, 2103)
    assert solve_weights(q) == ws2


def test_sphere_family_one_square():
    verdict = sphere_family_verdict(ChainCycleParams(3, 2, 10, 5, 14), squares=1)
    assert verdict.link_dim == 9
    assert verdict.profile.betti == 0
    assert verdict.profile.delta_minus1 == 701
    assert verdict.report.classification.kind == "homotopy_sphere"
    assert verdict.report.classification.subtype == "kervaire"
    assert verdict.report.bvc.lhs_scaled == 1450
    assert verdict.report.cone_dim == 2


def test_sphere_family_two_squares():
    verdict = sphere_family_verdict(ChainCycleParams(3, 2, 10, 5, 14), squares=2)
    assert verdict.link_dim == 11
    assert verdict.profile.betti == 0
    assert verdict.report.cone_dim == 2


def test_sphere_family_even_m3():
    verdict = sphere_family_verdict(ChainCycleParams(5, 2, 3, 107, 11), squares=1)
    assert verdict.profile.betti == 1
    assert verdict.profile.torsion == ()
    assert verdict.profile.delta_minus1 == -17660
    assert verdict.report.classification.kind == "s4_x_s5"


def test_sphere_family_needs_two():
    with pytest.raises(HypothesisViolationError):
        sphere_family_verdict(ChainCycleParams(3, 3, 10, 5, 14), squares=1)


def test_double_tail_record():
    record = double_tail_dual(3, 11, 13)
    assert record.base_ws.weights == (143, 39, 195, 33, 198)
    assert record.base_ws.degree == 429
    assert record.dual_ws.weights == (286, 39, 429, 33, 429)
    assert record.dual_ws.degree == 858
    assert record.milnor == 1050
    assert record.torsion == (3,)
    assert record.delta_1 == 3
    assert record.f_bp_transpose.to_text() == "z0^3 + z1^22 + z2^2 + z3^26 + z4^2"


def test_double_tail_validation():
    with pytest.raises(ParameterViolationError):
        double_tail_dual(4, 11, 13)
    with pytest.raises(ParameterViolationError):
        double_tail_dual(3, 9, 13)


def test_single_tail_record():
    record = single_tail_dual(5, 7, 12)
    assert record.base_ws.weights == (420, 168, 120, 70, 385)
    assert record.base_ws.degree == 840
    assert record.dual_ws.weights == (420, 168, 120, 35, 420)
    assert record.dual_ws.degree == 840
    assert record.delta_1 == 1
    assert record.torsion == ()
    assert record.milnor == (5 - 1) * (7 - 1) * (2 * 12 - 1)


def test_single_tail_validation():
    with pytest.raises(ParameterViolationError):
        single_tail_dual(5, 8, 12)
    with pytest.raises(ParameterViolationError):
        single_tail_dual(5, 25, 12)


def test_obstructed_double_tail_k2():
    a0, a1, a3 = obstructed_double_tail_params(2)
    assert (a0, a1, a3) == (13, 3, 5)
    record = double_tail_dual(a0, a1, a3)
    assert lichnerowicz(record.base_ws).holds
    lich, bvc = double_tail_obstruction_fast(a0, a1, a3)
    assert lich and bvc


def test_obstructed_single_tail_k2():
    a1, a2, a3 = obstructed_single_tail_params(2)
    assert (a1, a2, a3) == (3, 5, 8)
    record = single_tail_dual(a1, a2, a3)
    assert lichnerowicz(record.base_ws).holds
    lich, bvc = single_tail_obstruction_fast(a1, a2, a3)
    assert lich and bvc


def test_prime_power_params():
    assert prime_power_double_tail_params(11, 5, 2) == (11, 5, 2)
    assert prime_power_double_tail_params(11, 5, 2, k=2) == (121, 25, 4)
    record = double_tail_dual(*prime_power_double_tail_params(11, 5, 2))
    assert record.torsion == (11,)
    assert record.delta_1 == 11


def test_prime_power_validation():
    with pytest.raises(ParameterViolationError):
        prime_power_double_tail_params(7, 5, 2)
    with pytest.raises(ParameterViolationError):
        prime_power_double_tail_params(11, 3, 2)
    with pytest.raises(ParameterViolationError):
        prime_power_double_tail_params(12, 5, 2)


def test_iterators_respect_constraints():
    double = list(iter_double_tail_params(7))
    assert all(a0 % 2 == 1 for a0, _, _ in double)
    assert (3, 2, 5) in double
    assert (3, 2, 4) not in double
    single = list(iter_single_tail_params(7))
    assert all(a1 % 2 == 1 and a2 % 2 == 1 for a1, a2, _ in single)
    assert (3, 5, 2) in single


def test_fast_checks_match_full_pipeline():
    for a0, a1, a3 in [(3, 11, 13), (13, 3, 5), (11, 5, 2), (3, 2, 5)]:
        record = double_tail_dual(a0, a1, a3)
        lich, _ = double_tail_obstruction_fast(a0, a1, a3)
        assert lich == lichnerowicz(record.base_ws).holds
    for a1, a2, a3 in [(5, 7, 12), (3, 5, 8), (3, 5, 2)]:
        record = single_tail_dual(a1, a2, a3)
        lich, _ = single_tail_obstruction_fast(a1, a2, a3)
        assert lich == lichnerowicz(record.base_ws).holds
