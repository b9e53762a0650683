"""Weight solving and the structural weight-system tests."""

from __future__ import annotations

import pytest

from linkinv.errors import NonPositiveWeightError
from linkinv.poly import InvertiblePolynomial, parse_polynomial
from linkinv.weights import (
    WeightSystem,
    m2m3_split,
    one_dim_cone_test,
    solve_weights,
    suspension_form,
    well_formed,
)


def test_solve_cycle_and_fermat():
    ws = solve_weights(parse_polynomial("z0^7*z1 + z1^4*z2 + z2^2*z0 + z3^3"))
    assert ws.weights == (7, 8, 25, 19)
    assert ws.degree == 57
    assert ws.index == 2


def test_solve_two_squares():
    ws = solve_weights(InvertiblePolynomial.from_matrix(((2, 0), (0, 2))))
    assert (ws.weights, ws.degree) == ((1, 1), 2)


def test_solve_chain_and_cycle():
    ws = solve_weights(parse_polynomial("z0^3 + z0*z1^2 + z4*z2^10 + z2*z3^5 + z3*z4^14"))
    assert ws.weights == (701, 701, 198, 381, 123)
    assert ws.degree == 2103


def test_solve_verifies_rows(corpus):
    for p in corpus[:100]:
        ws = solve_weights(p)
        for row in p.matrix:
            assert sum(e * w for e, w in zip(row, ws.weights)) == ws.degree


def test_solve_rejects_nonpositive():
    # invertible but one solved weight comes out zero
    p = InvertiblePolynomial.from_matrix(((1, 1), (1, 2)))
    with pytest.raises(NonPositiveWeightError):
        solve_weights(p)


def test_primitive_normalization():
    ws = WeightSystem.from_raw((2, 4, 6), 12)
    assert (ws.weights, ws.degree) == ((1, 2, 3), 6)


def test_proportional_accepts_scaled_copies():
    ws = WeightSystem((1, 2, 3), 6)
    assert ws.proportional((5, 10, 15), 30)
    assert not ws.proportional((5, 10, 16), 30)
    assert not ws.proportional((5, 10), 30)


def test_well_formed_examples():
    assert well_formed(WeightSystem((7, 8, 25, 19), 57))
    assert well_formed(WeightSystem((1, 1), 2))
    # dropping the first weight leaves gcd 3
    assert not well_formed(WeightSystem((701, 2103, 342, 786, 276), 4206))


def test_suspension_form_detection():
    p = parse_polynomial("z0^6 + z1^2 + z3*z2^10 + z4*z3^5 + z2*z4^14 + z5^2")
    ws = solve_weights(p)
    sf = suspension_form(p, ws)
    assert sf is not None
    assert sf.core_indices == (0, 2, 3, 4)
    assert sf.quad_indices == (1, 5)
    assert (sf.k, sf.n) == (3, 5)
    # every quad weight is d/2
    assert all(2 * ws.weights[i] == ws.degree for i in sf.quad_indices)


def test_suspension_form_bp_with_inner_squares():
    p = parse_polynomial("z0^3 + z1^22 + z2^2 + z3^26 + z4^2")
    ws = solve_weights(p)
    sf = suspension_form(p, ws)
    assert sf is not None
    assert sf.core_indices == (0, 1, 3)
    assert sf.quad_indices == (2, 4)
    assert (sf.k, sf.n) == (2, 4)


def test_suspension_form_rejects_squareless():
    p = parse_polynomial("z0^3 + z1^3")
    assert suspension_form(p, solve_weights(p)) is None


def test_m2m3_split_head_pattern():
    split = m2m3_split(WeightSystem((701, 701, 198, 381, 123), 2103), "head")
    assert split is not None
    assert (split.m2, split.m3) == (3, 701)
    assert split.v == (1, 1, 66, 127, 41)
    assert split.m3_weight_indices == (0, 1)


def test_m2m3_split_even_m3_base():
    # base weights behind the second table's first row: m3 = 3532, m2 = 5
    ws = solve_weights(parse_polynomial("z0^5 + z0*z1^2 + z4*z2^3 + z2*z3^107 + z3*z4^11"))
    assert ws.weights == (3532, 7064, 5355, 115, 1595)
    assert ws.degree == 17660
    split = m2m3_split(ws)
    assert split is not None
    assert (split.m2, split.m3) == (5, 3532)


def test_m2m3_split_rejects_pattern_violations():
    # degree factors but the u-pattern does not validate
    assert m2m3_split(WeightSystem((2, 3, 1, 1, 1), 6)) is None


def test_one_dim_cone_test():
    assert one_dim_cone_test(WeightSystem((7, 8, 25, 19), 57))
    assert not one_dim_cone_test(WeightSystem((701, 2103, 342, 786, 276, 2103), 4206))
    assert not one_dim_cone_test(WeightSystem((1, 1), 2))
