"""Parametric families: construction, dual pipeline, and verdicts.

Three shapes generate every case study:

  * chain-cycle: f = z0^a0 + z0 z1^a1 + z4 z2^a2 + z2 z3^a3 + z3 z4^a4,
    with m2 = a0 and m3 = w_0 = d/a0 coprime.  Its transpose has third
    Betti number -1 + (a2 a3 a4 + 1)/m3; when that vanishes the dual is a
    rational homology 7-sphere and every dual closed form below applies.
    Replacing the transposed chain by z0^(2 m2) + z1^2 and adding pure
    squares produces the high-dimensional links of the result tables.

  * double tail: f = z0^a0 + z1^a1 + z1 z2^2 + z3^a3 + z3 z4^2 with
    pairwise coprime exponents, a0 odd.  The dual is a rational homology
    7-sphere with H_3 = Z_a0, shares its weights with the diagonal
    polynomial z0^a0 + z1^(2 a1) + z2^2 + z3^(2 a3) + z4^2, and feeds the
    Einstein/extremal obstruction sweeps.

  * single tail: g = z0^2 + z1^a1 + z2^a2 + z3^a3 + z3 z4^2 with a1, a2
    odd and pairwise coprime exponents; the dual is a homotopy 7-sphere.

Constructors validate parameters strictly and assert every closed form
against the generic solvers, so a mismatch aborts loudly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .alexander import (
    CyclotomicDivisor,
    HomologyProfile,
    StructuredDivisor,
    UVData,
    alexander_divisor,
    betti_from_divisor,
    delta_at_1,
    delta_at_minus1,
    milnor_number,
    structured_divisor_check,
    uv,
)
from .errors import (
    ClosedFormMismatchError,
    DivisibilityFailureError,
    HypothesisViolationError,
    NonCoprimeError,
    ParameterViolationError,
)
from .obstruct import ObstructionReport, obstruction_report
from .orlik import orlik_torsion
from .poly import InvertiblePolynomial
from .transpose import bh_transpose
from .weights import WeightSystem, m2m3_split, solve_weights, suspension_form


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterViolationError(message)


@dataclass(frozen=True)
class ChainCycleParams:
    """Exponents of the chain-cycle shape; all at least 2."""

    a0: int
    a1: int
    a2: int
    a3: int
    a4: int

    def __post_init__(self) -> None:
        for name, a in zip("a0 a1 a2 a3 a4".split(), self.exponents):
            _require(isinstance(a, int) and a >= 2, f"{name} = {a} must be an integer >= 2")

    @property
    def exponents(self) -> tuple[int, int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    @property
    def cycle_determinant(self) -> int:
        """P = a2 a3 a4 + 1, the determinant of the length-3 cycle block."""
        return self.a2 * self.a3 * self.a4 + 1


@dataclass(frozen=True)
class ChainCycleRecord:
    params: ChainCycleParams
    f: InvertiblePolynomial
    f_transpose: InvertiblePolynomial
    base_ws: WeightSystem
    dual_ws: WeightSystem
    dual_uv: UVData
    dual_divisor: CyclotomicDivisor
    m2: int
    m3: int
    b3: int
    pattern_valid: bool
    dual_u_pattern: bool | None
    structured: StructuredDivisor | None
    index_closed_form_holds: bool | None


def chain_cycle_poly(params: ChainCycleParams) -> InvertiblePolynomial:
    a0, a1, a2, a3, a4 = params.exponents
    rows = (
        (a0, 0, 0, 0, 0),
        (1, a1, 0, 0, 0),
        (0, 0, a2, 0, 1),
        (0, 0, 1, a3, 0),
        (0, 0, 0, 1, a4),
    )
    return InvertiblePolynomial.from_matrix(rows)


def chain_cycle_cofactors(a2: int, a3: int, a4: int) -> tuple[int, int, int]:
    """Cycle cofactors (w_2 : w_3 : w_4) = (these) / (a2 a3 a4 + 1)."""
    return (1 - a3 + a3 * a4, 1 - a4 + a4 * a2, 1 - a2 + a2 * a3)


def chain_cycle_dual_cofactors(a2: int, a3: int, a4: int) -> tuple[int, int, int]:
    """Same for the transposed cycle, which runs in the opposite direction."""
    return (1 - a4 + a3 * a4, 1 - a2 + a2 * a4, 1 - a3 + a2 * a3)


def chain_cycle_dual(params: ChainCycleParams) -> ChainCycleRecord:
    """Run the chain-cycle pipeline and assert its closed forms.

    Always asserted: m2 = a0 and m3 = w_0 are coprime (NonCoprimeError
    otherwise) and the base cycle weights match their cofactor ratios.
    When both the base weights and the reduced dual orders factor through
    the (m2, m3) pattern, b3 of the dual must equal P/m3 - 1; when
    additionally b3 = 0 the dual weights must match their closed forms up
    to positive scale.  The closed-form index ratio (m2 - 1 at degree
    m3 m2 (m2 - 1)) is recorded, not asserted: it fails on most in-scope
    inputs, e.g. exponents (3,2,2,2,3) give index 46 at degree 78.
    """
    a0, a1, a2, a3, a4 = params.exponents
    f = chain_cycle_poly(params)
    base = solve_weights(f)
    d = base.degree
    m2 = a0
    m3 = base.weights[0]
    if m2 * m3 != d:
        raise ClosedFormMismatchError(f"w0 = {m3} does not divide out: {m2}*{m3} != {d}")
    if math.gcd(m2, m3) != 1:
        raise NonCoprimeError(f"m2 = {m2} and m3 = {m3} share a factor")
    P = params.cycle_determinant
    for w, c in zip(base.weights[2:], chain_cycle_cofactors(a2, a3, a4)):
        if w * P != d * c:
            raise ClosedFormMismatchError(
                f"cycle weight {w}/{d} differs from cofactor {c}/{P}"
            )

    f_t = bh_transpose(f)
    dual = solve_weights(f_t)
    dual_data = uv(dual)
    divisor = alexander_divisor(dual_data)
    b3 = betti_from_divisor(divisor)

    split = m2m3_split(base, "head")
    pattern_valid = split is not None
    # The reduced dual orders must follow the (m2, m3) pattern as well:
    # the base split alone does not force them, e.g. exponents (3,2,2,3,4)
    # give u = (6,2,25,25,25) with m3 = 5, and the b3 closed form fails.
    u_pattern: bool | None = None
    index_ok: bool | None = None
    if pattern_valid:
        u, v = dual_data.u, dual_data.v
        u_pattern = (
            u[0] == m2 * a1
            and u[1] == a1
            and u[2] == u[3] == u[4] == m3
            and v[0] == a1 - 1
            and v[1] == 1
        )
    if u_pattern:
        if P % m3 != 0 or b3 != P // m3 - 1:
            raise ClosedFormMismatchError(
                f"b3 = {b3} does not match P/m3 - 1 for P = {P}, m3 = {m3}"
            )
        if b3 == 0:
            scale = m2 * (m2 - 1)
            closed = (
                m3 * (m2 - 1) * (a1 - 1),
                m3 * m2 * (m2 - 1),
            ) + tuple(a1 * scale * c for c in chain_cycle_dual_cofactors(a2, a3, a4))
            if not dual.proportional(closed, a1 * m3 * scale):
                raise ClosedFormMismatchError(
                    f"dual weights {dual.weights};{dual.degree} differ from the "
                    f"closed forms {closed};{a1 * m3 * scale}"
                )
            index_ok = dual.index * m3 * scale == (m2 - 1) * dual.degree

    structured: StructuredDivisor | None = None
    if split is not None:
        structured = structured_divisor_check(split)

    return ChainCycleRecord(
        params=params,
        f=f,
        f_transpose=f_t,
        base_ws=base,
        dual_ws=dual,
        dual_uv=dual_data,
        dual_divisor=divisor,
        m2=m2,
        m3=m3,
        b3=b3,
        pattern_valid=pattern_valid,
        dual_u_pattern=u_pattern,
        structured=structured,
        index_closed_form_holds=index_ok,
    )


def g2_perturbation(
    record: ChainCycleRecord, extra_squares: int = 1
) -> InvertiblePolynomial:
    """Replace the transposed chain by z0^(d/w0) + z1^2 and append squares.

    The result lives in the same weight space as the transpose: the dual
    weights extended by one weight d/2 per added square still solve it.
    Raises DivisibilityFailureError when w0 does not divide the dual
    degree or the second dual weight is not d/2.
    """
    _require(extra_squares >= 0, f"square count {extra_squares} must be >= 0")
    dual = record.dual_ws
    d = dual.degree
    if d % dual.weights[0] != 0:
        raise DivisibilityFailureError(
            f"dual degree {d} is not divisible by the first weight {dual.weights[0]}"
        )
    if 2 * dual.weights[1] != d:
        raise DivisibilityFailureError(
            f"second dual weight {dual.weights[1]} is not half the degree {d}"
        )
    a0_new = d // dual.weights[0]
    n_total = 5 + extra_squares
    rows = []
    rows.append((a0_new,) + (0,) * (n_total - 1))
    rows.append((0, 2) + (0,) * (n_total - 2))
    for r in range(2, 5):
        rows.append(tuple(record.f_transpose.matrix[r]) + (0,) * extra_squares)
    for j in range(extra_squares):
        row = [0] * n_total
        row[5 + j] = 2
        rows.append(tuple(row))
    g2 = InvertiblePolynomial.from_matrix(tuple(rows))
    expected = WeightSystem(dual.weights + (d // 2,) * extra_squares, d)
    if solve_weights(g2) != expected:
        raise ClosedFormMismatchError("perturbed polynomial left the weight space")
    return g2


def suspend(
    p: InvertiblePolynomial, ws: WeightSystem, count: int
) -> tuple[InvertiblePolynomial, WeightSystem]:
    """Append pure squares; new weights are d/2 (doubling first if d is odd)."""
    _require(count >= 1, f"suspension count {count} must be >= 1")
    n = p.n_vars
    if ws.degree % 2 == 0:
        new_w = ws.weights + (ws.degree // 2,) * count
        new_d = ws.degree
    else:
        new_w = tuple(2 * w for w in ws.weights) + (ws.degree,) * count
        new_d = 2 * ws.degree
    rows = [row + (0,) * count for row in p.matrix]
    for j in range(count):
        row = [0] * (n + count)
        row[n + j] = 2
        rows.append(tuple(row))
    names = p.var_names + tuple(f"z{n + j}" for j in range(count))
    return (
        InvertiblePolynomial(tuple(rows), names),
        WeightSystem.from_raw(new_w, new_d),
    )


@dataclass(frozen=True)
class TailRecord:
    """Dual pipeline result for the double- and single-tail shapes."""

    kind: str  # "double_tail" | "single_tail"
    exponents: tuple[int, int, int]
    f: InvertiblePolynomial
    f_transpose: InvertiblePolynomial
    f_bp_transpose: InvertiblePolynomial
    base_ws: WeightSystem
    dual_ws: WeightSystem
    dual_uv: UVData
    dual_divisor: CyclotomicDivisor
    milnor: int
    torsion: tuple[int, ...]
    delta_1: int


def _pairwise_coprime(values: tuple[int, ...]) -> bool:
    return all(
        math.gcd(values[i], values[j]) == 1
        for i in range(len(values))
        for j in range(i + 1, len(values))
    )


def double_tail_base_raw(a0: int, a1: int, a3: int) -> tuple[tuple[int, ...], int]:
    """Un-normalized base weights of the double-tail shape."""
    return (
        (
            2 * a1 * a3,
            2 * a0 * a3,
            a0 * a3 * (a1 - 1),
            2 * a0 * a1,
            a0 * a1 * (a3 - 1),
        ),
        2 * a0 * a1 * a3,
    )


def single_tail_base_raw(a1: int, a2: int, a3: int) -> tuple[tuple[int, ...], int]:
    """Un-normalized base weights of the single-tail shape."""
    return (
        (
            a1 * a2 * a3,
            2 * a2 * a3,
            2 * a1 * a3,
            2 * a1 * a2,
            a1 * a2 * (a3 - 1),
        ),
        2 * a1 * a2 * a3,
    )


def double_tail_dual(a0: int, a1: int, a3: int) -> TailRecord:
    """Build the double-tail family member and assert its closed forms."""
    exps = (a0, a1, a3)
    _require(all(isinstance(a, int) and a >= 2 for a in exps), f"exponents {exps} must be integers >= 2")
    _require(a0 % 2 == 1, f"a0 = {a0} must be odd")
    _require(_pairwise_coprime(exps), f"exponents {exps} must be pairwise coprime")
    f = InvertiblePolynomial.from_matrix(
        (
            (a0, 0, 0, 0, 0),
            (0, a1, 0, 0, 0),
            (0, 1, 2, 0, 0),
            (0, 0, 0, a3, 0),
            (0, 0, 0, 1, 2),
        )
    )
    base = solve_weights(f)
    raw_w, raw_d = double_tail_base_raw(a0, a1, a3)
    if not base.proportional(raw_w, raw_d):
        raise ClosedFormMismatchError(
            f"double-tail base weights {base.weights};{base.degree} differ from {raw_w};{raw_d}"
        )
    f_t = bh_transpose(f)
    dual = solve_weights(f_t)
    w = base.weights
    d = base.degree
    if not dual.proportional((2 * w[0], w[1], d, w[3], d), 2 * d):
        raise ClosedFormMismatchError(
            f"double-tail dual weights {dual.weights};{dual.degree} differ from "
            f"(2w0, w1, d, w3, d); 2d"
        )
    f_bp = InvertiblePolynomial.from_matrix(
        tuple(
            tuple(e if i == j else 0 for j in range(5))
            for i, e in enumerate((a0, 2 * a1, 2, 2 * a3, 2))
        )
    )
    if solve_weights(f_bp) != dual:
        raise ClosedFormMismatchError("diagonal companion left the dual weight space")
    data = uv(dual)
    if data.u != (a0, 2 * a1, 2, 2 * a3, 2) or data.v != (1, 1, 1, 1, 1):
        raise ClosedFormMismatchError(f"double-tail dual uv {data} is off pattern")
    divisor = alexander_divisor(data)
    expected = (
        CyclotomicDivisor.lam(2 * a0 * a1 * a3, 2)
        + CyclotomicDivisor.lam(a0)
        + CyclotomicDivisor.lam(2 * a1)
        + CyclotomicDivisor.lam(2 * a3)
        - CyclotomicDivisor.lam(2 * a0 * a1)
        - CyclotomicDivisor.lam(2 * a0 * a3)
        - CyclotomicDivisor.lam(2 * a1 * a3, 2)
        - CyclotomicDivisor.identity()
    )
    if divisor != expected:
        raise ClosedFormMismatchError(
            f"double-tail divisor {divisor!r} differs from {expected!r}"
        )
    d1 = delta_at_1(divisor)
    if d1 != a0:
        raise ClosedFormMismatchError(f"Delta(1) = {d1} differs from a0 = {a0}")
    mu = milnor_number(dual)
    if mu != (a0 - 1) * (2 * a1 - 1) * (2 * a3 - 1):
        raise ClosedFormMismatchError(f"Milnor number {mu} is off the product form")
    torsion = orlik_torsion(data, 4).nontrivial
    if torsion != (a0,):
        raise ClosedFormMismatchError(f"torsion {torsion} differs from Z_{a0}")
    return TailRecord(
        kind="double_tail",
        exponents=exps,
        f=f,
        f_transpose=f_t,
        f_bp_transpose=f_bp,
        base_ws=base,
        dual_ws=dual,
        dual_uv=data,
        dual_divisor=divisor,
        milnor=mu,
        torsion=torsion,
        delta_1=d1,
    )


def single_tail_dual(a1: int, a2: int, a3: int) -> TailRecord:
    """Build the single-tail family member and assert its closed forms."""
    exps = (a1, a2, a3)
    _require(all(isinstance(a, int) and a >= 2 for a in exps), f"exponents {exps} must be integers >= 2")
    _require(a1 % 2 == 1 and a2 % 2 == 1, f"a1 = {a1} and a2 = {a2} must be odd")
    _require(_pairwise_coprime(exps), f"exponents {exps} must be pairwise coprime")
    g = InvertiblePolynomial.from_matrix(
        (
            (2, 0, 0, 0, 0),
            (0, a1, 0, 0, 0),
            (0, 0, a2, 0, 0),
            (0, 0, 0, a3, 0),
            (0, 0, 0, 1, 2),
        )
    )
    base = solve_weights(g)
    raw_w, raw_d = single_tail_base_raw(a1, a2, a3)
    if not base.proportional(raw_w, raw_d):
        raise ClosedFormMismatchError(
            f"single-tail base weights {base.weights};{base.degree} differ from {raw_w};{raw_d}"
        )
    g_t = bh_transpose(g)
    dual = solve_weights(g_t)
    w = base.weights
    d = base.degree
    if not dual.proportional((d, 2 * w[1], 2 * w[2], w[3], d), 2 * d):
        raise ClosedFormMismatchError(
            f"single-tail dual weights {dual.weights};{dual.degree} differ from "
            f"(d, 2w1, 2w2, w3, d); 2d"
        )
    g_bp = InvertiblePolynomial.from_matrix(
        tuple(
            tuple(e if i == j else 0 for j in range(5))
            for i, e in enumerate((2, a1, a2, 2 * a3, 2))
        )
    )
    if solve_weights(g_bp) != dual:
        raise ClosedFormMismatchError("diagonal companion left the dual weight space")
    data = uv(dual)
    if data.u != (2, a1, a2, 2 * a3, 2) or data.v != (1, 1, 1, 1, 1):
        raise ClosedFormMismatchError(f"single-tail dual uv {data} is off pattern")
    divisor = alexander_divisor(data)
    d1 = delta_at_1(divisor)
    if d1 != 1:
        raise ClosedFormMismatchError(f"Delta(1) = {d1} differs from 1: not a homotopy sphere")
    mu = milnor_number(dual)
    if mu != (a1 - 1) * (a2 - 1) * (2 * a3 - 1):
        raise ClosedFormMismatchError(f"Milnor number {mu} is off the product form")
    torsion = orlik_torsion(data, 4).nontrivial
    if torsion != ():
        raise ClosedFormMismatchError(f"homotopy sphere with torsion {torsion}")
    return TailRecord(
        kind="single_tail",
        exponents=exps,
        f=g,
        f_transpose=g_t,
        f_bp_transpose=g_bp,
        base_ws=base,
        dual_ws=dual,
        dual_uv=data,
        dual_divisor=divisor,
        milnor=mu,
        torsion=torsion,
        delta_1=d1,
    )


@dataclass(frozen=True)
class SphereFamilyVerdict:
    """Full report for the perturbed, suspended chain-cycle dual."""

    record: ChainCycleRecord
    squares: int
    polynomial: InvertiblePolynomial
    ws: WeightSystem
    divisor: CyclotomicDivisor
    profile: HomologyProfile
    report: ObstructionReport
    link_dim: int


def sphere_family_verdict(
    params: ChainCycleParams, squares: int = 1
) -> SphereFamilyVerdict:
    """Perturb, suspend, and classify a chain-cycle dual; assert the verdicts.

    Requires a1 = 2, at least one added square, and a rational-homology-
    sphere dual (b3 = 0).  The no-extremal-metric inequality and the
    expected homology profile are asserted, so a failing instance raises
    instead of reporting quietly.
    """
    if params.a1 != 2:
        raise HypothesisViolationError(f"a1 = {params.a1}: the suspension family needs a1 = 2")
    if squares < 1:
        raise HypothesisViolationError("at least one added square is required")
    record = chain_cycle_dual(params)
    if not record.pattern_valid:
        raise HypothesisViolationError(
            "base weights do not factor through the (m2, m3) pattern"
        )
    if not record.dual_u_pattern:
        raise HypothesisViolationError(
            "reduced dual orders do not follow the (m2, m3) pattern"
        )
    if record.b3 != 0:
        raise HypothesisViolationError(
            f"b3 = {record.b3}: the dual is not a rational homology sphere"
        )
    g2 = g2_perturbation(record, squares)
    ws = solve_weights(g2)
    data = uv(ws)
    divisor = alexander_divisor(data)
    betti = betti_from_divisor(divisor)
    torsion = orlik_torsion(data, ws.dim).nontrivial
    profile = HomologyProfile(
        betti=betti,
        torsion=torsion,
        milnor=milnor_number(ws),
        delta_1=delta_at_1(divisor),
        delta_minus1=delta_at_minus1(divisor),
    )
    link_dim = 2 * ws.dim - 1
    sf = suspension_form(g2, ws)
    report = obstruction_report(sf, ws, profile, link_dim)

    m2, m3 = record.m2, record.m3
    expected_cone = (1 + squares) // 2 + 1
    if report.cone_dim != expected_cone:
        raise ClosedFormMismatchError(
            f"cone dimension {report.cone_dim} differs from {expected_cone}"
        )
    if not (report.bvc.applicable and report.bvc.holds):
        raise ClosedFormMismatchError(
            f"no-extremal inequality fails: scaled value {report.bvc.lhs_scaled}"
        )
    if squares % 2 == 1:
        if m3 % 2 == 1:
            ok = (
                betti == 0
                and profile.delta_1 in (1, -1)
                and profile.delta_minus1 == m3
            )
            if not ok:
                raise ClosedFormMismatchError(
                    f"odd-m3 suspension is not a homotopy sphere with Delta(-1) = {m3}: "
                    f"{profile}"
                )
        else:
            if betti != 1 or torsion:
                raise ClosedFormMismatchError(
                    f"even-m3 suspension should have b = 1 and no torsion: {profile}"
                )
            if squares == 1 and profile.delta_minus1 != -m2 * m3:
                raise ClosedFormMismatchError(
                    f"Delta(-1) = {profile.delta_minus1} differs from -m2 m3 = {-m2 * m3}"
                )
    else:
        if betti != 0:
            raise ClosedFormMismatchError(
                f"even suspension count should keep b = 0: {profile}"
            )
    return SphereFamilyVerdict(
        record=record,
        squares=squares,
        polynomial=g2,
        ws=ws,
        divisor=divisor,
        profile=profile,
        report=report,
        link_dim=link_dim,
    )


# --- named parameter families -------------------------------------------------


def obstructed_double_tail_params(k: int) -> tuple[int, int, int]:
    """k-family (6k+1, 2k-1, 2k+1); valid and obstructed for k >= 2."""
    _require(k >= 2, f"k = {k} must be >= 2")
    return (6 * k + 1, 2 * k - 1, 2 * k + 1)


def obstructed_single_tail_params(k: int) -> tuple[int, int, int]:
    """k-family (2k-1, 2k+1, 4k); valid and obstructed for k >= 2."""
    _require(k >= 2, f"k = {k} must be >= 2")
    return (2 * k - 1, 2 * k + 1, 4 * k)


def prime_power_double_tail_params(
    p: int, q: int, r: int, k: int = 1
) -> tuple[int, int, int]:
    """Prime family (p^k, q^k, r^k) with q >= 5, r >= 2, p > r q."""
    _require(k >= 1, f"k = {k} must be >= 1")
    for value in (p, q, r):
        _require(
            value >= 2 and all(value % m for m in range(2, int(math.isqrt(value)) + 1)),
            f"{value} must be prime",
        )
    _require(len({p, q, r}) == 3, f"primes {p}, {q}, {r} must be distinct")
    _require(q >= 5, f"q = {q} must be at least 5")
    _require(r >= 2, f"r = {r} must be at least 2")
    _require(p > r * q, f"p = {p} must exceed r q = {r * q}")
    return (p ** k, q ** k, r ** k)


def iter_double_tail_params(max_exponent: int):
    """All valid (a0, a1, a3) with entries up to max_exponent."""
    for a0 in range(3, max_exponent + 1, 2):
        for a1 in range(2, max_exponent + 1):
            if math.gcd(a0, a1) != 1:
                continue
            for a3 in range(2, max_exponent + 1):
                if math.gcd(a0, a3) == 1 and math.gcd(a1, a3) == 1:
                    yield (a0, a1, a3)


def iter_single_tail_params(max_exponent: int):
    """All valid (a1, a2, a3) with entries up to max_exponent."""
    for a1 in range(3, max_exponent + 1, 2):
        for a2 in range(3, max_exponent + 1, 2):
            if math.gcd(a1, a2) != 1:
                continue
            for a3 in range(2, max_exponent + 1):
                if math.gcd(a1, a3) == 1 and math.gcd(a2, a3) == 1:
                    yield (a1, a2, a3)


def double_tail_obstruction_fast(a0: int, a1: int, a3: int) -> tuple[bool, bool]:
    """(Einstein obstruction on the base, extremal obstruction on the dual).

    Integer-only closed forms; equivalent to running the full pipeline,
    used for wide parameter sweeps.
    """
    w, d = double_tail_base_raw(a0, a1, a3)
    lich = sum(w) - d > 4 * min(w)
    dw = (2 * w[0], w[1], d, w[3], d)
    bvc = 2 * (2 * w[0] + w[1] + w[3]) - 8 * min(dw) >= 0
    return lich, bvc


def single_tail_obstruction_fast(a1: int, a2: int, a3: int) -> tuple[bool, bool]:
    """Same fast pair for the single-tail shape."""
    w, d = single_tail_base_raw(a1, a2, a3)
    lich = sum(w) - d > 4 * min(w)
    dw = (d, 2 * w[1], 2 * w[2], w[3], d)
    bvc = 2 * (2 * w[1] + 2 * w[2] + w[3]) - 8 * min(dw) >= 0
    return lich, bvc
