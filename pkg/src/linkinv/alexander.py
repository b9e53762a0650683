"""Divisor calculus for the Alexander polynomial of a weighted link.

Write Lam(n) for the divisor of t^n - 1.  These symbols multiply by

    Lam(a) Lam(b) = gcd(a,b) Lam(lcm(a,b)),     Lam(1) = identity,

and the Alexander polynomial of the link with weight data (w; d) has

    div Delta = prod_i ( Lam(u_i)/v_i - Lam(1) ),
    u_i = d/gcd(d, w_i),   v_i = w_i/gcd(d, w_i).

The expanded product always has integer coefficients c_n; the middle
Betti number is sum c_n, the Milnor number is sum n c_n = prod (d-w_i)/w_i,
and Delta(1), Delta(-1) have closed-form evaluations below.  A dense
expansion oracle multiplies the actual integer polynomials
prod (t^n - 1)^{c_n} to validate every closed form by brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegreeCapError,
    NonIntegralDivisorError,
    NonIntegralEvaluationError,
    PatternMismatchError,
    WeightExceedsDegreeError,
)
from .weights import M2M3Split, WeightSystem

DEGREE_CAP_DEFAULT = 250_000


@dataclass(frozen=True)
class UVData:
    """Reduced order/multiplicity data u_i = d/gcd(d,w_i), v_i = w_i/gcd(d,w_i)."""

    u: tuple[int, ...]
    v: tuple[int, ...]


def uv(ws: WeightSystem) -> UVData:
    us = []
    vs = []
    for w in ws.weights:
        g = math.gcd(ws.degree, w)
        us.append(ws.degree // g)
        vs.append(w // g)
    return UVData(tuple(us), tuple(vs))


class CyclotomicDivisor:
    """Sparse rational combination of Lam(n) symbols.

    Immutable by convention: all arithmetic returns new instances.  Zero
    coefficients are dropped on construction, so equality is structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None) -> None:
        clean: dict[int, Fraction] = {}
        if coeffs:
            for n, c in coeffs.items():
                if n < 1:
                    raise ValueError(f"Lam order {n} must be >= 1")
                c = Fraction(c)
                if c != 0:
                    clean[int(n)] = c
        object.__setattr__(self, "_c", clean)

    @classmethod
    def lam(cls, n: int, coeff=1) -> "CyclotomicDivisor":
        return cls({n: Fraction(coeff)})

    @classmethod
    def identity(cls) -> "CyclotomicDivisor":
        return cls.lam(1)

    @classmethod
    def zero(cls) -> "CyclotomicDivisor":
        return cls()

    def coeff(self, n: int) -> Fraction:
        return self._c.get(n, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._c.items())

    def orders(self) -> list[int]:
        return sorted(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicDivisor):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "CyclotomicDivisor") -> "CyclotomicDivisor":
        out = dict(self._c)
        for n, c in other._c.items():
            out[n] = out.get(n, Fraction(0)) + c
        return CyclotomicDivisor(out)

    def __sub__(self, other: "CyclotomicDivisor") -> "CyclotomicDivisor":
        return self + (-1) * other

    def __neg__(self) -> "CyclotomicDivisor":
        return (-1) * self

    def __rmul__(self, scalar) -> "CyclotomicDivisor":
        s = Fraction(scalar)
        return CyclotomicDivisor({n: s * c for n, c in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, CyclotomicDivisor):
            return CyclotomicDivisor.__rmul__(self, other)
        out: dict[int, Fraction] = {}
        for a, ca in self._c.items():
            for b, cb in other._c.items():
                key = math.lcm(a, b)
                out[key] = out.get(key, Fraction(0)) + ca * cb * math.gcd(a, b)
        return CyclotomicDivisor(out)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c.values())

    def int_coeffs(self) -> dict[int, int]:
        if not self.is_integral:
            raise NonIntegralDivisorError(f"non-integer coefficients in {self!r}")
        return {n: int(c) for n, c in sorted(self._c.items())}

    def total(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def weighted_total(self) -> Fraction:
        return sum((n * c for n, c in self._c.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for n, c in sorted(self._c.items(), reverse=True):
            mag = abs(c)
            body = f"L({n})" if mag == 1 else f"{mag}*L({n})"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def lambda_mul(a: int, b: int) -> CyclotomicDivisor:
    """The defining relation Lam(a) Lam(b) = gcd(a,b) Lam(lcm(a,b))."""
    if a < 1 or b < 1:
        raise ValueError("Lam orders must be >= 1")
    return CyclotomicDivisor.lam(math.lcm(a, b), math.gcd(a, b))


def alexander_divisor(data: UVData) -> CyclotomicDivisor:
    """Expand prod_i (Lam(u_i)/v_i - Lam(1)) and assert integrality."""
    prod = CyclotomicDivisor.identity()
    one = CyclotomicDivisor.identity()
    for u_i, v_i in zip(data.u, data.v):
        factor = CyclotomicDivisor.lam(u_i, Fraction(1, v_i)) - one
        prod = prod * factor
    if not prod.is_integral:
        raise NonIntegralDivisorError(
            f"divisor of u={data.u}, v={data.v} is not integral: {prod!r}"
        )
    return prod


def betti_from_divisor(dv: CyclotomicDivisor) -> int:
    """Middle Betti number: the coefficient sum of the divisor."""
    total = dv.total()
    if total.denominator != 1:
        raise NonIntegralDivisorError("divisor with fractional coefficient sum")
    return int(total)


def betti_subset_formula(data: UVData, n: int) -> int:
    """Middle Betti number by the alternating sum over index subsets.

    Every subset S of {0..n} contributes
    (-1)^(n+1-|S|) prod(u_i) / (prod(v_i) lcm(u_i)), the empty subset
    contributing (-1)^(n+1).  Independent of the divisor expansion.
    """
    m = n + 1
    if len(data.u) != m:
        raise ValueError(f"uv data has {len(data.u)} entries, expected {m}")
    total = Fraction(0)
    for mask in range(1 << m):
        num = 1
        den = 1
        lcm_u = 1
        size = 0
        for i in range(m):
            if mask >> i & 1:
                num *= data.u[i]
                den *= data.v[i]
                lcm_u = math.lcm(lcm_u, data.u[i])
                size += 1
        term = Fraction(num, den * lcm_u)
        total += term if (m - size) % 2 == 0 else -term
    if total.denominator != 1:
        raise NonIntegralEvaluationError(f"subset sum {total} is not an integer")
    return int(total)


def delta_at_1(dv: CyclotomicDivisor) -> int | None:
    """Delta(1) from the divisor: 0 if the coefficient sum is positive,
    None (pole) if negative, else the integer prod n^{c_n}."""
    coeffs = dv.int_coeffs()
    total = sum(coeffs.values())
    if total > 0:
        return 0
    if total < 0:
        return None
    value = Fraction(1)
    for n, c in coeffs.items():
        value *= Fraction(n) ** c
    if value.denominator != 1:
        raise NonIntegralEvaluationError(f"Delta(1) = {value} is not an integer")
    return int(value)


def delta_at_minus1(dv: CyclotomicDivisor) -> int | None:
    """Delta(-1) from the divisor.

    Zeros at t = -1 come only from even orders: with E the sum of the
    even-order coefficients, the value is 0 when E > 0, undefined (None)
    when E < 0, and otherwise prod_odd(-2)^{c_n} prod_even(-n)^{c_n}.
    """
    coeffs = dv.int_coeffs()
    even_total = sum(c for n, c in coeffs.items() if n % 2 == 0)
    if even_total > 0:
        return 0
    if even_total < 0:
        return None
    value = Fraction(1)
    for n, c in coeffs.items():
        base = -2 if n % 2 else -n
        value *= Fraction(base) ** c
    if value.denominator != 1:
        raise NonIntegralEvaluationError(f"Delta(-1) = {value} is not an integer")
    return int(value)


def milnor_number(ws: WeightSystem) -> int:
    """mu = prod (d - w_i)/w_i, asserted integral."""
    for w in ws.weights:
        if w >= ws.degree:
            raise WeightExceedsDegreeError(
                f"weight {w} >= degree {ws.degree}: no isolated Milnor data"
            )
    value = Fraction(1)
    for w in ws.weights:
        value *= Fraction(ws.degree - w, w)
    if value.denominator != 1:
        raise NonIntegralEvaluationError(f"Milnor product {value} is not an integer")
    return int(value)


def _mul_cyclo(poly: list[int], order: int) -> list[int]:
    """Multiply a dense coefficient list by (t^order - 1)."""
    out = [-c for c in poly] + [0] * order
    for j, c in enumerate(poly):
        out[j + order] += c
    return out


def _div_cyclo(poly: list[int], order: int) -> list[int]:
    """Exactly divide a dense coefficient list by (t^order - 1)."""
    m = len(poly) - 1
    if m < order:
        raise NonIntegralDivisorError(f"cannot divide degree {m} by t^{order} - 1")
    q = [0] * (m - order + 1)
    for j in range(m, order - 1, -1):
        q[j - order] = poly[j] + (q[j] if j <= m - order else 0)
    for j in range(order):
        if poly[j] != -(q[j] if j <= m - order else 0):
            raise NonIntegralDivisorError(f"inexact division by t^{order} - 1")
    return q


def expand_delta(
    dv: CyclotomicDivisor, max_degree: int = DEGREE_CAP_DEFAULT
) -> list[int]:
    """Brute-force Delta(t) as a dense integer coefficient list.

    Multiplies out (t^n - 1)^{c_n} for positive c_n, then divides exactly
    for negative c_n.  The intermediate degree (the positive part) is
    capped by max_degree.  The result is monic of degree sum n c_n.
    """
    coeffs = dv.int_coeffs()
    pos_degree = sum(n * c for n, c in coeffs.items() if c > 0)
    if pos_degree > max_degree:
        raise DegreeCapError(
            f"expansion degree {pos_degree} exceeds the cap {max_degree}"
        )
    poly = [1]
    for n, c in sorted(coeffs.items()):
        for _ in range(c):
            poly = _mul_cyclo(poly, n)
    for n, c in sorted(coeffs.items()):
        for _ in range(-c):
            poly = _div_cyclo(poly, n)
    return poly


def poly_eval(poly: list[int], at: int) -> int:
    value = 0
    for c in reversed(poly):
        value = value * at + c
    return value


@dataclass(frozen=True)
class StructuredDivisor:
    """The two-factor normal form alpha*beta Lam(d) + beta Lam(m3) - alpha Lam(m2) - Lam(1)."""

    alpha: int
    beta: int
    divisor: CyclotomicDivisor

    @property
    def is_rational_homology_sphere(self) -> bool:
        return self.beta == 1


def structured_divisor_check(split: M2M3Split) -> StructuredDivisor:
    """Evaluate the split divisor in closed form and verify it.

    For weights (m3 v_a, m3 v_b on the pair; m2 v_c, m2 v_d, m2 v_e on the
    triple) the product collapses to

        alpha beta Lam(d) + beta Lam(m3) - alpha Lam(m2) - Lam(1)

    with alpha = m2/(v_a v_b) - 1/v_a - 1/v_b and beta the symmetric
    triple expression; both must be positive integers, and the result must
    equal the generic divisor expansion.  The coefficient sum is
    (alpha+1)(beta-1), so beta = 1 detects the rational homology spheres.
    """
    pair = split.m3_weight_indices
    triple = split.m2_weight_indices
    va, vb = (Fraction(split.v[i]) for i in pair)
    vc, vd, ve = (Fraction(split.v[i]) for i in triple)
    alpha = Fraction(split.m2) / (va * vb) - 1 / va - 1 / vb
    beta = (
        Fraction(split.m3 ** 2) / (vc * vd * ve)
        - split.m3 * (1 / (vc * vd) + 1 / (vd * ve) + 1 / (ve * vc))
        + 1 / vc + 1 / vd + 1 / ve
    )
    if alpha.denominator != 1 or beta.denominator != 1 or alpha <= 0 or beta <= 0:
        raise NonIntegralEvaluationError(
            f"split evaluation alpha={alpha}, beta={beta} is not positive integral"
        )
    a, b = int(alpha), int(beta)
    divisor = (
        CyclotomicDivisor.lam(split.degree, a * b)
        + CyclotomicDivisor.lam(split.m3, b)
        - CyclotomicDivisor.lam(split.m2, a)
        - CyclotomicDivisor.identity()
    )
    weights = tuple(
        split.m3 * split.v[i] if i in pair else split.m2 * split.v[i]
        for i in range(5)
    )
    generic = alexander_divisor(uv(WeightSystem(weights, split.degree)))
    if divisor != generic:
        raise PatternMismatchError(
            f"structured divisor {divisor!r} disagrees with the expansion {generic!r}"
        )
    return StructuredDivisor(a, b, divisor)


@dataclass(frozen=True)
class HomologyProfile:
    """Middle-homology summary of a link."""

    betti: int
    torsion: tuple[int, ...]
    milnor: int
    delta_1: int | None
    delta_minus1: int | None
