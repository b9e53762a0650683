"""Torsion of the middle homology via the inductive gcd algorithm.

From the reduced orders u_0..u_n the algorithm builds, for every proper
subset S of {0..n} (the empty set included), positive integers

    c_S = gcd(u_i : i not in S) / prod_{T strictly contained in S} c_T

and rational k-values

    k_S = eps(n - |S| + 1) * sum_{T subseteq S} (-1)^{|S|-|T|}
          prod(u_T) / (prod(v_T) lcm(u_T)),

where eps(m) = 1 for odd m, 0 for even m, and empty products/lcm are 1.
With r = floor(max k), the torsion factors are d_j = prod_{k_S >= j} c_S
for j = 1..r, and the middle homology torsion is the sum of Z/d_j; the
trailing run of trivial factors is not materialized.  The full index set
never contributes: eps(0) = 0 forces its k to vanish.

The subset sums are exactly the terms of the Betti subset formula, so the
two modules stay consistent: when the Betti number vanishes, the product
of all d_j equals |Delta(1)|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .alexander import UVData
from .errors import NonIntegralCError

__all__ = [
    "TorsionResult",
    "orlik_torsion",
    "torsion_trichotomy_chain_cycle",
    "seven_var_torsion",
]


@dataclass(frozen=True)
class TorsionResult:
    """Torsion factors d_1, d_2, ... with d_{j+1} dividing d_j."""

    d_factors: tuple[int, ...]

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d in self.d_factors if d > 1)

    @property
    def order(self) -> int:
        prod = 1
        for d in self.d_factors:
            prod *= d
        return prod


def orlik_torsion(data: UVData, n: int) -> TorsionResult:
    """Run the inductive algorithm on u/v data for ambient index n."""
    m = n + 1
    if len(data.u) != m:
        raise ValueError(f"uv data has {len(data.u)} entries, expected {m}")
    indices = range(m)

    subsets: list[tuple[int, ...]] = []
    for size in range(m):  # proper subsets only
        subsets.extend(combinations(indices, size))

    c: dict[tuple[int, ...], int] = {}
    k: dict[tuple[int, ...], Fraction] = {}
    for S in subsets:
        inside = set(S)
        outside = [data.u[i] for i in indices if i not in inside]
        g = math.gcd(*outside)
        denom = 1
        for size in range(len(S)):
            for T in combinations(S, size):
                denom *= c[T]
        if g % denom != 0:
            raise NonIntegralCError(
                f"c value for subset {S} is {g}/{denom}, not an integer"
            )
        c[S] = g // denom

        eps = (n - len(S) + 1) % 2
        if eps == 0:
            k[S] = Fraction(0)
            continue
        total = Fraction(0)
        for size in range(len(S) + 1):
            for T in combinations(S, size):
                num = 1
                den = 1
                lcm_u = 1
                for i in T:
                    num *= data.u[i]
                    den *= data.v[i]
                    lcm_u = math.lcm(lcm_u, data.u[i])
                term = Fraction(num, den * lcm_u)
                total += term if (len(S) - size) % 2 == 0 else -term
        k[S] = total

    # d_j can exceed 1 only while some subset with c_S > 1 still clears the
    # threshold j, so the loop stops at the largest such floor(k_S); the
    # remaining factors up to floor(max k) are all trivial and are dropped
    carriers = [(k[S], c[S]) for S in subsets if c[S] > 1]
    cutoff = max((math.floor(kS) for kS, _ in carriers), default=0)
    d_factors = []
    for j in range(1, cutoff + 1):
        prod = 1
        for kS, cS in carriers:
            if kS >= j:
                prod *= cS
        d_factors.append(prod)
    for bigger, smaller in zip(d_factors, d_factors[1:]):
        if bigger % smaller != 0:
            raise NonIntegralCError(
                f"torsion factors {d_factors} break the divisibility chain"
            )
    return TorsionResult(tuple(d_factors))


def torsion_trichotomy_chain_cycle(a1: int, m2: int, m3: int) -> tuple[int, ...]:
    """Middle torsion of the chain-cycle dual, as cyclic factor orders.

    Splits on g = gcd(a1, m3): Z_m3 for g = 1, Z_(m2 m3) for g = 2, and
    Z_(m2 m3) + g-2 copies of Z_m2 for larger g.  Factors equal to 1 are
    dropped.
    """
    g = math.gcd(a1, m3)
    if g == 1:
        factors: tuple[int, ...] = (m3,)
    elif g == 2:
        factors = (m2 * m3,)
    else:
        factors = (m2 * m3,) + (m2,) * (g - 2)
    return tuple(f for f in factors if f > 1)


def seven_var_torsion(a1: int, m2: int, m3: int) -> tuple[int, ...]:
    """Middle torsion after adding two squares to the chain-cycle dual.

    Defined for a1 = 2: the torsion survives suspension unchanged when m3
    is odd (Z_m3) and grows to Z_(m2 m3) when m3 is even.
    """
    if a1 != 2:
        raise ValueError("the two-square torsion rule needs a1 = 2")
    order = m3 if m3 % 2 else m2 * m3
    return (order,) if order > 1 else ()
