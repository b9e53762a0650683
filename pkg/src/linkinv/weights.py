"""Weight systems of invertible polynomials and their structural tests.

A polynomial with exponent matrix A is weighted homogeneous for positive
integer weights w_0..w_n and degree d exactly when A.w = (d,...,d).  Since
det(A) != 0 the rational solution of A.x = (1,...,1) is unique; clearing
denominators and dividing by the joint gcd yields the canonical primitive
weight system.  The index I = w_0 + ... + w_n - d measures the deviation
from Calabi-Yau-like balance and drives the curvature obstructions.

Structural tests provided here:

  * well_formed: no n of the n+1 weights share a common factor;
  * suspension_form: f = f'(z_0..z_k) + squares, with small core weights;
  * m2m3_split: weights factor through a coprime pair m2*m3 = d, two
    weights carrying the m3 factor and three carrying m2 (either order);
  * one_dim_cone_test: at most one weight with 2w_i >= d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonCoprimeError,
    NonPositiveWeightError,
    NonPrimitiveError,
    ZeroDeterminantError,
)
from .poly import InvertiblePolynomial


@dataclass(frozen=True)
class WeightSystem:
    """Primitive positive integer weights w_0..w_n with degree d."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        if not self.weights:
            raise NonPositiveWeightError("empty weight vector")
        if self.degree <= 0:
            raise NonPositiveWeightError(f"degree {self.degree} is not positive")
        for w in self.weights:
            if w <= 0:
                raise NonPositiveWeightError(f"weight {w} is not positive")
        if math.gcd(*self.weights, self.degree) != 1:
            raise NonPrimitiveError(
                f"gcd of {self.weights} and degree {self.degree} exceeds 1"
            )

    @property
    def n_vars(self) -> int:
        return len(self.weights)

    @property
    def dim(self) -> int:
        """Ambient index n for n+1 weights."""
        return len(self.weights) - 1

    @property
    def index(self) -> int:
        """I = |w| - d; positive index feeds the curvature obstructions."""
        return sum(self.weights) - self.degree

    @property
    def min_weight(self) -> int:
        return min(self.weights)

    @classmethod
    def from_raw(cls, weights, degree: int) -> "WeightSystem":
        """Normalize an arbitrary positive integer solution to primitive form."""
        ws = tuple(int(w) for w in weights)
        d = int(degree)
        if d <= 0 or any(w <= 0 for w in ws):
            raise NonPositiveWeightError(f"non-positive entry in {ws} ; {d}")
        g = math.gcd(*ws, d)
        return cls(tuple(w // g for w in ws), d // g)

    def proportional(self, weights, degree: int) -> bool:
        """True when (weights; degree) is a positive multiple of this system."""
        ws = tuple(weights)
        if len(ws) != len(self.weights) or degree <= 0:
            return False
        return all(w * degree == raw * self.degree for w, raw in zip(self.weights, ws))


def solve_weights(p: InvertiblePolynomial) -> WeightSystem:
    """Unique primitive positive solution of A.w = d.(1,...,1).

    Solves A.x = (1,...,1) by exact fraction elimination, then clears
    denominators.  Raises NonPositiveWeightError when some solved weight
    is not positive (the matrix is invertible but not of the kind the
    theory covers).
    """
    n = p.n_vars
    aug = [[Fraction(e) for e in row] + [Fraction(1)] for row in p.matrix]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDeterminantError("singular matrix in weight solve")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    x = [aug[r][n] for r in range(n)]
    if any(q <= 0 for q in x):
        raise NonPositiveWeightError(f"solved weight ratios {x} contain a non-positive entry")
    d = math.lcm(*(q.denominator for q in x))
    ws = WeightSystem.from_raw([q * d for q in x], d)
    for row in p.matrix:
        if sum(e * w for e, w in zip(row, ws.weights)) != ws.degree:
            raise ZeroDeterminantError("weight solve verification failed")
    return ws


def well_formed(ws: WeightSystem) -> bool:
    """True iff every n of the n+1 weights are jointly coprime."""
    w = ws.weights
    for i in range(len(w)):
        rest = w[:i] + w[i + 1:]
        if math.gcd(*rest) != 1:
            return False
    return True


@dataclass(frozen=True)
class SuspensionForm:
    """f = f'(core variables) + sum of pure squares over quad variables.

    k = |core| - 1 and n = total variables - 1; declared valid only with
    n - k >= 2 (at least two squares) and 2w_i < d on every core weight,
    which forces every quad weight to equal d/2.
    """

    core_indices: tuple[int, ...]
    quad_indices: tuple[int, ...]
    k: int
    n: int


def suspension_form(
    p: InvertiblePolynomial, ws: WeightSystem
) -> SuspensionForm | None:
    """Detect the square-suspension normal form; None when not in form."""
    n1 = p.n_vars
    d = ws.degree
    quad = []
    for i in range(n1):
        touching = [r for r in range(n1) if p.matrix[r][i] > 0]
        if len(touching) != 1:
            continue
        row = p.matrix[touching[0]]
        if row[i] == 2 and all(e == 0 for j, e in enumerate(row) if j != i):
            quad.append(i)
    core = [i for i in range(n1) if i not in quad]
    if len(quad) < 2 or not core:
        return None
    if any(2 * ws.weights[i] >= d for i in core):
        return None
    return SuspensionForm(tuple(core), tuple(quad), len(core) - 1, n1 - 1)


@dataclass(frozen=True)
class M2M3Split:
    """Factorization w_i = m3.v_i on two indices and m2.v_i on three.

    m2 and m3 are coprime with m2*m3 = d.  The cofactors v_i are coprime
    to the complementary factor, so u_i = m2 on the pair carrying m3 and
    u_i = m3 on the triple carrying m2.
    """

    m2: int
    m3: int
    v: tuple[int, ...]
    m3_weight_indices: tuple[int, ...]
    degree: int

    @property
    def m2_weight_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(5) if i not in self.m3_weight_indices)


def _try_split(ws: WeightSystem, pair: tuple[int, int]) -> M2M3Split | None:
    d = ws.degree
    w = ws.weights
    triple = tuple(i for i in range(5) if i not in pair)
    m2 = math.gcd(d, *(w[i] for i in triple))
    if m2 <= 1 or d % m2 != 0:
        return None
    m3 = d // m2
    if math.gcd(m2, m3) != 1:
        raise NonCoprimeError(f"m2={m2} and m3={m3} share a factor")
    v = [0] * 5
    for i in pair:
        if w[i] % m3 != 0:
            return None
        v[i] = w[i] // m3
    for i in triple:
        v[i] = w[i] // m2
    # u-pattern check: the pair must see u = m2, the triple u = m3,
    # with the cofactors as the reduced weights.
    for i in range(5):
        g = math.gcd(d, w[i])
        u_i, mo_v = d // g, w[i] // g
        target = m2 if i in pair else m3
        if u_i != target or mo_v != v[i]:
            return None
    return M2M3Split(m2, m3, tuple(v), pair, d)


def m2m3_split(
    ws: WeightSystem, pattern: str | tuple[int, int] = "auto"
) -> M2M3Split | None:
    """Find the coprime m2/m3 weight factorization, or None.

    pattern "head" puts the m3-carrying pair on indices (0,1), "tail" on
    (3,4); "auto" tries head then tail.  An explicit index pair is also
    accepted.  Raises NonCoprimeError when the factorization exists
    structurally but m2 and m3 share a factor.
    """
    if ws.n_vars != 5:
        return None
    if isinstance(pattern, tuple):
        candidates = [pattern]
    elif pattern == "head":
        candidates = [(0, 1)]
    elif pattern == "tail":
        candidates = [(3, 4)]
    elif pattern == "auto":
        candidates = [(0, 1), (3, 4)]
    else:
        raise ValueError(f"unknown split pattern {pattern!r}")
    error: NonCoprimeError | None = None
    for pair in candidates:
        try:
            split = _try_split(ws, tuple(pair))
        except NonCoprimeError as exc:
            error = exc
            continue
        if split is not None:
            return split
    if error is not None:
        raise error
    return None


def one_dim_cone_test(ws: WeightSystem) -> bool:
    """True iff at most one index satisfies 2w_i >= d."""
    return sum(1 for w in ws.weights if 2 * w >= ws.degree) <= 1
