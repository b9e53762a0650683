"""The exponent-matrix transpose of an invertible polynomial.

Transposing A swaps the roles of monomials and variables and is an
involution on invertible polynomials.  Fermat blocks are fixed, chains
reverse head-to-tail, and cycles reverse direction.  The dual weight
system is the weight system of the transposed matrix.

For the two-chain shape

    f = z0^a0 + z0 z1^2 + z2^a2 + z2 z3^a3 + z3 z4^2

the dual weights admit a closed form, implemented here as a cross-check
against the generic solver.
"""

from __future__ import annotations

from .errors import NonPositiveWeightError, PatternMismatchError
from .poly import InvertiblePolynomial
from .weights import WeightSystem, solve_weights


def bh_transpose(p: InvertiblePolynomial) -> InvertiblePolynomial:
    """Polynomial with the transposed exponent matrix; an involution."""
    n = p.n_vars
    rows = tuple(tuple(p.matrix[r][c] for r in range(n)) for c in range(n))
    return InvertiblePolynomial(rows, p.var_names)


def dual_weights(p: InvertiblePolynomial) -> WeightSystem:
    """Primitive weight system of the transposed matrix."""
    return solve_weights(bh_transpose(p))


def chain_chain_dual_closed_form(
    a0: int, a2: int, a3: int, base_ws: WeightSystem
) -> WeightSystem:
    """Closed-form dual weights of the two-chain family, primitive.

    base_ws must solve f = z0^a0 + z0 z1^2 + z2^a2 + z2 z3^a3 + z3 z4^2.
    The raw dual solution is

        (w0(d-w2), d(d-w2), w2(2d-2w2-w3), d w3, d(d-w2); 2d(d-w2))

    which is then reduced to primitive form.  Raises PatternMismatchError
    when base_ws does not satisfy the five defining equations.
    """
    if base_ws.n_vars != 5:
        raise PatternMismatchError("two-chain shape needs 5 weights")
    w0, w1, w2, w3, w4 = base_ws.weights
    d = base_ws.degree
    checks = (
        a0 * w0 == d,
        w0 + 2 * w1 == d,
        a2 * w2 == d,
        w2 + a3 * w3 == d,
        w3 + 2 * w4 == d,
    )
    if not all(checks):
        raise PatternMismatchError(
            f"weights {base_ws.weights};{d} do not solve the two-chain shape "
            f"with exponents ({a0}, {a2}, {a3})"
        )
    if w2 >= d:
        raise NonPositiveWeightError("degenerate closed form: w2 >= d")
    raw = (
        w0 * (d - w2),
        d * (d - w2),
        w2 * (2 * d - 2 * w2 - w3),
        d * w3,
        d * (d - w2),
    )
    return WeightSystem.from_raw(raw, 2 * d * (d - w2))
