"""Invertible weighted-homogeneous polynomials as exponent matrices.

A polynomial f = sum of n+1 coefficient-1 monomials in n+1 variables is stored
as its square exponent matrix A: row i holds the exponents of monomial i,
column j belongs to variable j.  f is *invertible* when det(A) != 0; it then
admits a unique positive rational weight system (see weights.py).

The polynomials of interest split, after renaming variables, into a direct sum
of three atomic shapes:

    Fermat   z^a                                   (a >= 2)
    chain    z1^a1 + z1 z2^a2 + ... + z_{m-1} z_m^a_m    (a1 >= 2, a_i >= 1)
    cycle    z1^a1 z2 + z2^a2 z3 + ... + z_m^a_m z1      (m >= 2, a_i >= 1)

For even-length cycles the two alternating exponent classes must not be
identically 1; such cycles never cut out an isolated singularity and are
rejected.  decompose() recovers the block structure or fails loudly.

Text grammar (whitespace ignored, '*' optional between factors):

    poly   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := var ('^' uint)?
    var    := [A-Za-z][A-Za-z0-9]*

Canonical variable names are z0..zN.  Inputs written in z<k> style keep their
indices (columns sorted by index); any other naming, e.g. x, y, z, is mapped
to z0..zN in order of first appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CoefficientNotOneError,
    CycleParityViolationError,
    ExponentBoundError,
    NotAtomicSumError,
    NotSquareError,
    ParseError,
    ZeroDeterminantError,
)

EXPONENT_BOUND = 10**6

_TOKEN = re.compile(r"\s*(?:(?P<var>[A-Za-z][A-Za-z0-9]*)|(?P<int>\d+)|(?P<op>[+*^]))")
_CANONICAL = re.compile(r"^z(\d+)$")


def _bareiss_determinant(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class InvertiblePolynomial:
    """Square exponent matrix plus variable names, monomials in source order."""

    matrix: tuple[tuple[int, ...], ...]
    var_names: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.var_names)
        if len(self.matrix) != n:
            raise NotSquareError(
                f"{len(self.matrix)} monomials but {n} variables"
            )
        for row in self.matrix:
            if len(row) != n:
                raise NotSquareError("ragged exponent matrix")
            for e in row:
                if e < 0:
                    raise ExponentBoundError("negative exponent")
                if e > EXPONENT_BOUND:
                    raise ExponentBoundError(f"exponent {e} exceeds {EXPONENT_BOUND}")
        if self.determinant == 0:
            raise ZeroDeterminantError("exponent matrix is singular")

    @cached_property
    def determinant(self) -> int:
        return _bareiss_determinant(self.matrix)

    @property
    def n_vars(self) -> int:
        return len(self.var_names)

    @property
    def dim(self) -> int:
        """Ambient index n for a polynomial in n+1 variables."""
        return self.n_vars - 1

    @property
    def link_dim(self) -> int:
        """Real dimension 2n-1 of the link cut out on the unit sphere."""
        return 2 * self.dim - 1

    @classmethod
    def from_matrix(
        cls, rows, var_names: tuple[str, ...] | None = None
    ) -> "InvertiblePolynomial":
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        if var_names is None:
            width = len(rows[0]) if rows else 0
            var_names = tuple(f"z{j}" for j in range(width))
        return cls(rows, tuple(var_names))

    def to_text(self) -> str:
        """Canonical text: factors in column order, '*' separators, '^' powers."""
        terms = []
        for row in self.matrix:
            factors = []
            for name, e in zip(self.var_names, row):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                factors.append("1")  # all-zero row; never survives validation
            terms.append("*".join(factors))
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.to_text()


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            tail = text[pos:].lstrip()
            if not tail:
                break
            raise ParseError(f"bad token at {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.lastgroup == "var":
            out.append(("var", m.group("var")))
        elif m.lastgroup == "int":
            out.append(("int", m.group("int")))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_polynomial(text: str) -> InvertiblePolynomial:
    """Parse polynomial text into a validated InvertiblePolynomial.

    Raises ParseError / CoefficientNotOneError on bad syntax, NotSquareError
    when monomial and variable counts differ, ZeroDeterminantError for a
    singular exponent matrix and ExponentBoundError above the exponent cap.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")

    monomials: list[dict[str, int]] = []
    order: list[str] = []
    i = 0

    def parse_factor(mono: dict[str, int]) -> None:
        nonlocal i
        kind, val = tokens[i]
        if kind == "int":
            raise CoefficientNotOneError(
                f"numeric coefficient {val!r}; only coefficient-1 monomials are supported"
            )
        if kind != "var":
            raise ParseError(f"expected a variable, got {val!r}")
        name = val
        i += 1
        exp = 1
        if i < len(tokens) and tokens[i] == ("op", "^"):
            i += 1
            if i >= len(tokens) or tokens[i][0] != "int":
                raise ParseError("expected an integer exponent after '^'")
            exp = int(tokens[i][1])
            if exp > EXPONENT_BOUND:
                raise ExponentBoundError(f"exponent {exp} exceeds {EXPONENT_BOUND}")
            i += 1
        if name not in order:
            order.append(name)
        mono[name] = mono.get(name, 0) + exp

    def parse_term() -> None:
        nonlocal i
        mono: dict[str, int] = {}
        parse_factor(mono)
        while i < len(tokens):
            if tokens[i] == ("op", "+"):
                break
            if tokens[i] == ("op", "*"):
                i += 1
                if i >= len(tokens):
                    raise ParseError("dangling '*'")
            parse_factor(mono)
        monomials.append(mono)

    parse_term()
    while i < len(tokens):
        if tokens[i] != ("op", "+"):
            raise ParseError(f"expected '+', got {tokens[i][1]!r}")
        i += 1
        if i >= len(tokens):
            raise ParseError("dangling '+'")
        parse_term()

    # column order: z<k> inputs sort by index, anything else maps to z0..zN
    # in order of first appearance.
    indices = [_CANONICAL.match(name) for name in order]
    if all(m is not None for m in indices) and len(
        {int(m.group(1)) for m in indices if m is not None}
    ) == len(order):
        names = sorted(order, key=lambda s: int(s[1:]))
        rename = {n: n for n in names}
    else:
        names = [f"z{j}" for j in range(len(order))]
        rename = {orig: new for orig, new in zip(order, names)}

    col = {name: j for j, name in enumerate(names)}
    rows = []
    for mono in monomials:
        row = [0] * len(order)
        for name, e in mono.items():
            row[col[rename[name]]] = e
        rows.append(tuple(row))
    return InvertiblePolynomial(tuple(rows), tuple(names))


# ---------------------------------------------------------------------------
# atomic decomposition


@dataclass(frozen=True)
class Block:
    """One atomic summand.

    kind is "fermat", "chain" or "cycle".  variables holds column indices:
    chains are listed head first, cycles start at their smallest variable and
    run toward the smaller of its two neighbours.  exponents[i] is the
    exponent of variables[i] in its own monomial.
    """

    kind: str
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def determinant(self) -> int:
        if self.kind == "cycle":
            prod = 1
            for a in self.exponents:
                prod *= a
            return prod + (-1) ** (len(self.exponents) + 1)
        prod = 1
        for a in self.exponents:
            prod *= a
        return prod


@dataclass(frozen=True)
class AtomicDecomposition:
    blocks: tuple[Block, ...]

    @property
    def determinant_product(self) -> int:
        prod = 1
        for b in self.blocks:
            prod *= b.determinant
        return prod


def _classify_component(
    variables: list[int],
    comp_rows: list[int],
    matrix: tuple[tuple[int, ...], ...],
) -> Block:
    m = len(variables)
    if len(comp_rows) != m:
        raise NotAtomicSumError(
            f"component on variables {variables} has {len(comp_rows)} monomials"
        )
    loops = []     # (var, row, exponent)
    edges = []     # (row, var_a, var_b)
    for r in comp_rows:
        sup = [j for j in variables if matrix[r][j] > 0]
        if len(sup) == 1:
            loops.append((sup[0], r, matrix[r][sup[0]]))
        else:
            edges.append((r, sup[0], sup[1]))

    if m == 1:
        var, _, a = loops[0]
        if a < 2:
            raise NotAtomicSumError(f"linear monomial in variable index {var}")
        return Block("fermat", (var,), (a,))

    if len(loops) == 1:
        head, head_row, a_head = loops[0]
        if a_head < 2:
            raise NotAtomicSumError(f"chain head exponent {a_head} < 2")
        touching: dict[int, list[tuple[int, int, int]]] = {v: [] for v in variables}
        for r, a, b in edges:
            touching[a].append((r, a, b))
            touching[b].append((r, a, b))
        seq = [head]
        exps = [a_head]
        used: set[int] = set()
        current = head
        while len(seq) < m:
            candidates = [e for e in touching[current] if e[0] not in used]
            if len(candidates) != 1:
                raise NotAtomicSumError("branching coupling graph")
            r, a, b = candidates[0]
            nxt = b if a == current else a
            if matrix[r][current] != 1:
                raise NotAtomicSumError(
                    f"chain coupling monomial not linear in variable index {current}"
                )
            seq.append(nxt)
            exps.append(matrix[r][nxt])
            used.add(r)
            current = nxt
        if len(used) != len(edges):
            raise NotAtomicSumError("unused coupling monomial in chain component")
        return Block("chain", tuple(seq), tuple(exps))

    if loops:
        raise NotAtomicSumError("two pure powers in one coupled component")

    # no loops: must be a single cycle through all m variables
    if m == 2:
        (r1, a, b), (r2, _, _) = edges
        v0, v1 = sorted((a, b))
        for own0, own1 in ((r1, r2), (r2, r1)):
            if matrix[own0][v1] == 1 and matrix[own1][v0] == 1:
                exps = (matrix[own0][v0], matrix[own1][v1])
                if 1 in exps:
                    raise CycleParityViolationError(
                        "even cycle with an alternating all-ones exponent class"
                    )
                return Block("cycle", (v0, v1), exps)
        raise NotAtomicSumError("two-variable component is not a cycle")

    neighbours: dict[int, list[tuple[int, int]]] = {v: [] for v in variables}
    for r, a, b in edges:
        neighbours[a].append((b, r))
        neighbours[b].append((a, r))
    if any(len(v) != 2 for v in neighbours.values()):
        raise NotAtomicSumError("coupling graph is not a single cycle")

    start = min(variables)
    second = min(nb for nb, _ in neighbours[start])
    seq = [start, second]
    while len(seq) < m:
        prev, cur = seq[-2], seq[-1]
        nxt = next(nb for nb, _ in neighbours[cur] if nb != prev)
        seq.append(nxt)
    if sorted(seq) != sorted(variables):
        raise NotAtomicSumError("coupling graph is disconnected within component")

    row_of: dict[frozenset[int], int] = {
        frozenset((a, b)): r for r, a, b in edges
    }

    # The listing is fixed; each variable owns exactly one incident monomial
    # (linear in the other variable), and ownership runs one way around the
    # cycle.  Try both rotational directions against the fixed listing.
    def orient(forward: bool) -> tuple[int, ...] | None:
        exps = []
        for idx, v in enumerate(seq):
            other = seq[(idx + 1) % m] if forward else seq[(idx - 1) % m]
            r = row_of[frozenset((v, other))]
            if matrix[r][other] != 1:
                return None
            exps.append(matrix[r][v])
        return tuple(exps)

    exps = orient(True)
    if exps is None:
        exps = orient(False)
        if exps is None:
            raise NotAtomicSumError("cycle monomials are not linear in their neighbour")

    if m % 2 == 0:
        if all(a == 1 for a in exps[0::2]) or all(a == 1 for a in exps[1::2]):
            raise CycleParityViolationError(
                "even cycle with an alternating all-ones exponent class"
            )
    return Block("cycle", tuple(seq), exps)


def decompose(p: InvertiblePolynomial) -> AtomicDecomposition:
    """Split p into Fermat/chain/cycle blocks, or raise NotAtomicSumError.

    The block list is sorted by smallest variable index.  The multiset of
    positive matrix entries is preserved and the product of the block
    determinants equals det(A) up to sign.
    """
    n = p.n_vars
    supports = []
    for r, row in enumerate(p.matrix):
        sup = tuple(j for j, e in enumerate(row) if e > 0)
        if len(sup) == 0:
            raise NotAtomicSumError(f"monomial {r} is constant")
        if len(sup) > 2:
            raise NotAtomicSumError(
                f"monomial {r} involves {len(sup)} variables; atomic types allow at most 2"
            )
        supports.append(sup)

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sup in supports:
        ra, rb = find(sup[0]), find(sup[-1])
        if ra != rb:
            parent[ra] = rb

    comp_vars: dict[int, list[int]] = {}
    for j in range(n):
        comp_vars.setdefault(find(j), []).append(j)
    comp_rows: dict[int, list[int]] = {root: [] for root in comp_vars}
    for r, sup in enumerate(supports):
        comp_rows[find(sup[0])].append(r)

    blocks = [
        _classify_component(comp_vars[root], comp_rows[root], p.matrix)
        for root in comp_vars
    ]
    blocks.sort(key=lambda b: min(b.variables))
    return AtomicDecomposition(tuple(blocks))


def is_atomic(p: InvertiblePolynomial) -> bool:
    try:
        decompose(p)
    except NotAtomicSumError:
        return False
    return True
