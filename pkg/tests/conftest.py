"""Shared fixtures: a seeded corpus of random atomic-decomposable polynomials."""

from __future__ import annotations

import random

import pytest

from linkinv.poly import InvertiblePolynomial

CORPUS_SEED = 91
CORPUS_SIZE = 500


def random_atomic(rng: random.Random, n_vars: int) -> InvertiblePolynomial:
    """Random direct sum of Fermat, chain, and cycle blocks.

    All exponents land in [2, 9], which keeps every weight positive and
    stays clear of the even-cycle parity exclusion.
    """
    rows = [[0] * n_vars for _ in range(n_vars)]
    start = 0
    while start < n_vars:
        left = n_vars - start
        kinds = ["fermat"] if left == 1 else ["fermat", "chain", "cycle"]
        kind = rng.choice(kinds)
        if kind == "fermat":
            rows[start][start] = rng.randint(2, 9)
            start += 1
            continue
        size = rng.randint(2, min(4, left))
        idx = list(range(start, start + size))
        if kind == "chain":
            rows[idx[0]][idx[0]] = rng.randint(2, 9)
            for prev, cur in zip(idx, idx[1:]):
                rows[cur][cur] = rng.randint(2, 9)
                rows[cur][prev] = 1
        else:
            for pos, cur in enumerate(idx):
                rows[cur][cur] = rng.randint(2, 9)
                rows[cur][idx[(pos + 1) % size]] = 1
        start += size
    return InvertiblePolynomial.from_matrix(rows)


def build_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[InvertiblePolynomial]:
    rng = random.Random(seed)
    return [random_atomic(rng, rng.randint(3, 7)) for _ in range(size)]


@pytest.fixture(scope="session")
def corpus() -> list[InvertiblePolynomial]:
    return build_corpus()
