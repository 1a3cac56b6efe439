"""Test corpora: regular toric pairs and random refined-block-form instances."""

from __future__ import annotations

import random

from toricwedge import CharacteristicMatrix, SimplicialComplex, simplex_boundary
from toricwedge.simplicial import nerve_of_simple_polytope, polygon


def hirzebruch(k: int) -> tuple[SimplicialComplex, CharacteristicMatrix]:
    # edge vectors e1, e2, -e1 + k e2, -e2 around the square
    return (nerve_of_simple_polytope(polygon(4)),
            CharacteristicMatrix.from_rows([[1, 0, -1, 0], [0, 1, k, -1]]))


def regular_corpus() -> dict[str, tuple[SimplicialComplex, CharacteristicMatrix]]:
    corpus = {
        "segment/CP1": (simplex_boundary(2), CharacteristicMatrix.from_rows([[1, -1]])),
        "triangle/CP2": (simplex_boundary(3),
                         CharacteristicMatrix.from_rows([[1, 0, -1], [0, 1, -1]])),
    }
    for k in (0, 1, 2):
        corpus[f"square/H{k}"] = hirzebruch(k)
    return corpus


def _block_form(rng: random.Random, rows: int, cols: int, lo=-3, hi=3) -> list[list[int]]:
    """I_rows | S with S random, rows <= cols."""
    return [[int(r == c) for c in range(rows)] + [rng.randint(lo, hi) for _ in range(cols - rows)]
            for r in range(rows)]


def random_refined_instance(rng: random.Random, max_dim: int = 4):
    """λ = I_n|S on m columns and parts λ_i whose first j_i - 1 columns are I_{n_i}|S_i.

    Returns (λ, parts) with every dimension at most ``max_dim``.
    """
    m = rng.randint(1, max_dim)
    n = rng.randint(0, m)
    lam = CharacteristicMatrix.from_rows(_block_form(rng, n, m), cols=m)
    parts = []
    for _ in range(m):
        j = rng.randint(1, max_dim)
        n_i = rng.randint(0, j - 1)
        rows = _block_form(rng, n_i, j - 1)
        for row in rows:
            row.append(rng.randint(-3, 3))
        parts.append(CharacteristicMatrix.from_rows(rows, cols=j))
    return lam, parts
