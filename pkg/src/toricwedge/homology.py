"""Integral simplicial homology and Hochster's formula for moment-angle complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ResourceLimitError
from .intlinalg import WORD_BITS, IntMatrix, smith_normal_form
from .simplicial import SimplicialComplex, full_subcomplex

HOCHSTER_MAX_VERTICES = 14


@dataclass(frozen=True)
class BettiTable:
    """Ranks and torsion coefficients by degree; degrees with nothing are omitted."""

    ranks: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)
    warning: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "ranks", {int(k): int(v) for k, v in sorted(self.ranks.items()) if v})
        object.__setattr__(self, "torsion",
                           {int(k): tuple(sorted(v)) for k, v in sorted(self.torsion.items()) if v})

    def __getitem__(self, k: int) -> int:
        return self.ranks.get(k, 0)

    def as_list(self, top: int | None = None) -> list[int]:
        """Ranks in degrees 0..top (default: highest nonzero degree)."""
        if top is None:
            top = max(self.ranks, default=-1)
        return [self[k] for k in range(top + 1)]

    @property
    def total_rank(self) -> int:
        return sum(self.ranks.values())

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in self.ranks.items())

    @classmethod
    def sphere(cls, dim: int) -> BettiTable:
        return cls({0: 1, dim: 1} if dim else {0: 2})


def boundary_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """∂_k : C_k -> C_{k-1}; k = 0 is the augmentation onto the empty face."""
    faces = K.faces_by_dimension()
    src = faces.get(k, [])
    dst = faces.get(k - 1, [])
    row = {f: i for i, f in enumerate(dst)}
    data = [[0] * len(src) for _ in dst]
    for c, f in enumerate(src):
        for pos in range(len(f)):
            data[row[f[:pos] + f[pos + 1:]]][c] = -1 if pos % 2 else 1
    return IntMatrix(len(dst), len(src), tuple(map(tuple, data)))


def reduced_homology(K: SimplicialComplex, bits: int | None = WORD_BITS) -> BettiTable:
    """Reduced integral homology; the complex {∅} has H̃_{-1} = Z."""
    faces = K.faces_by_dimension()
    top = K.dimension
    dims = {k: len(faces.get(k, [])) for k in range(-1, top + 2)}
    ranks = {}
    torsion = {}
    bd_rank = {-1: 0, top + 1: 0}
    factors = {top + 1: ()}
    for k in range(0, top + 1):
        snf = smith_normal_form(boundary_matrix(K, k), bits)
        bd_rank[k] = snf.rank
        factors[k] = snf.invariant_factors
    for k in range(-1, top + 1):
        ranks[k] = dims[k] - bd_rank[k] - bd_rank[k + 1]
        torsion[k] = tuple(d for d in factors[k + 1] if d > 1)
    return BettiTable(ranks, torsion)


def hochster_betti(K: SimplicialComplex, max_vertices: int = HOCHSTER_MAX_VERTICES,
                   bits: int | None = WORD_BITS) -> BettiTable:
    """Betti numbers of the moment-angle complex Z(K; (D², S¹)).

    b_k = sum over vertex subsets S of rank H̃_{k-|S|-1}(K_S).
    """
    m = K.num_vertices
    if m > max_vertices:
        raise ResourceLimitError(
            f"Hochster sum over 2^{m} subsets exceeds the cap of {max_vertices} vertices")
    betti: dict[int, int] = {}
    for size in range(m + 1):
        for S in combinations(K.vertices, size):
            for i, b in reduced_homology(full_subcomplex(K, S), bits).ranks.items():
                k = i + size + 1
                betti[k] = betti.get(k, 0) + b
    return BettiTable(betti)
