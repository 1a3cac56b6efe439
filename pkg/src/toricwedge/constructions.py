"""Simplicial wedge K(J) and composed complexes K(K_1, ..., K_m).

Both outputs are labeled by pairs ``(i, w)`` with ``i`` the 1-based position
of a vertex of K.  For the wedge ``w`` runs over 1..j_i; for the composed
complex ``w`` is the vertex label of the i-th part.  With parts built by
``simplex_boundary(j_i)`` (default labels 1..j_i) the two labelings agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import InputError
from .simplicial import (
    SimplicialComplex,
    complex_from_minimal_non_faces,
    minimal_non_faces,
    simplex_boundary,
)


@dataclass(frozen=True)
class JSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(j) for j in self.entries)
        if any(j < 1 for j in entries):
            raise InputError("J entries must be positive integers")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> JSequence:
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError as exc:
            raise InputError(f"cannot parse J sequence {text!r}") from exc

    @classmethod
    def ones(cls, m: int) -> JSequence:
        return cls((1,) * m)

    @property
    def d(self) -> int:
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def _as_jseq(J) -> JSequence:
    return J if isinstance(J, JSequence) else JSequence(tuple(J))


def wedge_labels(J) -> list[tuple[int, int]]:
    """Vertex labels of K(J) in block order: (1,1),...,(1,j_1),(2,1),..."""
    return [(i, k) for i, j in enumerate(_as_jseq(J), start=1) for k in range(1, j + 1)]


def simplicial_wedge(K: SimplicialComplex, J: JSequence | Sequence[int]) -> SimplicialComplex:
    """K(J): minimal non-faces are the J-blow-ups of those of K."""
    J = _as_jseq(J)
    if len(J) != K.num_vertices:
        raise InputError(f"J has length {len(J)} but K has {K.num_vertices} vertices")
    block = {v: [(i, k) for k in range(1, J[i - 1] + 1)]
             for i, v in enumerate(K.vertices, start=1)}
    mnfs = [frozenset(x for v in sigma for x in block[v]) for sigma in minimal_non_faces(K)]
    return complex_from_minimal_non_faces(wedge_labels(J), mnfs)


def composed_complex(K: SimplicialComplex, parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """Union over faces σ of K of the joins B_1 * ... * B_m.

    B_i is the full simplex on part i when i ∈ σ and part i itself otherwise.
    V_σ grows with σ, so taking σ over maximal faces of K covers every face
    (the empty face included).
    """
    if len(parts) != K.num_vertices:
        raise InputError(f"{len(parts)} parts given for {K.num_vertices} vertices")
    labels = []
    block_full = []
    block_max = []
    for i, part in enumerate(parts, start=1):
        if part.num_vertices < 1:
            raise InputError("each part needs at least one vertex")
        labels.extend((i, w) for w in part.vertices)
        block_full.append(frozenset((i, w) for w in part.vertices))
        block_max.append([frozenset((i, w) for w in f) for f in part.maximal_faces])
    faces = set()
    for sigma in K.maximal_faces:
        choices = [[block_full[i]] if v in sigma else block_max[i]
                   for i, v in enumerate(K.vertices)]
        for pick in product(*choices):
            faces.add(frozenset().union(*pick))
    return SimplicialComplex(labels, faces)


def sphere_parts(J: JSequence | Sequence[int]) -> list[SimplicialComplex]:
    return [simplex_boundary(j) for j in _as_jseq(J)]


@dataclass(frozen=True)
class ParamTransform:
    """(m, n, m-n) before and (vertex count, dimension, kernel rank) after."""

    before: tuple[int, int, int]
    after: tuple[int, int, int]

    @property
    def d(self) -> int:
        return self.after[0]

    @property
    def n(self) -> int:
        return self.after[1]

    @property
    def coker(self) -> int:
        return self.after[2]


def _check_mn(m: int, n: int, J: JSequence):
    if m != len(J):
        raise InputError(f"m = {m} but J has length {len(J)}")
    if not 0 <= n <= m:
        raise InputError(f"need 0 <= n <= m, got n = {n}, m = {m}")


def parameter_transform_wedge(m: int, n: int, J) -> ParamTransform:
    J = _as_jseq(J)
    _check_mn(m, n, J)
    d = J.d
    return ParamTransform((m, n, m - n), (d, d - m + n, m - n))


def parameter_transform_composed(m: int, n: int, J, N: int | Iterable[int]) -> ParamTransform:
    """``N`` is either the total or the list of part dimensions n_i."""
    J = _as_jseq(J)
    _check_mn(m, n, J)
    if not isinstance(N, int):
        dims = tuple(N)
        if len(dims) != m or any(k < 0 for k in dims):
            raise InputError("need one nonnegative part dimension per vertex")
        N = sum(dims)
    if N < 0:
        raise InputError("N must be nonnegative")
    d = J.d
    return ParamTransform((m, n, m - n), (d, n + N, d - n - N))
