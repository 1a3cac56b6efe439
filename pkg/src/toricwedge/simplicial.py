"""Finite abstract simplicial complexes and combinatorial simple polytopes.

A complex is a vertex tuple plus an antichain of maximal faces.  Vertices
that lie in no face ("ghost" vertices) are allowed; the boundary of the
0-simplex is the complex ``{∅}`` on one ghost vertex.  There is no void
complex: the smallest value is ``{∅}``.

Vertex labels are opaque hashables.  Their order in ``vertices`` is what
matrix columns refer to; the labels themselves are never sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from math import comb
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import InputError

Label = Hashable
Face = frozenset


def _antichain_max(faces: Iterable[frozenset]) -> frozenset:
    faces = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in faces:
        if not any(f <= g for g in kept):
            kept.append(f)
    return frozenset(kept)


def _antichain_min(sets: Iterable[frozenset]) -> frozenset:
    sets = sorted(set(sets), key=len)
    kept: list[frozenset] = []
    for s in sets:
        if not any(k <= s for k in kept):
            kept.append(s)
    return frozenset(kept)


class SimplicialComplex:
    """Immutable simplicial complex stored by its maximal faces.

    Equality ignores vertex order: two complexes are equal when they have the
    same vertex set and the same faces.
    """

    __slots__ = ("_vertices", "_index", "_maximal")

    def __init__(self, vertices: Sequence[Label], faces: Iterable[Iterable[Label]] = ()):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InputError("duplicate vertex label")
        fs = []
        for f in faces:
            f = frozenset(f)
            unknown = f - index.keys()
            if unknown:
                raise InputError(f"face refers to unknown vertices {sorted(map(repr, unknown))}")
            fs.append(f)
        maximal = _antichain_max(fs) or frozenset({frozenset()})
        self._vertices = vertices
        self._index = index
        self._maximal = maximal

    @property
    def vertices(self) -> tuple[Label, ...]:
        return self._vertices

    @property
    def maximal_faces(self) -> frozenset:
        return self._maximal

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    def index(self, v: Label) -> int:
        return self._index[v]

    def sort_face(self, face: Iterable[Label]) -> tuple[Label, ...]:
        return tuple(sorted(face, key=self._index.__getitem__))

    def ordered_maximal_faces(self) -> list[tuple[Label, ...]]:
        """Maximal faces as vertex-ordered tuples in a deterministic order."""
        faces = [self.sort_face(f) for f in self._maximal]
        return sorted(faces, key=lambda f: (len(f), [self._index[v] for v in f]))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self._maximal) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self._maximal}) == 1

    def is_face(self, s: Iterable[Label]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self._maximal)

    def faces(self) -> set[frozenset]:
        """Every face, the empty face included."""
        out: set[frozenset] = set()
        for f in self._maximal:
            items = tuple(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def faces_by_dimension(self) -> dict[int, list[tuple[Label, ...]]]:
        """Vertex-ordered faces grouped by dimension (-1 holds the empty face)."""
        grouped: dict[int, list[tuple[Label, ...]]] = {}
        for f in self.faces():
            grouped.setdefault(len(f) - 1, []).append(self.sort_face(f))
        for faces in grouped.values():
            faces.sort(key=lambda f: [self._index[v] for v in f])
        return grouped

    def ghost_vertices(self) -> tuple[Label, ...]:
        used = set().union(*self._maximal)
        return tuple(v for v in self._vertices if v not in used)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self._maximal == other._maximal

    def __hash__(self):
        return hash((frozenset(self._vertices), self._maximal))

    def __repr__(self):
        return f"SimplicialComplex({list(self._vertices)!r}, {self.ordered_maximal_faces()!r})"


def complex_from_maximal_faces(vertices: Sequence[Label], faces: Iterable[Iterable[Label]]) -> SimplicialComplex:
    return SimplicialComplex(vertices, faces)


def minimal_non_faces(K: SimplicialComplex) -> set[frozenset]:
    # Every minimal non-face is (a face) + (one vertex), so grow from faces.
    faces = K.faces()
    out = set()
    for f in faces:
        for v in K.vertices:
            if v in f:
                continue
            s = f | {v}
            if s in faces or s in out:
                continue
            if all(s - {w} in faces for w in s):
                out.add(s)
    return out


def complex_from_minimal_non_faces(vertices: Sequence[Label], mnfs: Iterable[Iterable[Label]]) -> SimplicialComplex:
    vertices = tuple(vertices)
    mnfs = [frozenset(m) for m in mnfs]
    known = set(vertices)
    for m in mnfs:
        if not m:
            raise InputError("the empty set cannot be a minimal non-face")
        if not m <= known:
            raise InputError("minimal non-face refers to unknown vertices")
    if len(_antichain_min(mnfs)) != len(set(mnfs)):
        raise InputError("minimal non-faces must form an antichain")
    # Start from the full simplex and split every face that contains a non-face.
    maximal = {frozenset(vertices)}
    for m in mnfs:
        nxt = set()
        for f in maximal:
            if m <= f:
                nxt.update(f - {v} for v in m)
            else:
                nxt.add(f)
        maximal = set(_antichain_max(nxt))
    return SimplicialComplex(vertices, maximal)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if set(K.vertices) & set(L.vertices):
        raise InputError("join requires disjoint vertex labels; relabel first")
    return SimplicialComplex(K.vertices + L.vertices,
                             (f | g for f in K.maximal_faces for g in L.maximal_faces))


def full_subcomplex(K: SimplicialComplex, S: Iterable[Label]) -> SimplicialComplex:
    S = set(S)
    unknown = S - set(K.vertices)
    if unknown:
        raise InputError("subset contains vertices outside the complex")
    verts = tuple(v for v in K.vertices if v in S)
    return SimplicialComplex(verts, (f & S for f in K.maximal_faces))


def relabel(K: SimplicialComplex, mapping) -> SimplicialComplex:
    """Apply a vertex relabeling (dict or callable)."""
    f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    return SimplicialComplex([f(v) for v in K.vertices],
                             ([f(v) for v in face] for face in K.maximal_faces))


def _default_labels(j: int, labels):
    labels = tuple(range(1, j + 1)) if labels is None else tuple(labels)
    if len(labels) != j:
        raise InputError(f"expected {j} labels")
    return labels


def simplex_boundary(j: int, labels: Sequence[Label] | None = None) -> SimplicialComplex:
    """Boundary of the (j-1)-simplex on j vertices; j=1 gives {∅} on one ghost vertex."""
    if j < 1:
        raise InputError("simplex_boundary needs j >= 1")
    labels = _default_labels(j, labels)
    return SimplicialComplex(labels, combinations(labels, j - 1))


def full_simplex(j: int, labels: Sequence[Label] | None = None) -> SimplicialComplex:
    if j < 1:
        raise InputError("full_simplex needs j >= 1")
    labels = _default_labels(j, labels)
    return SimplicialComplex(labels, [labels])


@dataclass(frozen=True)
class SimplePolytope:
    """Facet/vertex incidence of a simple polytope; no coordinates."""

    dimension: int
    facets: tuple[Label, ...]
    vertices: tuple[frozenset, ...]

    def __post_init__(self):
        facets = tuple(self.facets)
        verts = tuple(frozenset(v) for v in self.vertices)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "vertices", verts)
        if self.dimension < 0:
            raise InputError("dimension must be nonnegative")
        if len(set(facets)) != len(facets):
            raise InputError("duplicate facet label")
        known = set(facets)
        for v in verts:
            if len(v) != self.dimension:
                raise InputError(
                    f"polytope vertex {sorted(map(repr, v))} lies on {len(v)} facets, "
                    f"simplicity requires {self.dimension}")
            if not v <= known:
                raise InputError("polytope vertex refers to an unknown facet")
        if len(set(verts)) != len(verts):
            raise InputError("two polytope vertices have the same facet set")
        used = set().union(*verts) if verts else set()
        if used != known:
            raise InputError("every facet must contain at least one vertex")

    @property
    def num_facets(self) -> int:
        return len(self.facets)


def nerve_of_simple_polytope(P: SimplePolytope) -> SimplicialComplex:
    return SimplicialComplex(P.facets, P.vertices)


def polygon(m: int) -> SimplePolytope:
    """The m-gon with edges 1..m; vertex k sits on edges k and k+1."""
    if m < 3:
        raise InputError("a polygon needs at least 3 edges")
    return SimplePolytope(2, tuple(range(1, m + 1)),
                          tuple(frozenset({k, k % m + 1}) for k in range(1, m + 1)))


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d}) with f_{-1} = 1."""
    counts = [0] * (K.dimension + 2)
    for f in K.faces():
        counts[len(f)] += 1
    return tuple(counts)


def h_vector(K: SimplicialComplex, n: int | None = None) -> tuple[int, ...]:
    """h-vector of a pure (n-1)-dimensional complex.

    Defined by sum_i f_{i-1} (t-1)^{n-i} = sum_i h_i t^{n-i}.
    """
    if not K.is_pure():
        raise InputError("h_vector needs a pure complex")
    if n is None:
        n = K.dimension + 1
    if K.dimension != n - 1:
        raise InputError(f"complex has dimension {K.dimension}, expected {n - 1}")
    f = f_vector(K)
    return tuple(sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
                 for k in range(n + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced: sum_{i>=0} (-1)^i f_i."""
    f = f_vector(K)
    return sum((-1) ** i * f[i + 1] for i in range(len(f) - 1))


def powerset(items: Sequence) -> Iterator[tuple]:
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))
