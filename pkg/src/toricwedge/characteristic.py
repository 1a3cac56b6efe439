"""Characteristic matrices: regularity, λ(J), λ(J,N), kernels and the Q lattice.

Column layout of λ(J) and λ(J,N): all "extra" vertices first, block by
block, (1,2)..(1,j_1), (2,2)..(2,j_2), ..., then the original vertices
(1,1), (2,1), ..., (m,1).  Rows: one block of rows per vertex of K, then
the n rows of λ under the original-vertex columns.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .constructions import JSequence, _as_jseq
from .errors import InputError
from .intlinalg import (
    WORD_BITS,
    IntMatrix,
    Lattice,
    Membership,
    kernel_basis,
    lattice_membership,
    minor_det,
    smith_normal_form,
)
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class CharacteristicMatrix:
    matrix: IntMatrix
    column_labels: tuple[Hashable, ...]

    def __post_init__(self):
        labels = tuple(self.column_labels)
        if len(labels) != self.matrix.cols:
            raise InputError("one column label per column required")
        if len(set(labels)) != len(labels):
            raise InputError("column labels must be unique")
        object.__setattr__(self, "column_labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], column_labels=None, cols=None):
        M = IntMatrix.from_rows(rows, cols=cols)
        if column_labels is None:
            column_labels = tuple(range(1, M.cols + 1))
        return cls(M, column_labels)

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def m(self) -> int:
        return self.matrix.cols

    def column_of(self, label) -> int:
        return self.column_labels.index(label)

    def columns_for(self, labels) -> list[int]:
        return [self.column_of(v) for v in labels]

    def reorder(self, labels: Sequence[Hashable]) -> CharacteristicMatrix:
        """Same map, columns permuted to ``labels`` order."""
        cols = self.columns_for(labels)
        return CharacteristicMatrix(self.matrix.select_columns(cols), tuple(labels))


class RegularityMode(enum.Enum):
    ALL_FACES = "faces"
    VERTICES_ONLY = "vertices"


@dataclass(frozen=True)
class RegularityReport:
    mode: RegularityMode
    # (face, SNF diagonal) in faces mode, (face, minor) in vertices mode
    failures: tuple = ()
    minors: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_regularity(K: SimplicialComplex, lam: CharacteristicMatrix,
                     mode: RegularityMode | str = RegularityMode.ALL_FACES,
                     bits: int | None = WORD_BITS) -> RegularityReport:
    mode = RegularityMode(mode)
    if set(lam.column_labels) != set(K.vertices):
        raise InputError("column labels of λ do not match the vertices of K")
    n = lam.n
    A = lam.matrix
    failures = []
    minors = {}
    if mode is RegularityMode.VERTICES_ONLY:
        if not K.is_pure() or K.dimension != n - 1:
            raise InputError(f"vertex test needs K pure of dimension {n - 1}")
        for face in K.ordered_maximal_faces():
            det = minor_det(A, range(n), lam.columns_for(face), bits)
            minors[face] = det
            if abs(det) != 1:
                failures.append((face, det))
    else:
        faces = [K.sort_face(f) for f in K.faces() if f]
        faces.sort(key=lambda f: (len(f), [K.index(v) for v in f]))
        for face in faces:
            sub = A.select_columns(lam.columns_for(face))
            diag = smith_normal_form(sub, bits).diagonal
            if len(face) > n or any(d != 1 for d in diag):
                failures.append((face, diag))
    return RegularityReport(mode, tuple(failures), minors)


def diagonal_sphere_matrix(j: int) -> CharacteristicMatrix:
    """[I_{j-1} | -1]: the diagonal circle action on S^{2j-1}; 0 x 1 when j = 1."""
    if j < 1:
        raise InputError("diagonal_sphere_matrix needs j >= 1")
    rows = [[int(r == c) for c in range(j - 1)] + [-1] for r in range(j - 1)]
    return CharacteristicMatrix(IntMatrix(j - 1, j, tuple(map(tuple, rows))),
                                tuple(range(1, j + 1)))


def lambda_J_column_labels(J) -> list[tuple[int, int]]:
    J = _as_jseq(J)
    extra = [(i, k) for i, j in enumerate(J, start=1) for k in range(2, j + 1)]
    return extra + [(i, 1) for i in range(1, len(J) + 1)]


def build_lambda_JN(lam: CharacteristicMatrix,
                    parts: Sequence[CharacteristicMatrix]) -> CharacteristicMatrix:
    """Assemble λ(J,N) from λ (n x m) and parts λ_i (n_i x j_i).

    Block row i holds the first j_i - 1 columns of λ_i under (i,2)..(i,j_i)
    and the last column of λ_i under (i,1).
    """
    m = lam.m
    if len(parts) != m:
        raise InputError(f"{len(parts)} parts given for {m} columns of λ")
    J = JSequence(tuple(p.m for p in parts))
    labels = lambda_J_column_labels(J)
    col = {lab: c for c, lab in enumerate(labels)}
    width = len(labels)
    rows = []
    for i, part in enumerate(parts, start=1):
        P = part.matrix
        for r in range(P.rows):
            row = [0] * width
            for k in range(2, part.m + 1):
                row[col[(i, k)]] = P[r, k - 2]
            row[col[(i, 1)]] = P[r, part.m - 1]
            rows.append(row)
    for r in range(lam.n):
        row = [0] * width
        for i in range(1, m + 1):
            row[col[(i, 1)]] = lam.matrix[r, i - 1]
        rows.append(row)
    return CharacteristicMatrix(IntMatrix(len(rows), width, tuple(map(tuple, rows))),
                                tuple(labels))


def build_lambda_J(lam: CharacteristicMatrix, J) -> CharacteristicMatrix:
    J = _as_jseq(J)
    if len(J) != lam.m:
        raise InputError(f"J has length {len(J)} but λ has {lam.m} columns")
    return build_lambda_JN(lam, [diagonal_sphere_matrix(j) for j in J])


def rank_and_kernel(lam: CharacteristicMatrix, bits: int | None = WORD_BITS) -> tuple[int, Lattice]:
    snf = smith_normal_form(lam.matrix, bits)
    return snf.rank, kernel_basis(lam.matrix, bits)


def _embed_block(i: int, j: int, v: Sequence[int], col: dict, width: int) -> tuple[int, ...]:
    out = [0] * width
    for k in range(2, j + 1):
        out[col[(i, k)]] = v[k - 2]
    out[col[(i, 1)]] = v[j - 1]
    return tuple(out)


def q_subgroup(parts: Sequence[CharacteristicMatrix], J=None,
               bits: int | None = WORD_BITS) -> Lattice:
    """ker λ_1 ⊕ ... ⊕ ker λ_m inside Z^{d(J)}, in λ(J) column order."""
    if J is None:
        J = JSequence(tuple(p.m for p in parts))
    J = _as_jseq(J)
    if len(J) != len(parts) or any(p.m != j for p, j in zip(parts, J)):
        raise InputError("part i must have j_i columns")
    labels = lambda_J_column_labels(J)
    col = {lab: c for c, lab in enumerate(labels)}
    basis = []
    for i, part in enumerate(parts, start=1):
        for v in kernel_basis(part.matrix, bits).basis:
            basis.append(_embed_block(i, part.m, v, col, len(labels)))
    return Lattice(len(labels), tuple(basis))


class Containment(enum.Enum):
    OVER_Z = "Z"
    OVER_Q = "Q"
    NO = "no"


@dataclass(frozen=True)
class KernelInQReport:
    kernel: Lattice
    classes: tuple[tuple[tuple[int, ...], Membership], ...]

    @property
    def summary(self) -> Containment:
        kinds = {c for _, c in self.classes}
        if Membership.OUTSIDE in kinds:
            return Containment.NO
        if Membership.IN_Q_SPAN_ONLY in kinds:
            return Containment.OVER_Q
        return Containment.OVER_Z


def kernel_in_q_report(lam_jn: CharacteristicMatrix, Q: Lattice,
                       bits: int | None = WORD_BITS) -> KernelInQReport:
    if lam_jn.m != Q.ambient:
        raise InputError(f"λ(J,N) has {lam_jn.m} columns but Q lives in Z^{Q.ambient}")
    _, kernel = rank_and_kernel(lam_jn, bits)
    classes = tuple((v, lattice_membership(Q, v, bits)) for v in kernel.basis)
    return KernelInQReport(kernel, classes)
