"""Exact integer linear algebra.

Matrices hold plain Python integers.  Python never wraps, so the word-size
contract is enforced explicitly: every routine that builds new entries takes
``bits`` (default 64) and raises :class:`IntegerOverflowError` as soon as a
value leaves the signed range of that width.  Pass ``bits=None`` to compute
with unbounded integers.

The Smith normal form pivots on the smallest nonzero magnitude in the active
submatrix, ties going to the lowest (row, column), so results are
reproducible across runs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InputError, IntegerOverflowError

WORD_BITS = 64


def _limit(bits: int | None) -> int | None:
    return None if bits is None else (1 << (bits - 1)) - 1


def _check(values: Iterable[int], limit: int | None) -> None:
    if limit is None:
        return
    for x in values:
        if x > limit or x < -limit - 1:
            raise IntegerOverflowError(
                f"integer {x} does not fit in {limit.bit_length() + 1} signed bits"
            )


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row major.

    ``rows``/``cols`` are stored explicitly so that 0 x c and r x 0 matrices
    keep their shape.
    """

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]
    column_labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        data = tuple(tuple(int(x) for x in row) for row in self.data)
        if len(data) != self.rows or any(len(row) != self.cols for row in data):
            raise InputError(
                f"data does not have shape {self.rows}x{self.cols}"
            )
        object.__setattr__(self, "data", data)
        if self.column_labels is not None:
            labels = tuple(self.column_labels)
            if len(labels) != self.cols:
                raise InputError("column_labels length must equal cols")
            if len(set(labels)) != len(labels):
                raise InputError("column labels must be unique")
            object.__setattr__(self, "column_labels", labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None,
                  column_labels=None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise InputError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(map(tuple, rows)), column_labels)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        for i in rows:
            if not 0 <= i < self.rows:
                raise InputError(f"row index {i} out of range")
        for j in cols:
            if not 0 <= j < self.cols:
                raise InputError(f"column index {j} out of range")
        return IntMatrix(len(rows), len(cols),
                         tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def select_columns(self, cols: Sequence[int]) -> IntMatrix:
        return self.submatrix(range(self.rows), cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self.column(j) for j in range(self.cols)))

    def matmul(self, other: IntMatrix, bits: int | None = WORD_BITS) -> IntMatrix:
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        limit = _limit(bits)
        out = []
        for row in self.data:
            new = tuple(sum(a * b for a, b in zip(row, col)) for col in other.columns())
            _check(new, limit)
            out.append(new)
        return IntMatrix(self.rows, other.cols, tuple(out))

    __matmul__ = matmul

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise InputError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.data]


@dataclass(frozen=True)
class SNFResult:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def smith_normal_form(A: IntMatrix, bits: int | None = WORD_BITS) -> SNFResult:
    limit = _limit(bits)
    r, c = A.shape
    D = [list(row) for row in A.data]
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def add_row(dst, src, q):
        # row dst += q * row src, in D and U
        for M in (D, U):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
            _check(M[dst], limit)

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]
            _check((row[dst] for row in M), limit)

    def swap_rows(i, k):
        if i != k:
            for M in (D, U):
                M[i], M[k] = M[k], M[i]

    def swap_cols(j, k):
        if j != k:
            for M in (D, V):
                for row in M:
                    row[j], row[k] = row[k], row[j]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = abs(D[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            for i in range(t + 1, r):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
            for j in range(t + 1, c):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
            # leftover remainders are smaller than the pivot: re-pivot on them
            best = None
            for i in range(t + 1, r):
                if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                    best = (abs(D[i][t]), i, t)
            for j in range(t + 1, c):
                if D[t][j] and (best is None or abs(D[t][j]) < best[0]
                                or (abs(D[t][j]) == best[0] and (t, j) < best[1:])):
                    best = (abs(D[t][j]), t, j)
            if best is not None:
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            p = D[t][t]
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return SNFResult(IntMatrix(r, r, tuple(map(tuple, U))),
                     IntMatrix(r, c, tuple(map(tuple, D))),
                     IntMatrix(c, c, tuple(map(tuple, V))))


def rank(A: IntMatrix, bits: int | None = WORD_BITS) -> int:
    return smith_normal_form(A, bits).rank


def _normalize_sign(v: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^k given by independent basis vectors."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in b) for b in self.basis)
        if any(len(b) != self.ambient for b in basis):
            raise InputError("basis vector length differs from ambient dimension")
        object.__setattr__(self, "basis", basis)
        if basis and rank(self.basis_matrix(), bits=None) != len(basis):
            raise InputError("lattice basis vectors are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntMatrix:
        """Basis vectors as the columns of a k x r matrix."""
        return IntMatrix(self.ambient, len(self.basis),
                         tuple(tuple(b[i] for b in self.basis) for i in range(self.ambient)))

    def is_saturated(self) -> bool:
        return self.rank == 0 or all(
            d == 1 for d in smith_normal_form(self.basis_matrix(), bits=None).invariant_factors)


def kernel_basis(A: IntMatrix, bits: int | None = WORD_BITS) -> Lattice:
    """Saturated basis of {x in Z^c : A x = 0}, read off the column transform of the SNF."""
    snf = smith_normal_form(A, bits)
    r = snf.rank
    basis = tuple(_normalize_sign(snf.V.column(j)) for j in range(r, A.cols))
    return Lattice(A.cols, basis)


def spans_direct_summand(A_sub: IntMatrix, bits: int | None = WORD_BITS) -> bool:
    """True iff the l columns of the n x l matrix span a rank-l direct summand of Z^n."""
    n, l = A_sub.shape
    if l > n:
        raise InputError(f"{l} columns cannot span a direct summand of Z^{n} of rank {l}")
    diag = smith_normal_form(A_sub, bits).diagonal
    return all(d == 1 for d in diag)


def determinant(A: IntMatrix, bits: int | None = WORD_BITS) -> int:
    """Bareiss fraction-free elimination; every intermediate is an exact minor."""
    n = A.rows
    if n != A.cols:
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return 1
    limit = _limit(bits)
    M = [list(row) for row in A.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            _check(M[i][k + 1:], limit)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def minor_det(A: IntMatrix, rows: Sequence[int], cols: Sequence[int],
              bits: int | None = WORD_BITS) -> int:
    if len(rows) != len(cols):
        raise InputError("minor needs as many rows as columns")
    if len(rows) > min(A.shape):
        raise InputError("minor larger than the matrix")
    return determinant(A.submatrix(list(rows), list(cols)), bits)


class Membership(enum.Enum):
    IN_Z_SPAN = "InZSpan"
    IN_Q_SPAN_ONLY = "InQSpanOnly"
    OUTSIDE = "Outside"


def lattice_membership(L: Lattice, v: Sequence[int], bits: int | None = WORD_BITS) -> Membership:
    """Classify ``v`` against the integer and rational spans of ``L``."""
    if len(v) != L.ambient:
        raise InputError(f"vector has length {len(v)}, lattice lives in Z^{L.ambient}")
    if L.rank == 0:
        return Membership.IN_Z_SPAN if not any(v) else Membership.OUTSIDE
    # B x = v  <=>  D y = U v  with x = V y
    snf = smith_normal_form(L.basis_matrix(), bits)
    w = snf.U.apply(v)
    diag = snf.diagonal
    if any(w[i] for i in range(L.rank, L.ambient)):
        return Membership.OUTSIDE
    if all(w[i] % diag[i] == 0 for i in range(L.rank)):
        return Membership.IN_Z_SPAN
    return Membership.IN_Q_SPAN_ONLY
