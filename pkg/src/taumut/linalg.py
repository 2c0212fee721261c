"""Exact dense linear algebra over the rationals, with a prime-field mode.

Every quantity downstream (Hom dimensions, kernels, isomorphism witnesses)
is an exact equality, so nothing here ever touches floating point.  The
default scalar type is :class:`gmpy2.mpq`; the prime-field mode stores
residues as plain ints and exists only to cross-check ranks.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

DEFAULT_PRIME = 32003


class RationalField:
    """The field of rational numbers."""

    name = "QQ"
    characteristic = 0

    def __call__(self, x) -> mpq:
        return mpq(x)

    def reduce(self, x):
        return x

    def inv(self, x):
        return 1 / x

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField:
    """Integers modulo a prime ``p``; elements are ints in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> int:
        x = mpq(x)
        num, den = int(x.numerator), int(x.denominator)
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def reduce(self, x) -> int:
        return x % self.p

    def inv(self, x) -> int:
        return pow(x, -1, self.p)

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


QQ = RationalField()


class Matrix:
    """Immutable dense matrix, stored row-major.

    A 0 x n or n x 0 matrix is valid and acts as the empty map.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, rows: int, cols: int, data: Iterable[Sequence] | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple(tuple(mpq(0) for _ in range(cols)) for _ in range(rows))
        else:
            self.data = tuple(tuple(mpq(x) for x in row) for row in data)
            if len(self.data) != rows or any(len(r) != cols for r in self.data):
                raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.data]

    def column(self, j: int) -> list:
        return [r[j] for r in self.data]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.data == other.data
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}: {serialize_matrix(self)})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = mpq(c)
        return Matrix(self.rows, self.cols, [[c * x for x in r] for r in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            out.append([sum((a * c[k] for k, a in nz), mpq(0)) for c in cols])
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(v) if x != 0]
        return [sum((r[k] * x for k, x in nz), mpq(0)) for r in self.data]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def rank(self, field=QQ) -> int:
        return rank(self, field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])


def hstack(blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if rows is None:
        rows = blocks[0].rows if blocks else 0
    data = [[] for _ in range(rows)]
    cols = 0
    for b in blocks:
        if b.rows != rows:
            raise ValueError("row count mismatch in hstack")
        for i in range(rows):
            data[i].extend(b.data[i])
        cols += b.cols
    return Matrix(rows, cols, data)


def vstack(blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if cols is None:
        cols = blocks[0].cols if blocks else 0
    data = []
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column count mismatch in vstack")
        data.extend(b.data)
    return Matrix(len(data), cols, data)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [[mpq(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            data[r0 + i][c0 : c0 + b.cols] = b.data[i]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, data)


def _as_rows(m, field) -> list[list]:
    if isinstance(m, Matrix):
        rows = m.data
    else:
        rows = m
    if field == QQ:
        return [list(r) for r in rows]
    return [[field(x) for x in r] for r in rows]


def rref(m, field=QQ, ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.

    Pivots are chosen leftmost column first, topmost available row, so the
    output is a deterministic function of the input.  Returns the nonzero
    rows of the reduced matrix and the pivot column indices.
    """
    rows = _as_rows(m, field)
    if ncols is None:
        ncols = len(rows[0]) if rows else (m.cols if isinstance(m, Matrix) else 0)
    rows = [r for r in rows if any(x != 0 for x in r)]
    pivots: list[int] = []
    r = 0
    red = field.reduce
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        prow = [red(x * inv) for x in rows[r]]
        rows[r] = prow
        nz = [k for k in range(c, ncols) if prow[k] != 0]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    row = rows[i]
                    for k in nz:
                        row[k] = red(row[k] - f * prow[k])
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m, field=QQ) -> int:
    return len(rref(m, field)[1])


def kernel_basis(m, field=QQ, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel ``{x : m x = 0}``.

    One vector per free column, with a 1 in that column; the order follows
    the free columns left to right.
    """
    if ncols is None:
        ncols = m.cols if isinstance(m, Matrix) else (len(m[0]) if m else 0)
    R, pivots = rref(m, field, ncols)
    pivset = set(pivots)
    zero = field(0)
    one = field(1)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(R, pivots):
            if row[f] != 0:
                v[p] = field.reduce(-row[f])
        basis.append(v)
    return basis


def solve_all(m: Matrix, targets: Sequence[Sequence], field=QQ):
    """Solve ``m x = b`` for each target ``b``.

    Returns ``(solutions, kernel)`` where ``solutions[k]`` is a particular
    solution for target ``k`` or ``None`` when that target is unsolvable.
    """
    for t in targets:
        if len(t) != m.rows:
            raise ValueError(f"target of length {len(t)} for a matrix with {m.rows} rows")
    n = m.cols
    nt = len(targets)
    rows = _as_rows(m, field)
    aug = [rows[i] + [field(t[i]) for t in targets] for i in range(m.rows)]
    R, pivots = rref(aug, field, n + nt)
    sols = []
    for k in range(nt):
        col = n + k
        if any(p == col for p in pivots):
            sols.append(None)
            continue
        x = [field(0)] * n
        for row, p in zip(R, pivots):
            if p < n:
                x[p] = row[col]
        sols.append(x)
    return sols, kernel_basis(m, field)


def is_invertible(m: Matrix, field=QQ) -> bool:
    if m.rows != m.cols:
        raise ValueError(f"is_invertible needs a square matrix, got {m.shape}")
    return rank(m, field) == m.rows


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.data[i]) + [mpq(1) if i == j else mpq(0) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug, QQ, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(n, n, [row[n:] for row in R])


def row_space_basis(vectors: Sequence[Sequence], ncols: int) -> list[list]:
    return rref(list(vectors), QQ, ncols)[0]


def complement_indices(vectors: Sequence[Sequence], ncols: int) -> list[int]:
    """Standard basis indices spanning a complement of ``span(vectors)``."""
    _, piv = rref(list(vectors), QQ, ncols)
    ps = set(piv)
    return [j for j in range(ncols) if j not in ps]


def format_scalar(x) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s: str) -> mpq:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return mpq(int(p), int(q))
    return mpq(int(s))


def serialize_matrix(m: Matrix) -> str:
    """``a,b;c,d`` row-major; the shape is prefixed as ``RxC:``."""
    body = ";".join(",".join(format_scalar(x) for x in row) for row in m.data)
    return f"{m.rows}x{m.cols}:{body}"


def parse_matrix(s: str) -> Matrix:
    shape, _, body = s.strip().partition(":")
    r, c = (int(v) for v in shape.split("x"))
    if r == 0 or c == 0:
        return Matrix(r, c)
    rows = [[parse_scalar(x) for x in row.split(",")] for row in body.split(";")]
    return Matrix(r, c, rows)
