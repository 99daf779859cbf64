"""Exact arithmetic over the Gaussian rationals, and dense matrices over them.

Every structural decision made by this package (zero tests, sign tests,
rank computations) reduces to exact comparisons of ``fractions.Fraction``
values.  Nothing in this module rounds, and nothing imports numpy; the
floating-point world is confined to :mod:`matsemi.spectral`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]
ScalarLike = Union["Scalar", int, str, Fraction]


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def of(x: ScalarLike) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return Scalar(_as_fraction(x))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re + o.re, self.im + o.im)

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((self.re * o.re + self.im * o.im) / den,
                      (self.im * o.re - self.re * o.im) / den)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.of(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- predicates ----------------------------------------------------

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_nonneg_real(self) -> bool:
        return self.im == 0 and self.re >= 0

    @property
    def is_positive_real(self) -> bool:
        return self.im == 0 and self.re > 0

    def magnitude_sq(self) -> Fraction:
        """|z|^2, exact.  Used for pivot selection and max-entry scaling."""
        return self.re * self.re + self.im * self.im

    def max_abs_part(self) -> Fraction:
        return max(abs(self.re), abs(self.im))

    # -- plumbing ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        if self.im == 0:
            return f"Scalar({str(self.re)!r})"
        return f"Scalar({str(self.re)!r}, {str(self.im)!r})"


ZERO = Scalar(0)
ONE = Scalar(1)


class Matrix:
    """An immutable dense matrix of :class:`Scalar` entries, row major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Scalar]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        flat: list[Scalar] = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Scalar.of(x) for x in r)
        return Matrix(len(rows), ncols, flat)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [ZERO] * (rows * cols))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix.diagonal([ONE] * n)

    @staticmethod
    def diagonal(diag: Sequence[ScalarLike]) -> "Matrix":
        n = len(diag)
        flat = [ZERO] * (n * n)
        for i, x in enumerate(diag):
            flat[i * n + i] = Scalar.of(x)
        return Matrix(n, n, flat)

    # -- access --------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- arithmetic ----------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matrix_product(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix difference")
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c: ScalarLike) -> "Matrix":
        c = Scalar.of(c)
        return Matrix(self.rows, self.cols, [c * e for e in self.entries])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-e for e in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entry(i, j) for j in range(self.cols)
                       for i in range(self.rows)])

    # -- plumbing ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        def fmt(e: Scalar) -> str:
            if e.im == 0:
                return str(e.re)
            return f"({e.re}{'+' if e.im >= 0 else ''}{e.im}i)"
        body = "; ".join(" ".join(fmt(e) for e in self.row(i))
                         for i in range(self.rows))
        return f"Matrix[{body}]"


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise ValueError(
            f"dimension mismatch: ({a.rows}x{a.cols}) @ ({b.rows}x{b.cols})")
    flat: list[Scalar] = []
    brows = [b.row(k) for k in range(b.rows)]
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            s = ZERO
            for k in range(a.cols):
                aik = arow[k]
                if aik:
                    s = s + aik * brows[k][j]
            flat.append(s)
    return Matrix(a.rows, b.cols, flat)


def matrix_vector(m: Matrix, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    if len(v) != m.cols:
        raise ValueError("dimension mismatch in matrix-vector product")
    out = []
    for i in range(m.rows):
        s = ZERO
        for j, x in enumerate(m.row(i)):
            if x:
                s = s + x * v[j]
        out.append(s)
    return tuple(out)


def _eliminate(rows: list[list[Scalar]]) -> tuple[int, list[int]]:
    """In-place forward elimination.  Returns (rank, pivot column list).

    Pivot choice: within the current column, the candidate row whose entry
    has the largest exact squared magnitude, ties broken by lowest row
    index.  Deterministic, and keeps intermediate fractions smallish.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    pivots: list[int] = []
    for col in range(ncols):
        best = -1
        best_mag = Fraction(0)
        for r in range(rank, nrows):
            mag = rows[r][col].magnitude_sq()
            if mag > best_mag:
                best_mag = mag
                best = r
        if best < 0:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, nrows):
            if rows[r][col]:
                f = rows[r][col] / piv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots


def rank(m: Matrix) -> int:
    """Exact rank over the Gaussian rationals."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    r, _ = _eliminate(rows)
    return r


def inverse(m: Matrix) -> Matrix:
    """Exact inverse.  Raises ValueError on non-square or singular input."""
    if not m.is_square:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = [list(m.row(i)) + [ONE if j == i else ZERO for j in range(n)]
           for i in range(n)]
    for col in range(n):
        best = -1
        best_mag = Fraction(0)
        for r in range(col, n):
            mag = aug[r][col].magnitude_sq()
            if mag > best_mag:
                best_mag = mag
                best = r
        if best < 0:
            raise ValueError("matrix is singular")
        aug[col], aug[best] = aug[best], aug[col]
        piv = aug[col][col]
        aug[col] = [x / piv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return Matrix(n, n, [aug[i][n + j] for i in range(n) for j in range(n)])


def rank_one_factor(m: Matrix) -> tuple[tuple[Scalar, ...], tuple[Scalar, ...]]:
    """Factor a rank-one matrix as an outer product x * y^T.

    The first nonzero entry of x is normalised to 1, which makes the
    factorisation canonical.  Raises ValueError unless rank(m) == 1.
    """
    if rank(m) != 1:
        raise ValueError("rank_one_factor requires a matrix of rank exactly 1")
    pivot_col = -1
    for j in range(m.cols):
        if any(m.entry(i, j) for i in range(m.rows)):
            pivot_col = j
            break
    col = m.col(pivot_col)
    pivot_row = next(i for i, e in enumerate(col) if e)
    scale = col[pivot_row]
    x = tuple(e / scale for e in col)
    y = tuple(m.entry(pivot_row, j) for j in range(m.cols))
    return x, y


@dataclass(frozen=True)
class EntryClassification:
    """Sign/shape facts about a matrix, all decided exactly."""

    is_real: bool
    is_nonnegative: bool
    is_positive: bool
    is_diagonal: bool
    is_monomial: bool
    has_nonneg_diagonal: bool


def classify_entries(m: Matrix) -> EntryClassification:
    is_real = all(e.is_real for e in m.entries)
    is_nonneg = all(e.is_nonneg_real for e in m.entries)
    is_pos = all(e.is_positive_real for e in m.entries)
    is_diag = all(not m.entry(i, j)
                  for i in range(m.rows) for j in range(m.cols) if i != j)
    # monomial: exactly one nonzero entry in every row and every column
    is_monomial = m.is_square
    if is_monomial:
        for i in range(m.rows):
            if sum(1 for e in m.row(i) if e) != 1:
                is_monomial = False
                break
    if is_monomial:
        for j in range(m.cols):
            if sum(1 for e in m.col(j) if e) != 1:
                is_monomial = False
                break
    ndiag = min(m.rows, m.cols)
    has_nonneg_diag = all(m.entry(i, i).is_nonneg_real for i in range(ndiag))
    return EntryClassification(
        is_real=is_real,
        is_nonnegative=is_nonneg,
        is_positive=is_pos,
        is_diagonal=is_diag,
        is_monomial=is_monomial,
        has_nonneg_diagonal=has_nonneg_diag,
    )
