"""Exact integer linear algebra: Hermite normal form, Diophantine systems and lattice determinants."""

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple, Self, Sequence

Vector = tuple[int, ...]


class IntLinError(Exception):
    """Base class for integer linear algebra errors."""


class DimensionMismatchError(IntLinError):
    """Raised when matrix or vector shapes do not agree."""


class NotIndependentError(IntLinError):
    """Raised when a family of vectors is linearly dependent."""


class NotIntegralError(IntLinError):
    """Raised when a Gram determinant is not a perfect square."""


class FirstZeroError(IntLinError):
    """Raised when an extended gcd chain starts with a zero entry."""


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers stored row by row."""

    nrows: int
    ncols: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(row) != self.ncols for row in self.rows):
            raise DimensionMismatchError(f'rows do not form a {self.nrows}x{self.ncols} matrix')

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> Self:
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if ncols is None:
            if not data:
                raise DimensionMismatchError('column count of an empty row list is ambiguous')
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> Self:
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatchError(f'column of length {len(col)} in a matrix with {nrows} rows')
        data = tuple(tuple(int(col[i]) for col in columns) for i in range(nrows))
        return cls(nrows, len(columns), data)

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Self:
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(self.ncols, self.nrows, self.columns())

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise DimensionMismatchError(f'vector of length {len(v)} against {self.ncols} columns')
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f'cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}')
        cols = other.columns()
        return IntMatrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows),
        )


class HnfResult(NamedTuple):
    """Column-style Hermite normal form ``h = a @ u`` with ``u`` unimodular."""

    h: IntMatrix
    u: IntMatrix
    rank: int


class LinearSolution(NamedTuple):
    """Solutions ``base + span(periods)`` of an integer linear system."""

    base: Vector
    periods: tuple[Vector, ...]


class GcdStep(NamedTuple):
    gcd: int
    coefficients: Vector


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _combine(h: list[list[int]], u: list[list[int]], p: int, j: int, i: int):
    # determinant-one transform zeroing h[j][i] against the pivot column p
    a, b = h[p][i], h[j][i]
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    for cols in (h, u):
        cp, cj = cols[p], cols[j]
        cols[p] = [x * s + y * t for s, t in zip(cp, cj)]
        cols[j] = [-bg * s + ag * t for s, t in zip(cp, cj)]


def hnf(a: IntMatrix) -> HnfResult:
    """Column-style Hermite normal form.

    Nonzero columns of ``h`` come first; each has a positive pivot strictly below the pivot of
    the previous column, and entries to the left of a pivot lie in ``[0, pivot)``.
    The columns of ``u`` past ``rank`` span the kernel of ``a`` and are in Hermite form themselves;
    the first ``rank`` columns are reduced against them, which keeps the entries of ``u`` small.

    Args:
        a: Integer matrix of shape ``m x n``.

    Returns:
        HnfResult with ``h = a @ u``, ``u`` unimodular and ``rank`` the number of nonzero columns.
    """
    m, n = a.nrows, a.ncols
    h = [list(col) for col in a.columns()]
    u = [[int(i == j) for i in range(n)] for j in range(n)]
    pivot = 0
    for i in range(m):
        if pivot == n:
            break
        for j in range(pivot + 1, n):
            if h[j][i]:
                _combine(h, u, pivot, j, i)
        value = h[pivot][i]
        if value == 0:
            continue
        if value < 0:
            h[pivot] = [-v for v in h[pivot]]
            u[pivot] = [-v for v in u[pivot]]
            value = -value
        for j in range(pivot):
            q = h[j][i] // value
            if q:
                h[j] = [s - q * t for s, t in zip(h[j], h[pivot])]
                u[j] = [s - q * t for s, t in zip(u[j], u[pivot])]
        pivot += 1
    if 0 < pivot < n:
        _reduce_transform(u, pivot)
    return HnfResult(IntMatrix.from_columns(h, m), IntMatrix.from_columns(u, n), pivot)


def _reduce_transform(u: list[list[int]], rank: int):
    # kernel columns in Hermite form; pivot columns reduced modulo the kernel, which leaves a @ u unchanged
    n = len(u)
    kernel = hnf(IntMatrix.from_columns(u[rank:], n)).h.columns()
    u[rank:] = [list(c) for c in kernel]
    for c in kernel:
        p = next(i for i, v in enumerate(c) if v)
        for j in range(rank):
            q = u[j][p] // c[p]
            if q:
                u[j] = [s - q * t for s, t in zip(u[j], c)]


def solve_system(a: IntMatrix, b: Sequence[int]) -> LinearSolution | None:
    """Solve ``a @ y == b`` over the integers.

    Returns:
        ``None`` when there is no integer solution, otherwise a particular solution together
        with a basis of the integer kernel of ``a``.

    Raises:
        DimensionMismatchError: If ``len(b)`` differs from the row count.
    """
    if len(b) != a.nrows:
        raise DimensionMismatchError(f'right-hand side of length {len(b)} for {a.nrows} equations')
    h, u, rank = hnf(a)
    y = [0] * a.ncols
    t = 0
    for i in range(a.nrows):
        row = h.rows[i]
        acc = sum(row[j] * y[j] for j in range(t))
        if t < rank and row[t]:
            q, rem = divmod(b[i] - acc, row[t])
            if rem:
                return None
            y[t] = q
            t += 1
        elif acc != b[i]:
            return None
    return LinearSolution(u.apply(y), u.columns()[rank:])


def det(a: IntMatrix) -> int:
    """Determinant of a square matrix by fraction-free elimination."""
    if a.nrows != a.ncols:
        raise DimensionMismatchError(f'determinant of a {a.nrows}x{a.ncols} matrix')
    n = a.nrows
    if n == 0:
        return 1
    m = [list(row) for row in a.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def integer_sqrt_exact(n: int) -> int:
    if n < 0:
        raise NotIntegralError(f'negative value {n} has no square root')
    root = isqrt(n)
    if root * root != n:
        raise NotIntegralError(f'{n} is not a perfect square')
    return root


def det_of_basis(b: IntMatrix) -> int:
    """Volume of the fundamental parallelepiped spanned by the columns of ``b``.

    Computed as the square root of the Gram determinant, so it applies to bases of
    lower-dimensional lattices too. An empty basis has volume 1.

    Raises:
        NotIndependentError: If the columns are linearly dependent.
        NotIntegralError: If the Gram determinant is not a perfect square.
    """
    gram = b.transpose() @ b
    value = det(gram)
    if value == 0:
        raise NotIndependentError(f'{b.ncols} columns are linearly dependent')
    return integer_sqrt_exact(value)


def column_span_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer column span of ``m``: the nonzero columns of its Hermite form."""
    result = hnf(m)
    return IntMatrix.from_columns(result.h.columns()[: result.rank], m.nrows)


def rank(m: IntMatrix) -> int:
    return hnf(m).rank


def is_unimodular(u: IntMatrix) -> bool:
    return u.nrows == u.ncols and abs(det(u)) == 1


def ext_gcd_chain(u: Sequence[int]) -> list[GcdStep]:
    """Prefix gcds of ``u`` with Bezout coefficients.

    Step ``j`` holds ``g_j = gcd(u_1..u_j) > 0`` and coefficients ``a`` with ``sum(a_i * u_i) == g_j``.

    Raises:
        FirstZeroError: If ``u`` is empty or starts with zero.
    """
    if not u or u[0] == 0:
        raise FirstZeroError('gcd chain needs a nonzero first entry')
    steps = [GcdStep(abs(u[0]), (1 if u[0] > 0 else -1,))]
    for value in u[1:]:
        prev = steps[-1]
        g, x, y = xgcd(prev.gcd, value)
        steps.append(GcdStep(g, tuple(x * c for c in prev.coefficients) + (y,)))
    return steps
