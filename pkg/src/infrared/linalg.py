"""Exact dense linear algebra over the rationals.

All matrices are immutable grids of ``fractions.Fraction``.  Inverses, ranks
and kernels are computed by exact Gaussian elimination; a singular inverse is
an error (`NotInvertible`), never a tolerance call.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInvertible, ShapeMismatch

Q = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class MatQ:
    """An immutable rows x cols matrix over Q."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(_frac(x) for x in row) for row in entries)
        self.entries = grid
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != self.cols:
                raise ShapeMismatch("ragged matrix rows")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(rows: int, cols: int) -> "MatQ":
        return MatQ([[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "MatQ":
        return MatQ([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def scalar(value, n: int = 1) -> "MatQ":
        v = _frac(value)
        return MatQ([[v if i == j else Q(0) for j in range(n)] for i in range(n)])

    @staticmethod
    def column(values: Sequence) -> "MatQ":
        return MatQ([[v] for v in values])

    @staticmethod
    def row(values: Sequence) -> "MatQ":
        return MatQ([list(values)])

    @staticmethod
    def from_blocks(blocks: Sequence[Sequence["MatQ"]]) -> "MatQ":
        """Assemble a block matrix from a grid of compatible blocks."""
        out: list[list[Fraction]] = []
        for block_row in blocks:
            height = block_row[0].rows
            for b in block_row:
                if b.rows != height:
                    raise ShapeMismatch("block heights disagree")
            for r in range(height):
                out.append([x for b in block_row for x in b.entries[r]])
        return MatQ(out)

    # -- basic queries -----------------------------------------------------

    def __getitem__(self, rc) -> Fraction:
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatQ)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"MatQ[{self.rows}x{self.cols}: {body}]"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MatQ") -> "MatQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix sum shape mismatch")
        return MatQ(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "MatQ") -> "MatQ":
        return self + (-other)

    def __neg__(self) -> "MatQ":
        return MatQ([[-x for x in row] for row in self.entries])

    def scale(self, s) -> "MatQ":
        s = _frac(s)
        return MatQ([[s * x for x in row] for row in self.entries])

    def __matmul__(self, other: "MatQ") -> "MatQ":
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.entries)) if other.entries else []
        return MatQ(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.entries
            ]
            if self.cols
            else [[Q(0)] * other.cols for _ in range(self.rows)]
        )

    @property
    def T(self) -> "MatQ":
        return MatQ(list(zip(*self.entries)) if self.entries else [])

    def power(self, k: int) -> "MatQ":
        if not self.is_square():
            raise ShapeMismatch("power of a non-square matrix")
        if k < 0:
            return self.inverse().power(-k)
        acc = MatQ.identity(self.rows)
        for _ in range(k):
            acc = acc @ self
        return acc

    # -- elimination -------------------------------------------------------

    def _rref(self):
        """Reduced row echelon form; returns (rref rows, pivot column list)."""
        m = [list(row) for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def inverse(self) -> "MatQ":
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = MatQ.from_blocks([[self, MatQ.identity(n)]])
        red, pivots = aug._rref()
        if pivots != list(range(n)):
            raise NotInvertible("singular matrix")
        return MatQ([row[n:] for row in red])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        m = [list(row) for row in self.entries]
        n = self.rows
        det = Q(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot is None:
                return Q(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def nullspace(self) -> list["MatQ"]:
        """Basis of the right kernel, as column vectors."""
        red, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Q(0)] * self.cols
            vec[fc] = Q(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -red[r][fc]
            basis.append(MatQ.column(vec))
        return basis

    def solve(self, rhs: "MatQ") -> "MatQ":
        """Solve self @ x = rhs for square invertible self."""
        return self.inverse() @ rhs

    # -- block access ------------------------------------------------------

    def submatrix(self, row_range, col_range) -> "MatQ":
        return MatQ(
            [[self.entries[r][c] for c in col_range] for r in row_range]
        )


def block_diagonal(blocks: Sequence[MatQ]) -> MatQ:
    sizes = [(b.rows, b.cols) for b in blocks]
    total_r = sum(r for r, _ in sizes)
    total_c = sum(c for _, c in sizes)
    out = [[Q(0)] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return MatQ(out)
