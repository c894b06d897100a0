"""Dense arbitrary-precision integer matrices and exact determinants.

Python ints are unbounded, so everything here is exact by construction; the
Bareiss routine keeps intermediate values fraction-free. A Leibniz-expansion
oracle (capped at 9x9) provides the independent verification path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, UnsupportedSizeError

ORACLE_SIZE_LIMIT = 9


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InputError("entry grid does not match declared dimensions")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        grid = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(rows=len(grid), cols=len(grid[0]) if grid else 0, entries=grid)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def kronecker_matrix(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Block matrix whose (i,j) block is b[i][j] * A.

    This is the transpose-block arrangement of the more common convention;
    determinants of square inputs are unaffected.
    """
    grid = []
    for i in range(b.rows):
        for p in range(a.rows):
            row = []
            for j in range(b.cols):
                scale = b.entries[i][j]
                row.extend(scale * x for x in a.entries[p])
            grid.append(tuple(row))
    return IntMatrix(rows=a.rows * b.rows, cols=a.cols * b.cols, entries=tuple(grid))


def antidiagonal_j(size: int) -> IntMatrix:
    """Ones on the antidiagonal, zeros elsewhere."""
    if size < 1:
        raise InputError("size must be at least 1")
    return IntMatrix.from_rows(
        [[1 if j == size - 1 - i else 0 for j in range(size)] for i in range(size)]
    )


def determinant(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    if not m.is_square:
        raise InputError("determinant requires a square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # Bareiss identity: the division is exact.
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_oracle(m: IntMatrix) -> int:
    """Signed permutation (Leibniz) expansion; limited to 9x9."""
    if not m.is_square:
        raise InputError("determinant requires a square matrix")
    if m.rows > ORACLE_SIZE_LIMIT:
        raise UnsupportedSizeError(f"oracle limited to {ORACLE_SIZE_LIMIT}x{ORACLE_SIZE_LIMIT}")
    n = m.rows
    entries = m.entries
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term *= entries[i][perm[i]]
            if term == 0:
                break
        if term == 0:
            continue
        total += term if _permutation_sign(perm) > 0 else -term
    return total


def _permutation_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        cycle = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign
