"""Row-determinants of square matrices over a polynomial ring.

The row-determinant is the signed permutation sum in which each product
takes its factors in increasing row order.  That order is the load-bearing
convention for every noncommutative identity in this package; over the
commutative kind it coincides with the ordinary determinant.  The empty
(0 x 0) matrix has row-determinant 1.

``rowdet`` groups the permutation sum by expanding along the first row of
each submatrix (memoized on the remaining column set), which keeps every
product in row order and is sound over noncommutative rings; it computes
exactly the same signed sum as the literal n!-term expansion, which is
kept as ``rowdet_naive`` for cross-checks.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .algebra import Kind, MonomialKey, Polynomial
from .combinatorics import signed_permutations


class SquareMatrix:
    """An n x n array of polynomials sharing one ring kind."""

    __slots__ = ("n", "rows", "kind")

    def __init__(self, rows: Sequence[Sequence[Polynomial]], kind: Kind | None = None):
        self.rows = tuple(tuple(row) for row in rows)
        self.n = len(self.rows)
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError("matrix is not square")
        kinds = {entry.kind for row in self.rows for entry in row}
        if len(kinds) > 1:
            raise ValueError("matrix entries mix ring kinds")
        if kinds:
            inferred = kinds.pop()
            if kind is not None and kind is not inferred:
                raise ValueError("declared kind disagrees with entries")
            self.kind = inferred
        else:
            if kind is None:
                raise ValueError("empty matrix needs an explicit kind")
            self.kind = kind

    @classmethod
    def from_function(
        cls, n: int, entry: Callable[[int, int], Polynomial], kind: Kind | None = None
    ) -> "SquareMatrix":
        """Build from a 1-based entry function (i, j) -> polynomial."""
        return cls([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], kind)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i - 1][j - 1]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "SquareMatrix":
        """Select 1-based rows and columns (in the order given)."""
        if len(row_indices) != len(col_indices):
            raise ValueError("submatrix must be square")
        return SquareMatrix(
            [[self.rows[i - 1][j - 1] for j in col_indices] for i in row_indices],
            self.kind,
        )

    def leading(self, k: int) -> "SquareMatrix":
        """The top-left k x k block."""
        indices = list(range(1, k + 1))
        return self.submatrix(indices, indices)


def rowdet_naive(matrix: SquareMatrix) -> Polynomial:
    """The literal definition: signed sum over S_n of entry products in
    increasing row order.  Reference implementation; O(n! n)."""
    n = matrix.n
    if n == 0:
        return Polynomial.one(matrix.kind)
    rows = matrix.rows
    acc: dict[MonomialKey, int] = {}
    for sign, imgs in signed_permutations(n):
        term = rows[0][imgs[0]]
        for i in range(1, n):
            if term.is_zero():
                break
            term = term * rows[i][imgs[i]]
        for key, c in term.terms.items():
            c = acc.get(key, 0) + sign * c
            if c:
                acc[key] = c
            else:
                del acc[key]
    return Polynomial._raw(matrix.kind, acc)


def rowdet(matrix: SquareMatrix) -> Polynomial:
    """Signed sum over S_n of the entry products in increasing row order."""
    n = matrix.n
    if n == 0:
        return Polynomial.one(matrix.kind)
    if n <= 4:
        return rowdet_naive(matrix)
    rows = matrix.rows
    zero = Polynomial.zero(matrix.kind)
    memo: dict[int, Polynomial] = {0: Polynomial.one(matrix.kind)}

    def expand(mask: int) -> Polynomial:
        # rowdet of the trailing rows on the column set ``mask``
        cached = memo.get(mask)
        if cached is not None:
            return cached
        i = n - bin(mask).count("1")  # 0-based row for this level
        total = zero
        sign = 1
        remaining = mask
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            entry = rows[i][bit.bit_length() - 1]
            if not entry.is_zero():
                minor = expand(mask ^ bit)
                if not minor.is_zero():
                    piece = entry * minor
                    total = total + (piece if sign > 0 else -piece)
            sign = -sign
        memo[mask] = total
        return total

    return expand((1 << n) - 1)
