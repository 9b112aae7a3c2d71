"""Exact determinant and rank over the integers (fraction-free elimination).

Both routines use Bareiss' two-step update

    a[i][j] <- (a[i][j] * pivot - a[i][k] * a[k][j]) // previous_pivot

which keeps every intermediate an integer minor of the input, so the
division is always exact. Pivots are the first nonzero entry scanning down
the column, making results reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, adjacency_matrix
from .matrix import IntMatrix


class InexactDivisionError(ArithmeticError):
    """A Bareiss division left a remainder (would indicate a bug)."""


@dataclass(frozen=True)
class RankReport:
    order: int
    rank: int
    nullity: int

    def __post_init__(self) -> None:
        if not 0 <= self.rank <= self.order or self.nullity != self.order - self.rank:
            raise ValueError(f"inconsistent rank report {self}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


def _eliminate_below(a: list[list[int]], r: int, c: int, prev: int, check: bool) -> None:
    """One Bareiss step: clear column ``c`` under pivot row ``r``."""
    pivot_row = a[r]
    pivot = pivot_row[c]
    tail = pivot_row[c + 1:]
    for i in range(r + 1, len(a)):
        row = a[i]
        factor = row[c]
        if check:
            if factor:
                new = [_exact_div(x * pivot - factor * y, prev) for x, y in zip(row[c + 1:], tail)]
            else:
                new = [_exact_div(x * pivot, prev) for x in row[c + 1:]]
        elif prev == 1:
            if factor:
                new = [x * pivot - factor * y for x, y in zip(row[c + 1:], tail)]
            else:
                new = [x * pivot for x in row[c + 1:]]
        elif factor:
            new = [(x * pivot - factor * y) // prev for x, y in zip(row[c + 1:], tail)]
        else:
            new = [x * pivot // prev for x in row[c + 1:]]
        row[c] = 0
        row[c + 1:] = new


def bareiss_det(m: IntMatrix, *, check: bool = False) -> int:
    """Exact determinant of a square integer matrix.

    With ``check=True`` every division is verified to leave no remainder
    and :class:`InexactDivisionError` is raised otherwise.
    """
    if not m.is_square:
        raise ValueError(f"determinant needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if n == 0:
        return 1
    a = m.rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        _eliminate_below(a, k, k, prev, check)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def exact_rank(m: IntMatrix, *, check: bool = False) -> RankReport:
    """Rank over the rationals using integer-only elimination.

    ``order`` is the number of columns, so ``nullity`` is the dimension of
    the right kernel (the usual graph nullity for square input).
    """
    a = m.rows()
    n_rows = m.n_rows
    r = 0
    prev = 1
    for c in range(m.n_cols):
        if r == n_rows:
            break
        for i in range(r, n_rows):
            if a[i][c] != 0:
                break
        else:
            continue
        if i != r:
            a[r], a[i] = a[i], a[r]
        _eliminate_below(a, r, c, prev, check)
        prev = a[r][c]
        r += 1
    return RankReport(order=m.n_cols, rank=r, nullity=m.n_cols - r)


def nullity_of(g: Graph) -> RankReport:
    return exact_rank(adjacency_matrix(g))
