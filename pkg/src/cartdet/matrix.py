"""Dense integer matrices with arbitrary-precision entries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Row-major dense matrix of Python ints.

    Instances are immutable; elimination routines copy the rows into a
    private workspace before touching them.
    """

    n_rows: int
    n_cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged rows")
        return cls(n_rows, n_cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> IntMatrix:
        n_cols = n_rows if n_cols is None else n_cols
        return cls(n_rows, n_cols, (0,) * (n_rows * n_cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(ij)
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.n_cols:(i + 1) * self.n_cols]

    def rows(self) -> list[list[int]]:
        """Fresh mutable copy of the rows."""
        c = self.n_cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.n_rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.n_cols,
            self.n_rows,
            tuple(self[i, j] for j in range(self.n_cols) for i in range(self.n_rows)),
        )

    def permute(self, perm: Sequence[int]) -> IntMatrix:
        """Return P·M·Pᵀ where P sends basis vector i to perm[i]."""
        if not self.is_square or sorted(perm) != list(range(self.n_rows)):
            raise ValueError("perm must be a permutation of the row indices")
        n = self.n_rows
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[perm[i]][perm[j]] = self[i, j]
        return IntMatrix.from_rows(out)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i]
            for i in range(self.n_rows)
            for j in range(i + 1, self.n_cols)
        )

    def row_sums(self) -> list[int]:
        return [sum(self.row(i)) for i in range(self.n_rows)]

    def tolist(self) -> list[list[int]]:
        return self.rows()

