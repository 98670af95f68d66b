"""Exact Gaussian elimination over QQ."""

from __future__ import annotations

from dataclasses import dataclass

from .rational import QQ, qq


@dataclass(frozen=True)
class LinearSolution:
    solution: tuple | None  # one particular solution (free variables set to 0), or None
    rank: int
    nullity: int  # dimension of the solution space when consistent

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve_linear(matrix, rhs) -> LinearSolution:
    """Solve ``matrix @ x = rhs`` exactly.

    ``matrix`` is a list of rows (possibly with zero rows or zero columns).
    """
    rows = [[qq(v) for v in row] for row in matrix]
    b = [qq(v) for v in rhs]
    if len(rows) != len(b):
        raise ValueError("row count of matrix and rhs differ")
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    aug = [r + [v] for r, v in zip(rows, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [vi - f * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    rank = len(pivots)
    if any(aug[i][ncols] != 0 for i in range(rank, len(aug))):
        return LinearSolution(None, rank, 0)
    x = [QQ(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return LinearSolution(tuple(x), rank, ncols - rank)
