"""Exact integer determinants, plus determinants that are linear in a marked
entry weight x.

Everything here runs on Python's arbitrary-precision integers; there is no
rounding and no floating point anywhere.
"""

from dataclasses import dataclass


class NonlinearMarkError(ValueError):
    """det(base + x*bump) failed the degree <= 1 certification.

    This signals a caller bug: the bump pattern encodes more than one
    independently marked edge.
    """


def det_bareiss(mat) -> int:
    """Exact determinant via fraction-free single-step elimination.

    Every intermediate value is an integer (each elimination step divides
    exactly by the previous pivot), so bit growth stays bounded by the size
    of the minors.  The pivot is the first nonzero entry in the current
    column, with a sign-tracked row swap; a fully zero pivot column
    short-circuits to 0.  The 0 x 0 determinant is 1.
    """
    n = len(mat)
    if n == 0:
        return 1
    rows = [list(row) for row in mat]
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if rows[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        tail_k = rows[k][k + 1 :]
        for i in range(k + 1, n):
            row_i = rows[i]
            factor = row_i[k]
            row_i[k + 1 :] = [
                (pivot * a - factor * b) // prev
                for a, b in zip(row_i[k + 1 :], tail_k)
            ]
        prev = pivot
    return sign * rows[-1][-1]


@dataclass(frozen=True)
class LinPoly:
    """A polynomial alpha + beta*x with exact integer coefficients."""

    alpha: int
    beta: int

    def evaluate(self, x: int) -> int:
        return self.alpha + self.beta * x


@dataclass(frozen=True)
class MarkedMatrix:
    """Square integer matrix plus a sparse x-coefficient on a few entries.

    The bump holds (row, col, coefficient) triples and may touch at most four
    positions: the pattern of a single marked edge in a reduced Laplacian
    (two diagonal entries and the symmetric off-diagonal pair, fewer when one
    endpoint's row was the one deleted).
    """

    base: tuple[tuple[int, ...], ...]
    bump: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        dim = len(self.base)
        if any(len(row) != dim for row in self.base):
            raise ValueError("base matrix must be square")
        if len(self.bump) > 4:
            raise ValueError("bump may touch at most 4 positions")
        seen = set()
        for i, j, _coeff in self.bump:
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bump position ({i},{j}) out of range")
            if (i, j) in seen:
                raise ValueError(f"duplicate bump position ({i},{j})")
            seen.add((i, j))

    @property
    def dim(self) -> int:
        return len(self.base)

    def at(self, x: int) -> list[list[int]]:
        """The matrix base + x*bump as a fresh list of rows."""
        rows = [list(row) for row in self.base]
        for i, j, coeff in self.bump:
            rows[i][j] += coeff * x
        return rows


def det_linear_in_x(m: MarkedMatrix) -> LinPoly:
    """Coefficients (alpha, beta) of det(base + x*bump) = alpha + beta*x.

    alpha is the determinant at x=0 and beta the difference to x=1; a third
    evaluation at x=2 certifies that the determinant really is linear, which
    holds exactly when the bump encodes a single marked edge.
    """
    d0 = det_bareiss(m.base)
    d1 = det_bareiss(m.at(1))
    d2 = det_bareiss(m.at(2))
    alpha, beta = d0, d1 - d0
    if d2 != alpha + 2 * beta:
        raise NonlinearMarkError(
            "determinant is not linear in x; bump must mark a single edge"
        )
    return LinPoly(alpha, beta)
