"""Division-free determinants over any commutative ring with + - *."""

from functools import lru_cache


def det(matrix, zero, one):
    """Laplace expansion along rows, memoized over the set of used columns.

    Works for ints, Fractions and truncated series alike; ``zero`` and ``one``
    are the ring's identities.  The empty matrix has determinant ``one``.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant needs a square matrix")

    @lru_cache(maxsize=None)
    def minor(row: int, used: int):
        if row == n:
            return one
        total = zero
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if not _is_zero(entry):
                term = entry * minor(row + 1, used | (1 << col))
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, 0)


def _is_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0
