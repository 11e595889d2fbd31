"""Exact integer determinants.

The engine is fraction-free elimination: every intermediate quantity is a
minor of the input matrix, every interior division is exact (checked, not
assumed), and the result is the exact determinant however large it grows.
Inputs whose values fit comfortably in machine words run through a
vectorized int64 path; anything at risk of overflow is recomputed with
Python's unbounded integers using the same elimination.

A cofactor-expansion oracle for tiny orders is included for
cross-validation. It shares no code with the elimination paths.
"""

from numbers import Integral

import numpy as np

from .matrices import ResidueMatrix

__all__ = ["determinant", "determinant_oracle"]

# Products of two values at or below this bound cannot overflow int64,
# even after the subtraction in the elimination update.
_I64_SAFE = 1 << 30

_ORACLE_MAX_ORDER = 7


def _to_rows(matrix) -> list[list[int]]:
    """Normalize to a fresh square list of Python ints."""
    if isinstance(matrix, ResidueMatrix):
        return matrix.entries.tolist()
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got ndim={matrix.ndim}")
        if matrix.dtype != object and not np.issubdtype(matrix.dtype, np.integer):
            raise TypeError(f"exact determinants need integer entries, got dtype {matrix.dtype}")
        rows = matrix.tolist()
    else:
        rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise ValueError("matrix must have order >= 1")
    for row in rows:
        if len(row) != n:
            raise ValueError(f"matrix must be square, got a row of length {len(row)} in order {n}")
        for v in row:
            if not isinstance(v, Integral):
                raise TypeError(f"exact determinants need integer entries, got {type(v).__name__}")
    return [[int(v) for v in row] for row in rows]


def determinant(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Accepts a ResidueMatrix, a numpy integer array, or nested sequences
    of ints. O(n^3) ring operations; the fraction-free update keeps the
    intermediate values polynomial in size instead of exploding the way
    naive division-free elimination would.
    """
    rows = _to_rows(matrix)
    n = len(rows)
    if n == 1:
        return rows[0][0]
    largest = max(abs(v) for row in rows for v in row)
    if largest <= _I64_SAFE:
        result = _eliminate_int64(np.array(rows, dtype=np.int64))
        if result is not None:
            return result
    return _eliminate_bigint(rows)


def _eliminate_int64(a: np.ndarray) -> "int | None":
    """Vectorized elimination. Bails out (returns None) before any step
    whose products could leave int64 range; the caller then reruns the
    computation on unbounded integers."""
    n = a.shape[0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        nz = np.flatnonzero(a[k:, k])
        if nz.size == 0:
            return 0
        r = k + int(nz[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            sign = -sign
        if int(np.abs(a[k:, k:]).max()) > _I64_SAFE:
            return None
        piv = int(a[k, k])
        num = piv * a[k + 1:, k + 1:] - np.outer(a[k + 1:, k], a[k, k + 1:])
        if prev != 1:
            if (num % prev).any():
                raise ArithmeticError("inexact interior division; elimination invariant broken")
            num //= prev
        a[k + 1:, k + 1:] = num
        prev = piv
    return sign * int(a[n - 1, n - 1])


def _eliminate_bigint(rows: list[list[int]]) -> int:
    """Reference elimination over unbounded ints. Mutates rows, which the
    caller hands over as scratch."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        piv = rows[k][k]
        top = rows[k]
        for i in range(k + 1, n):
            cur = rows[i]
            fac = cur[k]
            for j in range(k + 1, n):
                q, rem = divmod(piv * cur[j] - fac * top[j], prev)
                if rem:
                    raise ArithmeticError("inexact interior division; elimination invariant broken")
                cur[j] = q
        prev = piv
    return sign * rows[n - 1][n - 1]


def determinant_oracle(matrix) -> int:
    """Determinant by direct cofactor expansion, restricted to order <= 7.

    Factorially slow on purpose: this is an independent cross-check for
    the elimination engine, not a production path.
    """
    rows = _to_rows(matrix)
    if len(rows) > _ORACLE_MAX_ORDER:
        raise ValueError(f"oracle accepts orders up to {_ORACLE_MAX_ORDER}, got {len(rows)}")
    return _expand(rows)


def _expand(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for j in range(n):
        head = rows[0][j]
        if head:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += sign * head * _expand(minor)
        sign = -sign
    return total
