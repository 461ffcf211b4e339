"""Exact integer determinants and Pfaffians of skew-adjacency matrices.

Two independent routes are provided so that each can check the other:
Bareiss fraction-free elimination for ``det`` and the perfect-matching
expansion along the first row for ``pf``.  Python integers never overflow;
the order cap of 20 mirrors the 128-bit Hadamard bound the values respect.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .core import Tournament, from_rows
from .errors import CapacityError, FormatError

MAX_DET_ORDER = 20

Matrix = list[list[int]]


def skew_matrix(t: Tournament) -> Matrix:
    """``s[i][j] = 1`` if ``i -> j``, ``-1`` if ``j -> i``, zero diagonal."""
    n = t.n
    rows = t.rows
    return [[0 if i == j else (1 if rows[i] >> j & 1 else -1) for j in range(n)]
            for i in range(n)]


def bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _check_det_order(n: int) -> None:
    if n > MAX_DET_ORDER:
        raise CapacityError(f"determinants are supported for n <= {MAX_DET_ORDER}")


@lru_cache(maxsize=1 << 17)
def _det_rows(rows: tuple[int, ...]) -> int:
    n = len(rows)
    if n % 2:
        return 0
    m = [[0 if i == j else (1 if rows[i] >> j & 1 else -1) for j in range(n)]
         for i in range(n)]
    return bareiss(m)


def determinant(t: Tournament) -> int:
    """``det(S_T)``; zero for odd n, an odd square for even n."""
    _check_det_order(t.n)
    if t.n % 2:
        # the skew-symmetric identity det(S) = det(-S^T) = (-1)^n det(S)
        return 0
    return _det_rows(t.rows)


def det_of_rows(rows: tuple[int, ...]) -> int:
    """:func:`determinant` on raw out-neighbour masks (hot-loop entry point)."""
    return _det_rows(rows)


def _pf_rows(rows: Sequence[int], top: int) -> int:
    memo: dict[int, int] = {0: 1}

    def pf(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        ri = rows[i]
        total = 0
        sign = 1
        r = rest
        while r:
            lj = r & -r
            j = lj.bit_length() - 1
            s = 1 if ri >> j & 1 else -1
            total += sign * s * pf(rest ^ lj)
            sign = -sign
            r ^= lj
        memo[mask] = total
        return total

    return pf(top)


def pfaffian(t: Tournament) -> int:
    """Pfaffian by first-row matching expansion, memoized over vertex subsets.

    Sign convention: identity vertex order, the pair ``(1, j)`` term carries
    ``(-1)^(j-2)`` relative to the remaining vertices.
    """
    if t.n % 2:
        raise ValueError("the Pfaffian needs an even order")
    _check_det_order(t.n)
    return _pf_rows(t.rows, t.full_mask)


def subset_pfaffians(t: Tournament) -> list[int]:
    """``pf[mask]`` for every vertex subset (0 for odd subsets).

    Same first-row expansion as :func:`pfaffian`, filled bottom-up so that
    every principal Pfaffian is available: ``det(T[X]) = pf[mask(X)]**2``.
    """
    n = t.n
    if n > 16:
        raise CapacityError("subset Pfaffian table supports n <= 16")
    rows = t.rows
    size = 1 << n
    pf = [0] * size
    pf[0] = 1
    for mask in range(3, size):
        if mask.bit_count() & 1:
            continue
        low = mask & -mask
        ri = rows[low.bit_length() - 1]
        rest = mask ^ low
        total = 0
        sign = 1
        r = rest
        while r:
            lj = r & -r
            p = pf[rest ^ lj]
            if p:
                total += sign * p if ri & lj else -sign * p
            sign = -sign
            r ^= lj
        pf[mask] = total
    return pf


def from_skew_matrix(matrix: Sequence[Sequence[int]]) -> Tournament:
    """Inverse of :func:`skew_matrix`; rejects anything but a tournament's matrix."""
    n = len(matrix)
    if n == 0:
        raise FormatError("empty matrix")
    if any(len(r) != n for r in matrix):
        raise FormatError("matrix must be square")
    rows = [0] * n
    for i in range(n):
        if matrix[i][i] != 0:
            raise FormatError(f"diagonal entry ({i + 1},{i + 1}) must be 0")
        for j in range(i + 1, n):
            a, b = matrix[i][j], matrix[j][i]
            if (a, b) == (1, -1):
                rows[i] |= 1 << j
            elif (a, b) == (-1, 1):
                rows[j] |= 1 << i
            else:
                raise FormatError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must be +1/-1 and opposite")
    return from_rows(rows)


def format_matrix(t: Tournament) -> str:
    return "".join(" ".join(f"{x:2d}" for x in row) + "\n" for row in skew_matrix(t))


def parse_matrix(text: str) -> Tournament:
    """Whitespace-separated integer rows, one matrix row per line."""
    try:
        mat = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    except ValueError as exc:
        raise FormatError(f"matrix entries must be integers: {exc}") from None
    return from_skew_matrix(mat)
