"""Diamond detection, the diamond census, and the bounds it obeys."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from fractions import Fraction
from math import comb

from .core import Tournament, bit_indices
from .errors import CapacityError, InvariantViolation
from .linalg import determinant

MAX_CENSUS_ORDER = 16


@dataclass(frozen=True)
class DiamondCensus:
    delta: int
    witnesses: tuple[frozenset[int], ...]


def _is_three_cycle(rows: tuple[int, ...], mask: int) -> bool:
    return all((rows[v] & mask).bit_count() == 1 for v in bit_indices(mask))


def diamond_on(rows: tuple[int, ...], mask: int) -> bool:
    """Whether the 4 vertices in ``mask`` induce a vertex dominating, or
    dominated by, a 3-cycle."""
    for v in bit_indices(mask):
        rest = mask & ~(1 << v)
        out = rows[v] & rest
        if (out == rest or out == 0) and _is_three_cycle(rows, rest):
            return True
    return False


def is_diamond(t4: Tournament) -> bool:
    """Structural diamond test, cross-checked against ``det == 9``."""
    if t4.n != 4:
        raise ValueError("is_diamond needs a 4-tournament")
    structural = diamond_on(t4.rows, 0b1111)
    if structural != (determinant(t4) == 9):
        raise InvariantViolation(f"diamond test disagrees with determinant on {t4!r}")
    return structural


def _check(t: Tournament) -> None:
    if t.n > MAX_CENSUS_ORDER:
        raise CapacityError(f"diamond census supports n <= {MAX_CENSUS_ORDER}")


def diamond_census(t: Tournament) -> DiamondCensus:
    _check(t)
    rows = t.rows
    found = []
    for quad in combinations(range(t.n), 4):
        mask = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        if diamond_on(rows, mask):
            found.append(frozenset(v + 1 for v in quad))
    return DiamondCensus(len(found), tuple(found))


def delta(t: Tournament) -> int:
    """Number of diamonds."""
    _check(t)
    rows = t.rows
    count = 0
    for quad in combinations(range(t.n), 4):
        if diamond_on(rows, (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])):
            count += 1
    return count


def first_diamond_mask(rows: tuple[int, ...]) -> int | None:
    """Lexicographically first diamond 4-subset as a 0-based mask."""
    for quad in combinations(range(len(rows)), 4):
        mask = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        if diamond_on(rows, mask):
            return mask
    return None


def delta_bounds(n: int) -> tuple[int, Fraction]:
    """``(n - 3, 2/5 * C(n, 4))``: the window a nonzero diamond count lies in."""
    return n - 3, Fraction(2 * comb(n, 4), 5)


def check_delta_bounds(t: Tournament, d: int | None = None) -> bool:
    """True iff delta is 0 or ``n - 3 <= delta <= 2/5 * C(n, 4)``."""
    if t.n < 5:
        raise ValueError("the diamond-count bounds need n >= 5")
    if d is None:
        d = delta(t)
    return delta_within_bounds(t.n, d)


def delta_within_bounds(n: int, d: int) -> bool:
    # 5 * d <= 2 * C(n, 4) keeps the upper bound in integers
    return d == 0 or (n - 3 <= d and 5 * d <= 2 * comb(n, 4))
