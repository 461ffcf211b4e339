"""Switching: reversing every arc between a vertex set and its complement."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .core import (
    MAX_CANONICAL_ORDER,
    Tournament,
    canonical_code,
    from_code,
    members,
    to_mask,
)
from .errors import CapacityError


def switch_rows(rows: tuple[int, ...], wmask: int) -> tuple[int, ...]:
    n = len(rows)
    full = (1 << n) - 1
    comp = full & ~wmask
    out = []
    for v, r in enumerate(rows):
        if wmask >> v & 1:
            out.append((r & wmask) | (comp & ~r & ~(1 << v)))
        else:
            out.append((r & comp) | (wmask & ~r))
    return tuple(out)


def switch(t: Tournament, w: Iterable[int]) -> Tournament:
    """Reverse all arcs between ``w`` and its complement."""
    return Tournament(t.n, switch_rows(t.rows, to_mask(w, t.n)))


def switch_mask(t: Tournament, wmask: int) -> Tournament:
    return Tournament(t.n, switch_rows(t.rows, wmask))


def normalized_switch_masks(n: int) -> Iterator[int]:
    """The 2^(n-1) switch masks with vertex 1 excluded, in increasing order.

    Each unordered pair {W, V \\ W} appears exactly once.
    """
    for m in range(1 << max(n - 1, 0)):
        yield m << 1


def normalize_switch_mask(wmask: int, n: int) -> int:
    """Pick the member of {W, complement} that excludes vertex 1."""
    return ((1 << n) - 1) & ~wmask if wmask & 1 else wmask


def switching_equivalent_labeled(t1: Tournament, t2: Tournament) -> frozenset[int] | None:
    """A set W with ``switch(t1, W) == t2``, or None.

    Uses the diagonal-similarity criterion: with ``d_1 = +1`` the signs are
    forced along row 1, ``d_j = s2[1][j] * s1[1][j]``, and one pass verifies
    every other pair.
    """
    if t1.n != t2.n:
        return None
    r1, r2 = t1.rows[0], t2.rows[0]
    wmask = 0
    for j in range(1, t1.n):
        if (r1 >> j & 1) != (r2 >> j & 1):
            wmask |= 1 << j
    if switch_rows(t1.rows, wmask) != t2.rows:
        return None
    return frozenset(members(wmask))


def source_representative(rows: tuple[int, ...]) -> tuple[int, ...]:
    """The unique labeled switch of ``rows`` in which vertex 1 beats everyone."""
    w = 0
    for v in range(1, len(rows)):
        if rows[v] & 1:
            w |= 1 << v
    return switch_rows(rows, w)


@lru_cache(maxsize=1 << 14)
def _class_code(rep: tuple[int, ...]) -> int:
    n = len(rep)
    best = -1
    for m in normalized_switch_masks(n):
        c = canonical_code(Tournament(n, switch_rows(rep, m)))
        if c > best:
            best = c
    return best


def switching_canonical_code(t: Tournament) -> int:
    if t.n > MAX_CANONICAL_ORDER:
        raise CapacityError(f"switching classes are supported for n <= {MAX_CANONICAL_ORDER}")
    # every labeled class has one source representative, so cache on it
    return _class_code(source_representative(t.rows))


def switching_canonical(t: Tournament) -> Tournament:
    """Representative of the unlabeled switching class of ``t``.

    The greatest :func:`canonical_form` over the 2^(n-1) distinct switches,
    matching the orientation convention of ``canonical_form``.
    """
    return from_code(t.n, switching_canonical_code(t))


def switching_class(t: Tournament) -> list[Tournament]:
    """All 2^(n-1) labeled switches of ``t`` (normalized masks, increasing)."""
    return [Tournament(t.n, switch_rows(t.rows, m)) for m in normalized_switch_masks(t.n)]
