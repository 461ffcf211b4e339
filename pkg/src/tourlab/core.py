"""Tournament values, constructors, and labeled canonical forms.

A :class:`Tournament` on ``n`` vertices stores one out-neighbour bitmask per
vertex.  Every public function takes and returns 1-based vertex labels; the
masks use bit ``v - 1`` for vertex ``v``.

The serialized form is the upper-triangle bit string in pair order
``(1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n)`` where a ``1`` at pair
``(i,j)`` means ``i -> j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CapacityError, FormatError

MAX_ORDER = 64
MAX_CANONICAL_ORDER = 10


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """0-based vertex pairs ``(i, j)``, ``i < j``, in serialization order."""
    return tuple(combinations(range(n), 2))


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise CapacityError(f"tournament order must be in 1..{MAX_ORDER}, got {n}")


@dataclass(frozen=True, slots=True)
class Tournament:
    """Immutable n-tournament; ``rows[v]`` is the out-neighbour mask of vertex v+1."""

    n: int
    rows: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, bits={to_bits(self)!r})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def out_degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def scores(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)


def from_rows(rows: Sequence[int]) -> Tournament:
    """Build from 0-based out-neighbour masks; checks antisymmetry."""
    n = len(rows)
    _check_order(n)
    full = (1 << n) - 1
    for i, r in enumerate(rows):
        if r >> i & 1 or r & ~full:
            raise FormatError(f"row {i + 1} has a loop or an out-of-range bit")
    for i, j in pair_list(n):
        if (rows[i] >> j & 1) == (rows[j] >> i & 1):
            raise FormatError(f"pair ({i + 1},{j + 1}) is not oriented exactly once")
    return Tournament(n, tuple(rows))


def from_code(n: int, code: int) -> Tournament:
    """Decode the integer whose binary digits (most significant first) are the bits."""
    _check_order(n)
    m = num_pairs(n)
    if not 0 <= code < 1 << m:
        raise FormatError(f"code {code} out of range for n={n}")
    rows = [0] * n
    shift = m
    for i, j in pair_list(n):
        shift -= 1
        if code >> shift & 1:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(n, tuple(rows))


def to_code(t: Tournament) -> int:
    code = 0
    rows = t.rows
    for i, j in pair_list(t.n):
        code = (code << 1) | (rows[i] >> j & 1)
    return code


def from_bits(n: int, bits: str | Sequence[bool | int]) -> Tournament:
    """Build a tournament from its upper-triangle bit sequence.

    >>> to_bits(from_bits(3, "101"))
    '101'
    """
    _check_order(n)
    if isinstance(bits, str):
        if any(c not in "01" for c in bits):
            raise FormatError("bit string may contain only '0' and '1'")
        seq = [c == "1" for c in bits]
    else:
        seq = [bool(b) for b in bits]
    if len(seq) != num_pairs(n):
        raise FormatError(f"expected {num_pairs(n)} bits for n={n}, got {len(seq)}")
    code = 0
    for b in seq:
        code = (code << 1) | b
    return from_code(n, code)


def to_bits(t: Tournament) -> str:
    m = num_pairs(t.n)
    return format(to_code(t), f"0{m}b") if m else ""


def _vertex(t: Tournament, v: int) -> int:
    if not 1 <= v <= t.n:
        raise ValueError(f"vertex {v} not in 1..{t.n}")
    return v - 1


def dominates(t: Tournament, i: int, j: int) -> bool:
    """True iff ``i -> j``."""
    a, b = _vertex(t, i), _vertex(t, j)
    if a == b:
        raise ValueError("dominates needs two distinct vertices")
    return bool(t.rows[a] >> b & 1)


# -- vertex sets -------------------------------------------------------------


def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for v in vertices:
        if v < 1 or (n is not None and v > n):
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """1-based members of a mask in increasing order."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def bit_indices(mask: int) -> list[int]:
    """0-based set bits of a mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def induce_rows(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    """Rows of the subtournament on 0-based ``order`` (new vertex k = order[k])."""
    new = []
    for v in order:
        r = rows[v]
        m = 0
        for k, w in enumerate(order):
            if r >> w & 1:
                m |= 1 << k
        new.append(m)
    return tuple(new)


def induce(t: Tournament, x: Iterable[int]) -> Tournament:
    """Subtournament on ``x``, relabeled 1..|x| in increasing original order."""
    verts = sorted(set(x))
    if not verts:
        raise ValueError("cannot induce on an empty vertex set")
    for v in verts:
        _vertex(t, v)
    return Tournament(len(verts), induce_rows(t.rows, [v - 1 for v in verts]))


def relabel(t: Tournament, order: Sequence[int]) -> Tournament:
    """New vertex k is old vertex ``order[k-1]``; ``order`` must be a permutation."""
    if sorted(order) != list(range(1, t.n + 1)):
        raise ValueError("relabel needs a permutation of 1..n")
    return Tournament(t.n, induce_rows(t.rows, [v - 1 for v in order]))


def converse(t: Tournament) -> Tournament:
    """Reverse every arc."""
    full = t.full_mask
    return Tournament(t.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(t.rows)))


# -- constructors ------------------------------------------------------------


def transitive_tournament(n: int) -> Tournament:
    """``1 -> 2 -> ... -> n`` with every forward arc."""
    _check_order(n)
    full = (1 << n) - 1
    return Tournament(n, tuple(full & ~((1 << (v + 1)) - 1) for v in range(n)))


def three_cycle() -> Tournament:
    return from_bits(3, "101")


def join(t1: Tournament, t2: Tournament) -> Tournament:
    """Disjoint union with every vertex of ``t1`` dominating every vertex of ``t2``."""
    n1, n2 = t1.n, t2.n
    if n1 + n2 > MAX_ORDER:
        raise CapacityError(f"join would have {n1 + n2} > {MAX_ORDER} vertices")
    all2 = ((1 << n2) - 1) << n1
    rows = [r | all2 for r in t1.rows] + [r << n1 for r in t2.rows]
    return Tournament(n1 + n2, tuple(rows))


def cone_plus(t: Tournament) -> Tournament:
    """``T -> u``: append a vertex dominated by all others."""
    return join(t, transitive_tournament(1))


def cone_minus(t: Tournament) -> Tournament:
    """``u -> T``: prepend a vertex dominating all others."""
    return join(transitive_tournament(1), t)


# -- transitivity ------------------------------------------------------------


def transitive_order_rows(rows: Sequence[int]) -> list[int] | None:
    """0-based dominance order if transitive, else None.

    A tournament is transitive exactly when its scores are n-1, n-2, ..., 0.
    """
    n = len(rows)
    slot = [-1] * n
    for v, r in enumerate(rows):
        pos = n - 1 - r.bit_count()
        if slot[pos] >= 0:
            return None
        slot[pos] = v
    return slot


def transitive_order(t: Tournament) -> tuple[int, ...] | None:
    order = transitive_order_rows(t.rows)
    if order is None:
        return None
    # the score test is sufficient, but re-verify against the arcs
    for a in range(t.n):
        later = 0
        for b in order[a + 1:]:
            later |= 1 << b
        if t.rows[order[a]] != later:
            raise AssertionError("score-sorted order failed to re-verify")
    return tuple(v + 1 for v in order)


def is_transitive(t: Tournament) -> bool:
    return transitive_order_rows(t.rows) is not None


def has_three_cycle(t: Tournament) -> bool:
    """Brute-force 3-subset scan (independent of the score test)."""
    rows = t.rows
    for a, b, c in combinations(range(t.n), 3):
        ab, bc, ca = rows[a] >> b & 1, rows[b] >> c & 1, rows[c] >> a & 1
        if ab == bc == ca:
            return True
    return False


# -- canonical form ----------------------------------------------------------


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by out-degree into every other cell."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups, reverse=True):
                new.append(groups[sig])
        cells = new
        if not changed:
            return cells


def _leaf_code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for a in range(n):
        r = rows[order[a]]
        for b in range(a + 1, n):
            code = (code << 1) | (r >> order[b] & 1)
    return code


def _best_labeling(rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    best_code = -1
    best_order: tuple[int, ...] = ()

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            code = _leaf_code(rows, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(len(rows)))])
    return best_code, best_order


@lru_cache(maxsize=1 << 17)
def _canonical_rows(rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return _best_labeling(rows)


def canonical_labeling(t: Tournament) -> tuple[int, ...]:
    """1-based vertex order realizing :func:`canonical_form`."""
    if t.n > MAX_CANONICAL_ORDER:
        raise CapacityError(f"canonical form supports n <= {MAX_CANONICAL_ORDER}")
    return tuple(v + 1 for v in _canonical_rows(t.rows)[1])


def canonical_code(t: Tournament) -> int:
    """Isomorphism-invariant integer: the code of :func:`canonical_form`."""
    if t.n > MAX_CANONICAL_ORDER:
        raise CapacityError(f"canonical form supports n <= {MAX_CANONICAL_ORDER}")
    return _canonical_rows(t.rows)[0]


def canonical_form(t: Tournament) -> Tournament:
    """Isomorphism class representative.

    Vertices are ordered by individualization and equitable refinement (higher
    out-degree first), and the lexicographically greatest bit string among the
    resulting leaves wins.  Transitive tournaments map to the all-ones string.
    """
    return from_code(t.n, canonical_code(t))


def is_isomorphic(t1: Tournament, t2: Tournament) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)


# -- .trn text format --------------------------------------------------------


def format_trn(t: Tournament) -> str:
    return f"{t.n}\n{to_bits(t)}\n"


def parse_trn(text: str) -> Tournament:
    """Parse ``.trn`` text: decimal n on line 1, the bit string on line 2."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) not in (1, 2):
        raise FormatError(".trn must have exactly two lines")
    head = lines[0].strip()
    if not head.isdigit():
        raise FormatError(f"first line must be a decimal order, got {head!r}")
    n = int(head)
    _check_order(n)
    body = lines[1].strip() if len(lines) == 2 else ""
    return from_bits(n, body)


def read_trn(path: str | Path) -> Tournament:
    return parse_trn(Path(path).read_text())


def write_trn(path: str | Path, t: Tournament) -> None:
    Path(path).write_text(format_trn(t))
