"""Blowups: substituting a tournament for each vertex of a base tournament."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import (
    MAX_ORDER,
    Tournament,
    bit_indices,
    induce,
    induce_rows,
    transitive_order_rows,
    transitive_tournament,
)
from .errors import CapacityError
from .linalg import determinant


@dataclass(frozen=True)
class BlowupSpec:
    base: Tournament
    parts: tuple[Tournament, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != self.base.n:
            raise ValueError("need exactly one part per base vertex")
        if sum(p.n for p in self.parts) > MAX_ORDER:
            raise CapacityError(f"blowup would exceed {MAX_ORDER} vertices")

    @classmethod
    def transitive(cls, base: Tournament, counts: Sequence[int]) -> "BlowupSpec":
        if len(counts) != base.n:
            raise ValueError("need exactly one count per base vertex")
        if any(a < 1 for a in counts):
            raise ValueError("part sizes must be positive")
        if sum(counts) > MAX_ORDER:
            raise CapacityError(f"blowup would exceed {MAX_ORDER} vertices")
        return cls(base, tuple(transitive_tournament(a) for a in counts))


def blowup(spec: BlowupSpec) -> tuple[Tournament, tuple[tuple[int, ...], ...]]:
    """Build ``R(T_1, ..., T_n)`` and the 1-based vertices each part occupies.

    Parts are laid out consecutively in base-vertex order.
    """
    base = spec.base
    offsets = []
    total = 0
    for p in spec.parts:
        offsets.append(total)
        total += p.n
    part_mask = [((1 << p.n) - 1) << off for p, off in zip(spec.parts, offsets)]
    rows = []
    for i, (p, off) in enumerate(zip(spec.parts, offsets)):
        cross = 0
        for j in bit_indices(base.rows[i]):
            cross |= part_mask[j]
        for r in p.rows:
            rows.append((r << off) | cross)
    part_map = tuple(tuple(range(off + 1, off + p.n + 1)) for p, off in zip(spec.parts, offsets))
    return Tournament(total, tuple(rows)), part_map


def transitive_blowup(base: Tournament, counts: Sequence[int]) -> Tournament:
    """``R(a_1, ..., a_n)`` with transitive parts."""
    return blowup(BlowupSpec.transitive(base, counts))[0]


def blowup_det_formula(base: Tournament, counts: Sequence[int]) -> int:
    """Determinant of ``R(a_1, ..., a_n)`` without building it.

    Equals ``det(R[U])`` for ``U`` the base vertices with odd ``a_i``, and 1
    when every count is even.
    """
    if len(counts) != base.n or any(a < 1 for a in counts):
        raise ValueError("need one positive count per base vertex")
    if sum(counts) > MAX_ORDER:
        raise CapacityError(f"blowup would exceed {MAX_ORDER} vertices")
    odd = [v + 1 for v, a in enumerate(counts) if a % 2]
    if not odd:
        return 1
    return determinant(induce(base, odd))


def _three_cycle(t: Tournament) -> tuple[int, int, int] | None:
    rows = t.rows
    for a, b, c in combinations(range(t.n), 3):
        if (rows[a] >> b & 1) == (rows[b] >> c & 1) == (rows[c] >> a & 1):
            return a, b, c
    return None


def nine_det_witness(base: Tournament, parts: Sequence[Tournament]) -> frozenset[int]:
    """Vertices of ``blowup(base, parts)`` inducing determinant ``9 * det(base)``.

    Takes a 3-cycle inside the first non-transitive part and the first vertex
    of every other part.
    """
    if base.n < 2:
        raise ValueError("the base needs at least two vertices")
    spec = BlowupSpec(base, tuple(parts))
    _, part_map = blowup(spec)
    for i, p in enumerate(spec.parts):
        cyc = _three_cycle(p)
        if cyc is not None:
            break
    else:
        raise ValueError("every part is transitive; no 3-cycle to use")
    chosen = {part_map[i][k] for k in cyc}
    chosen.update(part_map[j][0] for j in range(base.n) if j != i)
    return frozenset(chosen)


def _module_closure(rows: tuple[int, ...], full: int, mask: int) -> int:
    """Smallest vertex set containing ``mask`` that every outsider sees uniformly."""
    while True:
        grow = 0
        for w in bit_indices(full & ~mask):
            seen = rows[w] & mask
            if seen and seen != mask:
                grow |= 1 << w
        if not grow:
            return mask
        mask |= grow


def detect_blowup_structure(
    t: Tournament,
) -> tuple[Tournament, tuple[tuple[int, ...], ...]] | None:
    """Recover a transitive-blowup decomposition ``t = base(a_1, ..., a_m)``.

    Classes are grown greedily: a vertex joins the current class when the
    smallest uniformly-seen set containing both is still transitive.  Each
    class is returned in its internal dominance order; the base is induced on
    the first vertex of each class.  Returns None when every class is a
    singleton.
    """
    if t.n > 16:
        raise CapacityError("blowup detection supports n <= 16")
    rows = t.rows
    full = t.full_mask
    assigned = 0
    classes: list[int] = []
    for v in range(t.n):
        if assigned >> v & 1:
            continue
        cls = 1 << v
        for w in range(v + 1, t.n):
            if assigned >> w & 1:
                continue
            cand = _module_closure(rows, full, cls | 1 << w)
            if cand & assigned:
                continue
            if transitive_order_rows(induce_rows(rows, bit_indices(cand))) is not None:
                cls = cand
        assigned |= cls
        classes.append(cls)
    if len(classes) == t.n:
        return None
    classes.sort(key=lambda m: (m & -m))
    partition = []
    for m in classes:
        idx = bit_indices(m)
        order = transitive_order_rows(induce_rows(rows, idx))
        partition.append(tuple(idx[k] + 1 for k in order))
    reps = [min(p) for p in partition]
    base = induce(t, reps)
    # induce relabels in increasing order; classes are sorted by least member
    return base, tuple(partition)


def assemble_blowup(base: Tournament, partition: Sequence[Sequence[int]]) -> Tournament:
    """Transitive blowup of ``base`` laid out on explicit vertex labels.

    ``partition[k]`` lists, in dominance order, the 1-based labels that
    replace base vertex ``k + 1``; the labels must tile ``1..N``.
    """
    if len(partition) != base.n:
        raise ValueError("need exactly one part per base vertex")
    labels = [v for part in partition for v in part]
    total = len(labels)
    if sorted(labels) != list(range(1, total + 1)):
        raise ValueError("parts must tile 1..N")
    if total > MAX_ORDER:
        raise CapacityError(f"blowup would exceed {MAX_ORDER} vertices")
    masks = [sum(1 << (v - 1) for v in part) for part in partition]
    rows = [0] * total
    for k, part in enumerate(partition):
        cross = 0
        for j in bit_indices(base.rows[k]):
            cross |= masks[j]
        later = 0
        for v in reversed(part):
            rows[v - 1] = cross | later
            later |= 1 << (v - 1)
    return Tournament(total, tuple(rows))
