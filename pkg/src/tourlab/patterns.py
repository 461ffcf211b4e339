"""How a vertex sees a transitive vertex set (psi), arc signs, and twin pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Tournament, induce_rows, to_mask, transitive_order_rows
from .errors import StructureError


@dataclass(frozen=True)
class PsiPattern:
    """Signed run lengths of a vertex's arcs against a transitive order.

    ``alphas[k] > 0`` means the vertex dominates every member of ``blocks[k]``;
    ``alphas[k] < 0`` means it is dominated by them.  Signs alternate.
    """

    alphas: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.alphas or any(a == 0 for a in self.alphas):
            raise ValueError("alphas must be a nonempty sequence of nonzero integers")
        if any(a * b > 0 for a, b in zip(self.alphas, self.alphas[1:])):
            raise ValueError("adjacent alphas must alternate in sign")
        if tuple(len(b) for b in self.blocks) != tuple(abs(a) for a in self.alphas):
            raise ValueError("block sizes must match |alpha|")

    @property
    def t(self) -> int:
        return len(self.alphas)

    def __str__(self) -> str:
        return " ".join(f"{a:+d}" for a in self.alphas)

    def arcs(self) -> dict[int, bool]:
        """Map each vertex of X to whether the pattern's vertex dominates it."""
        return {v: a > 0 for a, block in zip(self.alphas, self.blocks) for v in block}


def runs(signs: Iterable[bool]) -> tuple[int, ...]:
    """Maximal signed runs of a boolean sequence (True counts positive)."""
    out: list[int] = []
    for s in signs:
        step = 1 if s else -1
        if out and (out[-1] > 0) == s:
            out[-1] += step
        else:
            out.append(step)
    return tuple(out)


def psi_alphas(rows: tuple[int, ...], u: int, order: list[int]) -> tuple[int, ...]:
    """0-based fast path: runs of ``u``'s arcs along a known transitive order."""
    r = rows[u]
    return runs(bool(r >> v & 1) for v in order)


def psi(t: Tournament, u: int, x: Iterable[int]) -> PsiPattern:
    xs = sorted(set(x))
    if not 1 <= u <= t.n:
        raise ValueError(f"vertex {u} not in 1..{t.n}")
    if u in xs:
        raise ValueError("psi needs u outside X")
    if not xs:
        raise ValueError("psi needs a nonempty X")
    to_mask(xs, t.n)
    idx = [v - 1 for v in xs]
    sub = transitive_order_rows(induce_rows(t.rows, idx))
    if sub is None:
        raise StructureError("X does not induce a transitive subtournament")
    order = [idx[k] for k in sub]
    alphas = psi_alphas(t.rows, u - 1, order)
    blocks = []
    pos = 0
    for a in alphas:
        blocks.append(tuple(v + 1 for v in order[pos:pos + abs(a)]))
        pos += abs(a)
    return PsiPattern(alphas, tuple(blocks))


def arcs_from_pattern(pattern: PsiPattern) -> dict[int, bool]:
    return pattern.arcs()


def theta(t: Tournament, u: int, v: int) -> int:
    """``+1`` if ``u -> v`` else ``-1``."""
    if u == v:
        raise ValueError("theta needs distinct vertices")
    if not (1 <= u <= t.n and 1 <= v <= t.n):
        raise ValueError("vertex out of range")
    return 1 if t.rows[u - 1] >> (v - 1) & 1 else -1


def twin_kind(rows: tuple[int, ...], a: int, b: int, mask: int) -> int:
    """Relation of 0-based ``a, b`` as seen from the other vertices of ``mask``.

    Returns 1 for covertices, -1 for revertices, 0 for neither.  With no third
    vertex both relations hold vacuously and 1 is returned.
    """
    others = mask & ~(1 << a) & ~(1 << b)
    ra, rb = rows[a] & others, rows[b] & others
    if ra == rb:
        return 1
    if ra == others & ~rb:
        return -1
    return 0


def _pair(t: Tournament, u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError("need two distinct vertices")
    if not (1 <= u <= t.n and 1 <= v <= t.n):
        raise ValueError("vertex out of range")
    return u - 1, v - 1


def covertices(t: Tournament, u: int, v: int) -> bool:
    """Every third vertex is dominated by both or neither of ``u, v``."""
    a, b = _pair(t, u, v)
    others = t.full_mask & ~(1 << a) & ~(1 << b)
    return t.rows[a] & others == t.rows[b] & others


def revertices(t: Tournament, u: int, v: int) -> bool:
    """``u -> w`` exactly when ``w -> v``, for every third vertex ``w``."""
    a, b = _pair(t, u, v)
    others = t.full_mask & ~(1 << a) & ~(1 << b)
    return t.rows[a] & others == others & ~t.rows[b]
