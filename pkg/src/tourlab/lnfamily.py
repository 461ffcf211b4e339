"""The L_n family: a transitive path plus one fully alternating vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MAX_CANONICAL_ORDER,
    Tournament,
    canonical_code,
    induce_rows,
    transitive_order_rows,
    transitive_tournament,
)
from .errors import CapacityError, InvariantViolation
from .linalg import bareiss, determinant
from .patterns import psi_alphas

MAX_LN_ORDER = 20


def make_ln(n: int) -> Tournament:
    """``u_1 -> ... -> u_{n-1}`` transitive; ``u_n`` beats ``u_k`` iff k is odd."""
    if not 2 <= n <= MAX_LN_ORDER:
        raise CapacityError(f"L_n is built for 2 <= n <= {MAX_LN_ORDER}")
    rows = list(transitive_tournament(n - 1).rows) + [0]
    apex = n - 1
    for k in range(n - 1):
        if k % 2 == 0:
            rows[apex] |= 1 << k
        else:
            rows[k] |= 1 << apex
    return Tournament(n, tuple(rows))


def q_matrix(m: int) -> list[list[int]]:
    """The bordered m x m matrix whose determinant is ``Q_m``.

    Column 1 alternates ``+1, -1, ...`` down the rows; for column c >= 2 the
    entry in row r is 0 on ``r = c - 1``, +1 above that band and -1 below.
    """
    if m < 3:
        raise ValueError("Q_m is defined for m >= 3")
    mat = []
    for r in range(1, m + 1):
        row = [(-1) ** (r - 1)]
        for c in range(2, m + 1):
            row.append(0 if r == c - 1 else (1 if r < c - 1 else -1))
        mat.append(row)
    return mat


def q_recurrence(m: int) -> int:
    """``Q_3 = 3``; ``Q_m = 2 - Q_{m-1}`` for odd m, ``-Q_{m-1}`` for even m."""
    if m < 3:
        raise ValueError("Q_m is defined for m >= 3")
    q = 3
    for k in range(4, m + 1):
        q = 2 - q if k % 2 else -q
    return q


def q_value(m: int) -> int:
    direct = bareiss(q_matrix(m))
    if direct != q_recurrence(m):
        raise InvariantViolation(f"Q_{m}: direct {direct} != recurrence {q_recurrence(m)}")
    return direct


def ln_det(n: int) -> int:
    """``(n - 1)^2``, checked against Bareiss and the two-step recurrence."""
    if n % 2:
        raise ValueError("det(L_n) is only claimed for even n")
    if not 2 <= n <= MAX_LN_ORDER:
        raise CapacityError(f"ln_det supports 2 <= n <= {MAX_LN_ORDER}")
    closed = (n - 1) ** 2
    direct = determinant(make_ln(n))
    rec = 1
    for k in range(4, n + 1, 2):
        rec += 4 * (k - 2)
    if not closed == direct == rec:
        raise InvariantViolation(f"det(L_{n}): closed {closed}, direct {direct}, recurrence {rec}")
    return closed


def _alternating(alphas: tuple[int, ...], length: int) -> bool:
    return len(alphas) == length and alphas[0] == 1


def ln_labeling_rows(rows: tuple[int, ...]) -> list[int] | None:
    """0-based order ``(u_1, ..., u_n)`` exhibiting ``rows`` as L_n, or None."""
    n = len(rows)
    if n == 1:
        return None
    for apex in range(n - 1, -1, -1):
        rest = [v for v in range(n) if v != apex]
        sub = transitive_order_rows(induce_rows(rows, rest))
        if sub is None:
            continue
        order = [rest[k] for k in sub]
        if _alternating(psi_alphas(rows, apex, order), n - 1):
            return order + [apex]
    return None


def ln_labeling(t: Tournament) -> tuple[int, ...] | None:
    """1-based vertex order under which ``t`` equals ``make_ln(n)``."""
    order = ln_labeling_rows(t.rows)
    return None if order is None else tuple(v + 1 for v in order)


def is_ln(t: Tournament) -> bool:
    """Isomorphism test against ``make_ln(t.n)`` via canonical forms."""
    if t.n > MAX_CANONICAL_ORDER:
        raise CapacityError(f"is_ln supports n <= {MAX_CANONICAL_ORDER}")
    if t.n < 2:
        return False
    return canonical_code(t) == canonical_code(make_ln(t.n))


@dataclass(frozen=True)
class OneVertexReport:
    n: int
    max_det: int
    achievers: tuple[tuple[int, ...], ...]
    patterns_checked: int

    @property
    def holds(self) -> bool:
        full = tuple((-1) ** k for k in range(self.n - 1))
        expected = {full, tuple(-a for a in full)}
        return self.max_det == (self.n - 1) ** 2 and set(self.achievers) == expected


def one_vertex_extension(n: int, mask: int) -> Tournament:
    """Transitive ``1 -> ... -> n-1`` plus vertex n beating exactly ``mask``."""
    rows = list(transitive_tournament(n - 1).rows) + [mask]
    for k in range(n - 1):
        if not mask >> k & 1:
            rows[k] |= 1 << (n - 1)
    return Tournament(n, tuple(rows))


def max_onevertex_ext_det(n: int) -> OneVertexReport:
    """Sweep every arc pattern of one vertex against a transitive (n-1)-set."""
    if n % 2 or n < 2:
        raise ValueError("the one-vertex sweep needs even n >= 2")
    if n > 10:
        raise CapacityError("the one-vertex sweep supports n <= 10")
    order = list(range(n - 1))
    best = -1
    achievers: list[tuple[int, ...]] = []
    for mask in range(1 << (n - 1)):
        t = one_vertex_extension(n, mask)
        d = determinant(t)
        alphas = psi_alphas(t.rows, n - 1, order)
        if d > best:
            best, achievers = d, [alphas]
        elif d == best:
            achievers.append(alphas)
    return OneVertexReport(n, best, tuple(sorted(achievers, reverse=True)), 1 << (n - 1))
