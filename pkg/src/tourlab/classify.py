"""Membership in D_k: brute force over subtournaments, and structural
recognition for k <= 5 with machine-checkable certificates.

A tournament is in D_k when every subtournament has determinant at most k^2.
The structural recognizers exhibit ``T`` as a switch of a transitive blowup of
L_2, L_4 or L_6; :func:`verify_certificate` re-derives ``T`` from such a
certificate along a separate code path (blowup assembly, then switching).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import isqrt

from .blowup import assemble_blowup
from .core import (
    Tournament,
    bit_indices,
    induce_rows,
    members,
    transitive_order_rows,
)
from .diamonds import delta
from .errors import CapacityError, InvariantViolation
from .linalg import det_of_rows, determinant, subset_pfaffians
from .lnfamily import ln_labeling_rows, make_ln
from .patterns import twin_kind
from .switching import normalize_switch_mask, switch, switch_rows

MAX_BRUTE_ORDER = 12
MAX_RECOGNIZE_ORDER = 16

BASE_ORDER = {"L2": 2, "L4": 4, "L6": 6}
SIX_TABLE = frozenset({(0, 1), (3, 1), (3, 9), (4, 1), (4, 9), (5, 25), (6, 49), (6, 81)})


@dataclass(frozen=True)
class BlowupCertificate:
    """``switch(T, switch_set)`` is the transitive blowup of ``L_m`` whose
    k-th part is ``parts[k]`` (listed in dominance order)."""

    switch_set: frozenset[int]
    base_kind: str
    parts: tuple[tuple[int, ...], ...]

    @property
    def level(self) -> int:
        return BASE_ORDER[self.base_kind] - 1


@dataclass(frozen=True)
class ClassifyResult:
    level: int
    witness_subset: frozenset[int]
    certificate: BlowupCertificate | None


def verify_certificate(t: Tournament, cert: BlowupCertificate) -> bool:
    """Rebuild the blowup from the certificate, switch it, compare with ``t``."""
    if cert.base_kind not in BASE_ORDER:
        return False
    base = make_ln(BASE_ORDER[cert.base_kind])
    if len(cert.parts) != base.n or any(not p for p in cert.parts):
        return False
    try:
        rebuilt = assemble_blowup(base, cert.parts)
    except ValueError:
        return False
    if rebuilt.n != t.n:
        return False
    return switch(rebuilt, cert.switch_set) == t


# -- brute force -------------------------------------------------------------


def _check_brute(t: Tournament) -> None:
    if t.n > MAX_BRUTE_ORDER:
        raise CapacityError(f"subtournament scans support n <= {MAX_BRUTE_ORDER}")
    if t.n < 2:
        raise ValueError("D_k levels need at least one even subtournament (n >= 2)")


def max_subdet(t: Tournament) -> tuple[int, frozenset[int]]:
    """Largest determinant over nonempty even subtournaments, with the
    lexicographically least subset achieving it."""
    _check_brute(t)
    pf = subset_pfaffians(t)
    best = 0
    achievers: list[int] = []
    for mask in range(3, 1 << t.n):
        p = pf[mask]
        if not p:
            continue
        d = p * p
        if d > best:
            best, achievers = d, [mask]
        elif d == best:
            achievers.append(mask)
    witness = min(achievers, key=members)
    return best, frozenset(members(witness))


def in_dk(t: Tournament, k: int) -> bool:
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be a positive odd integer")
    return max_subdet(t)[0] <= k * k


# -- structural recognition ---------------------------------------------------


def _check_recognize(t: Tournament) -> None:
    if t.n > MAX_RECOGNIZE_ORDER:
        raise CapacityError(f"recognizers support n <= {MAX_RECOGNIZE_ORDER}")
    if t.n < 2:
        raise ValueError("certificates need n >= 2")


def _certificate(n: int, wmask: int, kind: str, parts: list[list[int]]) -> BlowupCertificate:
    w = normalize_switch_mask(wmask, n)
    return BlowupCertificate(
        frozenset(members(w)), kind, tuple(tuple(v + 1 for v in p) for p in parts)
    )


def _d1_rows(rows: tuple[int, ...]) -> BlowupCertificate | None:
    n = len(rows)
    # switch vertex 1 to a source; the class contains a transitive member iff
    # this representative is transitive
    w0 = 0
    for v in range(1, n):
        if rows[v] & 1:
            w0 |= 1 << v
    order = transitive_order_rows(switch_rows(rows, w0))
    if order is None:
        return None
    full = (1 << n) - 1
    # the transitive members of the class are the rotations of that order
    best = None
    prefix = 0
    for v in order:
        w = normalize_switch_mask(w0 ^ prefix, n)
        if best is None or w < best:
            best = w
        prefix |= 1 << v
    assert best is not None and best & 1 == 0 and best <= full
    final = transitive_order_rows(switch_rows(rows, best))
    assert final is not None
    # L_2 has u_2 -> u_1, so the source vertex replaces u_2
    return _certificate(n, best, "L2", [final[1:], final[:1]])


def recognize_d1(t: Tournament) -> BlowupCertificate | None:
    """Certificate that ``t`` switches to a transitive tournament.

    The switch set is the least normalized mask (vertex 1 excluded, compared as
    integers) among those producing a transitive tournament.
    """
    _check_recognize(t)
    return _d1_rows(t.rows)


@lru_cache(maxsize=1 << 16)
def _ln_switch(sub: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Least normalized local switch turning ``sub`` into L_m, with the labeling."""
    for m in range(0, 1 << len(sub), 2):
        order = ln_labeling_rows(switch_rows(sub, m))
        if order is not None:
            return m, tuple(order)
    return None


@lru_cache(maxsize=None)
def _subsets(n: int, k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """``(mask, members)`` for every k-subset of range(n), in lex order."""
    return tuple((sum(1 << v for v in c), c) for c in combinations(range(n), k))


def _is_diamond_fast(rows: tuple[int, ...], mask: int, quad: tuple[int, ...]) -> bool:
    # 4-tournament score multisets: diamonds are {3,1,1,1} and {2,2,2,0}
    a, b, c, d = quad
    sq = ((rows[a] & mask).bit_count() ** 2 + (rows[b] & mask).bit_count() ** 2
          + (rows[c] & mask).bit_count() ** 2 + (rows[d] & mask).bit_count() ** 2)
    return sq == 12


def _transitive_within(rows: tuple[int, ...], part: list[int], pmask: int) -> list[int] | None:
    """Dominance order of ``part`` when it induces a transitive subtournament."""
    size = len(part)
    slot = [-1] * size
    for v in part:
        pos = size - 1 - (rows[v] & pmask).bit_count()
        if slot[pos] >= 0:
            return None
        slot[pos] = v
    return slot


def _grow_from_core(rows: tuple[int, ...], core: int, kind: str) -> BlowupCertificate | None:
    """Extend an L_m-switchable core to a full blowup certificate, or fail."""
    n = len(rows)
    idx = bit_indices(core)
    found = _ln_switch(induce_rows(rows, idx))
    if found is None:
        return None
    local_w, local_order = found
    w_core = 0
    for k in bit_indices(local_w):
        w_core |= 1 << idx[k]
    base_vertices = [idx[k] for k in local_order]
    rows1 = switch_rows(rows, w_core)

    parts = [[s] for s in base_vertices]
    w_out = 0
    for v in range(n):
        if core >> v & 1:
            continue
        ctx = core | 1 << v
        hit = -1
        for k, s in enumerate(base_vertices):
            kind_ = twin_kind(rows1, v, s, ctx)
            if kind_:
                if hit >= 0:
                    return None
                hit = k
                if kind_ < 0:
                    w_out |= 1 << v
        if hit < 0:
            return None
        parts[hit].append(v)

    wmask = w_core ^ w_out
    rows2 = switch_rows(rows, wmask)
    base_rows = make_ln(len(base_vertices)).rows
    part_masks = [sum(1 << v for v in p) for p in parts]
    ordered = []
    for k, part in enumerate(parts):
        expect = 0
        for j in bit_indices(base_rows[k]):
            expect |= part_masks[j]
        outside = ~part_masks[k]
        for v in part:
            if rows2[v] & outside != expect:
                return None
        sub = _transitive_within(rows2, part, part_masks[k])
        if sub is None:
            return None
        ordered.append(sub)
    return _certificate(n, wmask, kind, ordered)


def recognize_d3(t: Tournament) -> BlowupCertificate | None:
    """Certificate of membership in D_3 (base L2 or L4), or None.

    Anchors on the first diamond, switches it to L_4, and assigns every other
    vertex to the unique diamond vertex it twins with.
    """
    _check_recognize(t)
    return _d3_rows(t.rows)


def _d3_rows(rows: tuple[int, ...]) -> BlowupCertificate | None:
    cert = _d1_rows(rows)
    if cert is not None:
        return cert
    for mask, quad in _subsets(len(rows), 4):
        if _is_diamond_fast(rows, mask, quad):
            return _grow_from_core(rows, mask, "L4")
    return None


def recognize_d5(t: Tournament) -> BlowupCertificate | None:
    """Certificate of membership in D_5 (base L2, L4 or L6), or None.

    Outside D_3 the anchor is the first 6-subset of determinant 25, switched
    to L_6; every other vertex must twin with exactly one anchor vertex.
    """
    _check_recognize(t)
    return _d5_rows(t.rows)


def _d5_rows(rows: tuple[int, ...]) -> BlowupCertificate | None:
    cert = _d3_rows(rows)
    if cert is not None:
        return cert
    for core, six in _subsets(len(rows), 6):
        if det_of_rows(induce_rows(rows, six)) == 25:
            return _grow_from_core(rows, core, "L6")
    return None


# -- classification ----------------------------------------------------------


def classify(t: Tournament) -> ClassifyResult:
    """Least odd k with ``t`` in D_k, a witness subset, and a certificate for k <= 5."""
    value, witness = max_subdet(t)
    level = isqrt(value)
    if level * level != value or level % 2 == 0:
        raise InvariantViolation(f"max subdeterminant {value} is not an odd square")
    cert = None
    if level <= 5:
        recognizer = {1: recognize_d1, 3: recognize_d3, 5: recognize_d5}[level]
        cert = recognizer(t)
        if cert is None or cert.level != level or not verify_certificate(t, cert):
            raise InvariantViolation(f"no valid level-{level} certificate for {t!r}")
    return ClassifyResult(level, witness, cert)


def six_profile(t6: Tournament) -> tuple[int, int]:
    """``(delta, det)`` of a 6-tournament, checked against the admissible table."""
    if t6.n != 6:
        raise ValueError("six_profile needs a 6-tournament")
    pair = (delta(t6), determinant(t6))
    if pair not in SIX_TABLE:
        raise InvariantViolation(f"(delta, det) = {pair} is outside the 6-tournament table")
    return pair
