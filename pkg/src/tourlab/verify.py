"""Experiment harness: exhaustive and seeded sweeps that replay each claim.

Two kinds of evidence are combined here.  The library functions (determinant,
diamond census, recognizers, ...) are exercised on every member of a stated
population, and a separate vectorized oracle recomputes determinants from the
raw bit codes with a numpy Pfaffian recursion over vertex subsets.  Nothing in
the oracle touches :mod:`tourlab.linalg`.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt
from typing import Callable, Iterator

import numpy as np

from .blowup import BlowupSpec, blowup, blowup_det_formula, nine_det_witness, transitive_blowup
from .classify import (
    SIX_TABLE,
    classify,
    max_subdet,
    recognize_d3,
    recognize_d5,
    verify_certificate,
)
from .core import (
    Tournament,
    canonical_code,
    cone_plus,
    from_code,
    induce,
    induce_rows,
    is_transitive,
    join,
    num_pairs,
    relabel,
    to_bits,
    to_code,
    transitive_order_rows,
    transitive_tournament,
)
from .diamonds import delta, diamond_census, diamond_on, delta_within_bounds
from .errors import CapacityError
from .linalg import determinant, pfaffian, subset_pfaffians
from .lnfamily import (
    ln_det,
    make_ln,
    max_onevertex_ext_det,
    one_vertex_extension,
    q_recurrence,
    q_value,
)
from .patterns import covertices, psi, revertices, theta
from .switching import (
    normalized_switch_masks,
    source_representative,
    switch,
    switch_rows,
    switching_canonical_code,
)

MAX_FULL_ORDER = 7
MAX_SAMPLE_ORDER = 11
DEFAULT_SEED = 20240611


def default_threads() -> int:
    raw = os.environ.get("TOURLAB_THREADS", "")
    return int(raw) if raw.isdigit() and int(raw) > 0 else 1


# -- populations -------------------------------------------------------------


def enumerate_labeled(n: int) -> Iterator[Tournament]:
    """Every labeled n-tournament once, in increasing bit-code order."""
    if not 1 <= n <= MAX_FULL_ORDER:
        raise CapacityError(f"full enumeration supports 1 <= n <= {MAX_FULL_ORDER}")
    for code in range(1 << num_pairs(n)):
        yield from_code(n, code)


def sample_codes(n: int, count: int, seed: int) -> np.ndarray:
    """``count`` uniform codes of labeled n-tournaments from a seeded PCG64 stream."""
    if not 2 <= n <= MAX_SAMPLE_ORDER:
        raise CapacityError(f"sampling supports 2 <= n <= {MAX_SAMPLE_ORDER}")
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << num_pairs(n), size=count, dtype=np.int64)


def random_tournament(n: int, rng: np.random.Generator) -> Tournament:
    bits = rng.integers(0, 2, size=num_pairs(n))
    code = 0
    for b in bits:
        code = (code << 1) | int(b)
    return from_code(n, code)


def random_subset(n: int, rng: np.random.Generator, min_size: int = 1) -> list[int]:
    while True:
        pick = [v + 1 for v in range(n) if rng.random() < 0.5]
        if len(pick) >= min_size:
            return pick


# -- vectorized oracle -------------------------------------------------------


@lru_cache(maxsize=None)
def _pf_plan(n: int) -> tuple[tuple[int, tuple[tuple[int, int, int], ...]], ...]:
    """Expansion plan: for each even mask, the (pair index, submask, sign) terms."""
    pair_index = {p: k for k, p in enumerate(combinations(range(n), 2))}
    plan = []
    for mask in range(1, 1 << n):
        if mask.bit_count() % 2:
            continue
        members = [v for v in range(n) if mask >> v & 1]
        i = members[0]
        terms = []
        for pos, j in enumerate(members[1:]):
            sub = mask & ~(1 << i) & ~(1 << j)
            terms.append((pair_index[(i, j)], sub, 1 if pos % 2 == 0 else -1))
        plan.append((mask, tuple(terms)))
    return tuple(plan)


def batch_pfaffians(n: int, codes: np.ndarray) -> np.ndarray:
    """Array ``pf[mask, k]``: principal Pfaffian of subset ``mask`` of tournament ``codes[k]``."""
    codes = np.asarray(codes, dtype=np.int64)
    m = num_pairs(n)
    signs = np.empty((m, codes.size), dtype=np.int64)
    for p in range(m):
        signs[p] = ((codes >> (m - 1 - p)) & 1) * 2 - 1
    pf = np.zeros((1 << n, codes.size), dtype=np.int64)
    pf[0] = 1
    for mask, terms in _pf_plan(n):
        acc = pf[mask]
        for p, sub, sgn in terms:
            if sgn > 0:
                acc += signs[p] * pf[sub]
            else:
                acc -= signs[p] * pf[sub]
    return pf


@dataclass
class BatchStats:
    det: np.ndarray
    delta: np.ndarray
    max_subdet: np.ndarray

    @property
    def level(self) -> np.ndarray:
        lv = np.rint(np.sqrt(self.max_subdet)).astype(np.int64)
        return np.where(lv == 0, 1, lv)


@lru_cache(maxsize=None)
def _masks_by_size(n: int) -> dict[int, np.ndarray]:
    out: dict[int, list[int]] = {}
    for mask in range(1, 1 << n):
        out.setdefault(mask.bit_count(), []).append(mask)
    return {k: np.array(v) for k, v in out.items()}


def batch_stats(n: int, codes: np.ndarray, max_size: int | None = None) -> BatchStats:
    """Oracle determinant, diamond count and largest even subdeterminant.

    ``max_size`` limits the subsets considered for the maximum.
    """
    codes = np.asarray(codes, dtype=np.int64)
    pf = np.abs(batch_pfaffians(n, codes))
    det = pf[(1 << n) - 1] ** 2 if n % 2 == 0 else np.zeros(codes.size, dtype=np.int64)
    by_size = _masks_by_size(n)
    dia = (pf[by_size[4]] == 3).sum(axis=0) if n >= 4 else np.zeros(codes.size, dtype=np.int64)
    top = n if max_size is None else min(n, max_size)
    best = np.zeros(codes.size, dtype=np.int64)
    for size in range(2, top + 1, 2):
        best = np.maximum(best, pf[by_size[size]].max(axis=0))
    return BatchStats(det, dia.astype(np.int64), best ** 2)


def _chunks(total: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, total)) for a in range(0, total, size)]


def _pmap(fn: Callable, jobs: list, threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [fn(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, *zip(*jobs)))


# -- census ------------------------------------------------------------------


@dataclass
class Census:
    n: int
    population: int
    exhaustive: bool
    seed: int | None
    table: dict[tuple[int, int, int], int]

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [(d, dl, lv, c) for (d, dl, lv), c in sorted(self.table.items())]


def _census_chunk(n: int, a: int, b: int) -> Counter:
    st = batch_stats(n, np.arange(a, b, dtype=np.int64))
    return Counter(zip(st.det.tolist(), st.delta.tolist(), st.level.tolist()))


def _census_codes(n: int, codes: np.ndarray) -> Counter:
    st = batch_stats(n, codes)
    return Counter(zip(st.det.tolist(), st.delta.tolist(), st.level.tolist()))


def census(n: int, samples: int = 100_000, seed: int = DEFAULT_SEED, threads: int = 1) -> Census:
    """Frequencies of ``(det, delta, level)``: exhaustive for n <= 7, sampled above."""
    if n == 1:
        return Census(1, 1, True, None, {(0, 0, 1): 1})
    if n <= MAX_FULL_ORDER:
        jobs = [(n, a, b) for a, b in _chunks(1 << num_pairs(n), 1 << 15)]
        parts = _pmap(_census_chunk, jobs, threads)
        total, seed_used, full = 1 << num_pairs(n), None, True
    elif n <= 9:
        codes = sample_codes(n, samples, seed)
        jobs = [(n, codes[a:b]) for a, b in _chunks(samples, 1 << 13)]
        parts = _pmap(_census_codes, jobs, threads)
        total, seed_used, full = samples, seed, False
    else:
        raise CapacityError("census supports n <= 9")
    merged: Counter = Counter()
    for c in parts:
        merged.update(c)
    return Census(n, total, full, seed_used, dict(merged))


# -- recognizer sweep --------------------------------------------------------


@dataclass
class SweepResult:
    """Structural recognizer against the oracle over one population."""

    n: int
    count: int
    levels: dict[int, int]
    recognized: int
    mismatches: list[int] = field(default_factory=list)
    bad_certificates: list[int] = field(default_factory=list)
    bound_violations: list[int] = field(default_factory=list)
    mismatch_total: int = 0
    bad_total: int = 0
    bound_total: int = 0

    @property
    def ok(self) -> bool:
        return not (self.mismatch_total or self.bad_total or self.bound_total)

    def merge(self, other: "SweepResult") -> None:
        self.count += other.count
        for k, v in other.levels.items():
            self.levels[k] = self.levels.get(k, 0) + v
        self.recognized += other.recognized
        for name in ("mismatches", "bad_certificates", "bound_violations"):
            getattr(self, name).extend(getattr(other, name)[: 10 - len(getattr(self, name))])
        self.mismatch_total += other.mismatch_total
        self.bad_total += other.bad_total
        self.bound_total += other.bound_total


def _sweep(n: int, codes: np.ndarray, max_size: int | None, level_cap: int) -> SweepResult:
    st = batch_stats(n, codes, max_size)
    levels = st.level
    res = SweepResult(n, int(codes.size), dict(Counter(levels.tolist())), 0)
    if n >= 5:
        d = st.delta
        ok = (d == 0) | ((d >= n - 3) & (5 * d <= 2 * comb(n, 4)))
        bad = codes[~ok]
        res.bound_total = int(bad.size)
        res.bound_violations = [int(c) for c in bad[:10]]
    recognizer = recognize_d5 if level_cap == 5 else recognize_d3
    for code, lv in zip(codes.tolist(), levels.tolist()):
        t = from_code(n, code)
        cert = recognizer(t)
        inside = lv <= level_cap
        if (cert is not None) != inside:
            res.mismatch_total += 1
            if len(res.mismatches) < 10:
                res.mismatches.append(code)
        elif cert is not None:
            res.recognized += 1
            if cert.level != lv or not verify_certificate(t, cert):
                res.bad_total += 1
                if len(res.bad_certificates) < 10:
                    res.bad_certificates.append(code)
    return res


def _sweep_range(n: int, a: int, b: int, level_cap: int) -> SweepResult:
    return _sweep(n, np.arange(a, b, dtype=np.int64), None, level_cap)


def _sweep_codes(n: int, codes: np.ndarray, max_size: int | None, level_cap: int) -> SweepResult:
    return _sweep(n, codes, max_size, level_cap)


def sweep_recognizer(
    n: int,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    max_size: int | None = None,
    level_cap: int = 5,
    threads: int = 1,
) -> SweepResult:
    """Compare ``recognize_d5`` (or ``recognize_d3``) with the oracle.

    With ``samples`` None every labeled n-tournament is checked; otherwise a
    seeded sample.  Certificates are re-verified by reconstruction and must
    report the oracle's level.  The diamond-count window is checked en route.
    """
    if level_cap not in (3, 5):
        raise ValueError("level_cap must be 3 or 5")
    if n < 2:
        raise ValueError("the sweep needs n >= 2")
    if samples is None:
        if n > MAX_FULL_ORDER:
            raise CapacityError(f"full sweeps support n <= {MAX_FULL_ORDER}")
        jobs = [(n, a, b, level_cap) for a, b in _chunks(1 << num_pairs(n), 1 << 14)]
        parts = _pmap(_sweep_range, jobs, threads)
    else:
        codes = sample_codes(n, samples, seed)
        jobs = [(n, codes[a:b], max_size, level_cap) for a, b in _chunks(samples, 1 << 12)]
        parts = _pmap(_sweep_codes, jobs, threads)
    out = SweepResult(n, 0, {}, 0)
    for p in parts:
        out.merge(p)
    return out


# -- claim registry ----------------------------------------------------------


@dataclass(frozen=True)
class ClaimConfig:
    seed: int = DEFAULT_SEED
    samples: int = 500
    exhaustive_max: int = 6
    threads: int = 1


@dataclass
class ClaimReport:
    claim_id: str
    statement: str
    population: str
    count: int
    passed: bool
    counterexample: Tournament | None
    detail: str
    elapsed: float
    seed: int
    table: dict | None = None

    @property
    def outcome(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["outcome"] = self.outcome
        d["counterexample"] = (
            None if self.counterexample is None
            else {"n": self.counterexample.n, "bits": to_bits(self.counterexample)}
        )
        if self.table is not None:
            d["table"] = [[*k, v] if isinstance(k, tuple) else [k, v] for k, v in self.table.items()]
        return d


@dataclass
class _Outcome:
    population: str
    count: int
    counterexample: Tournament | None = None
    detail: str = ""
    table: dict | None = None


class _Scan:
    """Collects the first counterexample of a population scan."""

    def __init__(self) -> None:
        self.count = 0
        self.bad: Tournament | None = None
        self.why = ""

    def check(self, t: Tournament, ok: bool, why: str = "") -> None:
        self.count += 1
        if not ok and self.bad is None:
            self.bad, self.why = t, why

    def outcome(self, population: str, detail: str = "", table: dict | None = None) -> _Outcome:
        text = self.why if self.bad is not None else detail
        return _Outcome(population, self.count, self.bad, text, table)


def _claim_fzt(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    for t in enumerate_labeled(5):
        d = delta(t)
        s.check(t, d in (0, 2), f"delta = {d}")
    return s.outcome("all labeled 5-tournaments")


def _claim_sixdd(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    pairs: Counter = Counter()
    for t in enumerate_labeled(6):
        pair = (delta(t), determinant(t))
        pairs[pair] += 1
        s.check(t, pair in SIX_TABLE and pair[0] in (0, 3, 4, 5, 6), f"(delta, det) = {pair}")
    summary = ", ".join(f"{p}: {c}" for p, c in sorted(pairs.items()))
    return s.outcome("all labeled 6-tournaments", summary, dict(sorted(pairs.items())))


def _claim_resixdd(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    l6 = switching_canonical_code(make_ln(6))
    hits = 0
    for t in enumerate_labeled(6):
        preds = (
            determinant(t) == 25,
            delta(t) == 5,
            switching_canonical_code(t) == l6,
            max_subdet(t)[0] == 25,
        )
        hits += preds[0]
        s.check(t, len(set(preds)) == 1, f"predicates disagree: {preds}")
    return s.outcome("all labeled 6-tournaments", f"{hits} satisfy all four")


def _claim_djoin(cfg: ClaimConfig) -> _Outcome:
    rng = np.random.default_rng(cfg.seed)
    s = _Scan()
    for k in range(cfg.samples):
        if k % 2 == 0:
            p = 2 * int(rng.integers(1, 4))
            q = 2 * int(rng.integers(1, (14 - p) // 2 + 1))
        else:
            p = 2 * int(rng.integers(0, 3)) + 1
            q = 2 * int(rng.integers(0, (13 - p) // 2 + 1)) + 1
        t1, t2 = random_tournament(p, rng), random_tournament(q, rng)
        got = determinant(join(t1, t2))
        if p % 2 == 0:
            want = determinant(t1) * determinant(t2)
        else:
            want = determinant(cone_plus(t1)) * determinant(cone_plus(t2))
        s.check(join(t1, t2), got == want, f"det(join) = {got}, formula {want}")
    return s.outcome("seeded random pairs, both orders even or both odd, total <= 14")


def _claim_dettransi(cfg: ClaimConfig) -> _Outcome:
    rng = np.random.default_rng(cfg.seed)
    s = _Scan()
    for n in range(2, 21, 2):
        t = transitive_tournament(n)
        s.check(t, determinant(t) == 1, f"det = {determinant(t)}")
    for _ in range(cfg.samples):
        n = 2 * int(rng.integers(1, 7))
        t = relabel(transitive_tournament(n), [int(v) + 1 for v in rng.permutation(n)])
        s.check(t, determinant(t) == 1, f"det = {determinant(t)}")
    return s.outcome("transitive tournaments of even order 2..20, plus seeded relabelings")


def _claim_diamond(cfg: ClaimConfig) -> _Outcome:
    rng = np.random.default_rng(cfg.seed)
    s = _Scan()
    for _ in range(cfg.samples):
        n = int(rng.integers(4, 11))
        t = random_tournament(n, rng)
        w = random_subset(n, rng, 0)
        t2 = switch(t, w)
        a, b = diamond_census(t), diamond_census(t2)
        s.check(t, a == b, f"switch at {w} changes the diamond set")
    return s.outcome("seeded random (T, W), 4 <= n <= 10")


def _bounddia_step(t: Tournament) -> bool:
    """A diamond S and any fifth vertex v: S + v holds a second diamond through v."""
    census_ = diamond_census(t)
    if not census_.delta:
        return True
    first = sorted(census_.witnesses, key=sorted)[0]
    smask = sum(1 << (v - 1) for v in first)
    for v in range(t.n):
        if smask >> v & 1:
            continue
        through = [
            m for m in (smask & ~(1 << w) | 1 << v for w in range(t.n) if smask >> w & 1)
            if diamond_on(t.rows, m)
        ]
        if not through:
            return False
    return True


def _claim_bounddia(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    top = min(cfg.exhaustive_max, 6)
    for n in range(5, top + 1):
        for t in enumerate_labeled(n):
            d = delta(t)
            s.check(t, delta_within_bounds(n, d) and _bounddia_step(t), f"delta = {d}")
    pops = [f"all labeled n-tournaments for 5 <= n <= {top}"]
    if cfg.exhaustive_max >= 7:
        for a, b in _chunks(1 << 21, 1 << 15):
            codes = np.arange(a, b, dtype=np.int64)
            d = batch_stats(7, codes, 2).delta
            ok = (d == 0) | ((d >= 4) & (5 * d <= 2 * comb(7, 4)))
            s.count += codes.size - 1
            first = int(codes[~ok][0]) if not ok.all() else int(codes[0])
            s.check(from_code(7, first), bool(ok.all()), "window violated at n = 7")
        pops.append("all labeled 7-tournaments (oracle delta)")
    for n in (8, 9, 10):
        codes = sample_codes(n, cfg.samples, cfg.seed + n)
        d = batch_stats(n, codes, 2).delta
        for code, dv in zip(codes.tolist(), d.tolist()):
            s.check(from_code(n, code), delta_within_bounds(n, dv), f"delta = {dv}")
    pops.append(f"{cfg.samples} seeded samples each at n = 8, 9, 10")
    return s.outcome("; ".join(pops))


def _claim_diainl(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    for n in range(4, 8):
        x = list(range(1, n))
        for mask in range(1 << (n - 1)):
            t = one_vertex_extension(n, mask)
            pat = psi(t, n, x)
            block_of = {}
            for k, blk in enumerate(pat.blocks):
                for v in blk:
                    block_of[v] = k
            ok = True
            for quad in combinations(range(1, n + 1), 4):
                if not diamond_on(t.rows, sum(1 << (v - 1) for v in quad)):
                    continue
                if n not in quad:
                    ok = False
                    break
                ks = sorted(block_of[v] for v in quad if v != n)
                if len(set(ks)) != 3:
                    ok = False
                    break
                a1, a2, a3 = (pat.alphas[k] for k in ks)
                if not (a1 * a2 < 0 and a2 * a3 < 0):
                    ok = False
                    break
            s.check(t, ok, "a diamond misses the extra vertex or the block pattern")
    return s.outcome("transitive (n-1)-set plus one vertex, every arc pattern, 4 <= n <= 7")


def _random_counts(rng: np.random.Generator, m: int, total: int) -> list[int]:
    while True:
        a = [int(x) for x in rng.integers(1, 4, size=m)]
        if sum(a) <= total:
            return a


def _claim_blowup(cfg: ClaimConfig) -> _Outcome:
    rng = np.random.default_rng(cfg.seed)
    s = _Scan()
    for _ in range(cfg.samples):
        m = int(rng.integers(2, 8))
        r = random_tournament(m, rng)
        a = _random_counts(rng, m, 14)
        big = transitive_blowup(r, a)
        f, d = blowup_det_formula(r, a), determinant(big)
        s.check(big, f == d, f"formula {f} != direct {d} for counts {a}")
        even = [2 * int(x) for x in rng.integers(1, 3, size=m)]
        if sum(even) <= 14:
            big2 = transitive_blowup(r, even)
            s.check(big2, determinant(big2) == 1 == blowup_det_formula(r, even),
                    f"all-even counts {even} do not give 1")
    return s.outcome("seeded random (R, a) with total order <= 14")


def _claim_ninedet(cfg: ClaimConfig) -> _Outcome:
    rng = np.random.default_rng(cfg.seed)
    s = _Scan()
    done = 0
    while done < cfg.samples:
        m = int(rng.integers(2, 7))
        r = random_tournament(m, rng)
        sizes = [int(x) for x in rng.integers(1, 4, size=m)]
        sizes[int(rng.integers(0, m))] = int(rng.integers(3, 6))
        if sum(sizes) > 14:
            continue
        parts = [random_tournament(k, rng) for k in sizes]
        if all(is_transitive(p) for p in parts):
            continue
        done += 1
        big, _ = blowup(BlowupSpec(r, tuple(parts)))
        w = nine_det_witness(r, parts)
        got = determinant(induce(big, w))
        s.check(big, got == 9 * determinant(r), f"witness det {got}, expected 9 * {determinant(r)}")
    return s.outcome("seeded random bases with at least one non-transitive part")


def _claim_ledetln(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    vals = []
    for m in range(3, 17):
        q = q_value(m)
        vals.append(q)
        want = m if m % 2 else -(m - 1)
        # Q_m is the bordered determinant attached to L_{m+1}
        s.check(make_ln(m + 1), q == want == q_recurrence(m), f"Q_{m} = {q}")
    return s.outcome("m = 3..16", "Q = " + ", ".join(map(str, vals)))


def _claim_detln(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    vals = []
    for n in range(2, 17, 2):
        t = make_ln(n)
        d = ln_det(n)
        vals.append(d)
        s.check(t, determinant(t) == d == (n - 1) ** 2 and pfaffian(t) ** 2 == d,
                f"det(L_{n}) = {determinant(t)}")
    return s.outcome("L_n for even n = 2..16", "det = " + ", ".join(map(str, vals)))


def _claim_maxln(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    notes = []
    for n in range(2, 11, 2):
        rep = max_onevertex_ext_det(n)
        notes.append(f"n={n}: max {rep.max_det}")
        s.check(make_ln(n), rep.holds, f"n = {n}: max {rep.max_det}, achievers {rep.achievers}")
        s.count += rep.patterns_checked - 1
    return s.outcome("one-vertex extensions of transitive sets, even n = 2..10", "; ".join(notes))


def _claim_subln(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    for n in range(2, 11, 2):
        t = make_ln(n)
        pf = subset_pfaffians(t)
        full = t.full_mask
        worst = max((pf[m] ** 2 for m in range(1, full)), default=0)
        s.count += full - 1
        s.check(t, worst < (n - 1) ** 2 and pf[full] ** 2 == (n - 1) ** 2,
                f"L_{n}: a proper subtournament reaches {worst}")
    return s.outcome("every subtournament of L_n, even n = 2..10")


def _claim_anyoddsub(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    for k in range(1, 10, 2):
        t = make_ln(k + 1)
        pf = subset_pfaffians(t)
        spec_ = {pf[m] ** 2 for m in range(1, 1 << t.n)}
        want = {0} | {j * j for j in range(1, k + 1, 2)}
        level = classify(t).level if t.n >= 2 else 1
        s.check(t, spec_ == want and level == k, f"k = {k}: spectrum {sorted(spec_)}, level {level}")
    return s.outcome("L_{k+1} for odd k = 1..9", "spectra match and L_{k+1} has level exactly k")


def _claim_d5character(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    top = min(cfg.exhaustive_max, MAX_FULL_ORDER)
    levels: Counter = Counter()
    for n in range(2, top + 1):
        res = sweep_recognizer(n, threads=cfg.threads)
        levels.update({(n, k): v for k, v in res.levels.items()})
        s.count += res.count - 1
        bad = (res.mismatches + res.bad_certificates)[:1]
        s.check(from_code(n, bad[0]) if bad else make_ln(2), res.mismatch_total + res.bad_total == 0,
                f"n = {n}: {res.mismatch_total} disagreements, {res.bad_total} bad certificates")
    n = 8
    res = sweep_recognizer(n, samples=cfg.samples, seed=cfg.seed, threads=cfg.threads)
    s.count += res.count - 1
    bad = (res.mismatches + res.bad_certificates)[:1]
    s.check(from_code(n, bad[0]) if bad else make_ln(2), res.mismatch_total + res.bad_total == 0,
            f"n = 8: {res.mismatch_total} disagreements, {res.bad_total} bad certificates")
    summary = ", ".join(f"n={a} level {b}: {c}" for (a, b), c in sorted(levels.items()))
    return s.outcome(
        f"all labeled n-tournaments for 2 <= n <= {top}; {cfg.samples} seeded 8-tournaments",
        summary,
    )


@lru_cache(maxsize=1)
def _labeled_l6_copies() -> tuple[Tournament, ...]:
    target = canonical_code(make_ln(6))
    return tuple(t for t in enumerate_labeled(6) if canonical_code(t) == target)


def _l6_extensions() -> tuple[list[Tournament], np.ndarray]:
    """Every 7-tournament whose first six vertices induce a copy of L_6."""
    ts = []
    for base in _labeled_l6_copies():
        for mask in range(1 << 6):
            rows = list(base.rows) + [mask]
            for v in range(6):
                if not mask >> v & 1:
                    rows[v] |= 1 << 6
            ts.append(Tournament(7, tuple(rows)))
    return ts, np.array([to_code(t) for t in ts], dtype=np.int64)


def _twins_of_last(t: Tournament) -> list[int]:
    return [i for i in range(1, 7) if covertices(t, 7, i) or revertices(t, 7, i)]


def _claim_crforl6(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    ts, codes = _l6_extensions()
    levels = batch_stats(7, codes).level
    for t, lv in zip(ts, levels.tolist()):
        inside = lv == 5
        s.check(t, inside == bool(_twins_of_last(t)), f"level {lv}, twins {_twins_of_last(t)}")
    return s.outcome("7-tournaments whose first six vertices induce L_6 (every labeled copy)")


def _claim_cronlyone(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    ts, _ = _l6_extensions()
    for t in ts:
        tw = _twins_of_last(t)
        s.check(t, len(tw) <= 1, f"vertex 7 twins with {tw}")
    return s.outcome("7-tournaments whose first six vertices induce L_6 (every labeled copy)")


def _claim_mustcol6(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    l6 = make_ln(6)
    for i in range(6):
        for j in range(6):
            if i == j:
                continue
            for arcs in range(8):
                rows = list(l6.rows) + [0, 0]
                u1, u2 = 6, 7
                for v in range(6):
                    if v != i and l6.rows[i] >> v & 1:
                        rows[u1] |= 1 << v
                    elif v != i:
                        rows[v] |= 1 << u1
                    if v != j and l6.rows[j] >> v & 1:
                        rows[u2] |= 1 << v
                    elif v != j:
                        rows[v] |= 1 << u2
                if arcs & 1:
                    rows[u1] |= 1 << i
                else:
                    rows[i] |= 1 << u1
                if arcs & 2:
                    rows[u2] |= 1 << j
                else:
                    rows[j] |= 1 << u2
                if arcs & 4:
                    rows[u1] |= 1 << u2
                else:
                    rows[u2] |= 1 << u1
                t = Tournament(8, tuple(rows))
                inside = max_subdet(t)[0] == 25
                agree = theta(t, 7, 8) * theta(t, i + 1, j + 1) == 1
                s.check(t, inside == agree, f"i={i + 1}, j={j + 1}: level-5 {inside}, theta {agree}")
    return s.outcome("L_6 plus two covertex copies u1 ~ v_i, u2 ~ v_j, all arc choices")


def _claim_sixtran(cfg: ClaimConfig) -> _Outcome:
    s = _Scan()
    memo: dict[tuple[int, ...], tuple[bool, bool]] = {}
    quads = [sum(1 << v for v in c) for c in combinations(range(6), 4)]
    fives = [[v for v in range(6) if v != x] for x in range(6)]
    for t in enumerate_labeled(6):
        rep = source_representative(t.rows)
        hit = memo.get(rep)
        if hit is None:
            has4 = has5 = False
            for m in normalized_switch_masks(6):
                r = switch_rows(rep, m)
                has4 = has4 or any(
                    transitive_order_rows(induce_rows(r, [v for v in range(6) if q >> v & 1]))
                    is not None for q in quads)
                has5 = has5 or any(transitive_order_rows(induce_rows(r, f)) is not None for f in fives)
                if has4 and has5:
                    break
            hit = memo[rep] = (has4, has5)
        ok = hit[0] and (hit[1] or delta(t) >= 6)
        s.check(t, ok, f"switch search found transitive 4-set {hit[0]}, 5-set {hit[1]}")
    return s.outcome("all labeled 6-tournaments (switches searched per labeled class)")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    run: Callable[[ClaimConfig], _Outcome]


CLAIMS: dict[str, Claim] = {c.claim_id: c for c in [
    Claim("lemma-fzt", "every 5-tournament has 0 or 2 diamonds", _claim_fzt),
    Claim("prop-sixdd", "a 6-tournament's (delta, det) lies in the admissible table", _claim_sixdd),
    Claim("thm-resixdd", "on 6 vertices: det 25, delta 5, switching class of L_6 and level 5 coincide",
          _claim_resixdd),
    Claim("thm-djoin", "det of a join is the product of dets (even) or of cone dets (odd)", _claim_djoin),
    Claim("prop-dettransi", "even transitive tournaments have det 1", _claim_dettransi),
    Claim("lemma-diamond", "switching preserves every diamond and the diamond count", _claim_diamond),
    Claim("lemma-bounddia", "delta is 0 or lies in [n-3, 2/5 C(n,4)]", _claim_bounddia),
    Claim("lemma-diainl", "diamonds of a transitive set plus one vertex use it and three alternating blocks",
          _claim_diainl),
    Claim("prop-blowup", "det of a transitive blowup is det of the odd-part base vertices", _claim_blowup),
    Claim("prop-ninedet", "a non-transitive part yields a subtournament of det 9 det(R)", _claim_ninedet),
    Claim("lemma-ledetln", "Q_m = m for odd m and the recurrence matches the direct value", _claim_ledetln),
    Claim("thm-detln", "det(L_n) = (n-1)^2 for even n", _claim_detln),
    Claim("prop-maxln", "one vertex against a transitive set: det <= (n-1)^2, equality iff t = n-1",
          _claim_maxln),
    Claim("prop-subln", "proper subtournaments of L_n have det < (n-1)^2", _claim_subln),
    Claim("thm-anyoddsub", "the subtournament determinants of L_{k+1} are {0, 1, 9, ..., k^2}",
          _claim_anyoddsub),
    Claim("thm-d5character", "D_5 members are exactly switches of transitive blowups of L_2, L_4, L_6",
          _claim_d5character),
    Claim("prop-crforl6", "L_6 plus a vertex is level 5 iff the vertex twins with an L_6 vertex",
          _claim_crforl6),
    Claim("prop-mustcol6", "two added twins keep level 5 iff their arc agrees with their anchors' arc",
          _claim_mustcol6),
    Claim("cor-cronlyone", "a vertex added to L_6 twins with at most one L_6 vertex", _claim_cronlyone),
    Claim("prop-sixtran", "some switch of a 6-tournament has a transitive 4-set (5-set if delta < 6)",
          _claim_sixtran),
]}


def run_claim(claim_id: str, config: ClaimConfig | None = None) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim id {claim_id!r}; known: {', '.join(CLAIMS)}")
    cfg = config or ClaimConfig()
    claim = CLAIMS[claim_id]
    start = time.perf_counter()
    out = claim.run(cfg)
    elapsed = time.perf_counter() - start
    return ClaimReport(
        claim_id=claim_id,
        statement=claim.statement,
        population=out.population,
        count=out.count,
        passed=out.counterexample is None,
        counterexample=out.counterexample,
        detail=out.detail,
        elapsed=elapsed,
        seed=cfg.seed,
        table=out.table,
    )


def run_all(config: ClaimConfig | None = None) -> list[ClaimReport]:
    return [run_claim(cid, config) for cid in CLAIMS]


def check_d3_six_subsets(t: Tournament) -> bool:
    """Whether every 6-subtournament lies in D_3 (brute force per subset)."""
    if t.n < 6:
        return max_subdet(t)[0] <= 9 if t.n >= 2 else True
    return all(max_subdet(induce(t, s))[0] <= 9 for s in combinations(range(1, t.n + 1), 6))


def d3_local_check(n: int, samples: int, seed: int) -> tuple[int, list[int]]:
    """Recognizer membership in D_3 against the all-6-subsets test on samples."""
    codes = sample_codes(n, samples, seed)
    bad = []
    for code in codes.tolist():
        t = from_code(n, code)
        if (recognize_d3(t) is not None) != check_d3_six_subsets(t):
            bad.append(code)
    return int(codes.size), bad
