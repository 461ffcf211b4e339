"""Deliberately naive reference implementations used only by the tests.

They work on an explicit arc dictionary and share no code with the library
beyond decoding the bit string.
"""

from fractions import Fraction
from itertools import combinations, permutations


def arcs_from_bits(n: int, bits: str) -> dict[tuple[int, int], bool]:
    """``arc[(i, j)]`` is True iff ``i -> j``, 1-based, for all ordered pairs."""
    arc = {}
    pairs = list(combinations(range(1, n + 1), 2))
    assert len(pairs) == len(bits)
    for (i, j), b in zip(pairs, bits):
        arc[(i, j)] = b == "1"
        arc[(j, i)] = b != "1"
    return arc


def matrix(n, arc):
    return [[0 if i == j else (1 if arc[(i, j)] else -1) for j in range(1, n + 1)]
            for i in range(1, n + 1)]


def det_fraction(m) -> int:
    """Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    assert det.denominator == 1
    return int(det)


def det_leibniz(m) -> int:
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
            if not prod:
                break
        total += -prod if inv % 2 else prod
    return total


def sub_det(n, arc, subset) -> int:
    s = sorted(subset)
    return det_fraction([[0 if i == j else (1 if arc[(i, j)] else -1) for j in s] for i in s])


def is_three_cycle(arc, a, b, c) -> bool:
    return (arc[(a, b)] and arc[(b, c)] and arc[(c, a)]) or (arc[(b, a)] and arc[(c, b)] and arc[(a, c)])


def is_diamond_def(arc, quad) -> bool:
    for v in quad:
        rest = [w for w in quad if w != v]
        if is_three_cycle(arc, *rest):
            if all(arc[(v, w)] for w in rest) or all(arc[(w, v)] for w in rest):
                return True
    return False


def count_diamonds(n, arc) -> int:
    return sum(is_diamond_def(arc, q) for q in combinations(range(1, n + 1), 4))


def switch_arcs(n, arc, w):
    w = set(w)
    out = {}
    for (i, j), v in arc.items():
        out[(i, j)] = (not v) if ((i in w) != (j in w)) else v
    return out


def is_transitive_arcs(n, arc) -> bool:
    return not any(is_three_cycle(arc, *t) for t in combinations(range(1, n + 1), 3))


def bits_of(n, arc) -> str:
    return "".join("1" if arc[p] else "0" for p in combinations(range(1, n + 1), 2))


def relabel_arcs(n, arc, order):
    """New vertex k is old ``order[k-1]``."""
    return {(i, j): arc[(order[i - 1], order[j - 1])]
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j}


def brute_canonical_bits(n, arc) -> str:
    """Greatest bit string over every relabeling."""
    return max(bits_of(n, relabel_arcs(n, arc, p)) for p in permutations(range(1, n + 1)))


def max_even_subdet(n, arc) -> int:
    best = 0
    for k in range(2, n + 1, 2):
        for s in combinations(range(1, n + 1), k):
            best = max(best, sub_det(n, arc, s))
    return best
