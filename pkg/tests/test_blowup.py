import random

import pytest
from hypothesis import given, strategies as st

from conftest import tournaments
from oracles import arcs_from_bits, bits_of, det_fraction, matrix
from tourlab.blowup import (
    BlowupSpec,
    assemble_blowup,
    blowup,
    blowup_det_formula,
    detect_blowup_structure,
    nine_det_witness,
    transitive_blowup,
)
from tourlab.core import (
    from_code,
    induce,
    is_transitive,
    three_cycle,
    to_bits,
    transitive_tournament,
)
from tourlab.errors import CapacityError
from tourlab.linalg import determinant
from tourlab.lnfamily import make_ln


def blowup_oracle_bits(base, parts):
    """Arc dictionary built straight from the definition."""
    owner = []
    for k, p in enumerate(parts):
        owner += [(k, i) for i in range(1, p.n + 1)]
    barc = arcs_from_bits(base.n, to_bits(base))
    parcs = [arcs_from_bits(p.n, to_bits(p)) for p in parts]
    n = len(owner)
    arc = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            (ka, ia), (kb, ib) = owner[a - 1], owner[b - 1]
            arc[(a, b)] = parcs[ka][(ia, ib)] if ka == kb else barc[(ka + 1, kb + 1)]
    return n, arc


@st.composite
def blowup_specs(draw):
    base = draw(tournaments(min_n=1, max_n=5))
    sizes = draw(st.lists(st.integers(1, 3), min_size=base.n, max_size=base.n))
    parts = []
    for k in sizes:
        parts.append(from_code(k, draw(st.integers(0, (1 << (k * (k - 1) // 2)) - 1))))
    return BlowupSpec(base, tuple(parts))


@given(blowup_specs())
def test_blowup_matches_definition(spec):
    big, part_map = blowup(spec)
    n, arc = blowup_oracle_bits(spec.base, spec.parts)
    assert to_bits(big) == bits_of(n, arc)
    assert [len(p) for p in part_map] == [p.n for p in spec.parts]
    assert [v for p in part_map for v in p] == list(range(1, n + 1))
    for p, vs in zip(spec.parts, part_map):
        assert induce(big, vs) == p


def test_spec_validation():
    with pytest.raises(ValueError):
        BlowupSpec(three_cycle(), (three_cycle(),))
    with pytest.raises(ValueError):
        BlowupSpec.transitive(three_cycle(), [1, 0, 1])
    with pytest.raises(CapacityError):
        BlowupSpec.transitive(three_cycle(), [30, 30, 30])
    with pytest.raises(CapacityError):
        blowup_det_formula(three_cycle(), [30, 30, 30])


def test_formula_examples():
    l6 = make_ln(6)
    assert blowup_det_formula(l6, [2] * 6) == 1 == determinant(transitive_blowup(l6, [2] * 6))
    assert blowup_det_formula(l6, [1] * 6) == 25
    assert transitive_blowup(l6, [1] * 6) == l6


def test_formula_against_rational_oracle():
    rnd = random.Random(3)
    for _ in range(150):
        m = rnd.randint(1, 6)
        r = from_code(m, rnd.getrandbits(m * (m - 1) // 2))
        counts = [rnd.randint(1, 3) for _ in range(m)]
        if sum(counts) > 12:
            continue
        big = transitive_blowup(r, counts)
        n = big.n
        want = det_fraction(matrix(n, arcs_from_bits(n, to_bits(big))))
        assert blowup_det_formula(r, counts) == want


def test_nine_det_witness():
    rnd = random.Random(4)
    for _ in range(60):
        m = rnd.randint(2, 5)
        r = from_code(m, rnd.getrandbits(m * (m - 1) // 2))
        parts = [transitive_tournament(rnd.randint(1, 2)) for _ in range(m)]
        parts[rnd.randrange(m)] = from_code(4, rnd.choice([c for c in range(64)
                                                           if not is_transitive(from_code(4, c))]))
        big, _ = blowup(BlowupSpec(r, tuple(parts)))
        w = nine_det_witness(r, parts)
        n = big.n
        arc = arcs_from_bits(n, to_bits(big))
        s = sorted(w)
        sub = det_fraction([[0 if i == j else (1 if arc[(i, j)] else -1) for j in s] for i in s])
        assert sub == 9 * determinant(r)
        assert len(w) == m + 2
    with pytest.raises(ValueError):
        nine_det_witness(three_cycle(), [transitive_tournament(2)] * 3)


def test_detect_l6_with_doubled_vertex():
    t = transitive_blowup(make_ln(6), [2, 1, 1, 1, 1, 1])
    base, partition = detect_blowup_structure(t)
    assert base == make_ln(6)
    assert sorted(len(p) for p in partition) == [1, 1, 1, 1, 1, 2]
    assert assemble_blowup(base, partition) == t


def test_detect_absent():
    assert detect_blowup_structure(make_ln(6)) is None
    assert detect_blowup_structure(three_cycle()) is None


@given(blowup_specs())
def test_detect_round_trip(spec):
    counts = [p.n for p in spec.parts]
    t = transitive_blowup(spec.base, counts)
    found = detect_blowup_structure(t)
    if found is None:
        # any part of size >= 2 is a transitive module the greedy pass would merge
        assert all(a == 1 for a in counts)
        return
    base, partition = found
    assert assemble_blowup(base, partition) == t
    for part in partition:
        assert is_transitive(induce(t, part))


def test_assemble_rejects_bad_partitions():
    with pytest.raises(ValueError):
        assemble_blowup(three_cycle(), [(1,), (2,)])
    with pytest.raises(ValueError):
        assemble_blowup(three_cycle(), [(1,), (2,), (4,)])
