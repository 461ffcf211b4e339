import random
from itertools import combinations

import pytest

from oracles import arcs_from_bits, det_fraction, matrix, sub_det
from tourlab.core import from_bits, is_transitive, relabel, to_bits, transitive_tournament
from tourlab.errors import CapacityError, InvariantViolation
from tourlab.linalg import determinant, pfaffian, subset_pfaffians
from tourlab.lnfamily import (
    OneVertexReport,
    is_ln,
    ln_det,
    ln_labeling,
    make_ln,
    max_onevertex_ext_det,
    one_vertex_extension,
    q_matrix,
    q_recurrence,
    q_value,
)


def test_small_members():
    # u_2 beats u_1 only when 1 is even, so L_2 is the arc 2 -> 1
    assert to_bits(make_ln(2)) == "0" and is_transitive(make_ln(2))
    assert make_ln(4) == from_bits(4, "110110")
    assert to_bits(make_ln(6)) == "111101111110110"
    with pytest.raises(CapacityError):
        make_ln(1)
    with pytest.raises(CapacityError):
        make_ln(21)


@pytest.mark.parametrize("n", range(2, 17, 2))
def test_det_closed_form(n):
    t = make_ln(n)
    want = det_fraction(matrix(n, arcs_from_bits(n, to_bits(t))))
    assert ln_det(n) == determinant(t) == want == (n - 1) ** 2
    assert pfaffian(t) ** 2 == want
    if n >= 4:
        assert determinant(t) == determinant(make_ln(n - 2)) + 4 * (n - 2)


def test_det_examples():
    assert ln_det(8) == 49 and ln_det(2) == 1 and ln_det(16) == 225
    with pytest.raises(ValueError):
        ln_det(7)


def test_q_values():
    assert q_value(3) == 3 and q_value(5) == 5 and q_value(15) == 15
    assert q_value(4) == -3
    for m in range(3, 17):
        assert q_value(m) == q_recurrence(m) == det_fraction(q_matrix(m))
        if m % 2:
            assert q_value(m) == m
    for bad in (0, 1, 2):
        with pytest.raises(ValueError):
            q_value(bad)


def test_q_matrix_shape():
    assert q_matrix(3) == [[1, 0, 1], [-1, -1, 0], [1, -1, -1]]


def test_is_ln_and_labeling():
    rnd = random.Random(9)
    for n in (2, 4, 6, 8, 10):
        t = make_ln(n)
        order = list(range(1, n + 1))
        rnd.shuffle(order)
        r = relabel(t, order)
        assert is_ln(r)
        lab = ln_labeling(r)
        assert lab is not None and relabel(r, lab) == t
    assert not is_ln(transitive_tournament(6))
    assert ln_labeling(transitive_tournament(6)) is None
    with pytest.raises(CapacityError):
        is_ln(make_ln(12))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_one_vertex_sweep(n):
    rep = max_onevertex_ext_det(n)
    assert isinstance(rep, OneVertexReport) and rep.holds
    assert rep.max_det == (n - 1) ** 2 and rep.patterns_checked == 1 << (n - 1)
    # the maximum is reached exactly by the two fully alternating patterns
    assert all(len(a) == n - 1 for a in rep.achievers)
    best = max(determinant(one_vertex_extension(n, m)) for m in range(1 << (n - 1)))
    assert best == rep.max_det


def test_one_vertex_sweep_oracle_small():
    for n in (4, 6):
        best = 0
        for mask in range(1 << (n - 1)):
            t = one_vertex_extension(n, mask)
            best = max(best, det_fraction(matrix(n, arcs_from_bits(n, to_bits(t)))))
        assert best == (n - 1) ** 2


def test_subtournaments_of_l10():
    t = make_ln(10)
    pf = subset_pfaffians(t)
    spectrum = {p * p for p in pf[1:]}
    assert spectrum == {0, 1, 9, 25, 49, 81}
    assert max(pf[m] ** 2 for m in range(1, t.full_mask)) < 81
    # independent spot check of a few proper minors
    arc = arcs_from_bits(10, to_bits(t))
    for s in list(combinations(range(1, 11), 8))[:10]:
        assert sub_det(10, arc, s) == pf[sum(1 << (v - 1) for v in s)] ** 2


def test_invariant_violation_is_runtime_error():
    assert issubclass(InvariantViolation, RuntimeError)
