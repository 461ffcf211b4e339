import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import tournaments
from oracles import arcs_from_bits, max_even_subdet, sub_det
from tourlab.blowup import transitive_blowup
from tourlab.classify import (
    BlowupCertificate,
    classify,
    in_dk,
    max_subdet,
    recognize_d1,
    recognize_d3,
    recognize_d5,
    six_profile,
    verify_certificate,
)
from tourlab.core import (
    from_bits,
    from_code,
    is_transitive,
    join,
    relabel,
    three_cycle,
    to_bits,
    transitive_tournament,
)
from tourlab.errors import CapacityError
from tourlab.lnfamily import make_ln
from tourlab.switching import normalized_switch_masks, switch, switch_mask

L4 = from_bits(4, "110110")


def scramble(t, rnd):
    order = list(range(1, t.n + 1))
    rnd.shuffle(order)
    w = [v for v in range(1, t.n + 1) if rnd.random() < 0.5]
    return relabel(switch(t, w), order)


def test_max_subdet_examples():
    assert max_subdet(make_ln(6)) == (25, frozenset(range(1, 7)))
    assert max_subdet(make_ln(8)) == (49, frozenset(range(1, 9)))
    for n in (2, 5, 9):
        assert max_subdet(transitive_tournament(n)) == (1, frozenset({1, 2}))
    with pytest.raises(CapacityError):
        max_subdet(transitive_tournament(13))
    with pytest.raises(ValueError):
        max_subdet(transitive_tournament(1))


@given(tournaments(min_n=2, max_n=7))
def test_max_subdet_matches_oracle(t):
    value, witness = max_subdet(t)
    arc = arcs_from_bits(t.n, to_bits(t))
    assert value == max_even_subdet(t.n, arc)
    assert sub_det(t.n, arc, witness) == value
    # lexicographically least achiever, as a sorted tuple
    assert min(
        (s for k in range(2, t.n + 1, 2) for s in combinations(range(1, t.n + 1), k)
         if sub_det(t.n, arc, s) == value)
    ) == tuple(sorted(witness))


def test_in_dk_examples():
    l6 = make_ln(6)
    assert in_dk(l6, 5) and not in_dk(l6, 3)
    assert in_dk(L4, 3) and not in_dk(L4, 1)
    for k in (5, 7, 9, 11):
        assert in_dk(l6, k)
    for bad in (0, 2, -1):
        with pytest.raises(ValueError):
            in_dk(l6, bad)


def test_d1_examples():
    cert = recognize_d1(transitive_tournament(7))
    assert cert is not None and cert.switch_set == frozenset() and cert.base_kind == "L2"
    assert verify_certificate(transitive_tournament(7), cert)
    assert recognize_d1(L4) is None
    rnd = random.Random(1)
    for _ in range(50):
        w = [v for v in range(1, 9) if rnd.random() < 0.5]
        t = switch(transitive_tournament(8), w)
        cert = recognize_d1(t)
        assert cert is not None and verify_certificate(t, cert) and cert.level == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_d1_switch_set_is_least_normalized(n):
    for code in range(0, 1 << (n * (n - 1) // 2), 7):
        t = from_code(n, code)
        brute = [m for m in normalized_switch_masks(n) if is_transitive(switch_mask(t, m))]
        cert = recognize_d1(t)
        if not brute:
            assert cert is None
        else:
            assert cert is not None
            assert sum(1 << (v - 1) for v in cert.switch_set) == brute[0]


def test_d3_examples():
    t = transitive_blowup(L4, [3, 1, 2, 1])
    cert = recognize_d3(t)
    assert cert is not None and cert.base_kind == "L4" and verify_certificate(t, cert)
    assert sorted(len(p) for p in cert.parts) == [1, 1, 2, 3]
    assert recognize_d3(make_ln(6)) is None


def test_d5_round_trips():
    rnd = random.Random(6)
    l6 = make_ln(6)
    for _ in range(500):
        counts = [rnd.randint(1, 3) for _ in range(6)]
        while sum(counts) > 16:
            counts = [rnd.randint(1, 3) for _ in range(6)]
        t = scramble(transitive_blowup(l6, counts), rnd)
        cert = recognize_d5(t)
        assert cert is not None and verify_certificate(t, cert)
        assert cert.base_kind == "L6" and sorted(map(len, cert.parts)) == sorted(counts)
    assert recognize_d5(make_ln(8)) is None


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_recognizers_exhaustive_small(n):
    for code in range(1 << (n * (n - 1) // 2)):
        t = from_code(n, code)
        value = max_even_subdet(n, arcs_from_bits(n, to_bits(t)))
        for k, rec in ((1, recognize_d1), (3, recognize_d3), (5, recognize_d5)):
            cert = rec(t)
            assert (cert is not None) == (value <= k * k)
            if cert is not None:
                assert verify_certificate(t, cert)
                assert cert.level ** 2 == value


def test_verify_certificate_rejects_tampering():
    t = transitive_blowup(make_ln(6), [2, 1, 1, 1, 1, 1])
    cert = recognize_d5(t)
    assert verify_certificate(t, cert)
    bad = [
        BlowupCertificate(cert.switch_set ^ {1}, cert.base_kind, cert.parts),
        BlowupCertificate(cert.switch_set, "L4", cert.parts),
        BlowupCertificate(cert.switch_set, "L8", cert.parts),
        BlowupCertificate(cert.switch_set, "L6", cert.parts[:-1] + ((),)),
        BlowupCertificate(cert.switch_set, "L6", cert.parts[1:] + cert.parts[:1]),
    ]
    for b in bad:
        assert not verify_certificate(t, b)


def test_classify_examples():
    r = classify(transitive_blowup(make_ln(6), [1, 2, 1, 1, 1, 1]))
    assert r.level == 5 and r.certificate is not None and r.certificate.base_kind == "L6"
    r = classify(transitive_tournament(10))
    assert r.level == 1 and r.witness_subset == frozenset({1, 2})
    r = classify(join(three_cycle(), three_cycle()))
    assert r.level == 9 and r.certificate is None
    assert r.witness_subset == frozenset(range(1, 7))
    assert classify(make_ln(8)).level == 7


@given(tournaments(min_n=2, max_n=8))
def test_classify_consistent(t):
    r = classify(t)
    assert max_subdet(t)[0] == r.level ** 2
    assert (r.certificate is not None) == (r.level <= 5)


def test_six_profile_examples():
    assert six_profile(make_ln(6)) == (5, 25)
    assert six_profile(transitive_tournament(6)) == (0, 1)
    with pytest.raises(ValueError):
        six_profile(L4)


def test_recognizer_capacity():
    with pytest.raises(CapacityError):
        recognize_d5(transitive_tournament(17))
    with pytest.raises(ValueError):
        recognize_d1(transitive_tournament(1))
