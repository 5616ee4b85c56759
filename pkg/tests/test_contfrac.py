import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from cornerforge.contfrac import (
    AlphaSequence,
    approximants,
    build_alpha_hard,
    quotients_from_pair,
    verify_alpha,
)


def test_fibonacci_style_convergents():
    assert approximants([1, 1, 1, 1, 1]) == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]


def test_small_quotient_list():
    conv = approximants([0, 2, 3])
    assert conv == [(0, 1), (1, 2), (3, 7)]
    # recurrence spot check: P2 = 3*1 + 0, Q2 = 3*2 + 1
    assert conv[2] == (3 * conv[1][0] + conv[0][0], 3 * conv[1][1] + conv[0][1])


def test_convergents_are_reduced_and_validated():
    rng = random.Random(3)
    for _ in range(20):
        quotients = [rng.randint(0, 4)] + [rng.randint(1, 9) for _ in range(rng.randint(1, 12))]
        for p, q in approximants(quotients):
            assert gcd(p, q) == 1
    with pytest.raises(ValueError):
        approximants([1, 0, 2])
    with pytest.raises(ValueError):
        approximants([-1, 2])


def test_enclosure_brackets_the_tail_value():
    # |alpha - P_n/Q_n| < 1/(Q_n Q_{n+1}) with alpha between consecutive ones
    seq = AlphaSequence(m=2, r=Fraction(1), a=2, prefix=(0, 1, 2), tail=2)
    for n in range(1, 8):
        lo, hi = seq.enclosure(n)
        p, q = seq.convergent(n)
        q_next = seq.convergent(n + 1)[1]
        assert hi - lo == Fraction(1, q * q_next)
        assert lo <= Fraction(p, q) <= hi
        deeper_lo, deeper_hi = seq.enclosure(n + 3)
        assert lo < deeper_lo < deeper_hi < hi


def test_quotients_from_pair_examples():
    for x, y in [(2, 7), (1, 2), (5, 8), (7, 24), (13, 89)]:
        quotients = quotients_from_pair(x, y)
        conv = approximants(quotients)
        assert conv[-2][1] == x and conv[-1][1] == y
    with pytest.raises(ValueError):
        quotients_from_pair(4, 10)
    with pytest.raises(ValueError):
        quotients_from_pair(5, 3)


def test_quotients_from_pair_random():
    rng = random.Random(5)
    for _ in range(40):
        x = rng.randint(1, 400)
        y = rng.randint(x + 1, 900)
        if gcd(x, y) != 1:
            continue
        conv = approximants(quotients_from_pair(x, y))
        assert conv[-2][1] == x and conv[-1][1] == y


def test_build_alpha_hard_smallest_case():
    seq = build_alpha_hard(2, 1)
    assert seq.a == 2
    for i in range(seq.start_index, seq.start_index + 8):
        check = verify_alpha(seq, i)
        assert check.passed and check.guaranteed
        assert check.q % 2 == 1  # no prime factor below m=2 means odd


def test_build_alpha_hard_m5():
    seq = build_alpha_hard(5, Fraction(3, 2))
    assert seq.a == lcm(1, 2, 3, 4, 5) == 60
    assert seq.a < 4**5
    for i in range(seq.start_index, seq.start_index + 5):
        assert verify_alpha(seq, i).passed


def test_denominator_recurrence_and_residues():
    seq = build_alpha_hard(4, 2)
    t = seq.t
    qs = [seq.convergent(n)[1] for n in range(t, t + 10)]
    for n in range(2, 10):
        assert qs[n] == seq.a * qs[n - 1] + qs[n - 2]
    assert {q % seq.a for q in qs} <= {seq.x % seq.a, seq.y % seq.a}


def test_golden_ratio_stream_fails_the_checks():
    # all-ones quotients: denominators are Fibonacci, even ones appear, and
    # the growth interval for lcm(1..3) is badly missed
    seq = AlphaSequence(m=3, r=Fraction(1), a=lcm(1, 2, 3), prefix=(0,), tail=1)
    results = [verify_alpha(seq, i) for i in range(2, 12)]
    assert any(not r.smooth_ok for r in results)
    assert any(not r.interval_ok for r in results)


def test_indices_below_threshold_not_guaranteed():
    seq = build_alpha_hard(3, Fraction(1, 4))  # small scale forces K >= 1
    assert seq.start_index > 0
    early = verify_alpha(seq, seq.start_index - 1)
    assert not early.guaranteed
    good = verify_alpha(seq, seq.start_index)
    assert good.guaranteed and good.passed


def test_json_round_trip_regenerates_stream():
    seq = build_alpha_hard(6, Fraction(5, 4))
    again = AlphaSequence.from_json(seq.to_json())
    assert again.p_q(seq.start_index + 3) == seq.p_q(seq.start_index + 3)
    assert again.start_index == seq.start_index
    assert verify_alpha(again, again.start_index).passed


def test_build_rejects_bad_arguments():
    with pytest.raises(ValueError):
        build_alpha_hard(1, 1)
    with pytest.raises(ValueError):
        build_alpha_hard(4, 0)
