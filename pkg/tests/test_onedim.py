"""Sequence-level primitives: signatures, VT decoding, compositions."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crisscross.errors import InvalidParameterError, NotACodewordError
from crisscross.onedim import (
    comp_rank,
    composition,
    inversions,
    one_deletion_ball,
    runs_count,
    signature,
    signature_syndrome,
    vt_decode_full,
    vt_decode_known_symbol,
    vt_syndromes,
)


def test_signature_marks_non_decreasing_steps():
    assert signature((0, 1, 1, 0)) == (1, 1, 0)
    assert signature((2, 0)) == (0,)
    assert signature((5,)) == ()
    with pytest.raises(InvalidParameterError):
        signature(())


def test_signature_syndrome_constant_sequence():
    # every step of a constant sequence is an ascent, so the syndrome is
    # 1 + 2 + ... + (n-1) mod n
    for n in range(2, 9):
        x = (3,) * n
        assert signature_syndrome(x, n) == (n * (n - 1) // 2) % n


def test_vt_syndromes_pair():
    assert vt_syndromes((0, 2, 1), 3, 3) == (1, 0)
    with pytest.raises(InvalidParameterError):
        vt_syndromes((0, 1), 2, 1)


def test_inversions_known_values():
    assert inversions(()) == 0
    assert inversions((1, 2, 3)) == 0
    assert inversions((3, 2, 1)) == 3
    assert inversions((2, 0, 1)) == 2


@given(st.lists(st.integers(0, 5), min_size=2, max_size=12), st.data())
def test_adjacent_swap_of_unequal_symbols_flips_inversion_parity(vals, data):
    # the position-disambiguation trick rests on exactly this fact
    i = data.draw(st.integers(0, len(vals) - 2))
    if vals[i] == vals[i + 1]:
        vals[i + 1] = (vals[i + 1] + 1) % 6
    swapped = list(vals)
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
    assert (inversions(tuple(vals)) + inversions(tuple(swapped))) % 2 == 1


def test_runs_count():
    assert runs_count((0, 0, 1, 1, 1, 0)) == 3
    assert runs_count((7,)) == 1
    with pytest.raises(InvalidParameterError):
        runs_count(())


def test_composition_counts_symbols():
    assert composition((0, 2, 2, 1), 3) == (1, 1, 2)
    assert composition((), 2) == (0, 0)
    with pytest.raises(InvalidParameterError):
        composition((0, 3), 3)


def test_comp_rank_is_a_lex_order_isomorphism():
    # exhaustive over all frequency vectors with bounded total and length
    for q in (2, 3, 4):
        for total in range(0, 7):
            comps = sorted(
                c
                for c in itertools.product(range(total + 1), repeat=q)
                if sum(c) == total
            )
            ranks = [comp_rank(c) for c in comps]
            assert ranks == sorted(ranks)
            assert len(set(ranks)) == len(ranks)
            # bijective onto an initial segment
            assert set(ranks) == set(range(math.comb(total + q - 1, q - 1)))


def test_one_deletion_ball_size_equals_runs_for_single_deletion():
    for q in (2, 3):
        for m in range(1, 7):
            for x in itertools.product(range(q), repeat=m):
                assert len(one_deletion_ball(x, 1)) == runs_count(x)
    with pytest.raises(InvalidParameterError):
        one_deletion_ball((0, 1), 3)


def test_vt_decode_full_exhaustive_small():
    n, q = 5, 3
    for x in itertools.product(range(q), repeat=n):
        a, b = vt_syndromes(x, n, q)
        for p in range(n):
            y = x[:p] + x[p + 1:]
            got, (lo, hi) = vt_decode_full(y, a, b, n, q)
            assert got == x
            assert lo <= p + 1 <= hi


def test_vt_decode_known_symbol_exhaustive_small():
    n, q = 5, 3
    for x in itertools.product(range(q), repeat=n):
        a = signature_syndrome(x, n)
        for p in range(n):
            y = x[:p] + x[p + 1:]
            got, (lo, hi) = vt_decode_known_symbol(y, x[p], a, n)
            assert got == x
            assert lo <= p + 1 <= hi


def test_vt_decode_rejects_impossible_syndrome():
    # inserting 0 anywhere into (0, 0) gives syndrome 0, never 1
    with pytest.raises(NotACodewordError):
        vt_decode_known_symbol((0, 0), 0, 1, 3)
    with pytest.raises(InvalidParameterError):
        vt_decode_known_symbol((0, 0), 0, 0, 4)
    with pytest.raises(InvalidParameterError):
        vt_decode_full((0, 2), 0, 0, 3, 2)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6), st.integers(2, 40), st.randoms(use_true_random=False))
def test_vt_round_trip_randomized(q, n, rng):
    x = tuple(rng.randrange(q) for _ in range(n))
    a, b = vt_syndromes(x, n, q)
    p = rng.randrange(n)
    got, (lo, hi) = vt_decode_full(x[:p] + x[p + 1:], a, b, n, q)
    assert got == x and lo <= p + 1 <= hi


def test_vt_ambiguity_run_is_a_full_equal_run():
    # deleting inside the run of 1s: every in-run position reinserts identically
    x = (0, 1, 1, 1, 2)
    a = signature_syndrome(x, 5)
    got, (lo, hi) = vt_decode_known_symbol((0, 1, 1, 2), 1, a, 5)
    assert got == x
    assert (lo, hi) == (2, 4)
