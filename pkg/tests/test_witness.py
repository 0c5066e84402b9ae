import random
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from witcount import Instance, build_parity_tables, count_failures, count_witnesses, falling_factorial
from witcount.check import random_instances
from witcount.oracle import brute_force_profile, naive_dp_witnesses


@pytest.mark.parametrize("m, o, e, expected", [(3, 1, 1, 2), (5, 2, 0, 1), (3, 2, 2, 0), (7, 0, 3, 210), (2, 3, 1, -1)])
def test_falling_factorial(m, o, e, expected):
    assert falling_factorial(m, o, e) == expected


def test_falling_factorial_matches_quotient():
    for m in range(8):
        for o in range(m + 1):
            for e in range(m - o + 1):
                assert falling_factorial(m, o, e) == factorial(m - o) // factorial(m - o - e)


def test_count_failures_examples():
    tables = build_parity_tables(3)
    # d=1, V={0,1}, t=0: wit[0]=1, wit[1]=1
    assert count_failures([1, 1], tables, 2, 2) == 2
    # d=2, V={01,10,11}, t=01: wit[0..2] = 0, 1, 2
    assert count_failures([0, 1, 2], tables, 3, 3) == 7
    assert count_failures([1], tables, 5, 1) == 0


@pytest.mark.parametrize(
    "t, k, cand, fail, wit",
    [
        (0, 3, [1, 0, 3, 6], [0, 0, 3, 0], [1, 0, 0, 6]),
        (1, 3, [0, 1, 2, 7], [0, 0, 0, 7], [0, 1, 2, 0]),
    ],
)
def test_tri_profiles(tri, t, k, cand, fail, wit):
    p = count_witnesses(tri(t, k))
    assert (p.cand, p.fail, p.wit) == (cand, fail, wit)
    assert brute_force_profile(tri(t, k)).wit == wit


def test_two_vectors_d1():
    p = count_witnesses(Instance(1, [0, 1], 0, 2))
    assert (p.cand, p.fail, p.wit) == ([1, 1, 2], [0, 0, 2], [1, 1, 0])


def test_k_zero():
    assert count_witnesses(Instance(3, [1, 2], 0, 0)).wit == [1]
    assert count_witnesses(Instance(3, [1, 2], 4, 0)).wit == [0]


def test_cumulative():
    assert count_witnesses(Instance(2, [1, 2, 3], 0, 3)).cumulative() == [1, 1, 1, 7]


instances = st.integers(1, 6).flatmap(
    lambda d: st.tuples(
        st.sets(st.integers(0, 2**d - 1), max_size=min(9, 2**d)),
        st.integers(0, 2**d - 1),
        st.integers(0, 5),
    ).map(lambda a: Instance(d, sorted(a[0]), a[1], a[2]))
)


@settings(max_examples=150, deadline=None)
@given(instances)
def test_profile_matches_enumeration(inst):
    got = count_witnesses(inst)
    ref = brute_force_profile(inst)
    assert (got.cand, got.fail, got.wit) == (ref.cand, ref.fail, ref.wit)
    for i, w in enumerate(got.wit):
        assert 0 <= w <= got.cand[i] <= inst.m**i
        assert w % factorial(i) == 0
        if i > inst.m:
            assert w == 0


def test_random_stream_matches_enumeration():
    for inst in random_instances(7, 200, 6, 5):
        assert count_witnesses(inst).wit == brute_force_profile(inst).wit


def test_matches_naive_dp_larger():
    rng = np.random.default_rng(11)
    for _ in range(25):
        d = int(rng.integers(4, 11))
        m = int(rng.integers(0, min(40, 2**d) + 1))
        k = int(rng.integers(1, 7))
        inst = Instance(d, rng.choice(2**d, m, replace=False).tolist(), int(rng.integers(2**d)), k)
        assert count_witnesses(inst).wit[k] == naive_dp_witnesses(inst)


def test_empty_set():
    for t in (0, 5):
        assert count_witnesses(Instance(3, [], t, 4)).wit[1:] == [0, 0, 0, 0]


def test_permutation_invariance():
    rng = random.Random(2)
    vs = rng.sample(range(256), 60)
    ref = count_witnesses(Instance(8, vs, 99, 6))
    rng.shuffle(vs)
    again = count_witnesses(Instance(8, vs, 99, 6))
    assert (again.cand, again.fail, again.wit) == (ref.cand, ref.fail, ref.wit)


def test_large_values_exact():
    # every vector of F_2^10, k = 8: candidate counts far beyond 64 bits
    inst = Instance(10, range(1024), 0, 8)
    p = count_witnesses(inst)
    assert p.cand[8] == 1024**7
    assert all(w % factorial(i) == 0 and w >= 0 for i, w in enumerate(p.wit))
