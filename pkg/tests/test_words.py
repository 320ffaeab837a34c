import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from cuntzfrac.words import (
    canonical_rotation,
    failure_function,
    is_primitive,
    least_rotation_index,
    primitive_root_length,
)

small_words = st.lists(st.integers(1, 4), min_size=1, max_size=9).map(tuple)


def brute_min_rotation(w):
    return min(w[i:] + w[:i] for i in range(len(w)))


def brute_primitive(w):
    return all(w[i:] + w[:i] != w for i in range(1, len(w)))


@settings(max_examples=300, deadline=None)
@given(small_words)
def test_canonical_rotation_matches_brute_force(w):
    assert canonical_rotation(w) == brute_min_rotation(w)


@settings(max_examples=300, deadline=None)
@given(small_words)
def test_primitivity_matches_brute_force(w):
    assert is_primitive(w) == brute_primitive(w)


def test_exhaustive_small_alphabet():
    for n in range(1, 6):
        for w in itertools.product((1, 2, 3), repeat=n):
            assert canonical_rotation(w) == brute_min_rotation(w)
            assert is_primitive(w) == brute_primitive(w)


def test_primitive_root_length():
    assert primitive_root_length((1, 2, 1, 2)) == 2
    assert primitive_root_length((1, 1, 1)) == 1
    assert primitive_root_length((1, 2, 3)) == 3
    assert primitive_root_length((1, 2, 1)) == 3


def test_failure_function():
    assert failure_function((1, 2, 1, 2, 1)) == [0, 0, 1, 2, 3]
    assert failure_function((1,)) == [0]


def test_least_rotation_index_examples():
    assert least_rotation_index((2, 3, 1)) == 2
    assert least_rotation_index((3, 1, 2)) == 1
    assert least_rotation_index((1,)) == 0
