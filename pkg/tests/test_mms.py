import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtpt.convolution import (
    NEG_INF,
    POS_INF,
    UnknownBackendError,
    as_level_vector,
    backend_names,
    get_backend,
    mms_convolve,
    mms_definitional,
    mms_windowed,
    sat_sub,
)

BACKENDS = backend_names()
entries = st.one_of(st.integers(-16, 16), st.sampled_from([NEG_INF, POS_INF]))
vectors = st.lists(entries, min_size=1, max_size=24)


def test_definitional_examples():
    assert mms_definitional([0], [0]).tolist() == [0]
    assert mms_definitional([0, NEG_INF], [0, 0]).tolist() == [0, 0, NEG_INF]
    assert mms_definitional([5, 3], [2, 1]).tolist() == [2, 1, 0]


def test_sentinels_absorb_subtraction():
    assert sat_sub(NEG_INF, 5) == NEG_INF
    assert sat_sub(POS_INF, 5) == POS_INF
    assert sat_sub(7, 5) == 2
    assert as_level_vector([float("inf"), float("-inf"), 3.0]).tolist() == [POS_INF, NEG_INF, 3]
    with pytest.raises(ValueError):
        as_level_vector([])
    with pytest.raises(ValueError):
        as_level_vector([0.5])


@pytest.mark.parametrize("name", BACKENDS)
def test_backend_examples(name):
    assert mms_convolve(name, [0], [0]).tolist() == [0]
    assert mms_convolve(name, [5, 3], [2, 1]).tolist() == [2, 1, 0]
    assert mms_convolve(name, [POS_INF], [POS_INF, NEG_INF]).tolist() == [POS_INF, NEG_INF]


def test_unknown_backend():
    with pytest.raises(UnknownBackendError):
        mms_convolve("no-such-backend", [0], [0])


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=200, deadline=None)
@given(a=vectors, b=vectors)
def test_backends_match_definition(name, a, b):
    assert mms_convolve(name, a, b).tolist() == mms_definitional(a, b).tolist()


@settings(max_examples=100, deadline=None)
@given(a=vectors, b=vectors, c=vectors)
def test_associative(a, b, c):
    left = mms_definitional(mms_definitional(a, b), c)
    right = mms_definitional(a, mms_definitional(b, c))
    assert left.tolist() == right.tolist()


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, min_size=1, max_size=7))
def test_fold_of_many_matches_left_fold(name, vs):
    expected = vs[0]
    for v in vs[1:]:
        expected = mms_definitional(expected, v)
    assert get_backend(name).convolve_many(vs).tolist() == list(as_level_vector(expected))


@pytest.mark.parametrize("name", BACKENDS)
@settings(max_examples=150, deadline=None)
@given(a=vectors, b=vectors, data=st.data())
def test_windowed_matches_full(name, a, b, data):
    lo = data.draw(st.integers(0, len(a)))
    hi = data.draw(st.integers(lo, len(a)))
    full = [NEG_INF] * len(a)
    full[lo:hi] = a[lo:hi]
    expected = mms_definitional(full, b).tolist()
    got = mms_windowed(a[lo:hi], lo, b, length=len(a), backend=name)
    assert got.tolist() == expected


def test_windowed_examples():
    rng = np.random.default_rng(3)
    b = rng.integers(-16, 17, size=6)
    a = [NEG_INF] * 10
    a[7], a[8] = 4, -2
    assert mms_windowed([4, -2], 7, b, length=10).tolist() == mms_definitional(a, b).tolist()
    assert mms_windowed([1, 2, 3], 0, b, length=3).tolist() == mms_definitional([1, 2, 3], b).tolist()
    assert mms_windowed([], 4, b, length=10).tolist() == [NEG_INF] * 15
    seg = mms_windowed([4, -2], 7, b)
    assert seg.tolist() == mms_definitional(a, b).tolist()[7 : 7 + seg.size]
    with pytest.raises(ValueError):
        mms_windowed([1, 2], 9, b, length=10)
