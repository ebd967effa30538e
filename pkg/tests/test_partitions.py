import pytest
from hypothesis import given
from hypothesis import strategies as st

from pencillab.partitions import (Star, add, conjugate, deficit_construct,
                                  deficit_feasible, gap_index, is_1step_majorized,
                                  is_conjugate_majorized, iter_decreasing_sequences,
                                  iter_partitions, partition, rle, star,
                                  star_from_finite_sequence, weight)

partitions_st = st.lists(st.integers(0, 20), max_size=20).map(
    lambda xs: partition(sorted(xs, reverse=True)))


def test_partition_normalization():
    assert partition((3, 2, 0, 0)) == (3, 2)
    assert partition(()) == ()
    assert partition((0, 0)) == ()
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((10,)) == (1,) * 10
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partitions_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p


@given(partitions_st)
def test_conjugate_preserves_weight(p):
    assert weight(conjugate(p)) == weight(p)


def test_weight_examples():
    assert weight((2, 1)) == 3
    assert weight(()) == 0
    big = star(rle((101, 102)))
    assert big.star_weight == 10302


def test_add():
    assert add((2, 1), (1, 1)) == (3, 2)
    assert add((), (3,)) == (3,)
    assert add((2, 2), (1,)) == (3, 2)


def test_star_validation():
    with pytest.raises(ValueError):
        Star(1, (2,))
    with pytest.raises(ValueError):
        Star(-1, ())
    s = Star(3, (2, 1))
    assert s.get(0) == 3 and s.get(2) == 1 and s.get(9) == 0
    assert s.star_weight == 6 and s.tail_weight == 3


def _naive_1step(d, c):
    # direct transcription of the definition with explicit sentinels
    p = len(c)
    ext = list(c) + [float("-inf")]
    h = next(i for i in range(1, p + 2) if ext[i - 1] < d[i - 1])
    return all(ext[i - 1] == d[i] for i in range(h, p + 1))


def test_1step_examples():
    assert is_1step_majorized((1, 0), (1,)) is True
    assert is_1step_majorized((2, 2), (1,)) is False
    assert is_1step_majorized((0, 0), (0,)) is True
    with pytest.raises(ValueError):
        is_1step_majorized((1, 1), (1, 1))
    with pytest.raises(ValueError):
        is_1step_majorized((1, 2, 0), (1, 1))


def test_1step_exhaustive_against_definition():
    for p in range(0, 4):
        for c in iter_decreasing_sequences(p, 2):
            for d in iter_decreasing_sequences(p + 1, 2):
                assert is_1step_majorized(d, c) == _naive_1step(d, c), (d, c)


def test_conjugate_majorized_examples():
    assert is_conjugate_majorized(Star(2, (2,)), Star(3, (1,))) is True
    assert is_conjugate_majorized(Star(2, ()), Star(2, ())) is False
    assert is_conjugate_majorized(Star(1, ()), Star(2, ())) is True
    # whole tail may exceed beyond the gap index
    assert is_conjugate_majorized(Star(1, (1,)), Star(2, ())) is True


def test_gap_index():
    assert gap_index(Star(2, ()), Star(1, ())) == 0
    assert gap_index(Star(3, (2, 1)), Star(2, (1, 1))) == 1
    assert gap_index(Star(1, ()), Star(0, ())) == 0
    with pytest.raises(ValueError):
        gap_index(Star(2, ()), Star(2, ()))


def _stars_upto(total):
    for w in range(total + 1):
        for p in iter_partitions(w):
            yield Star(p[0], p[1:]) if p else Star(0, ())


def test_duality_of_majorizations():
    # one-step majorization of finite sequences is conjugation-dual to the
    # star-partition order (lengths m+1 and m, entries <= 6)
    for m in range(0, 4):
        for cseq in iter_decreasing_sequences(m + 1, 6):
            r = star_from_finite_sequence(cseq)
            for dseq in iter_decreasing_sequences(m, 6):
                s = star_from_finite_sequence(dseq)
                assert is_1step_majorized(cseq, dseq) == is_conjugate_majorized(s, r), \
                    (cseq, dseq)


def test_gap_and_conjugate_consequences_weight_12():
    stars = list(_stars_upto(12))
    for r in stars:
        for s in stars:
            if not is_conjugate_majorized(s, r):
                continue
            g = gap_index(r, s)
            k = r.tail_weight - s.tail_weight
            assert k <= g
            top = max(r.support(), s.support()) + 1
            for i in range(g + 1, top + 1):
                assert 0 <= s.get(i) - r.get(i) <= g - k
            c = conjugate(r.tail)
            c1 = c[0] if c else 0
            c2 = c[1] if len(c) > 1 else 0
            assert g == c1 or g <= c2


def _brute_deficit(p: Star, x: int):
    target = p.tail_weight - x
    if target < 0 or p.zeroth == 0:
        return None
    cap = p.zeroth - 1
    for tail in iter_partitions(target):
        if tail and tail[0] > cap:
            continue
        q = Star(cap, tail)
        if is_conjugate_majorized(q, p):
            return q
    return None


def test_deficit_examples():
    assert deficit_feasible(Star(1, (1, 1)), 2) is True
    assert deficit_feasible(Star(1, (1, 1)), 1) is False
    assert deficit_feasible(Star(3, (2, 2)), 0) is True
    assert deficit_feasible(Star(0, ()), 0) is False
    assert deficit_construct(Star(1, (1, 1)), 2) == Star(0, ())
    assert deficit_construct(Star(3, (2, 2)), 2) == Star(2, (1, 1))
    with pytest.raises(ValueError):
        deficit_construct(Star(1, (1, 1)), 1)


def test_deficit_against_brute_force_weight_12():
    for p in _stars_upto(12):
        for x in range(-12, 13):
            found = _brute_deficit(p, x)
            assert deficit_feasible(p, x) == (found is not None), (p, x)
            if found is not None:
                q = deficit_construct(p, x)
                assert is_conjugate_majorized(q, p)
                assert q.tail_weight == p.tail_weight - x


@given(st.integers(0, 300))
def test_partition_enumeration_is_sorted_and_complete(n):
    # light check on the generator used all over the test suites
    caps = min(n, 7)
    seen = set(iter_partitions(caps))
    assert len(seen) == sum(1 for _ in iter_partitions(caps))
    assert all(weight(p) == caps for p in seen)


def test_rle():
    assert rle((11, 2), (1, 3)) == (11, 11, 1, 1, 1)
    assert rle() == ()
