from fractions import Fraction as F

from pencillab.builder import (EIGENVALUE_POOL, build_pencil, iter_weyr_chars,
                               random_rank_one, random_weyr)
from pencillab.extractor import weyr_char, weyr_characteristic
from pencillab.partitions import Star
from pencillab.pencils import INF, RankOneKind, normal_rank


def test_dimensions_formula():
    om = weyr_char({F(0): (1, 1)}, Star(2, (1,)), Star(1, (1,)))
    h = build_pencil(om)
    rho = om.rank
    assert h.shape() == (rho + 1, rho + 2)
    assert normal_rank(h) == rho


def test_zero_characteristic_degenerate_dimensions():
    om = weyr_char({}, Star(2), Star(0))
    h = build_pencil(om)
    assert h.shape() == (0, 2)
    assert weyr_characteristic(h) == om
    om2 = weyr_char({}, Star(0), Star(3))
    assert build_pencil(om2).shape() == (3, 0)


def test_round_trip_spot_checks():
    examples = [
        weyr_char({F(0): (2,)}, Star(0), Star(0)),
        weyr_char({F(0): (1, 1)}, Star(0), Star(0)),
        weyr_char({}, Star(1, (1,)), Star(0)),
        weyr_char({INF: (2, 1)}, Star(1,), Star(2, (2,))),
        weyr_char({F(1, 2): (1,), F(-1): (2, 1)}, Star(3, (2,)), Star(1, (1,))),
    ]
    for om in examples:
        assert weyr_characteristic(build_pencil(om)) == om


def test_round_trip_exhaustive_weight_5():
    count = 0
    for om in iter_weyr_chars(5):
        assert weyr_characteristic(build_pencil(om)) == om
        count += 1
    assert count == 546


def test_labeled_enumeration_covers_all_slots():
    seen_pairs = set()
    for om in iter_weyr_chars(3, labeled=True):
        for lam, _ in om.regular:
            seen_pairs.add(lam)
    assert seen_pairs == set(EIGENVALUE_POOL)


def test_random_weyr_contract():
    for seed in range(200):
        om = random_weyr(seed, 8)
        assert om.rank <= 8
        assert weyr_characteristic(build_pencil(om)) == om
    assert random_weyr(3, 0).rank == 0


def test_random_weyr_block_kind_coverage():
    kinds = set()
    for seed in range(1000):
        om = random_weyr(seed, 8)
        if any(lam != INF for lam, _ in om.regular):
            kinds.add("finite")
        if any(lam == INF for lam, _ in om.regular):
            kinds.add("infinite")
        if om.col_star.tail_weight:
            kinds.add("column")
        if om.col_star.zeroth > (om.col_star.tail[0] if om.col_star.tail else 0):
            kinds.add("zero-column")
        if om.row_star.tail_weight:
            kinds.add("row")
        if om.row_star.zeroth > (om.row_star.tail[0] if om.row_star.tail else 0):
            kinds.add("zero-row")
    assert kinds == {"finite", "infinite", "column", "zero-column", "row", "zero-row"}


def test_random_rank_one_feeds_normal_rank_one():
    for seed in range(30):
        p = random_rank_one(seed, 3, 3, RankOneKind.COLUMN)
        assert normal_rank(p) == 1
        p = random_rank_one(seed, 1, 3, RankOneKind.ROW)
        assert normal_rank(p) == 1
