import random

import pytest

from overcolored.oracle import (
    OvercoloredPartition,
    Part,
    count_colored,
    count_overcolored,
    enumerate_small,
)
from overcolored.qseries import gf_colored, gf_overcolored


def test_overpartition_counts():
    assert count_overcolored((1, 1), 4) == [1, 2, 4, 8]


def test_empty_partition():
    for rs in [(1, 1), (3, 7), (6, 2)]:
        assert count_overcolored(rs, 1) == [1]
        assert count_colored(rs, 1) == [1]


def test_two_odd_colours_n1():
    assert count_overcolored((1, 2), 2)[1] == 4
    assert len(enumerate_small((1, 2), 1)) == 4


def test_colored_counts():
    assert count_colored((1, 1), 6) == [1, 1, 2, 3, 5, 7]
    assert count_colored((2, 1), 3)[2] == 3


def test_overpartitions_of_three_listed():
    objs = enumerate_small((1, 1), 3)
    rendered = sorted(o.render() for o in objs)
    assert rendered == sorted(["3", "3'", "2 + 1", "2' + 1", "2 + 1'", "2' + 1'",
                               "1 + 1 + 1", "1' + 1 + 1"])


def test_enumerate_zero():
    assert enumerate_small((4, 5), 0) == [OvercoloredPartition(())]


def test_enumerate_two_even_colours():
    objs = enumerate_small((2, 1), 2)
    assert len(objs) == 6 == count_overcolored((2, 1), 3)[2]


def test_enumerate_cap():
    with pytest.raises(ValueError):
        enumerate_small((1, 1), 13)
    assert len(enumerate_small((1, 1), 13, cap=13)) == count_overcolored((1, 1), 14)[13]


def test_enumerated_objects_are_valid_and_distinct():
    r, s = 2, 3
    for n in range(9):
        objs = enumerate_small((r, s), n)
        assert len(set(objs)) == len(objs)
        for o in objs:
            assert o.total == n
            seen = {}
            for p in o.parts:
                assert 1 <= p.color <= (r if p.size % 2 == 0 else s)
                seen.setdefault((p.size, p.color), 0)
                seen[(p.size, p.color)] += p.overlined
            assert all(v <= 1 for v in seen.values())


@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("s", range(1, 4))
def test_enumeration_matches_counts(r, s):
    counts = count_overcolored((r, s), 9)
    assert [len(enumerate_small((r, s), n)) for n in range(9)] == counts


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("s", range(1, 5))
def test_oracle_matches_series(r, s):
    assert count_overcolored((r, s), 300) == list(gf_overcolored((r, s), 300))
    assert count_colored((r, s), 300) == list(gf_colored((r, s), 300))


def test_monotone_in_colours():
    base = count_overcolored((2, 2), 80)
    for more in [(3, 2), (2, 3), (4, 5)]:
        bigger = count_overcolored(more, 80)
        assert all(a <= b for a, b in zip(base, bigger))


def test_part_order_irrelevant():
    rng = random.Random(7)
    sizes = list(range(1, 120))
    rng.shuffle(sizes)
    assert count_overcolored((3, 2), 120, sizes=sizes) == count_overcolored((3, 2), 120)


def test_render_subscripts():
    o = OvercoloredPartition((Part(2, 2, True), Part(1, 1)))
    assert o.render(2, 1) == "2₂' + 1"
    assert OvercoloredPartition(()).render() == "∅"
