import pytest

from wilson.catalog import make_S, make_tilde, swapper_pairs
from wilson.growth import (
    Deduper,
    ball_sizes,
    ball_sizes_exact_convention,
    check_submultiplicative,
    enumerate_ball,
    export_dot,
    find_min_n_local_iso,
    free_monoid_check,
    growth_estimates,
    partitions_equal,
    sizes_csv_rows,
    word_partition,
)
from wilson.wreath import Element, equals, is_identity


def test_deduper_modes_agree():
    s1 = make_S(1)
    a, b, c = s1.elements()
    pool = [Element(), a, b, c, a * b, b * a, a * b * c, a * b, Element()]
    fast, exact = Deduper(), Deduper(exact=True)
    for e in pool:
        fi, xi = fast.find(e), exact.find(e)
        assert (fi is None) == (xi is None)
        if fi is None:
            assert fast.add(e) == exact.add(e)
        else:
            assert fi == xi


def test_ball_radius_zero_and_one():
    s1 = make_S(1)
    ball = enumerate_ball(s1, 1)
    assert ball.sizes == [1, 4]
    assert ball.geodesics[0] == ()
    assert sorted(ball.geodesics[1:]) == [(0,), (1,), (2,)]
    b0 = enumerate_ball(s1, 0)
    assert b0.sizes == [1]


def test_ball_members_distinct_and_geodesic_lengths():
    ball = enumerate_ball(make_tilde(), 4)
    for i, g in enumerate(ball.members):
        assert is_identity(g) == (i == 0)
    for word, g in zip(ball.geodesics, ball.members):
        acc = Element()
        for s in word:
            acc = acc * ball.genset.elements()[s]
        assert equals(acc, g)
    lengths = [len(w) for w in ball.geodesics]
    assert lengths == sorted(lengths)
    assert ball.sphere_sizes() == [1, 3, 6, 12, 21]


def test_ball_sizes_conventions():
    s1 = make_S(1)
    atmost = ball_sizes(s1, 5)
    exact = ball_sizes_exact_convention(s1, 5)
    assert atmost[0] == exact[0] == 1
    for n in range(6):
        assert exact[n] <= atmost[n]
    # parity homomorphism to A/... may be absent here; conventions agree
    # whenever some generator product of even length returns to a generator
    assert check_submultiplicative(atmost)


def test_exact_vs_fast_dedup_small():
    s1 = make_S(1)
    assert ball_sizes(s1, 4) == ball_sizes(s1, 4, exact=True)


def test_growth_estimates_rows():
    sizes = ball_sizes(make_tilde(), 4)
    rows = growth_estimates(sizes)
    assert [r["radius"] for r in rows] == [1, 2, 3, 4]
    assert rows[0]["ball_size"] == sizes[1]
    assert rows[-1]["estimate_ratio"] == sizes[4] / sizes[3]
    csv = sizes_csv_rows(sizes)
    assert csv[0][0] == 1 and csv[0][1] == sizes[1]


def test_check_submultiplicative():
    assert check_submultiplicative([1, 4, 16, 64])
    assert not check_submultiplicative([1, 2, 3, 7])


def test_word_partition_basics():
    p = word_partition(make_S(1), 2)
    words = [w for w, _ in p.assignment]
    assert words[0] == ()
    assert len(words) == 1 + 3 + 6
    assert p.assignment[0][1] == 0
    # the three generators are distinct, classes 1..3
    assert [cid for w, cid in p.assignment if len(w) == 1] == [1, 2, 3]
    # squares of involutions fall back into class 0
    squares = [cid for w, cid in p.assignment if len(w) == 2 and w[0] == w[1]]
    assert squares == []  # reduced words never repeat a letter


def test_partitions_equal_radii_guard():
    p = word_partition(make_S(1), 1)
    q = word_partition(make_S(1), 2)
    with pytest.raises(ValueError):
        partitions_equal(p, q)
    assert partitions_equal(p, word_partition(make_S(1), 1))


def test_local_iso_small_radii():
    assert find_min_n_local_iso(1, 4) == 1
    assert find_min_n_local_iso(2, 4) == 1
    assert find_min_n_local_iso(3, 4) == 1
    assert find_min_n_local_iso(4, 4) == 2


def test_tilde_vs_s1_differ_at_radius_4():
    tilde = word_partition(make_tilde(), 4)
    s1 = word_partition(make_S(1), 4)
    assert not partitions_equal(tilde, s1)


def test_free_monoid_short():
    report = free_monoid_check(4)
    assert report["all_ok"]
    assert report["distinct"] == 2**5 - 1
    assert report["collisions"] == []
    assert report["refine_ok"]


def test_free_monoid_all_pairs_short():
    for pair in swapper_pairs():
        report = free_monoid_check(3, pair=pair, refine_len=2)
        assert report["all_ok"], report


def test_export_dot():
    ball = enumerate_ball(make_S(1), 1)
    dot = export_dot(ball)
    assert dot.startswith("graph ball {")
    assert dot.endswith("}\n")
    assert 'v0 [label="e"];' in dot
    assert dot.count(" -- ") >= 3
