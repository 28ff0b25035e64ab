from __future__ import annotations

import pytest

from hyperexpand.rng import SplitMix64, derive_seed


def test_known_stream_is_stable():
    # frozen on first run; guards cross-platform bit-exactness
    r = SplitMix64(42)
    assert [r.next_u64() for _ in range(3)] == [
        13679457532755275413,
        2949826092126892291,
        5139283748462763858,
    ]


def test_derive_seed_streams_are_stable():
    assert [derive_seed(42, s) for s in range(3)] == [
        5006236285904387910,
        15809470632947611645,
        7025253467864011909,
    ]


def test_same_seed_same_stream():
    a, b = SplitMix64(7), SplitMix64(7)
    assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]


def test_seed_masked_to_64_bits():
    assert SplitMix64(2**64 + 5).next_u64() == SplitMix64(5).next_u64()


def test_next_below_range_and_rejection():
    r = SplitMix64(1)
    draws = [r.next_below(7) for _ in range(2000)]
    assert set(draws) <= set(range(7))
    # every residue appears; crude uniformity guard
    assert len(set(draws)) == 7


def test_next_below_validates():
    with pytest.raises(ValueError):
        SplitMix64(0).next_below(0)


def test_next_unit_in_half_open_interval():
    r = SplitMix64(123)
    vals = [r.next_unit() for _ in range(1000)]
    assert all(0.0 <= v < 1.0 for v in vals)
    assert abs(sum(vals) / len(vals) - 0.5) < 0.05


def test_unit_stream_frozen():
    r = SplitMix64(123)
    assert r.next_unit() == pytest.approx(0.7064912217637067, abs=0)
    assert r.next_unit() == pytest.approx(0.976596648325027, abs=0)


def test_uniform_bounds():
    r = SplitMix64(9)
    vals = [r.uniform(-2.0, 3.0) for _ in range(500)]
    assert all(-2.0 <= v < 3.0 for v in vals)


def test_permutation_is_permutation():
    r = SplitMix64(5)
    for n in (1, 2, 5, 33):
        assert sorted(r.permutation(n)) == list(range(n))


def test_permutation_uniform_over_small_n():
    # all 6 permutations of 3 elements should appear near 1/6 each
    from collections import Counter

    counts = Counter()
    for seed in range(6000):
        counts[tuple(SplitMix64(seed).permutation(3))] += 1
    assert len(counts) == 6
    for c in counts.values():
        assert abs(c - 1000) < 120


def test_choice_and_shuffle():
    r = SplitMix64(11)
    assert all(0 <= r.choice(4) < 4 for _ in range(100))
    items = list(range(10))
    r.shuffle(items)
    assert sorted(items) == list(range(10))
