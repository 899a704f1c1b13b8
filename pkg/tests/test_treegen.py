import math

import pytest

from graphtheta import treegen
from graphtheta.canon import canonical_key
from graphtheta.graphs import from_edge_list, is_connected
from graphtheta.treegen import (
    LevelSequence,
    count_trees,
    enumerate_trees,
    free_tree_sequences,
    partitioned_enumeration,
    partitioned_sequences,
    sequence_to_graph,
)
from graphtheta.treegen import _pure

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741]


def leaf_augmentation_oracle(n):
    """Brute-force generate-and-dedup: grow every tree by hanging a new
    leaf on every vertex, dedup by canonical key.  Independent of the
    level-sequence machinery."""
    reps = {canonical_key(from_edge_list(1, [])): from_edge_list(1, [])}
    for k in range(2, n + 1):
        grown = {}
        for g in reps.values():
            for v in range(k - 1):
                h = from_edge_list(k, list(g.edges()) + [(v, k - 1)])
                grown.setdefault(canonical_key(h), h)
        reps = grown
    return reps


def test_counts_1_to_15():
    for n, expected in enumerate(TREE_COUNTS, start=1):
        assert count_trees(n) == expected


def test_trivial_counts():
    assert count_trees(1) == 1
    assert count_trees(2) == 1
    assert count_trees(7) == 11
    assert count_trees(10) == 106


def test_every_emitted_graph_is_a_tree():
    for n in range(1, 11):
        for g in enumerate_trees(n):
            assert g.n == n and g.m == n - 1
            assert is_connected(g)


def test_stream_matches_oracle_graph_for_graph():
    for n in range(1, 10):
        oracle_keys = set(leaf_augmentation_oracle(n))
        stream_keys = [canonical_key(g) for g in enumerate_trees(n)]
        assert len(stream_keys) == len(set(stream_keys))  # duplicate-free
        assert set(stream_keys) == oracle_keys


def test_emission_order_deterministic():
    assert list(free_tree_sequences(9)) == list(free_tree_sequences(9))


def test_partitioned_single_part_is_identity():
    assert list(partitioned_sequences(8, 1, 0)) == list(free_tree_sequences(8))


def test_partitioned_union_and_disjointness():
    n, parts = 9, 4
    seen = []
    for part in range(parts):
        chunk = list(partitioned_sequences(n, parts, part))
        seen.extend(chunk)
    assert len(seen) == count_trees(n)
    assert len(set(seen)) == len(seen)
    assert sorted(seen) == sorted(free_tree_sequences(n))


def test_partitioned_union_n12():
    streams = partitioned_enumeration(12, 4)
    assert sum(1 for s in streams for _ in s) == 551


def test_degree_pairs_match_graphs():
    for n in range(2, 10):
        for seq in free_tree_sequences(n):
            g = sequence_to_graph(seq)
            fast = sorted(tuple(sorted(p)) for p in treegen.degree_pairs(seq))
            slow = sorted(tuple(sorted(p)) for p in g.edge_degree_pairs())
            assert fast == slow


def test_abc_abs_sums_match_reports():
    from graphtheta.indices import index_report

    for seq in free_tree_sequences(10):
        abc, abs_ = treegen.abc_abs_sums(seq)
        r = index_report(sequence_to_graph(seq))
        assert abc == pytest.approx(r.abc, abs=1e-13)
        assert abs_ == pytest.approx(r.abs, abs=1e-13)


def test_level_sequence_validation():
    LevelSequence((1, 2, 3, 2))
    with pytest.raises(ValueError):
        LevelSequence((2, 3))
    with pytest.raises(ValueError):
        LevelSequence((1, 2, 4))
    assert LevelSequence((1, 2, 2)).to_graph().degrees == (2, 1, 1)


def test_backends_agree_if_extension_built():
    speedups = pytest.importorskip("graphtheta.treegen._speedups")
    for n in range(1, 13):
        assert list(speedups.free_tree_sequences(n)) == list(
            _pure.free_tree_sequences(n)
        )
    for seq in _pure.free_tree_sequences(11):
        assert speedups.degree_pairs(seq) == _pure.degree_pairs(seq)
        ca, cb = speedups.abc_abs_sums(seq)
        pa, pb = _pure.abc_abs_sums(seq)
        assert math.isclose(ca, pa, abs_tol=1e-14)
        assert math.isclose(cb, pb, abs_tol=1e-14)


def test_graph6_stream(tmp_path):
    out = tmp_path / "trees.g6"
    with open(out, "w") as fh:
        assert treegen.write_graph6_stream(6, fh) == 6
    lines = out.read_text().splitlines()
    assert len(lines) == 6 and len(set(lines)) == 6


def test_invalid_order():
    with pytest.raises(ValueError):
        list(free_tree_sequences(0))
