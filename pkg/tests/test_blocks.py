import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauerblocks.blocks import (bias, block_partition, block_partition_json,
                                 hat, hat_steps, hom_target,
                                 i_maximal_balanced_sub, is_balanced,
                                 is_minimal, lattice_predict,
                                 maximal_balanced_sub, minimal_weight, weights)
from brauerblocks.partitions import (EMPTY, Box, Partition, removable_boxes,
                                     subpartitions)

DELTAS = (-2, -1, 0, 1, 2, 3)

partitions = st.lists(st.integers(1, 6), max_size=5).map(
    lambda ps: Partition(sorted(ps, reverse=True)))
deltas = st.sampled_from(DELTAS)


def P(*parts):
    return Partition(parts)


def brute_minimal(lam, delta):
    for mu in subpartitions(lam):
        if mu == lam:
            continue
        if delta == 0 and mu == EMPTY and lam != EMPTY:
            continue
        if is_balanced(lam, mu, delta):
            return False
    return True


def test_balanced_fixed_pairs():
    assert is_balanced(P(6, 5, 5, 2, 1), P(6, 4, 1), 2)
    assert not is_balanced(P(6, 4, 4, 2, 1), P(5, 2, 2), 1)
    assert not is_balanced(P(5, 4, 4, 4, 4), P(5, 1, 1, 1, 1), 2)
    # sizes 34 and 15 differ by an odd number, so the content multisets
    # of the two difference shapes cannot pair up
    assert not is_balanced(P(7, 6, 6, 5, 4, 4, 2), P(5, 3, 2, 2, 2, 1), 1)
    assert is_balanced(P(2, 2), EMPTY, 1)
    assert not is_balanced(P(1, 1), EMPTY, 2)


@given(partitions, deltas)
def test_balanced_reflexive(lam, delta):
    assert is_balanced(lam, lam, delta)


@given(partitions, partitions, deltas)
def test_balanced_symmetric(lam, mu, delta):
    assert is_balanced(lam, mu, delta) == is_balanced(mu, lam, delta)


@given(partitions, partitions, deltas)
def test_balanced_pairs_have_zero_bias(lam, mu, delta):
    if is_balanced(lam, mu, delta):
        assert bias(lam, mu, delta) == 0


def test_bias_fixed_values():
    assert bias(P(3, 1), P(3, 1), 5) == 0
    assert bias(P(6, 5, 5, 2, 1), P(6, 4, 1), 2) == 0
    assert bias(P(2), EMPTY, 2) == 2
    with pytest.raises(ValueError):
        bias(P(1), EMPTY, 0)


def test_weights():
    ws = weights(2, 5)
    assert ws.weights == (P(1, 1), P(2), EMPTY)
    assert EMPTY not in weights(2, 0).weights
    assert all(w.size % 2 == 1 for w in weights(5, 1).weights)
    with pytest.raises(ValueError):
        weights(-1, 1)


def test_block_partition_examples():
    bp = block_partition(2, 5)
    assert all(len(members) == 1 for _, members in bp.classes)

    bp = block_partition(2, 2)
    cls = {min(members): set(members) for _, members in bp.classes}
    assert all(len(c) == 1 for c in cls.values())  # (1,1) and 0 split

    bp = block_partition(4, 1)
    merged = next(set(members) for _, members in bp.classes
                  if EMPTY in members)
    assert P(2, 2) in merged


def test_block_partition_classes_cover_weights():
    for n, delta in [(4, 1), (5, -1), (6, 0)]:
        bp = block_partition(n, delta)
        seen = [w for _, members in bp.classes for w in members]
        assert sorted(seen, key=lambda p: (p.size, p.parts)) == \
            sorted(weights(n, delta).weights, key=lambda p: (p.size, p.parts))
        for minimal, members in bp.classes:
            assert minimal == min(members, key=lambda p: (p.size, p.parts))


def test_block_partition_json_shape():
    doc = block_partition_json(block_partition(4, 1))
    assert doc["n"] == 4 and doc["delta"] == 1
    assert {"minimal": [], "members": [[], [2, 2]]} in doc["blocks"]


def test_imax_single_skew_all_seeds():
    lam, mu = P(6, 5, 5, 2, 1), P(6, 4, 1)
    in_skew = {b for b in lam.boxes() if b.col > mu.row(b.row - 1)}
    seeds = [b for b in removable_boxes(lam) if b in in_skew]
    assert len(seeds) == 3
    for seed in seeds:
        assert i_maximal_balanced_sub(lam, mu, 2, seed) == P(6, 4, 3)
    assert maximal_balanced_sub(lam, mu, 2) == P(6, 4, 3)


def test_imax_seed_validation():
    lam, mu = P(6, 5, 5, 2, 1), P(6, 4, 1)
    with pytest.raises(ValueError):
        i_maximal_balanced_sub(lam, mu, 2, Box(1, 6))  # outside the skew
    with pytest.raises(ValueError):
        i_maximal_balanced_sub(lam, mu, 2, Box(2, 3))  # not removable
    with pytest.raises(ValueError):
        i_maximal_balanced_sub(mu, lam, 2, Box(1, 6))  # not contained


def test_maximal_balanced_sub_two_box_skew():
    assert is_balanced(P(3, 2), P(3), 2)
    assert maximal_balanced_sub(P(3, 2), P(3), 2) == P(3)


def test_maximal_balanced_sub_whole_diagram():
    assert maximal_balanced_sub(P(2, 2), EMPTY, 1) == EMPTY


def test_maximal_balanced_sub_postconditions():
    # a descent exists here even though the printed pair itself is not
    # balanced (the sizes differ by an odd number)
    lam = P(7, 6, 4, 4, 4, 4, 1, 1)
    out = maximal_balanced_sub(lam, P(4, 3, 3, 3, 3), 2)
    assert lam.contains(out) and out != lam
    assert is_balanced(lam, out, 2)


def test_hat_stripping_log():
    core, steps = hat_steps(P(7, 7, 6, 5, 4, 2, 1, 1), 1)
    assert steps == [("cols", [1]), ("rows", [1, 2]), ("cols", [2]),
                     ("rows", [3])]
    assert core.boxes == frozenset(
        {Box(4, 3), Box(4, 4), Box(4, 5), Box(5, 3), Box(5, 4)})


def test_hat_empty():
    assert hat(EMPTY, 0).boxes == frozenset()
    assert hat(EMPTY, 3).boxes == frozenset()


def test_is_minimal_examples():
    assert is_minimal(EMPTY, 1)
    assert not is_minimal(P(2, 2), 1)
    # a smaller balanced weight exists, so this shape is not minimal
    assert is_balanced(P(7, 6, 6, 5, 2, 2), P(7, 5, 5, 5, 1, 1), 1)
    assert not is_minimal(P(7, 6, 6, 5, 2, 2), 1)


def test_is_minimal_agrees_with_brute_force():
    for size in range(8):
        from brauerblocks.partitions import partitions_of
        for lam in partitions_of(size):
            for delta in DELTAS:
                assert is_minimal(lam, delta) == brute_minimal(lam, delta), \
                    (lam, delta)


def test_minimal_weight():
    assert minimal_weight(P(2, 2), 1) == EMPTY
    assert minimal_weight(EMPTY, 1) == EMPTY
    got = minimal_weight(P(6, 5, 5, 2, 1), 2)
    assert is_minimal(got, 2)
    assert is_balanced(P(6, 5, 5, 2, 1), got, 2)
    assert minimal_weight(got, 2) == got


def test_minimal_weight_matches_block_partition():
    bp = block_partition(4, 1)
    for minimal, members in bp.classes:
        for w in members:
            assert minimal_weight(w, 1) == minimal


def test_hom_target():
    assert hom_target(EMPTY, 1) is None
    assert hom_target(P(1), 2) is None
    assert hom_target(P(2, 2), 1) == EMPTY
    assert hom_target(P(7, 6, 6, 5, 4, 4, 2), 1) == P(7, 6, 4, 4, 3, 2, 2)


@given(partitions, deltas)
def test_hom_target_descends(lam, delta):
    out = hom_target(lam, delta)
    if out is None:
        assert is_minimal(lam, delta)
    else:
        assert lam.contains(out) and out != lam
        assert is_balanced(lam, out, delta)


def test_lattice_m0_and_m1():
    lat = lattice_predict(P(3, 1), P(3, 1), 4)
    assert lat.m == 0 and lat.nodes == {frozenset(): P(3, 1)}
    assert lat.covers == ()

    lat = lattice_predict(P(2, 1), P(1), 1)
    assert lat.m == 1
    assert lat.nodes == {frozenset(): P(2, 1), frozenset({1}): P(1)}
    assert lat.covers == ((frozenset(), frozenset({1})),)


def test_lattice_m3_staircase():
    lam, mu = P(6, 5, 4, 3, 2, 1), P(5, 4, 3, 2, 1)
    lat = lattice_predict(lam, mu, 1)
    assert lat.m == 3
    assert len(lat.nodes) == 8 and len(lat.covers) == 12
    for a, b in lat.pairs:
        assert a.content + b.content == 0  # partners sum to 1 - delta
    assert lat.nodes[frozenset({1, 2, 3})] == mu
    for node in lat.nodes.values():
        assert lam.contains(node)
        assert is_balanced(lam, node, 1)
    for x, y in lat.covers:
        assert x < y and len(y - x) == 1


def test_lattice_rejects_bad_skews():
    with pytest.raises(ValueError):
        lattice_predict(P(2, 2), EMPTY, 1)  # adjacent boxes
    with pytest.raises(ValueError):
        lattice_predict(P(2), P(1), 1)  # odd box count
    with pytest.raises(ValueError):
        lattice_predict(P(3, 1), P(2), 5)  # no partner at this delta
    with pytest.raises(ValueError):
        lattice_predict(P(1), P(2), 1)  # not contained
