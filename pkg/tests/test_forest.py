import random

import pytest

from mssp.forest import (RootedForest, NaiveRootedForest,
                         DartForest, NaiveDartForest)
from mssp.weights import W


def test_rooted_basic():
    f = RootedForest()
    for v in range(4):
        f.create(v, v * 10)
    f.link(1, 0)
    f.link(2, 1)
    f.link(3, 0)
    assert f.tree_root(2) == 0
    assert f.subtree_size(1) == 2
    f.add_subtree(5, 1)
    assert f.get_value(1) == 15
    assert f.get_value(2) == 25
    assert f.get_value(3) == 30
    f.cut(1)
    assert f.tree_root(2) == 1
    assert not f.same_tree(2, 3)
    f.add_subtree(-1, 0)
    assert f.get_value(2) == 25


def test_rooted_link_cycle_rejected():
    f = RootedForest()
    f.create(0)
    f.create(1)
    f.link(1, 0)
    with pytest.raises(ValueError):
        f.link(0, 1)


def test_rooted_weight_values():
    f = RootedForest(zero=W(0, 0))
    f.create(0, W(1, 2))
    f.create(1, W(0, 0))
    f.link(1, 0)
    f.add_subtree(W(3, -1), 0)
    assert f.get_value(0) == W(4, 1)
    assert f.get_value(1) == W(3, -1)


@pytest.mark.parametrize("seed", range(6))
def test_rooted_fuzz(seed):
    rng = random.Random(seed)
    n = 64
    fast = RootedForest(journal=True, seed=seed)
    ref = NaiveRootedForest()
    for v in range(n):
        val = rng.randint(-5, 5)
        fast.create(v, val)
        ref.create(v, val)
    snaps = []
    for step in range(4000):
        op = rng.random()
        u, v = rng.randrange(n), rng.randrange(n)
        if op < 0.30:
            if u != v and ref.parent[u] is None and not ref.same_tree(u, v):
                fast.link(u, v)
                ref.link(u, v)
        elif op < 0.50:
            fast.cut(u)
            ref.cut(u)
        elif op < 0.75:
            d = rng.randint(-3, 3)
            fast.add_subtree(d, u)
            ref.add_subtree(d, u)
        elif op < 0.90:
            assert fast.get_value(u) == ref.get_value(u)
            assert fast.tree_root(u) == ref.tree_root(u)
            assert fast.same_tree(u, v) == ref.same_tree(u, v)
            assert fast.subtree_size(u) == ref.subtree_size(u)
        else:
            snaps.append((fast.snapshot(), u, ref.get_value(u), ref.parent[u]))
    rng.shuffle(snaps)  # out-of-order replay must work too
    for h, u, val, par in snaps:
        assert fast.query_version(h, u) == (val, par)


def test_dart_basic():
    f = DartForest()
    a, b, c = f.new_node("a"), f.new_node("b"), f.new_node("c")
    e1 = f.link(a, b, 10, 20, 0, 1)
    f.link(b, c, 30, 5, 2, 3)
    assert f.min_path(a, c) == (10, 0)
    assert f.min_path(c, a) == (5, 3)
    f.add_path(-7, a, c)
    assert f.get_dart_value(0) == 3
    assert f.get_dart_value(1) == 27
    assert f.get_dart_value(3) == 12
    assert f.min_path(c, a) == (12, 3)
    assert f.junction(a, c, b) is b
    vals = f.cut(e1)
    assert vals == {0: 3, 1: 27}
    assert not f.same_tree(a, b)
    assert f.same_tree(b, c)


def test_dart_link_cycle_rejected():
    f = DartForest()
    a, b = f.new_node(), f.new_node()
    f.link(a, b, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        f.link(b, a, 0, 0, 2, 3)


def test_dart_min_path_tie_break():
    f = DartForest()
    ns = [f.new_node(i) for i in range(4)]
    f.link(ns[0], ns[1], 5, 5, 8, 9)
    f.link(ns[1], ns[2], 5, 5, 2, 3)
    f.link(ns[2], ns[3], 5, 5, 6, 7)
    # equal values: the smallest dart id wins
    assert f.min_path(ns[0], ns[3]) == (5, 2)


def test_dart_weight_values():
    f = DartForest()
    a, b = f.new_node(), f.new_node()
    f.link(a, b, W(3, 1), W(0, 0), 0, 1)
    f.add_path(W(1, -1), a, b)
    assert f.get_dart_value(0) == W(4, 0)
    assert f.get_dart_value(1) == W(-1, 1)
    assert f.min_path(a, b) == (W(4, 0), 0)


@pytest.mark.parametrize("seed", range(6))
def test_dart_fuzz(seed):
    rng = random.Random(100 + seed)
    n = 48
    fast = DartForest()
    ref = NaiveDartForest()
    fn = [fast.new_node(i) for i in range(n)]
    rn = [ref.new_node(i) for i in range(n)]
    fedges, redges = {}, {}
    next_dart = 0
    for step in range(4000):
        op = rng.random()
        i, j = rng.randrange(n), rng.randrange(n)
        if op < 0.30 and i != j and not ref.same_tree(rn[i], rn[j]):
            a = next_dart
            next_dart += 2
            v1, v2 = rng.randint(-9, 9), rng.randint(-9, 9)
            fedges[a] = fast.link(fn[i], fn[j], v1, v2, a, a + 1)
            redges[a] = ref.link(rn[i], rn[j], v1, v2, a, a + 1)
        elif op < 0.45 and fedges:
            k = rng.choice(sorted(fedges))
            assert fast.cut(fedges.pop(k)) == ref.cut(redges.pop(k))
        elif op < 0.65 and i != j and ref.same_tree(rn[i], rn[j]):
            d = rng.randint(-4, 4)
            fast.add_path(d, fn[i], fn[j])
            ref.add_path(d, rn[i], rn[j])
        elif op < 0.85 and ref.same_tree(rn[i], rn[j]):
            assert fast.min_path(fn[i], fn[j]) == ref.min_path(rn[i], rn[j])
        else:
            k2 = rng.randrange(n)
            if ref.same_tree(rn[i], rn[j]) and ref.same_tree(rn[i], rn[k2]):
                zf = fast.junction(fn[i], fn[j], fn[k2])
                zr = ref.junction(rn[i], rn[j], rn[k2])
                assert zf.label == ref.labels[zr]
            if fedges:
                k = rng.choice(sorted(fedges))
                assert fast.get_dart_value(k) == ref.get_dart_value(k)
                assert fast.get_dart_value(k + 1) == ref.get_dart_value(k + 1)


def test_path_darts_debug_helper():
    f = DartForest()
    ns = [f.new_node(i) for i in range(5)]
    for i in range(4):
        f.link(ns[i], ns[i + 1], 1, 1, 2 * i, 2 * i + 1)
    assert f.path_darts(ns[0], ns[4]) == [0, 2, 4, 6]
    assert f.path_darts(ns[4], ns[0]) == [7, 5, 3, 1]
