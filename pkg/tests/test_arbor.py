import itertools

import pytest

from sphericalpf.arbor import (
    RootedTree,
    enumerate_rooted_trees,
    enumerate_uprooted,
    inversions,
    is_uprooted,
    orient,
    prufer_decode,
    prufer_encode,
    root_degree,
    surface_inversions,
    tree_inversion_distribution,
    uprooted_statistic_distribution,
)
from sphericalpf.errors import ParameterError
from sphericalpf.identity import forest_count
from sphericalpf.seqcore import pf_degree_distribution

from oracles import histogram, inversion_pairs, is_uprooted_oracle, parent_array_trees, pascal


def tree(root, parent_map, n):
    parents = [0] * n
    for v, p in parent_map.items():
        parents[v - 1] = p
    return RootedTree(n, root, tuple(parents))


def star(n, center):
    return tree(center, {v: center for v in range(1, n + 1) if v != center}, n)


def test_prufer_decode_examples():
    assert prufer_decode((), 2) == [(1, 2)]
    assert prufer_decode((1, 1), 4) == [(1, 2), (1, 3), (1, 4)]
    trees = {tuple(prufer_decode(c, 4)) for c in itertools.product(range(1, 5), repeat=2)}
    assert len(trees) == 16


def test_prufer_decode_rejects_bad_labels():
    with pytest.raises(ParameterError):
        prufer_decode((5, 1), 4)
    with pytest.raises(ParameterError):
        prufer_decode((1,), 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_prufer_round_trip(n):
    seen = set()
    for code in itertools.product(range(1, n + 1), repeat=n - 2):
        edges = prufer_decode(code, n)
        assert prufer_encode(edges, n) == code
        seen.add(tuple(edges))
    assert len(seen) == n ** (n - 2)
    for t in enumerate_rooted_trees(n):
        assert orient(prufer_decode(prufer_encode(t.edges(), n), n), n, t.root) == t


def test_rooted_tree_validation():
    with pytest.raises(ParameterError):
        RootedTree(3, 1, (0, 3, 2))  # 2 and 3 point at each other
    with pytest.raises(ParameterError):
        RootedTree(3, 1, (1, 1, 1))  # root has a parent
    with pytest.raises(ParameterError):
        RootedTree(3, 4, (0, 0, 0))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 9), (4, 64)])
def test_rooted_tree_counts(n, count):
    trees = list(enumerate_rooted_trees(n))
    assert len(trees) == count == len(set(trees))


@pytest.mark.parametrize("n", range(1, 6))
def test_rooted_trees_match_parent_array_oracle(n):
    ours = {(t.root, t.parents) for t in enumerate_rooted_trees(n)}
    ref = {(r, tuple(p.get(v, 0) for v in range(1, n + 1))) for r, p in parent_array_trees(n)}
    assert ours == ref


def test_enumeration_order_is_code_then_root():
    keys = []
    for t in enumerate_rooted_trees(4):
        keys.append((prufer_encode(t.edges(), 4), t.root))
    assert keys == sorted(keys)


def test_is_uprooted_examples():
    assert is_uprooted(star(4, 4))
    assert not is_uprooted(star(4, 1))
    assert not is_uprooted(tree(1, {2: 1}, 2))
    assert is_uprooted(tree(3, {2: 3, 1: 2}, 3))


@pytest.mark.parametrize("n, count", [(2, 1), (3, 4), (4, 27)])
def test_uprooted_counts(n, count):
    assert sum(1 for _ in enumerate_uprooted(n)) == count


@pytest.mark.parametrize("n", range(2, 8))
def test_uprooted_count_general(n):
    assert sum(1 for _ in enumerate_uprooted(n)) == (n - 1) ** (n - 1)


def test_root_degree_examples():
    assert root_degree(star(4, 2)) == 3
    assert root_degree(tree(1, {2: 1, 3: 2, 4: 3}, 4)) == 1
    assert root_degree(RootedTree(1, 1, (0,))) == 0
    assert uprooted_statistic_distribution(4, "root_degree") == {1: 18, 2: 8, 3: 1}


def test_inversion_examples():
    assert inversions(star(5, 1)) == 0
    assert inversions(tree(1, {3: 1, 2: 3}, 3)) == 1
    assert tree_inversion_distribution(4) == {0: 6, 1: 6, 2: 3, 3: 1}


def test_surface_inversion_examples():
    assert surface_inversions(star(4, 4)) == 0
    assert surface_inversions(tree(3, {2: 3, 1: 2}, 3)) == 1
    assert inversions(tree(3, {2: 3, 1: 2}, 3)) == 3
    assert uprooted_statistic_distribution(2, "surface_inversions") == {0: 1}
    assert uprooted_statistic_distribution(4, "surface_inversions") == {0: 12, 1: 10, 2: 4, 3: 1}


def test_unknown_statistic():
    with pytest.raises(ParameterError):
        uprooted_statistic_distribution(3, "height")


@pytest.mark.parametrize("n", range(2, 6))
def test_statistics_match_dfs_oracle(n):
    ours = {(t.root, t.parents): t for t in enumerate_rooted_trees(n)}
    for r, p in parent_array_trees(n):
        t = ours[(r, tuple(p.get(v, 0) for v in range(1, n + 1)))]
        assert inversions(t) == inversion_pairs(p, r, n)
        assert surface_inversions(t) == inversion_pairs(p, r, n, skip_root=True)
        assert is_uprooted(t) == is_uprooted_oracle(p, r)
        assert surface_inversions(t) <= inversions(t)


def test_uprooted_surface_distribution_n5():
    expected = histogram(
        inversion_pairs(p, r, 5, skip_root=True)
        for r, p in parent_array_trees(5)
        if is_uprooted_oracle(p, r)
    )
    assert expected == {0: 60, 1: 80, 2: 60, 3: 35, 4: 15, 5: 5, 6: 1}
    assert uprooted_statistic_distribution(5, "surface_inversions") == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_root_degree_refinement(n):
    d = uprooted_statistic_distribution(n, "root_degree")
    assert d.total == (n - 1) ** (n - 1)
    assert d == {s: pascal(n, s + 1) * forest_count(n - 1, s) for s in range(1, n)}


@pytest.mark.parametrize("n", range(2, 8))
def test_inversions_vs_parking_degree(n):
    shift = pascal(n - 1, 2)
    expected = pf_degree_distribution(n - 1).relabel(lambda d: shift - d)
    assert tree_inversion_distribution(n) == expected
