import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from mupermanent.labeling import (
    LabeledGraph,
    UnlabeledTree,
    count_path_labelings,
    edges_cross,
    enumerate_path_labelings,
    exists_mu_labeling,
    find_crossing,
    free_trees,
    is_mu_labeling,
    label_tree,
    parse_graph,
    relabel_edges,
)
from mupermanent.matrix import ResourceLimitError
from mupermanent.suites import random_tree

TWELVE_VERTEX_TREE = [(4, 3), (3, 2), (2, 1), (1, 7), (7, 8), (4, 5), (3, 6), (8, 9), (1, 10), (10, 11), (10, 12)]


def crossing_by_definition(edges):
    """Literal reading of the condition: order each disjoint pair so i < k, require (i) or (ii)."""
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        (i, j), (k, l) = sorted([tuple(sorted((a, b))), tuple(sorted((c, d)))])
        if not (i < j < k < l or i < k < l < j):
            return True
    return False


def test_predicate_examples_from_paths():
    assert find_crossing(LabeledGraph.from_path((2, 1, 4, 3, 5)).edges) == ((1, 4), (3, 5))
    assert is_mu_labeling(LabeledGraph.from_path((5, 1, 2, 3, 4)))
    assert is_mu_labeling(LabeledGraph.from_path((2, 1, 3, 4, 5)))
    assert not is_mu_labeling(LabeledGraph.from_path((2, 1, 4, 3, 5)))


def test_twelve_vertex_tree_is_mu_labeled():
    assert is_mu_labeling(LabeledGraph.from_edges(12, TWELVE_VERTEX_TREE))


@pytest.mark.parametrize("n", range(1, 12))
def test_identity_path_always_valid(n):
    assert is_mu_labeling(LabeledGraph.from_path(range(1, n + 1)))


def test_predicate_matches_definition_on_small_graphs():
    rng = random.Random(0)
    all_pairs = list(itertools.combinations(range(1, 7), 2))
    for _ in range(500):
        edges = rng.sample(all_pairs, rng.randint(0, 8))
        assert (find_crossing(edges) is not None) == crossing_by_definition(edges)


def test_edges_sharing_a_vertex_never_cross():
    assert not edges_cross((1, 3), (3, 5))
    assert not edges_cross((1, 3), (1, 2))
    assert edges_cross((1, 3), (2, 4))
    assert not edges_cross((1, 4), (2, 3))


def test_complete_graphs():
    assert is_mu_labeling(LabeledGraph.complete(3))
    assert not is_mu_labeling(LabeledGraph.complete(4))
    assert exists_mu_labeling(LabeledGraph.complete(3).edges) is not None
    assert exists_mu_labeling(LabeledGraph.complete(4).edges) is None
    assert exists_mu_labeling(LabeledGraph.complete(5).edges) is None


def test_k4_exhaustively_unlabelable():
    k4 = list(itertools.combinations(range(1, 5), 2))
    for perm in itertools.permutations(range(1, 5)):
        relabeled = relabel_edges(k4, dict(zip(range(1, 5), perm)))
        assert not is_mu_labeling(relabeled)


def test_search_returns_valid_labelings_for_every_small_tree():
    for n in range(1, 9):
        for edges in free_trees(n):
            labels = exists_mu_labeling(edges, vertices=range(1, n + 1))
            assert labels is not None
            assert sorted(labels.values()) == list(range(1, n + 1))
            assert is_mu_labeling(relabel_edges(edges, labels))


def test_search_cap():
    with pytest.raises(ResourceLimitError):
        exists_mu_labeling([(i, i + 1) for i in range(1, 9)])


def test_graph_validation():
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 4)])


def test_tree_validation():
    with pytest.raises(ValueError):
        UnlabeledTree([(1, 2), (2, 3), (3, 1)])
    with pytest.raises(ValueError):
        UnlabeledTree([(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        UnlabeledTree([(1, 2)], vertices=[3])
    assert UnlabeledTree([], vertices=["x"]).n == 1


def test_label_path_rooted_at_second_vertex():
    tree = UnlabeledTree([("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])
    labels = label_tree(tree, root="b")
    assert [labels[v] for v in "abcde"] == [5, 1, 2, 3, 4]


def test_label_twelve_vertex_tree():
    tree = UnlabeledTree(TWELVE_VERTEX_TREE)
    assert label_tree(tree, root=1) == {v: v for v in range(1, 13)}


def test_label_twelve_vertex_tree_under_scrambled_ids():
    # rename vertices; the only tie (two equal paths below vertex 10) keeps its order
    rng = random.Random(11)
    for _ in range(20):
        names = rng.sample(range(100, 200), 12)
        if names[10] > names[11]:
            names[10], names[11] = names[11], names[10]
        rename = dict(zip(range(1, 13), names))
        tree = UnlabeledTree([(rename[u], rename[v]) for u, v in TWELVE_VERTEX_TREE])
        labels = label_tree(tree, root=rename[1])
        assert {v: labels[rename[v]] for v in range(1, 13)} == {v: v for v in range(1, 13)}


def test_label_single_vertex_and_star():
    assert label_tree(UnlabeledTree([], vertices=[7])) == {7: 1}
    star = UnlabeledTree([(0, leaf) for leaf in (9, 3, 5, 1)])
    assert label_tree(star, root=0) == {0: 1, 1: 2, 3: 3, 5: 4, 9: 5}


def test_label_tree_default_root_and_bad_root():
    tree = UnlabeledTree([(3, 4), (4, 5)])
    assert label_tree(tree)[3] == 1
    with pytest.raises(ValueError):
        label_tree(tree, root=9)


def test_label_tree_sound_on_random_trees():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 40)
        edges = random_tree(n, rng)
        tree = UnlabeledTree(edges, range(1, n + 1))
        labels = label_tree(tree, rng.randint(1, n))
        assert sorted(labels.values()) == list(range(1, n + 1))
        assert is_mu_labeling(relabel_edges(edges, labels))


def random_preorder_labels(n, edges, rng):
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    root = rng.randint(1, n)
    labels, stack = {}, [root]
    while stack:
        v = stack.pop()
        labels[v] = len(labels) + 1
        kids = [w for w in adj[v] if w not in labels]
        rng.shuffle(kids)
        stack.extend(kids)
    return labels


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.randoms(use_true_random=False))
def test_any_dfs_preorder_labeling_is_valid(n, rng):
    edges = random_tree(n, rng)
    labels = random_preorder_labels(n, edges, rng)
    assert is_mu_labeling(relabel_edges(edges, labels))


def test_path_order_four_listing():
    expected = {
        (1, 2, 3, 4), (1, 2, 4, 3), (1, 4, 2, 3), (1, 4, 3, 2),
        (2, 1, 3, 4), (2, 3, 1, 4), (2, 1, 4, 3), (3, 2, 1, 4),
    }
    found = enumerate_path_labelings(4)
    assert set(found) == expected
    assert found == sorted(found)


def test_path_order_two():
    assert enumerate_path_labelings(2) == [(1, 2)]
    with pytest.raises(ValueError):
        enumerate_path_labelings(1)


@pytest.mark.parametrize("m, count", [(2, 1), (3, 3), (4, 8), (5, 20), (6, 48), (7, 112), (8, 256), (9, 576)])
def test_exhaustive_counts(m, count):
    assert count_path_labelings(m) == count


@pytest.mark.parametrize(
    "m, count", [(2, 1), (3, 3), (4, 8), (5, 20), (6, 48), (7, 112), (8, 256), (9, 576), (10, 1280), (11, 2816)]
)
def test_pruned_counts(m, count):
    assert count_path_labelings(m, engine="pruned") == count


def test_pruned_order_twelve():
    # (n + 2) 2^(n - 1) at n = 10
    assert count_path_labelings(12, engine="pruned") == 12 * 2**9 == 6144


def test_engines_agree_on_sequences():
    for m in range(2, 10):
        assert enumerate_path_labelings(m, engine="pruned") == enumerate_path_labelings(m)


def brute_path_labelings(m):
    # independent oracle: every permutation, literal definition, keep first < last
    return sorted(
        seq for seq in itertools.permutations(range(1, m + 1))
        if seq[0] < seq[-1] and not crossing_by_definition(list(zip(seq, seq[1:])))
    )


def test_enumeration_matches_definition():
    for m in range(2, 8):
        assert enumerate_path_labelings(m) == brute_path_labelings(m)


def test_canonical_and_full_duality():
    for m in range(2, 10):
        canon = enumerate_path_labelings(m, engine="pruned")
        full = enumerate_path_labelings(m, canonical=False, engine="pruned")
        assert len(full) == 2 * len(canon)
        assert set(full) == set(canon) | {s[::-1] for s in canon}
        assert full == sorted(full)


def test_reversal_stability():
    for m in range(2, 8):
        for seq in itertools.permutations(range(1, m + 1)):
            assert is_mu_labeling(LabeledGraph.from_path(seq)) == is_mu_labeling(LabeledGraph.from_path(seq[::-1]))


def test_count_law():
    for m in range(3, 12):
        assert count_path_labelings(m, engine="pruned") == m * 2 ** (m - 3)


def test_exhaustive_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_path_labelings(13)
    with pytest.raises(ValueError):
        enumerate_path_labelings(5, engine="magic")


def test_free_tree_counts_and_distinctness():
    published = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    for n, expected in enumerate(published, start=1):
        trees = free_trees(n)
        assert len(trees) == expected
        if n > 1:
            assert len(trees) == sum(1 for _ in nx.nonisomorphic_trees(n))
        graphs = []
        for edges in trees:
            g = nx.Graph()
            g.add_nodes_from(range(1, n + 1))
            g.add_edges_from(edges)
            assert nx.is_tree(g)
            graphs.append(g)
        if n <= 8:
            for g, h in itertools.combinations(graphs, 2):
                assert not nx.is_isomorphic(g, h)


def test_parse_graph():
    g = parse_graph("# path\n5\n2 1\n1 4\n4 3\n3 5\n")
    assert g.n == 5
    assert g.sorted_edges() == [(1, 2), (1, 4), (3, 4), (3, 5)]
    for bad in ["", "x", "3\n1 2 3\n", "3\n1 x\n", "3\n1 5\n"]:
        with pytest.raises(ValueError):
            parse_graph(bad)
