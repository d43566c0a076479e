import json

import pytest

from weylybe import reference_data as ref
from weylybe.root_system import build_root_system
from weylybe.scalars import EpsPoly
from weylybe.tilted import (GradedPoset, TheoremViolation, bruhat_interval_poset, build_digraph,
                            check_monotone_paths, check_product_identity, decreasing_two_paths, diamond_completion,
                            down_edges, el_shelling_check, in_coset, is_eulerian, is_lower_eulerian, mobius,
                            shortest_paths, tilted_distance, tilted_interval, tilted_order, tilted_product,
                            unique_increasing_path)
from weylybe.weyl import random_ordering


@pytest.fixture(scope="module")
def b2():
    return build_digraph(build_root_system("B", 2))


def idx(D, word):
    return D.group.from_word([] if word == "e" else [ref.B2_LETTERS.index(c) + 1 for c in word])


def test_a1_digraph():
    D = build_digraph(build_root_system("A", 1))
    assert {(e.source, e.target, e.down) for e in D.edges} == {(0, 1, False), (1, 0, True)}


@pytest.mark.parametrize("row", ref.B2_DIGRAPH_UP + ref.B2_DIGRAPH_DOWN)
def test_b2_edges_match_picture(b2, row):
    a, b, lab = row
    e = b2.edge(idx(b2, a), idx(b2, b))
    assert e is not None and e.label == lab
    assert e.down == (row in ref.B2_DIGRAPH_DOWN)


def test_b2_edge_count(b2):
    assert len(b2.edges) == len(ref.B2_DIGRAPH_UP) + len(ref.B2_DIGRAPH_DOWN)
    assert len(down_edges(b2)) == len(ref.B2_DIGRAPH_DOWN)


def test_b2_distances(b2):
    assert tilted_distance(b2, idx(b2, "abab"), 0) == 2
    assert tilted_distance(b2, idx(b2, "ab"), idx(b2, "a")) == 3
    assert tilted_distance(b2, idx(b2, "a"), idx(b2, "ab")) == 1


def test_interval_sizes(b2):
    assert len(tilted_interval(b2, idx(b2, "ab"), idx(b2, "a"))) == 8
    # a -> ab has length one, so D(a, ab) is just its two endpoints
    assert len(tilted_interval(b2, idx(b2, "a"), idx(b2, "ab"))) == 2
    assert len(tilted_interval(b2, idx(b2, "abab"), 0)) == 4


@pytest.mark.parametrize("tn", [("B", 2), ("A", 3)])
def test_trivial_interval(tn):
    D = build_digraph(build_root_system(*tn))
    for u in range(D.size):
        P = tilted_interval(D, u, u)
        assert P.elements == [u] and not P.covers


@pytest.mark.parametrize("tn", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_interval_from_identity_is_bruhat(tn):
    D = build_digraph(build_root_system(*tn))
    g = D.group
    for v in range(g.size):
        P = tilted_interval(D, 0, v)
        elems, covers = bruhat_interval_poset(g, 0, v)
        assert set(P.elements) == elems
        assert {(a, b) for a, b, _ in P.covers} == covers


@pytest.mark.parametrize("tn", [("B", 2), ("A", 3)])
def test_intervals_are_hereditary(tn):
    D = build_digraph(build_root_system(*tn))
    for u in range(0, D.size, 3):
        for v in range(D.size):
            P = tilted_interval(D, u, v)
            for x in P.elements:
                for y in P.upset(x):
                    assert set(P.interval(x, y)) == set(tilted_interval(D, x, y).elements)


def test_tilted_order_from_identity_has_top():
    D = build_digraph(build_root_system("A", 2))
    assert tilted_order(D, 0).top == D.group.longest


def _poset(covers, ranks):
    return GradedPoset(list(ranks), ranks, covers, 0, max(ranks, key=ranks.get))


def test_mobius_and_eulerian_on_small_posets():
    diamond = _poset([(0, 1, 1), (0, 2, 2), (1, 3, 2), (2, 3, 1)], {0: 0, 1: 1, 2: 1, 3: 2})
    assert mobius(diamond)[(0, 3)] == 1
    assert is_eulerian(diamond)
    chain = _poset([(0, 1, 1), (1, 2, 2), (2, 3, 3)], {0: 0, 1: 1, 2: 2, 3: 3})
    assert mobius(chain)[(0, 2)] == 0
    assert not is_eulerian(chain)
    assert not is_lower_eulerian(chain)


def test_shelling_detects_repeated_labels():
    square = _poset([(0, 1, 1), (0, 2, 1), (1, 3, 2), (2, 3, 2)], {0: 0, 1: 1, 2: 1, 3: 2})
    rep = el_shelling_check(square)
    assert not rep.passed
    good = _poset([(0, 1, 1), (0, 2, 2), (1, 3, 2), (2, 3, 1)], {0: 0, 1: 1, 2: 1, 3: 2})
    assert el_shelling_check(good).passed


def test_a2_full_interval_is_shellable():
    D = build_digraph(build_root_system("A", 2))
    P = tilted_interval(D, 0, D.group.longest)
    assert len(P) == 6
    assert el_shelling_check(P).passed and is_eulerian(P)


@pytest.mark.parametrize("seed", [None, 1, 2])
def test_monotone_paths_b3(seed):
    rs = build_root_system("B", 3)
    D = build_digraph(rs, None if seed is None else random_ordering(rs, seed))
    assert check_monotone_paths(D).passed


def test_increasing_path_b2(b2):
    w0 = b2.group.longest
    path = unique_increasing_path(b2, 0, w0)
    labels = [e.label for e in path]
    assert labels == sorted(labels) and len(labels) == 4
    assert tuple(labels) == min(shortest_paths(b2, 0, w0))


def test_theorem_violation_is_reported():
    # on a digraph with a deleted edge the path check must object
    D = build_digraph(build_root_system("A", 2))
    D.step[0] = {}
    D._dist[0] = [0] + [1] * (D.size - 1)
    with pytest.raises(TheoremViolation):
        unique_increasing_path(D, 0, 1)


def test_product_identity(b2):
    a = idx(b2, "a")
    out = tilted_product(b2, a)
    assert out[b2.group.longest] == EpsPoly([0, 0, 0, 1])
    assert all(check_product_identity(b2, u) for u in range(b2.size))


def test_diamond_completion_b2(b2):
    count = 0
    for u, x, v in decreasing_two_paths(b2):
        y, m, n = diamond_completion(b2, u, x, v)
        k, l = b2.edge(u, x).label, b2.edge(x, v).label
        assert b2.edge(u, y).label == m and b2.edge(y, v).label == n
        assert m < n and m < k and l < n
        assert in_coset(b2, y, u, b2.edge(u, x).root, b2.edge(x, v).root)
        count += 1
    assert count > 0


def test_exports(b2, tmp_path):
    dot = b2.to_dot()
    assert dot.count("->") == 22 and dot.count("dashed") == 10
    doc = json.loads(b2.to_json())
    assert len(doc["vertices"]) == 8 and len(doc["edges"]) == 22
    P = tilted_order(b2, idx(b2, "a"))
    pdoc = json.loads(P.to_json())
    assert pdoc
    assert "dashed" in P.to_dot(down=down_edges(b2))
