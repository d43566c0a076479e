import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from weylybe.root_system import DomainError, build_root_system, dihedral_subsystems
from weylybe.weyl import (GroupTooLarge, WeylGroup, all_reflections, bruhat_leq, coset_decomposition,
                          default_ordering, enumerate_group, from_word, identity, inverse,
                          is_reflection_ordering, length, longest_element, multiply, random_ordering,
                          reduced_word, reflection_ordering_from_word, simple_reflection, weyl_group,
                          ybe_sequence)

ORDERS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120, ("B", 2): 8, ("B", 3): 48,
          ("B", 4): 384, ("C", 3): 48, ("C", 4): 384, ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152}


def group_order_formula(t, n):
    if t == "A":
        return math.factorial(n + 1)
    if t in "BC":
        return 2 ** n * math.factorial(n)
    if t == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"G": 12, "F": 1152}[t]


@pytest.mark.parametrize("tn", sorted(ORDERS))
def test_group_orders(tn):
    g = weyl_group(build_root_system(*tn))
    assert g.size == ORDERS[tn] == group_order_formula(*tn)
    assert g.lengths[0] == 0
    assert len(set(g.matrices)) == g.size


def word_length_by_bfs(rs):
    """Minimal word length of every element, by BFS over WeylElement products."""
    e = identity(rs)
    dist = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, rs.rank + 1):
                v = multiply(w, simple_reflection(rs, i))
                if v not in dist:
                    dist[v] = dist[w] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("G", 2), ("C", 3)])
def test_length_is_inversions_and_word_length(tn):
    rs = build_root_system(*tn)
    g = weyl_group(rs)
    bfs = word_length_by_bfs(rs)
    for w in g.elements:
        inversions = sum(1 for r in rs.positive_roots if any(x < 0 for x in w(r)))
        assert length(w) == inversions == bfs[w]


def test_b2_examples():
    rs = build_root_system("B", 2)
    assert length(from_word(rs, [1, 2])) == 2
    assert length(from_word(rs, [2, 1, 2])) == 3
    assert length(longest_element(rs)) == 4
    assert reduced_word(longest_element(rs)) in ([1, 2, 1, 2], [2, 1, 2, 1])
    assert len(all_reflections(rs)) == 4


def test_a2_braid_and_inverse():
    rs = build_root_system("A", 2)
    s1, s2 = simple_reflection(rs, 1), simple_reflection(rs, 2)
    assert multiply(s1, s2, s1) == multiply(s2, s1, s2)
    for w in enumerate_group(rs):
        assert multiply(w, inverse(w)) == identity(rs)


def test_small_longest_elements():
    assert reduced_word(longest_element(build_root_system("A", 1))) == [1]
    assert length(longest_element(build_root_system("A", 3))) == 6
    assert len(all_reflections(build_root_system("F", 4))) == 24


def test_mixed_groups_rejected():
    with pytest.raises(DomainError):
        multiply(identity(build_root_system("A", 2)), identity(build_root_system("B", 2)))


def test_group_bound():
    with pytest.raises(GroupTooLarge):
        WeylGroup(build_root_system("E", 8))
    with pytest.raises(GroupTooLarge):
        WeylGroup(build_root_system("B", 3), bound=10)


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("G", 2)])
def test_reflections(tn):
    rs = build_root_system(*tn)
    refl = all_reflections(rs)
    assert len(refl) == rs.num_positive
    for t in refl:
        assert multiply(t.element, t.element) == identity(rs)
        assert t.element != identity(rs)
        assert t.element(t.root) == tuple(-x for x in t.root)
        for v in rs.positive_roots:
            if rs.form(v, t.root) == 0:
                assert t.element(v) == v


def subword_leq(g, u, v):
    """u <= v in Bruhat order iff u is a subword product of a reduced word of v."""
    word = g.word_indices(v)
    for mask in range(1 << len(word)):
        if g.from_word([a for k, a in enumerate(word) if mask >> k & 1]) == u:
            return True
    return False


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3)])
def test_bruhat_matches_subword_property(tn):
    g = weyl_group(build_root_system(*tn))
    for u in range(g.size):
        for v in range(g.size):
            assert g.bruhat_leq(u, v) == subword_leq(g, u, v)


def test_bruhat_examples():
    rs = build_root_system("B", 2)
    a, bab = from_word(rs, [1]), from_word(rs, [2, 1, 2])
    assert bruhat_leq(a, bab)
    assert not bruhat_leq(bab, a)
    assert all(bruhat_leq(identity(rs), w) for w in enumerate_group(rs))
    rs = build_root_system("A", 2)
    a, b = from_word(rs, [1]), from_word(rs, [2])
    assert bruhat_leq(a, from_word(rs, [1, 2])) and bruhat_leq(a, from_word(rs, [2, 1]))
    assert not bruhat_leq(a, b)


def test_reflection_ordering_examples():
    a1 = build_root_system("A", 1)
    assert reflection_ordering_from_word(a1, [1]).order == (0,)
    a2 = build_root_system("A", 2)
    # labels follow s_N ... s_{j+1}(alpha_{i_j}): 121 gives s2 < s1s2s1 < s1, 212 gives s1 < s1s2s1 < s2
    assert reflection_ordering_from_word(a2, [1, 2, 1]).order == (1, 2, 0)
    assert reflection_ordering_from_word(a2, [2, 1, 2]).order == (0, 2, 1)
    b2 = build_root_system("B", 2)
    # a < aba < bab < b with roots a=(1,0), aba=(2,1), bab=(1,1), b=(0,1)
    assert default_ordering(b2).order == (0, 3, 2, 1)
    assert not is_reflection_ordering(b2, [0, 2, 3, 1])


def test_ordering_rejects_bad_words():
    rs = build_root_system("A", 2)
    with pytest.raises(DomainError):
        reflection_ordering_from_word(rs, [1, 1, 2])
    with pytest.raises(DomainError):
        reflection_ordering_from_word(rs, [1, 2])
    with pytest.raises(DomainError):
        is_reflection_ordering(rs, [0, 0, 1])


def test_a2_has_two_reflection_orderings():
    rs = build_root_system("A", 2)
    good = [p for p in itertools.permutations(range(3)) if is_reflection_ordering(rs, p)]
    assert len(good) == 2


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("G", 2), ("D", 4), ("F", 4)])
def test_random_orderings_are_reflection_orderings(tn):
    rs = build_root_system(*tn)
    first = default_ordering(rs)
    assert is_reflection_ordering(rs, first.order)
    for seed in range(3):
        o = random_ordering(rs, seed, avoid=first)
        assert o.order != first.order
        assert is_reflection_ordering(rs, o.order)


@pytest.mark.parametrize("tn", [("B", 2), ("G", 2), ("B", 3)])
def test_ybe_sequence_shape(tn):
    rs = build_root_system(*tn)
    g = weyl_group(rs)
    for sub in dihedral_subsystems(rs):
        seq = ybe_sequence(rs, sub)
        a, b = sub.canonical_pair
        assert seq[0] == a and seq[-1] == b and len(seq) == len(sub.roots)
        # the k-th entry is the reflection a b a ... (2k+1 letters)
        ta, tb = g.reflection_index[a], g.reflection_index[b]
        cur = ta
        for k, r in enumerate(seq):
            assert g.reflection_index[r] == cur
            cur = g.mul(ta, g.mul(tb, cur))


def test_coset_decomposition_a3():
    rs = build_root_system("A", 3)
    sub = next(d for d in dihedral_subsystems(rs) if d.subtype == "A2")
    cd = coset_decomposition(rs, sub)
    assert len(cd.representatives) == 4
    assert all(len(c) == 6 for c in cd.cosets)
    assert cd.representatives[0] == 0
    assert cd.check_descent_correspondence(weyl_group(rs))


def test_whole_group_is_one_coset():
    rs = build_root_system("B", 2)
    sub = next(d for d in dihedral_subsystems(rs) if d.maximal)
    cd = coset_decomposition(rs, sub)
    assert cd.representatives == [0]


@pytest.mark.parametrize("tn", [("A", 3), ("B", 3), ("C", 3)])
def test_cosets_carry_subgroup_bruhat_order(tn):
    rs = build_root_system(*tn)
    g = weyl_group(rs)
    for sub in dihedral_subsystems(rs):
        cd = coset_decomposition(rs, sub)
        assert cd.check_descent_correspondence(g)
        elems = cd.subgroup_elements
        # length in W' is word length in its canonical generators
        sub_len = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                for k in sub.canonical_pair:
                    t = g.left[k][w]
                    if t not in sub_len:
                        sub_len[t] = sub_len[w] + 1
                        nxt.append(t)
            frontier = nxt

        def generated_leq(x, y, length_of):
            seen, frontier = {x}, [x]
            while frontier:
                nxt = []
                for w in frontier:
                    for k in sub.roots:
                        t = g.left[k][w]
                        if length_of(t) > length_of(w) and t not in seen:
                            seen.add(t)
                            nxt.append(t)
                frontier = nxt
            return y in seen

        for rep in cd.representatives:
            for x in elems:
                for y in elems:
                    in_sub = generated_leq(x, y, sub_len.__getitem__)
                    in_coset = generated_leq(g.mul(x, rep), g.mul(y, rep), g.lengths.__getitem__)
                    assert in_sub == in_coset


def test_restricted_bruhat_order_can_be_finer():
    # W' = <s2, t> with t the reflection of the highest root of A3: s2 < t in W,
    # but both have length 1 in W' and are incomparable there
    rs = build_root_system("A", 3)
    g = weyl_group(rs)
    s2, t = g.from_word([2]), g.from_word([1, 2, 3, 2, 1])
    assert g.bruhat_leq(s2, t)
    sub = next(d for d in dihedral_subsystems(rs) if d.roots == frozenset({1, 5}))
    assert sub.subtype == "A1xA1"


@given(st.sampled_from([("A", 3), ("B", 3), ("G", 2), ("D", 4)]),
       st.lists(st.integers(1, 4), max_size=12), st.data())
def test_word_recovery_and_parity(tn, word, data):
    rs = build_root_system(*tn)
    word = [i for i in word if i <= rs.rank]
    w = from_word(rs, word)
    red = reduced_word(w)
    assert from_word(rs, red) == w and len(red) == length(w)
    assert (len(word) - length(w)) % 2 == 0
    t = data.draw(st.sampled_from(all_reflections(rs)))
    assert (length(multiply(t.element, w)) - length(w)) % 2 == 1
