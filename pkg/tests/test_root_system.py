import itertools

import pytest
from hypothesis import given, strategies as st

from weylybe.root_system import (LONG, SHORT, ConfigurationError, DomainError, build_root_system,
                                 dihedral_subsystems, fundamental_weight_coefficient, height, length_class,
                                 reflection_closure)

COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
          "D": lambda n: n * (n - 1)}
EXCEPTIONAL = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}

ALL_TYPES = ([("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)]
             + [("C", n) for n in range(3, 9)] + [("D", n) for n in range(4, 9)]
             + list(EXCEPTIONAL))


def orbit_closure(cartan):
    """Positive roots by closing the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def refl(i, v):
        c = sum(cartan[i][j] * v[j] for j in range(n))
        return tuple(v[k] - (c if k == i else 0) for k in range(n))

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = refl(i, v)
                if w not in seen and w not in {tuple(-x for x in s) for s in seen}:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return {v if all(x >= 0 for x in v) else tuple(-x for x in v) for v in seen}


@pytest.mark.parametrize("t,n", ALL_TYPES)
def test_positive_root_counts(t, n):
    rs = build_root_system(t, n)
    expected = EXCEPTIONAL.get((t, n)) or COUNTS[t](n)
    assert rs.num_positive == expected
    assert rs.positive_roots[:n] == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    assert len(set(rs.positive_roots)) == expected


@pytest.mark.parametrize("t,n", ALL_TYPES)
def test_closed_under_simple_reflections(t, n):
    rs = build_root_system(t, n)
    for r in rs.positive_roots:
        for i in range(1, n + 1):
            img = rs.reflect(rs.simple_root(i), r)
            assert rs.is_root(img)


def test_rank_one():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == ((1,),)


def test_b2_roots():
    rs = build_root_system("B", 2)
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1)}
    assert length_class(rs, (1, 0)) == SHORT
    assert length_class(rs, (2, 1)) == LONG
    assert length_class(rs, (1, 1)) == SHORT
    assert height(rs, (2, 1)) == 3


def test_g2_matches_brute_force_orbit():
    rs = build_root_system("G", 2)
    assert set(rs.positive_roots) == orbit_closure([[2, -3], [-1, 2]])
    assert len(rs.positive_roots) == 6


def test_a3_highest_root_height():
    rs = build_root_system("A", 3)
    assert height(rs, (1, 1, 1)) == 3
    assert max(height(rs, r) for r in rs.positive_roots) == 3


def test_height_rejects_negative():
    rs = build_root_system("A", 2)
    with pytest.raises(DomainError):
        height(rs, (-1, 0))


@pytest.mark.parametrize("t,n", [("A", 4), ("D", 5), ("E", 6)])
def test_simply_laced_has_one_class(t, n):
    rs = build_root_system(t, n)
    assert set(rs.length_classes) == {LONG}


@pytest.mark.parametrize("t,n", [("B", 3), ("C", 3), ("F", 4), ("G", 2)])
def test_non_simply_laced_has_two_classes(t, n):
    assert set(build_root_system(t, n).length_classes) == {SHORT, LONG}


def test_b_and_c_are_distinct():
    b, c = build_root_system("B", 3), build_root_system("C", 3)
    assert b.cartan.cartan_matrix != c.cartan.cartan_matrix
    # B_n has one short simple root, C_n has one long one
    assert [b.length_classes[i] for i in range(3)].count(SHORT) == 1
    assert [c.length_classes[i] for i in range(3)].count(LONG) == 1


@pytest.mark.parametrize("t,n", [("Z", 3), ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("A", 9)])
def test_invalid_types(t, n):
    with pytest.raises(ConfigurationError):
        build_root_system(t, n)


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_height_additive(t, n):
    rs = build_root_system(t, n)
    for a, b in itertools.combinations(rs.positive_roots, 2):
        s = tuple(x + y for x, y in zip(a, b))
        if rs.is_root(s):
            assert height(rs, s) == height(rs, a) + height(rs, b)


def pair_closures(rs):
    """Distinct reflection sets generated by pairs of reflections, by brute force."""
    out = set()
    for i, j in itertools.combinations(range(rs.num_positive), 2):
        out.add(reflection_closure(rs, (i, j)))
    return out


@pytest.mark.parametrize("t,n", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)])
def test_dihedral_enumeration_is_complete(t, n):
    rs = build_root_system(t, n)
    subs = dihedral_subsystems(rs)
    assert {d.roots for d in subs} == pair_closures(rs)
    assert len(subs) == len({d.roots for d in subs})


def test_dihedral_b2():
    subs = dihedral_subsystems(build_root_system("B", 2))
    kinds = sorted((d.subtype, d.maximal) for d in subs)
    assert kinds == [("A1xA1", False), ("A1xA1", False), ("B2", True)]


def test_dihedral_a2_and_a3():
    assert [d.subtype for d in dihedral_subsystems(build_root_system("A", 2))] == ["A2"]
    subs = dihedral_subsystems(build_root_system("A", 3))
    assert sum(d.subtype == "A2" for d in subs) == 4
    assert all(d.subtype in ("A2", "A1xA1") for d in subs)


@pytest.mark.parametrize("t,n", [("B", 3), ("G", 2), ("F", 4)])
def test_canonical_pair_generates_subsystem(t, n):
    rs = build_root_system(t, n)
    for d in dihedral_subsystems(rs):
        assert reflection_closure(rs, d.canonical_pair) == d.roots
        ra, rb = (rs.positive_roots[k] for k in d.canonical_pair)
        for k in d.roots:
            p, q = plane_coordinates(ra, rb, rs.positive_roots[k])
            assert p >= 0 and q >= 0 and p.denominator == 1 and q.denominator == 1


def plane_coordinates(ra, rb, r):
    from fractions import Fraction
    for i, j in itertools.combinations(range(len(ra)), 2):
        det = ra[i] * rb[j] - ra[j] * rb[i]
        if det:
            p = Fraction(r[i] * rb[j] - r[j] * rb[i], det)
            q = Fraction(ra[i] * r[j] - ra[j] * r[i], det)
            assert all(p * x + q * y == z for x, y, z in zip(ra, rb, r))
            return p, q
    raise AssertionError("canonical roots are parallel")


def test_fundamental_weight_coefficient():
    a2 = build_root_system("A", 2)
    assert fundamental_weight_coefficient(a2, 1, (1, 1)) == 1
    b2 = build_root_system("B", 2)
    assert fundamental_weight_coefficient(b2, 1, (2, 1)) == 2
    assert fundamental_weight_coefficient(b2, 2, (1, 0)) == 0


def test_coroot_pairing_differs_off_simply_laced():
    b2 = build_root_system("B", 2)
    # alpha = 2a+b is long; its coroot is a^vee + b^vee
    assert fundamental_weight_coefficient(b2, 1, (2, 1), pairing="coroot") == 1
    a3 = build_root_system("A", 3)
    for r in a3.positive_roots:
        for s in (1, 2, 3):
            assert fundamental_weight_coefficient(a3, s, r, "coroot") == fundamental_weight_coefficient(a3, s, r)


def test_to_json():
    import json
    doc = json.loads(build_root_system("B", 2).to_json())
    assert doc["type"] == "B" and doc["rank"] == 2
    assert doc["positive_roots"] == [[1, 0], [0, 1], [1, 1], [2, 1]]
    assert doc["length_class"] == [SHORT, LONG, SHORT, LONG]


@given(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]), st.data())
def test_reflection_is_involution_on_roots(tn, data):
    rs = build_root_system(*tn)
    r = data.draw(st.sampled_from(rs.positive_roots))
    v = data.draw(st.sampled_from(rs.positive_roots))
    assert rs.reflect(r, rs.reflect(r, v)) == v
    assert rs.reflect(r, r) == tuple(-x for x in r)
