from __future__ import annotations

import pytest

from rootposet.ideals import (
    abelian_ideals_in_H,
    commutative_roots,
    enumerate_abelian_ideals,
    enumerate_abelian_ideals_by_antichains,
    enumerate_upper_ideals,
    heisenberg_set,
    is_abelian,
    is_commutative,
    is_upper_ideal,
    single_root_extensions,
)
from rootposet.poset import RootSet, upper_set
from rootposet.rootsys import get_root_system


def test_trivial_sets(any_rs):
    empty = RootSet(any_rs, 0)
    top = RootSet.of(any_rs, [any_rs.theta])
    for s in (empty, top):
        assert is_upper_ideal(any_rs, s) and is_abelian(any_rs, s)
    assert any_rs.theta in commutative_roots(any_rs)


def test_d5_extension_is_abelian_ideal():
    rs = get_root_system("D5")
    s = upper_set(rs, rs.eps("e2+e4")) | RootSet.of(rs, [rs.eps("e3+e4")])
    assert is_upper_ideal(rs, s)
    assert is_abelian(rs, s)


def test_d6_extension_leaves_h():
    rs = get_root_system("D6")
    ext = single_root_extensions(rs, upper_set(rs, rs.eps("e2+e4")))
    assert rs.eps("e3+e4") in ext
    assert rs.eps("e3+e4") not in heisenberg_set(rs)


def test_extensions_of_empty(any_rs):
    assert single_root_extensions(any_rs, RootSet(any_rs, 0)) == [any_rs.theta]


def test_heisenberg_a2():
    rs = get_root_system("A2")
    assert set(heisenberg_set(rs)) == set(rs.positive_roots)


def test_heisenberg_d5():
    rs = get_root_system("D5")
    want = ({rs.eps(f"e1+e{j}") for j in range(2, 6)}
            | {rs.eps(f"e1-e{j}") for j in range(3, 6)}
            | {rs.eps(f"e2+e{j}") for j in range(3, 6)}
            | {rs.eps(f"e2-e{j}") for j in range(3, 6)})
    assert set(heisenberg_set(rs)) == want
    assert len(want) % 2 == 1


def test_heisenberg_size(any_rs):
    # #H is odd: theta plus pairs {g, theta - g}
    assert len(heisenberg_set(any_rs)) % 2 == 1


def test_heisenberg_cn_contains_theta():
    rs = get_root_system("C4")
    assert rs.theta == rs.eps("2e1") and rs.theta in heisenberg_set(rs)


def test_commutative_g2():
    rs = get_root_system("G2")
    assert set(commutative_roots(rs)) == {(2, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("n", [4, 5, 7])
def test_commutative_dn(n):
    rs = get_root_system(f"D{n}")
    for j in range(3, n + 1):
        assert is_commutative(rs, rs.eps(f"e2+e{j}"))


@pytest.mark.parametrize("token,count", [("A1", 2), ("A3", 8), ("G2", 4), ("B3", 8), ("D4", 16), ("E6", 64)])
def test_abelian_ideal_counts(token, count):
    rs = get_root_system(token)
    assert len(enumerate_abelian_ideals(rs)) == count
    assert len(enumerate_abelian_ideals_by_antichains(rs)) == count


@pytest.mark.parametrize("token", ["A5", "B4", "C5", "D5", "F4", "E6"])
def test_two_enumerations_agree(token):
    rs = get_root_system(token)
    a = {x.roots.mask for x in enumerate_abelian_ideals(rs)}
    b = {x.roots.mask for x in enumerate_abelian_ideals_by_antichains(rs)}
    assert a == b


def test_upper_ideal_oracle():
    # abelian ideals of A3 are the upper ideals that pass the abelian test
    rs = get_root_system("A3")
    ups = enumerate_upper_ideals(rs)
    assert len(ups) == 14  # Catalan number C_4
    assert sum(is_abelian(rs, u.roots) for u in ups) == 8


@pytest.mark.parametrize("n", range(2, 9))
def test_cn_ideals_in_h(n):
    rs = get_root_system(f"C{n}")
    nonzero = [a for a in abelian_ideals_in_H(rs) if len(a)]
    assert len(nonzero) == n == len(rs.long_roots)


def test_generators():
    rs = get_root_system("D5")
    (ideal,) = [a for a in enumerate_abelian_ideals(rs) if a.roots == upper_set(rs, rs.eps("e2+e3"))]
    assert ideal.generators.members == (rs.eps("e2+e3"),)
