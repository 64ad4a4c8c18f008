from __future__ import annotations

import pytest

from rootposet.amazing import (
    amazing_in_H_by_paths,
    amazing_report,
    amazing_roots,
    equality_sides,
    is_amazing,
    is_inconvenient,
    is_primitive,
    jump_path_criterion,
    lemma_extension_violations,
    primitive_bijection,
    primitive_roots,
    primitive_to_simple,
    short_equality_cases,
    theta_perp_highest,
    verify_closure_under_join,
)
from rootposet.ideals import heisenberg_set
from rootposet.poset import FalsificationError
from rootposet.rootsys import get_root_system, is_long


def test_theta_amazing(any_rs):
    assert is_amazing(any_rs, any_rs.theta)
    assert amazing_in_H_by_paths(any_rs, any_rs.theta)


@pytest.mark.parametrize("n", [5, 6, 8])
def test_dn_examples(n):
    rs = get_root_system(f"D{n}")
    for j in range(4, n + 1):
        assert not is_amazing(rs, rs.eps(f"e2+e{j}"))
    for i in range(1, n - 1):
        g = rs.eps(f"e{i}+e{i + 1}")
        assert is_amazing(rs, g)
        assert equality_sides(rs, g) == (2 * i - 1, 2 * i - 1)


def test_small_sets():
    g2 = get_root_system("G2")
    assert set(amazing_roots(g2)) == {(3, 1), (3, 2)}
    c4 = get_root_system("C4")
    assert set(amazing_roots(c4)) == {c4.eps(f"2e{i}") for i in range(1, 5)}
    a4 = get_root_system("A4")
    assert set(amazing_roots(a4)) == set(a4.positive_roots)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_bn_paths(n):
    rs = get_root_system(f"B{n}")
    for j in range(2, n + 1):
        assert amazing_in_H_by_paths(rs, rs.eps(f"e1+e{j}"))


def test_criteria_agree(any_rs):
    h = heisenberg_set(any_rs)
    for g in any_rs.long_roots:
        if g in h:
            a = is_amazing(any_rs, g)
            assert amazing_in_H_by_paths(any_rs, g) == a
            assert jump_path_criterion(any_rs, g) == a


def test_g2_jump_criterion():
    assert jump_path_criterion(get_root_system("G2"), (3, 1))


def test_criteria_reject_short():
    rs = get_root_system("B3")
    with pytest.raises(ValueError):
        jump_path_criterion(rs, rs.eps("e1"))
    with pytest.raises(ValueError):
        amazing_in_H_by_paths(rs, rs.eps("e1"))


def test_inequality_and_short_roots(any_rs):
    for d in amazing_report(any_rs).diagnostics:
        if d.commutative:
            assert d.lhs <= d.rhs
    assert short_equality_cases(any_rs) == []


def test_inconvenient():
    a3 = get_root_system("A3")
    assert not is_inconvenient(a3, a3.theta)
    for rs in (a3, get_root_system("F4"), get_root_system("E6")):
        assert all(is_inconvenient(rs, a) for a in rs.simple_roots)
    for n in (3, 5):
        b = get_root_system(f"B{n}")
        assert is_inconvenient(b, b.theta)


def test_primitive_sets():
    for n in (3, 5):
        a = get_root_system(f"A{n}")
        assert set(primitive_roots(a)) == set(a.simple_roots)
        b = get_root_system(f"B{n}")
        want = {b.eps("e1-e2")} | {b.eps(f"e{i}+e{i + 1}") for i in range(1, n)}
        assert set(primitive_roots(b)) == want
    f4 = get_root_system("F4")
    assert primitive_roots(f4) == amazing_roots(f4)


def test_primitive_counts(any_rs):
    assert len(primitive_roots(any_rs)) == any_rs.rank
    assert sorted(primitive_bijection(any_rs).values()) == list(range(any_rs.rank))


@pytest.mark.parametrize("n", [5, 7])
def test_primitive_to_simple_dn(n):
    rs = get_root_system(f"D{n}")
    for i in range(1, n - 2):
        assert primitive_to_simple(rs, rs.eps(f"e{i}+e{i + 1}")) == i


def test_primitive_to_simple_bn():
    rs = get_root_system("B4")
    a1 = rs.simple_roots[0]
    assert is_primitive(rs, a1)
    assert primitive_to_simple(rs, a1) == 0
    with pytest.raises(FalsificationError):
        primitive_to_simple(rs, rs.eps("e1+e3"))


def test_theta_perp():
    b3 = get_root_system("B3")
    tops = theta_perp_highest(b3)
    assert (b3.eps("e1-e2"), True) in tops and (b3.eps("e3"), False) in tops
    g2 = get_root_system("G2")
    assert [lng for _, lng in theta_perp_highest(g2)] == [False]
    for n in (5, 6, 8):
        d = get_root_system(f"D{n}")
        assert set(theta_perp_highest(d)) == {(d.eps("e1-e2"), True), (d.eps("e3+e4"), True)}
    for n in (4, 6):
        b = get_root_system(f"B{n}")
        assert sum(lng for _, lng in theta_perp_highest(b)) == 2
    # no positive root of A2 is orthogonal to theta
    assert theta_perp_highest(get_root_system("A2")) == []


def test_theta_perp_long_are_amazing(any_rs):
    if any_rs.rank < 2:
        return
    for g, lng in theta_perp_highest(any_rs):
        if lng:
            assert is_amazing(any_rs, g)


@pytest.mark.parametrize("token", ["D6", "A4", "E8", "B5", "F4"])
def test_closure(token):
    rep = verify_closure_under_join(get_root_system(token))
    assert rep.ok, rep.counterexamples


def test_extension_lemma(any_rs):
    assert lemma_extension_violations(any_rs) == []


def test_report_dict():
    rs = get_root_system("E6")
    d = amazing_report(rs).to_dict()
    assert set(d) == {"gamma", "primitive", "gamma_H", "bijection", "diagnostics"}
    assert len(d["gamma"]["roots"]) == 10 and len(d["gamma_H"]["roots"]) == 7
    assert len(d["diagnostics"]) == 36
    assert all(is_long(rs, tuple(r)) for r in d["gamma"]["roots"])
