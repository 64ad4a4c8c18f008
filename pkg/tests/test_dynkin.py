from __future__ import annotations

import pytest

from rootposet.dynkin import (
    ALPHA0,
    DiagramError,
    LabeledGraph,
    augment_gamma_H,
    augmentation_candidates,
    dynkin_graph,
    edge_bijection_with_long_simples,
    extended_dynkin_graph,
    gamma_H,
    gamma_H_tree,
    hasse_tree,
    labelling_is_isomorphism,
    short_deleted_extended,
    theta_anchors_alpha0,
    tree_canonical_form,
    tree_isomorphic,
)
from rootposet.expected import tree_edges
from rootposet.poset import RootSet
from rootposet.rootsys import get_root_system

FUNDAMENTAL = ["B3", "B4", "B8", "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2"]


def _path(k):
    g = LabeledGraph(list(range(k)))
    for i in range(k - 1):
        g.add_edge(i, i + 1)
    return g


def _star(k):
    g = LabeledGraph(list(range(k)))
    for i in range(1, k):
        g.add_edge(0, i)
    return g


def _named_edges(rs, g):
    return {(frozenset({g.node_name(rs, i), g.node_name(rs, j)}),
             None if lab is None else rs.display_index(lab))
            for (i, j), lab in g.edges.items()}


def test_tree_isomorphism_basics():
    assert tree_isomorphic(_path(3), _path(3))
    assert not tree_isomorphic(_star(4), _path(4))
    assert tree_canonical_form(_path(5)) != tree_canonical_form(_star(5))


def test_extended_a_is_cycle():
    for n in (2, 3, 6):
        g = extended_dynkin_graph(get_root_system(f"A{n}"))
        assert len(g.nodes) == n + 1 and len(g.edges) == n + 1 and not g.is_tree()


def test_extended_b4_fork():
    rs = get_root_system("B4")
    g = extended_dynkin_graph(rs)
    a0 = g.position(ALPHA0)
    assert g.adjacency()[a0] == {g.position(1)}
    assert len(g.adjacency()[g.position(1)]) == 3


def test_extended_g2():
    rs = get_root_system("G2")
    g = extended_dynkin_graph(rs)
    assert g.adjacency()[g.position(ALPHA0)] == {g.position(1)}
    assert g.is_tree() and len(g.edges) == 2


def test_short_deleted():
    b5 = short_deleted_extended(get_root_system("B5"))
    assert set(b5.nodes) == {ALPHA0, 0, 1, 2, 3}
    assert b5.is_tree()
    e7 = get_root_system("E7")
    assert len(short_deleted_extended(e7).nodes) == 8
    g2 = short_deleted_extended(get_root_system("G2"))
    assert set(g2.nodes) == {ALPHA0, 1} and len(g2.edges) == 1
    with pytest.raises(DiagramError):
        short_deleted_extended(get_root_system("C3"))


def test_single_node(any_rs):
    g = hasse_tree(any_rs, RootSet.of(any_rs, [any_rs.theta]))
    assert len(g.nodes) == 1 and not g.edges


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_dn_tree(n):
    rs = get_root_system(f"D{n}")
    assert _named_edges(rs, gamma_H_tree(rs)) == tree_edges(rs, augmented=False)
    # hand-written for D6
    if n == 6:
        want = {
            (frozenset({"e1-e6", "e1+e5"}), 6), (frozenset({"e1+e6", "e1+e5"}), 5),
            (frozenset({"e1+e5", "e1+e4"}), 4), (frozenset({"e1+e4", "e1+e3"}), 3),
            (frozenset({"e1+e3", "e1+e2"}), 2), (frozenset({"e2+e3", "e1+e3"}), 1),
        }
        assert _named_edges(rs, gamma_H_tree(rs)) == want


@pytest.mark.parametrize("n", [3, 4, 7])
def test_bn_tree(n):
    rs = get_root_system(f"B{n}")
    assert _named_edges(rs, gamma_H_tree(rs)) == tree_edges(rs, augmented=False)
    s, g = augment_gamma_H(rs)
    assert set(s - gamma_H(rs)) == {rs.eps("e1")}
    assert _named_edges(rs, g) == tree_edges(rs, augmented=True)


def test_f4_tree():
    rs = get_root_system("F4")
    assert _named_edges(rs, gamma_H_tree(rs)) == {
        (frozenset({"[2421]", "[2431]"}), 3), (frozenset({"[2431]", "[2432]"}), 4)}
    s, g = augment_gamma_H(rs)
    assert {rs.bracket(r) for r in s - gamma_H(rs)} == {"[1321]", "[2321]"}
    assert _named_edges(rs, g) == tree_edges(rs, augmented=True)
    # exactly one long/short cover, drawn as a double bond
    assert list(g.bonds.values()) == [2]


def test_g2_augmented():
    rs = get_root_system("G2")
    s, g = augment_gamma_H(rs)
    assert set(s - gamma_H(rs)) == {(2, 1)}
    assert g.is_tree() and tree_isomorphic(g, extended_dynkin_graph(rs))
    assert augmentation_candidates(rs) == [RootSet.of(rs, [(2, 1)])]


@pytest.mark.parametrize("token", FUNDAMENTAL)
def test_tree_structure(token):
    rs = get_root_system(token)
    tree = gamma_H_tree(rs)
    target = short_deleted_extended(rs)
    assert tree.is_tree()
    assert tree_isomorphic(tree, target)
    assert theta_anchors_alpha0(rs, tree, target)
    assert labelling_is_isomorphism(rs, tree, target)
    labels = edge_bijection_with_long_simples(rs)
    assert sorted(labels.values()) == list(rs.long_simple_indices)


def test_edge_labels_examples():
    for n in (4, 6):
        d = get_root_system(f"D{n}")
        assert sorted(edge_bijection_with_long_simples(d).values()) == list(range(n))
        b = get_root_system(f"B{n}")
        assert sorted(edge_bijection_with_long_simples(b).values()) == list(range(n - 1))
    e6 = get_root_system("E6")
    assert len(set(edge_bijection_with_long_simples(e6).values())) == 6


@pytest.mark.parametrize("token", ["A3", "C3", "A1", "C2"])
def test_rejects_a_and_c(token):
    with pytest.raises(DiagramError):
        gamma_H_tree(get_root_system(token))


def test_dot_output():
    rs = get_root_system("B3")
    _, g = augment_gamma_H(rs)
    dot = g.to_dot(rs, name="B3")
    assert dot.startswith("graph B3 {") and dot.rstrip().endswith("}")
    assert dot.count("fillcolor") == 1
    assert 'label="3"' in dot


def test_dynkin_bonds():
    assert set(dynkin_graph(get_root_system("G2")).bonds.values()) == {3}
    assert set(dynkin_graph(get_root_system("F4")).bonds.values()) == {2}
    assert dynkin_graph(get_root_system("E8")).bonds == {}
