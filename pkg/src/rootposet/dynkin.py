"""Dynkin diagrams, Hasse trees of root subsets and tree isomorphism."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable

from .amazing import amazing_roots
from .ideals import commutative_roots, heisenberg_set
from .poset import FalsificationError, RootSet, is_simple
from .rootsys import Root, RootSystem, inner, is_long, pairing, theta_is_fundamental

ALPHA0 = "a0"


class DiagramError(ValueError):
    """The requested diagram is not defined for this type."""


@dataclass
class LabeledGraph:
    """Small undirected simple graph.

    ``nodes`` holds payloads: an int (internal simple-root index), ``ALPHA0``
    or a root tuple.  ``edges`` maps sorted node-position pairs to a label
    (internal simple-root index) or ``None``.
    """

    nodes: list[Hashable]
    edges: dict[tuple[int, int], int | None] = field(default_factory=dict)
    short: set[int] = field(default_factory=set)
    bonds: dict[tuple[int, int], int] = field(default_factory=dict)

    def add_edge(self, i: int, j: int, label: int | None = None, bond: int = 1):
        if i == j:
            raise ValueError("loops are not allowed")
        key = (min(i, j), max(i, j))
        self.edges[key] = label
        if bond != 1:
            self.bonds[key] = bond

    def position(self, payload) -> int:
        return self.nodes.index(payload)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {i: set() for i in range(len(self.nodes))}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = self.adjacency()
        seen, stack = {0}, [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.nodes)

    def is_tree(self) -> bool:
        return bool(self.nodes) and len(self.edges) == len(self.nodes) - 1 and self.is_connected()

    def without(self, drop: set[int]) -> "LabeledGraph":
        keep = [i for i in range(len(self.nodes)) if i not in drop]
        pos = {old: new for new, old in enumerate(keep)}
        g = LabeledGraph([self.nodes[i] for i in keep], short={pos[i] for i in self.short if i in pos})
        for (i, j), lab in self.edges.items():
            if i in pos and j in pos:
                g.add_edge(pos[i], pos[j], lab, self.bonds.get((i, j), 1))
        return g

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        left = set(range(len(self.nodes)))
        out = []
        while left:
            s = min(left)
            comp, stack = {s}, [s]
            while stack:
                for j in adj[stack.pop()]:
                    if j not in comp:
                        comp.add(j)
                        stack.append(j)
            left -= comp
            out.append(sorted(comp))
        return out

    def edge_labels(self) -> list[int | None]:
        return [self.edges[k] for k in sorted(self.edges)]

    def node_name(self, rs: RootSystem, i: int) -> str:
        p = self.nodes[i]
        if p == ALPHA0:
            return "a0"
        if isinstance(p, int):
            return f"a{rs.display_index(p)}"
        return rs.name(p)

    def to_dot(self, rs: RootSystem, name: str = "G") -> str:
        """Graphviz source; long nodes hollow, short nodes filled."""
        lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
        for i in range(len(self.nodes)):
            style = 'style=filled, fillcolor="gray25", fontcolor=white' if i in self.short else "style=solid"
            lines.append(f'  n{i} [label="{self.node_name(rs, i)}", {style}];')
        for (i, j), lab in sorted(self.edges.items()):
            attrs = []
            if lab is not None:
                attrs.append(f'label="{rs.display_index(lab)}"')
            bond = self.bonds.get((i, j), 1)
            if bond > 1:
                attrs.append(f"penwidth={bond}")
            tail = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  n{i} -- n{j}{tail};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self, rs: RootSystem) -> dict:
        return {
            "nodes": [
                {"name": self.node_name(rs, i), "short": i in self.short,
                 "root": list(p) if isinstance(p, tuple) else None}
                for i, p in enumerate(self.nodes)
            ],
            "edges": [
                {"ends": [i, j], "label": None if lab is None else rs.display_index(lab),
                 "bond": self.bonds.get((i, j), 1)}
                for (i, j), lab in sorted(self.edges.items())
            ],
        }


def dynkin_graph(rs: RootSystem) -> LabeledGraph:
    n = rs.rank
    g = LabeledGraph(list(range(n)), short=set(rs.short_simple_indices))
    for i, j in combinations(range(n), 2):
        if rs.cartan[i][j]:
            g.add_edge(i, j, bond=rs.cartan[i][j] * rs.cartan[j][i])
    return g


def extended_dynkin_graph(rs: RootSystem) -> LabeledGraph:
    """Dynkin graph plus ``a0 = -theta`` joined to every simple root not orthogonal to theta."""
    g = dynkin_graph(rs)
    g.nodes.append(ALPHA0)
    k = len(g.nodes) - 1
    for i in range(rs.rank):
        if inner(rs, rs.theta, rs.simple_roots[i]) != 0:
            # <theta, a_i^vee> * <a_i, theta^vee>, the latter being (a_i, theta)
            bond = pairing(rs, rs.theta, i) * int(inner(rs, rs.simple_roots[i], rs.theta))
            g.add_edge(i, k, bond=bond)
    return g


def short_deleted_extended(rs: RootSystem) -> LabeledGraph:
    if not theta_is_fundamental(rs):
        raise DiagramError(
            f"{rs.rtype}: the highest root is not fundamental (types A_n and C_n are excluded)")
    g = extended_dynkin_graph(rs)
    return g.without({g.position(i) for i in rs.short_simple_indices})


def hasse_tree(rs: RootSystem, s: RootSet | list) -> LabeledGraph:
    """Covering graph of ``s`` as a subposet, labelled by simple differences."""
    members = list(s.members if isinstance(s, RootSet) else RootSet.of(rs, s).members)
    g = LabeledGraph(members, short={i for i, r in enumerate(members) if not is_long(rs, r)})

    def below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    for i, mu in enumerate(members):
        for j, nu in enumerate(members):
            if not below(mu, nu):
                continue
            if any(below(mu, r) and below(r, nu) for r in members):
                continue
            diff = tuple(y - x for x, y in zip(mu, nu))
            # a long/short cover is drawn as a multiple bond, as in Dynkin diagrams
            qs = sorted((inner(rs, mu, mu), inner(rs, nu, nu)))
            bond = int(qs[1] / qs[0])
            g.add_edge(i, j, diff.index(1) if is_simple(rs, diff) else None, bond)
    return g


# -- tree isomorphism ---------------------------------------------------

def _rooted_code(adj, root, parent=None) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(g: LabeledGraph) -> list[int]:
    adj = g.adjacency()
    deg = {i: len(adj[i]) for i in adj}
    left = set(adj)
    leaves = [i for i in left if deg[i] <= 1]
    while len(left) > 2:
        left -= set(leaves)
        nxt = []
        for v in leaves:
            for u in adj[v]:
                if u in left:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        leaves = nxt
    return sorted(left)


def tree_canonical_form(g: LabeledGraph) -> str:
    if not g.is_tree():
        raise ValueError("not a tree")
    adj = g.adjacency()
    return min(_rooted_code(adj, c) for c in _centers(g))


def tree_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    """Unlabelled tree isomorphism via center-rooted canonical codes."""
    if len(g1.nodes) != len(g2.nodes):
        # still validate inputs
        tree_canonical_form(g1), tree_canonical_form(g2)
        return False
    return tree_canonical_form(g1) == tree_canonical_form(g2)


def rooted_isomorphic(g1: LabeledGraph, r1: int, g2: LabeledGraph, r2: int) -> bool:
    """Is there a tree isomorphism taking node ``r1`` to node ``r2``?"""
    for g in (g1, g2):
        if not g.is_tree():
            raise ValueError("not a tree")
    return _rooted_code(g1.adjacency(), r1) == _rooted_code(g2.adjacency(), r2)


def forest_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    def codes(g):
        return Counter(tree_canonical_form(g.without(set(range(len(g.nodes))) - set(c)))
                       for c in g.components())
    return codes(g1) == codes(g2)


# -- amazing roots in H -------------------------------------------------

def gamma_H(rs: RootSystem) -> RootSet:
    return amazing_roots(rs) & heisenberg_set(rs)


def gamma_H_tree(rs: RootSystem) -> LabeledGraph:
    if not theta_is_fundamental(rs):
        raise DiagramError(
            f"{rs.rtype}: the highest root is not fundamental (types A_n and C_n are excluded)")
    return hasse_tree(rs, gamma_H(rs))


def edge_bijection_with_long_simples(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    """Hasse edges of the amazing roots in H, keyed by (lower, upper), to long simple indices."""
    g = gamma_H_tree(rs)
    out = {}
    for (i, j), lab in g.edges.items():
        lo, hi = sorted((g.nodes[i], g.nodes[j]), key=sum)
        if lab is None or not rs.long_simple(lab):
            raise FalsificationError(f"{rs.rtype}: cover {rs.name(lo)} < {rs.name(hi)} is not a long simple step")
        out[(lo, hi)] = lab
    if sorted(out.values()) != list(rs.long_simple_indices):
        raise FalsificationError(f"{rs.rtype}: edge labels {sorted(out.values())} do not biject with long simples")
    return out


def labelling_map(rs: RootSystem, tree: LabeledGraph) -> dict[int, Hashable]:
    """Send theta to ``a0`` and every other node to the label of its edge towards theta."""
    adj = tree.adjacency()
    top = tree.position(rs.theta)
    out = {top: ALPHA0}
    stack = [top]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in out:
                lab = tree.edges[(min(u, v), max(u, v))]
                if lab is None:
                    raise FalsificationError(f"{rs.rtype}: unlabelled edge at {tree.node_name(rs, u)}")
                out[u] = lab
                stack.append(u)
    return out


def labelling_is_isomorphism(rs: RootSystem, tree: LabeledGraph, target: LabeledGraph) -> bool:
    """Whether :func:`labelling_map` is a graph isomorphism onto ``target``."""
    m = labelling_map(rs, tree)
    if sorted(map(str, m.values())) != sorted(map(str, target.nodes)):
        return False
    if len(set(map(str, m.values()))) != len(m):
        return False
    image = {tuple(sorted((target.position(m[i]), target.position(m[j])))) for i, j in tree.edges}
    return image == set(target.edges)


def theta_anchors_alpha0(rs: RootSystem, tree: LabeledGraph, target: LabeledGraph) -> bool:
    """Structural check that theta plays the role of the extra node.

    Removing theta must leave the plain diagram, and some isomorphism of
    the trees must send theta to ``a0``.
    """
    t = tree.position(rs.theta)
    a = target.position(ALPHA0)
    return (
        forest_isomorphic(tree.without({t}), target.without({a}))
        and rooted_isomorphic(tree, t, target, a)
    )


def chain_roots(rs: RootSystem, diagram: LabeledGraph | None = None) -> dict[Hashable, Root]:
    """``theta`` minus each chain of simple roots starting next to ``a0``.

    Keyed by the far end of the chain (``a0`` for the empty chain).
    """
    g = diagram if diagram is not None else extended_dynkin_graph(rs)
    adj = g.adjacency()
    a0 = g.position(ALPHA0)
    out = {ALPHA0: rs.theta}
    prev = {a0: None}
    stack = [a0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in prev:
                continue
            prev[u] = v
            stack.append(u)
            gamma = list(rs.theta)
            k = u
            while k != a0:
                gamma[g.nodes[k]] -= 1
                k = prev[k]
            out[g.nodes[u]] = tuple(gamma)
    return out


def augmentation_candidates(rs: RootSystem) -> list[RootSet]:
    """Every set of short commutative roots that completes the tree to the extended diagram."""
    if rs.family not in "BFG" or not theta_is_fundamental(rs):
        raise DiagramError(f"{rs.rtype}: augmentation is only defined for types B_n (n>=3), F4, G2")
    base = gamma_H(rs)
    pool = [r for r in commutative_roots(rs) if not is_long(rs, r)]
    k = len(rs.short_simple_indices)
    full = extended_dynkin_graph(rs)
    found = []
    for extra in combinations(pool, k):
        s = base | RootSet.of(rs, extra)
        g = hasse_tree(rs, s)
        if not g.is_tree() or not tree_isomorphic(g, full):
            continue
        labels = g.edge_labels()
        if None in labels or sorted(labels) != list(range(rs.rank)):
            continue
        found.append(RootSet.of(rs, extra))
    return found


def augment_gamma_H(rs: RootSystem) -> tuple[RootSet, LabeledGraph]:
    found = augmentation_candidates(rs)
    if len(found) != 1:
        raise FalsificationError(f"{rs.rtype}: expected exactly one augmentation, found {found}")
    s = gamma_H(rs) | found[0]
    return s, hasse_tree(rs, s)
