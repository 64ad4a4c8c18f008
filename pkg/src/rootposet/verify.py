"""Verification suites: exhaustive re-checks of the structural claims.

Each suite maps a root system to a list of :class:`CheckRecord`.  A record
carries a claim id, a short statement of the claim, a status and, on
failure, a counterexample payload.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

from . import amazing as am
from . import dynkin as dk
from . import expected as ex
from . import ideals as idl
from . import poset as ps
from .rootsys import (
    RankedType,
    RootSystem,
    admissible_types,
    coroot_height,
    expected_positive_count,
    get_root_system,
    is_long,
    support_connected,
    theta_is_fundamental,
)

PASS, FAIL, NA = "pass", "fail", "n/a"
SUITES = ("joins", "ideals", "criteria", "theorems", "figures")


@dataclass
class CheckRecord:
    claim: str
    anchor: str
    rtype: str
    status: str
    counterexample: Any = None

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "anchor": self.anchor, "type": self.rtype, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class VerificationOutcome:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "records": [r.to_dict() for r in self.records],
        }


class _Recorder:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.out: list[CheckRecord] = []

    def check(self, claim: str, anchor: str, bad) -> None:
        """``bad`` is a falsy value on success, else the counterexample."""
        if callable(bad):
            try:
                bad = bad()
            except ps.FalsificationError as e:
                bad = str(e)
        if bad:
            self.out.append(CheckRecord(claim, anchor, str(self.rs.rtype), FAIL, _jsonable(bad)))
        else:
            self.out.append(CheckRecord(claim, anchor, str(self.rs.rtype), PASS))

    def skip(self, claim: str, anchor: str, why: str) -> None:
        self.out.append(CheckRecord(claim, anchor, str(self.rs.rtype), NA, None))


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def _type_a(rs: RootSystem) -> bool:
    # D3 is A3 with another numbering
    return rs.family == "A" or str(rs.rtype) == "D3"


def _first(gen):
    return next(iter(gen), None)


# -- suites -------------------------------------------------------------

def suite_joins(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    roots = rs.positive_roots
    r.check("rootsys.count", "positive root count per type",
            lambda: len(roots) != expected_positive_count(rs.rtype) and len(roots))
    r.check("rootsys.support-connected", "supports are connected",
            lambda: _first(list(g) for g in roots if not support_connected(rs, g)))
    r.check("rootsys.theta", "theta is the unique maximal root and is long",
            lambda: not (is_long(rs, rs.theta) and all(ps.leq(rs, g, rs.theta) for g in roots)))

    joins = {}

    def join_matches():
        for a, b in product(roots, roots):
            j = ps.join(rs, a, b)
            if j != ps.brute_force_join(rs, a, b):
                return [list(a), list(b)]
            joins[a, b] = j
        return None

    r.check("join.formula", "join rules equal the unique minimal upper bound", join_matches)
    r.check("join.height", "join is at least as high as both arguments",
            lambda: _first([list(a), list(b)] for (a, b), j in joins.items()
                           if sum(j) < max(sum(a), sum(b))))
    r.check("join.commutative-idempotent", "join is commutative and idempotent",
            lambda: _first([list(a), list(b)] for (a, b), j in joins.items()
                           if j != joins[b, a] or joins[a, a] != a))
    if rs.rank <= 5:
        r.check("join.associative", "join is associative",
                lambda: _first([list(a), list(b), list(c)] for a, b, c in product(roots, roots, roots)
                               if joins[joins[a, b], c] != joins[a, joins[b, c]]))
    else:
        r.skip("join.associative", "join is associative", "checked up to rank 5")

    def jump_lengths():
        for g in rs.long_roots:
            if ps.jump_path_lengths(rs, g) != {ps.w_length(rs, g)}:
                return list(g)
        return None

    def jump_is_path():
        for g in rs.long_roots:
            for jp in ps.jump_paths(rs, g, limit=64):
                if jp.is_path() != all(rs.long_simple(j) for j in jp.reflections):
                    return [list(x) for x in jp.roots]
        return None

    r.check("jump.length", "every jump-path has hot(theta^vee)-hot(gamma^vee) jumps", jump_lengths)
    r.check("jump.path-iff-long", "a jump-path is a path iff all reflections are long", jump_is_path)
    return r.out


def suite_ideals(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    h = idl.heisenberg_set(rs)
    grown = idl.enumerate_abelian_ideals(rs)
    anti = idl.enumerate_abelian_ideals_by_antichains(rs)
    r.check("ideals.count", "2^rank abelian ideals, two algorithms agree",
            lambda: (len(grown) != 2 ** rs.rank or [a.roots for a in grown] != [a.roots for a in anti])
            and [len(grown), len(anti)])
    in_h = [a for a in idl.abelian_ideals_in_H(rs) if len(a)]
    r.check("ideals.in-H", "nonzero abelian ideals inside H number #long positive roots",
            lambda: len(in_h) != len(rs.long_roots) and [len(in_h), len(rs.long_roots)])
    r.check("ideals.upper", "every abelian ideal is an upper ideal",
            lambda: _first(a.roots.to_list() for a in grown if not idl.is_upper_ideal(rs, a.roots)))
    theta_only = ps.RootSet.of(rs, [rs.theta])
    r.check("ideals.trivial", "empty set and {theta} are abelian ideals",
            lambda: not (idl.is_abelian(rs, ps.RootSet(rs, 0)) and idl.is_abelian(rs, theta_only)))
    simple_in_h = [a for a in rs.simple_roots if a in h]
    want = 2 if _type_a(rs) and rs.rank >= 2 else 1
    r.check("H.simple", "#(simple roots in H) is 2 for A_n (n>=2), else 1",
            lambda: len(simple_in_h) != want and len(simple_in_h))
    r.check("H.complement", "theta - gamma is a root for gamma in H other than theta",
            lambda: _first(list(g) for g in h if g != rs.theta
                           and tuple(x - y for x, y in zip(rs.theta, g)) not in rs.index)
            or (len(h) % 2 == 0 and len(h)))
    com = idl.commutative_roots(rs)
    r.check("com.simple", "a simple root is commutative iff its theta-coefficient is 1, and then long",
            lambda: _first(i for i, a in enumerate(rs.simple_roots)
                           if (a in com) != (rs.theta[i] == 1) or (a in com and not is_long(rs, a))))

    def inequality():
        for g in com:
            lhs, rhs = am.equality_sides(rs, g)
            if lhs > rhs:
                return {"root": list(g), "lhs": lhs, "rhs": rhs}
        return None

    r.check("eq.inequality", "counting inequality holds for every commutative root", inequality)
    return r.out


def suite_criteria(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    h = idl.heisenberg_set(rs)
    gam = am.amazing_roots(rs)
    com = idl.commutative_roots(rs)

    def agreement():
        for g in rs.long_roots:
            if g not in h:
                continue
            a, b, c = am.is_amazing(rs, g), am.amazing_in_H_by_paths(rs, g), am.jump_path_criterion(rs, g)
            if not a == b == c:
                return {"root": list(g), "equality": a, "paths": b, "jump_paths": c}
        return None

    r.check("criteria.agree", "equality, unique-long-path and jump-path tests agree on long roots of H",
            agreement)
    r.check("eq.equality", "equality holds exactly on amazing roots among long commutative ones",
            lambda: _first(list(g) for g in com if is_long(rs, g)
                           and ((lambda s: s[0] == s[1])(am.equality_sides(rs, g)) != (g in gam))))
    r.check("gamma.in-com", "amazing roots are long and commutative",
            lambda: _first(list(g) for g in gam if g not in com or not is_long(rs, g)))
    r.check("gamma.theta", "theta is amazing", lambda: rs.theta not in gam)
    r.check("gamma.simple", "commutative simple roots are amazing",
            lambda: _first(list(a) for a in rs.simple_roots if a in com and a not in gam))
    r.check("extension.in-H", "single-root abelian extensions of amazing upper sets lie in H",
            lambda: [[list(g), list(nu)] for g, nu in am.lemma_extension_violations(rs)])
    if rs.rank >= 2:
        r.check("perp.long-highest-amazing", "long highest roots orthogonal to theta are amazing",
                lambda: _first(list(t) for t, long_ in am.theta_perp_highest(rs) if long_ and t not in gam))
    return r.out


def suite_theorems(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    gam = am.amazing_roots(rs)
    prim = am.primitive_roots(rs)
    h = idl.heisenberg_set(rs)
    gh = gam & h

    want = ex.expected_gamma(rs)
    if want is None:
        r.skip("classification.list", "amazing roots match the reference list", "no list for this type")
    else:
        r.check("classification.list", "amazing roots match the reference list",
                lambda: set(gam) != want and {"extra": sorted(map(rs.name, set(gam) - want)),
                                              "missing": sorted(map(rs.name, want - set(gam)))})
    counts = ex.expected_counts(rs)
    if counts is None:
        r.skip("classification.counts", "counts match the count table", "outside table range")
    else:
        r.check("classification.counts", "counts match the count table",
                lambda: (len(gam), len(gh)) != counts and [len(gam), len(gh)])
    r.check("primitive.count", "number of primitive roots equals the rank",
            lambda: len(prim) != rs.rank and len(prim))
    r.check("primitive.bijection", "primitive roots biject with simple roots by subtraction",
            lambda: not am.primitive_bijection(rs))
    wp = ex.expected_primitive(rs)
    if wp is None:
        r.skip("primitive.list", "primitive roots match the reference ones", "no list for this type")
    else:
        r.check("primitive.list", "primitive roots match the reference ones",
                lambda: set(prim) != wp and sorted(map(rs.name, set(prim) ^ wp)))
    r.check("closure", "amazing roots closed under join; primitive iff inconvenient within them",
            lambda: am.verify_closure_under_join(rs).counterexamples)
    if not _type_a(rs) and rs.rank >= 2:
        r.check("primitive.theta", "theta is primitive outside type A", lambda: rs.theta not in prim)
    if rs.family == "A":
        r.check("remark.A", "amazing roots in H are all of H for A_n", lambda: gh != h and gh.names())
    if rs.family == "C":
        r.check("remark.C", "only theta is amazing in H for C_n",
                lambda: set(gh) != {rs.theta} and gh.names())
    if rs.rank >= 2:
        tops = am.theta_perp_highest(rs)
        nlong = sum(1 for _, l in tops if l)
        nshort = len(tops) - nlong
        if (rs.family == "D" and rs.rank >= 5) or (rs.family == "B" and rs.rank >= 4):
            r.check("perp.two-long", "two long highest roots orthogonal to theta",
                    lambda: nlong != 2 and [rs.name(t) for t, _ in tops])
        if str(rs.rtype) in ("B3", "G2"):
            r.check("perp.short", "a short highest root orthogonal to theta",
                    lambda: nshort < 1 and [rs.name(t) for t, _ in tops])
    if rs.family == "D" and rs.rank >= 5:
        r.out.extend(_example_dn(rs))
    return r.out


def _example_dn(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    n, e = rs.rank, rs.eps
    h = idl.heisenberg_set(rs)
    witness = e("e3+e4")

    def non_amazing():
        for j in range(4, n + 1):
            g = e(f"e2+e{j}")
            up = ps.upper_set(rs, g)
            if am.is_amazing(rs, g) or witness not in idl.single_root_extensions(rs, up) or witness in h:
                return f"e2+e{j}"
        return None

    def amazing_pairs():
        for i in range(1, n - 1):
            g = e(f"e{i}+e{i + 1}")
            lhs, rhs = am.equality_sides(rs, g)
            if not am.is_amazing(rs, g) or lhs != rhs or lhs != 2 * i - 1:
                return {"root": f"e{i}+e{i + 1}", "lhs": lhs, "rhs": rhs}
            if coroot_height(rs, g) != 2 * n - 2 * i - 1:
                return {"root": f"e{i}+e{i + 1}", "coroot_height": coroot_height(rs, g)}
        return None

    r.check("example.Dn.non-amazing", "e2+ej (j>=4) not amazing, witnessed by e3+e4 outside H", non_amazing)
    r.check("example.Dn.amazing", "ei+e(i+1) amazing with both sides equal to 2i-1", amazing_pairs)
    return r.out


def _tree_edges(rs: RootSystem, g: dk.LabeledGraph) -> set:
    return {
        (frozenset({rs.name(g.nodes[i]), rs.name(g.nodes[j])}), None if lab is None else rs.display_index(lab))
        for (i, j), lab in g.edges.items()
    }


def suite_figures(rs: RootSystem) -> list[CheckRecord]:
    r = _Recorder(rs)
    if not theta_is_fundamental(rs):
        for claim in ("tree.shape", "tree.labels", "tree.anchor", "tree.chains"):
            r.skip(claim, "trees need a fundamental highest root", "types A_n and C_n excluded")
        return r.out
    tree = dk.gamma_H_tree(rs)
    target = dk.short_deleted_extended(rs)
    gh = dk.gamma_H(rs)
    r.check("tree.shape", "Hasse diagram of amazing roots in H is the short-deleted extended diagram",
            lambda: not (tree.is_tree() and dk.tree_isomorphic(tree, target)
                         and len(gh) == len(rs.long_simple_indices) + 1))
    r.check("tree.labels", "edge labels biject with long simple roots",
            lambda: not dk.edge_bijection_with_long_simples(rs))
    r.check("tree.anchor", "theta represents the extra node",
            lambda: not (dk.theta_anchors_alpha0(rs, tree, target)
                         and dk.labelling_is_isomorphism(rs, tree, target)))
    r.check("tree.chains", "theta minus each chain from a0 gives the amazing roots in H",
            lambda: sorted(dk.chain_roots(rs, target).values()) != sorted(gh)
            and sorted(map(rs.name, dk.chain_roots(rs, target).values())))
    want = ex.tree_edges(rs, augmented=False)
    if want is not None:
        r.check("figure.tree", "reference tree reproduced (nodes, edges, labels)",
                lambda: _tree_edges(rs, tree) != want and sorted(map(str, _tree_edges(rs, tree) ^ want)))
    if rs.family in "BFG":
        s, aug = dk.augment_gamma_H(rs)
        full = dk.extended_dynkin_graph(rs)
        r.check("augment.shape", "augmented tree is the full extended diagram with labels biject Pi",
                lambda: not (aug.is_tree() and dk.tree_isomorphic(aug, full)
                             and sorted(aug.edge_labels()) == list(range(rs.rank))
                             and len(aug.nodes) == rs.rank + 1))
        r.check("augment.anchor", "theta represents the extra node in the augmented tree",
                lambda: not (dk.theta_anchors_alpha0(rs, aug, full)
                             and dk.labelling_is_isomorphism(rs, aug, full)))
        added = {rs.name(x) for x in s - gh}
        golden = {"B": {"e1"}, "F": {"[1321]", "[2321]"}, "G": {"[21]"}}[rs.family]
        r.check("augment.added", "added short roots match the drawn ones",
                lambda: added != golden and sorted(added))
        want = ex.tree_edges(rs, augmented=True)
        if want is not None:
            r.check("figure.augmented", "drawn augmented tree reproduced",
                    lambda: _tree_edges(rs, aug) != want and sorted(map(str, _tree_edges(rs, aug) ^ want)))
    return r.out


SUITE_FUNCS: dict[str, Callable[[RootSystem], list[CheckRecord]]] = {
    "joins": suite_joins,
    "ideals": suite_ideals,
    "criteria": suite_criteria,
    "theorems": suite_theorems,
    "figures": suite_figures,
}


def run(suite: str, types: list[RankedType] | None = None, max_rank: int = 8) -> VerificationOutcome:
    if suite != "all" and suite not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}")
    if types is None:
        types = admissible_types(max_rank)
    names = SUITES if suite == "all" else (suite,)
    records = []
    for t in types:
        rs = get_root_system(t)
        for name in names:
            records.extend(SUITE_FUNCS[name](rs))
    records.sort(key=lambda c: (c.claim, c.rtype))
    return VerificationOutcome(suite, records)
