"""Amazing, primitive and inconvenient roots.

A long commutative root ``g`` is amazing exactly when

    hot(theta^vee) - hot(g^vee) + 1 == #(upper_set(g) & H)

where ``H`` is the Heisenberg set.  The left side never exceeds the right
for commutative roots; that inequality is checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .ideals import commutative_roots, heisenberg_set, is_commutative, single_root_extensions
from .poset import (
    FalsificationError,
    RootSet,
    count_jump_paths,
    incomparable,
    join,
    jump_paths,
    subtractable_simples,
    unique_path_all_long,
    upper_set,
    w_length,
)
from .rootsys import Root, RootSystem, coroot_height, inner, is_long, per_system


@dataclass(frozen=True)
class RootDiagnostics:
    root: Root
    long: bool
    commutative: bool
    in_H: bool
    inconvenient: bool
    # both sides of the counting inequality, only for commutative roots
    lhs: int | None = None
    rhs: int | None = None
    path_criterion: bool | None = None

    def to_dict(self, rs: RootSystem) -> dict:
        return {
            "root": list(self.root),
            "name": rs.name(self.root),
            "long": self.long,
            "commutative": self.commutative,
            "in_H": self.in_H,
            "inconvenient": self.inconvenient,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "path_criterion": self.path_criterion,
        }


def equality_sides(rs: RootSystem, gamma: Root) -> tuple[int, int]:
    """``(hot(theta^vee) - hot(gamma^vee) + 1, #(upper_set(gamma) & H))``."""
    lhs = coroot_height(rs, rs.theta) - coroot_height(rs, gamma) + 1
    rhs = len(upper_set(rs, gamma) & heisenberg_set(rs))
    return lhs, rhs


def is_amazing(rs: RootSystem, gamma: Root) -> bool:
    gamma = rs.check_root(gamma)
    if not is_long(rs, gamma) or not is_commutative(rs, gamma):
        return False
    lhs, rhs = equality_sides(rs, gamma)
    return lhs == rhs


@per_system
def amazing_roots(rs: RootSystem) -> RootSet:
    return RootSet.of(rs, (g for g in rs.positive_roots if is_amazing(rs, g)))


def _require_long_in_H(rs: RootSystem, gamma: Root) -> Root:
    gamma = rs.check_root(gamma)
    if not is_long(rs, gamma):
        raise ValueError(f"{rs.name(gamma)} is short")
    if inner(rs, gamma, rs.theta) == 0:
        raise ValueError(f"{rs.name(gamma)} is orthogonal to theta")
    return gamma


def amazing_in_H_by_paths(rs: RootSystem, gamma: Root) -> bool:
    """Unique path to theta, all of it long."""
    return unique_path_all_long(rs, _require_long_in_H(rs, gamma))


def jump_path_criterion(rs: RootSystem, gamma: Root) -> bool:
    """A single jump-path, using long reflections only, with unit height steps."""
    gamma = _require_long_in_H(rs, gamma)
    if count_jump_paths(rs, gamma) != 1:
        return False
    (jp,) = jump_paths(rs, gamma)
    return all(rs.long_simple(j) for j in jp.reflections) and jp.is_path()


def is_inconvenient(rs: RootSystem, gamma: Root) -> bool:
    return len(subtractable_simples(rs, gamma)) == 1


def is_join_of_incomparable(rs: RootSystem, gamma: Root, pool) -> bool:
    """True if ``gamma = g1 v g2`` for some incomparable ``g1, g2`` in ``pool``."""
    below = [g for g in pool if all(a <= b for a, b in zip(g, gamma))]
    return any(
        incomparable(rs, a, b) and join(rs, a, b) == tuple(gamma)
        for a, b in combinations(below, 2)
    )


def is_primitive(rs: RootSystem, gamma: Root) -> bool:
    gamma = rs.check_root(gamma)
    gam = amazing_roots(rs)
    return gamma in gam and not is_join_of_incomparable(rs, gamma, gam.members)


@per_system
def primitive_roots(rs: RootSystem) -> RootSet:
    gam = amazing_roots(rs).members
    return RootSet.of(rs, (g for g in gam if not is_join_of_incomparable(rs, g, gam)))


def primitive_to_simple(rs: RootSystem, gamma: Root) -> int:
    """Internal index of the unique simple root subtractable from a primitive root."""
    if not is_primitive(rs, gamma):
        raise FalsificationError(f"{rs.name(gamma)} is not primitive")
    sub = subtractable_simples(rs, gamma)
    if len(sub) != 1:
        raise FalsificationError(
            f"{rs.name(gamma)} has {len(sub)} subtractable simple roots, expected one")
    return sub[0]


def primitive_bijection(rs: RootSystem) -> dict[Root, int]:
    """The map from primitive roots to simple indices; raises unless bijective."""
    table = {g: primitive_to_simple(rs, g) for g in primitive_roots(rs)}
    if sorted(table.values()) != list(range(rs.rank)):
        raise FalsificationError(f"{rs.rtype}: primitive -> simple map is not a bijection: {table}")
    return table


def _theta_perp_components(rs: RootSystem) -> list[list[Root]]:
    perp = [r for r in rs.positive_roots if inner(rs, r, rs.theta) == 0]
    comps: list[list[Root]] = []
    left = set(perp)
    while left:
        seed = min(left, key=perp.index)
        comp, stack = {seed}, [seed]
        left.discard(seed)
        while stack:
            r = stack.pop()
            for s in list(left):
                if inner(rs, r, s) != 0:
                    left.discard(s)
                    comp.add(s)
                    stack.append(s)
        comps.append(sorted(comp, key=perp.index))
    return comps


def theta_perp_highest(rs: RootSystem) -> list[tuple[Root, bool]]:
    """Highest root of each irreducible component of the roots orthogonal to theta."""
    if rs.rank < 2:
        raise ValueError("needs rank >= 2")
    out = []
    for comp in _theta_perp_components(rs):
        tops = [r for r in comp if not any(s != r and all(a <= b for a, b in zip(r, s)) for s in comp)]
        if len(tops) != 1:
            raise FalsificationError(f"{rs.rtype}: component without a unique highest root: {tops}")
        out.append((tops[0], is_long(rs, tops[0])))
    return out


@dataclass
class ClosureReport:
    ok: bool
    counterexamples: list[dict] = field(default_factory=list)


def verify_closure_under_join(rs: RootSystem) -> ClosureReport:
    """Join-closure of the amazing set and the primitive/inconvenient implications."""
    gam = amazing_roots(rs)
    prim = primitive_roots(rs)
    bad = []
    for a, b in combinations(gam.members, 2):
        j = join(rs, a, b)
        if j not in gam:
            bad.append({"claim": "closed-under-join", "pair": [list(a), list(b)], "join": list(j)})
    for g in gam:
        inc = is_inconvenient(rs, g)
        pr = g in prim
        if inc and not pr:
            bad.append({"claim": "inconvenient-implies-primitive", "root": list(g)})
        if pr and not inc:
            bad.append({"claim": "primitive-implies-inconvenient", "root": list(g)})
    return ClosureReport(not bad, bad)


@dataclass(frozen=True)
class AmazingReport:
    rs: RootSystem
    gamma_set: RootSet
    primitive_set: RootSet
    gamma_H: RootSet
    diagnostics: tuple[RootDiagnostics, ...]

    def to_dict(self) -> dict:
        rs = self.rs

        def dump(s: RootSet):
            return {
                "roots": s.to_list(),
                "names": s.names(),
                "brackets": [rs.bracket(r) for r in s],
            }

        return {
            "gamma": dump(self.gamma_set),
            "primitive": dump(self.primitive_set),
            "gamma_H": dump(self.gamma_H),
            "bijection": [
                {"root": list(g), "name": rs.name(g), "simple": rs.display_index(i)}
                for g, i in primitive_bijection(rs).items()
            ],
            "diagnostics": [d.to_dict(rs) for d in self.diagnostics],
        }


def amazing_report(rs: RootSystem) -> AmazingReport:
    h = heisenberg_set(rs)
    com = commutative_roots(rs)
    diags = []
    for g in rs.positive_roots:
        long_ = is_long(rs, g)
        lhs = rhs = None
        if g in com:
            lhs, rhs = equality_sides(rs, g)
        path = amazing_in_H_by_paths(rs, g) if long_ and g in h else None
        diags.append(RootDiagnostics(g, long_, g in com, g in h, is_inconvenient(rs, g), lhs, rhs, path))
    gam = amazing_roots(rs)
    return AmazingReport(rs, gam, primitive_roots(rs), gam & h, tuple(diags))


def short_equality_cases(rs: RootSystem) -> list[Root]:
    """Short commutative roots where the counting equality happens to hold."""
    out = []
    for g in commutative_roots(rs):
        if not is_long(rs, g):
            lhs, rhs = equality_sides(rs, g)
            if lhs == rhs:
                out.append(g)
    return out


def lemma_extension_violations(rs: RootSystem) -> list[tuple[Root, Root]]:
    """Pairs (amazing g, extension nu) where nu lies outside H; expected empty."""
    h = heisenberg_set(rs)
    return [
        (g, nu)
        for g in amazing_roots(rs)
        for nu in single_root_extensions(rs, upper_set(rs, g))
        if nu not in h
    ]


__all__ = [
    "AmazingReport",
    "ClosureReport",
    "RootDiagnostics",
    "amazing_in_H_by_paths",
    "amazing_report",
    "amazing_roots",
    "equality_sides",
    "is_amazing",
    "is_inconvenient",
    "is_join_of_incomparable",
    "is_primitive",
    "jump_path_criterion",
    "lemma_extension_violations",
    "primitive_bijection",
    "primitive_roots",
    "primitive_to_simple",
    "short_equality_cases",
    "theta_perp_highest",
    "verify_closure_under_join",
    "w_length",
]
