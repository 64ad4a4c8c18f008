"""Upper ideals, abelian ideals, the Heisenberg set and commutative roots."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .poset import RootSet, upper_set
from .rootsys import Root, RootSystem, inner, per_system


@dataclass(frozen=True)
class UpperIdeal:
    roots: RootSet

    @cached_property
    def generators(self) -> RootSet:
        """The antichain of minimal members."""
        rs, m = self.roots.rs, self.roots.mask
        gens = [i for i in self.roots.indices if rs.geq_masks[i] & m == 1 << i]
        return RootSet(rs, sum(1 << i for i in gens))

    def __len__(self):
        return len(self.roots)

    def to_dict(self) -> dict:
        return {"roots": self.roots.to_list(), "generators": self.generators.to_list()}


class AbelianIdeal(UpperIdeal):
    pass


@per_system
def _sum_masks(rs: RootSystem) -> tuple[int, ...]:
    """``bad[i]``: roots ``j`` with ``root_i + root_j`` a positive root."""
    roots, idx = rs.positive_roots, rs.index
    return tuple(
        sum(1 << j for j, s in enumerate(roots) if tuple(x + y for x, y in zip(r, s)) in idx)
        for r in roots
    )


def is_upper_ideal(rs: RootSystem, s: RootSet) -> bool:
    m = s.mask
    return all(rs.leq_masks[i] & ~m == 0 for i in s.indices)


def is_abelian(rs: RootSystem, s: RootSet) -> bool:
    """No two members (equal ones included) sum to a root."""
    bad = _sum_masks(rs)
    m = s.mask
    return all(bad[i] & m == 0 for i in s.indices)


@per_system
def heisenberg_set(rs: RootSystem) -> RootSet:
    return RootSet.of(rs, (r for r in rs.positive_roots if inner(rs, r, rs.theta) != 0))


def is_commutative(rs: RootSystem, gamma: Root) -> bool:
    return is_abelian(rs, upper_set(rs, gamma))


@per_system
def commutative_roots(rs: RootSystem) -> RootSet:
    return RootSet.of(rs, (r for r in rs.positive_roots if is_commutative(rs, r)))


def _ordered(rs: RootSystem, masks) -> list[AbelianIdeal]:
    ideals = [AbelianIdeal(RootSet(rs, m)) for m in masks]
    ideals.sort(key=lambda a: (len(a), a.roots.indices))
    return ideals


def enumerate_abelian_ideals(rs: RootSystem) -> list[AbelianIdeal]:
    return list(_abelian_ideals(rs))


@per_system
def _abelian_ideals(rs: RootSystem) -> tuple[AbelianIdeal, ...]:
    """All abelian ideals, the empty one included.

    Grows each ideal by a maximal element of its complement, keeping both
    the upper-ideal and the abelian property.  Ordered by size, then by
    sorted root indices.
    """
    up, bad = rs.leq_masks, _sum_masks(rs)
    m = len(rs)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for k in range(m):
                if mask >> k & 1:
                    continue
                # k is maximal in the complement iff everything strictly above it is in
                if up[k] & ~mask != 1 << k:
                    continue
                grown = mask | 1 << k
                if bad[k] & grown:
                    continue
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return tuple(_ordered(rs, seen))


def enumerate_abelian_ideals_by_antichains(rs: RootSystem) -> list[AbelianIdeal]:
    """Independent route: upper closures of antichains, filtered by the abelian test.

    Antichains are grown in index order; a branch is cut as soon as its
    closure stops being abelian, since supersets cannot recover.
    """
    up, down = rs.leq_masks, rs.geq_masks
    m = len(rs)
    found = set()

    def closure(gens):
        c = 0
        for g in gens:
            c |= up[g]
        return c

    def rec(start, gens, forbidden):
        c = closure(gens)
        if not is_abelian(rs, RootSet(rs, c)):
            return
        found.add(c)
        for k in range(start, m):
            if forbidden >> k & 1:
                continue
            rec(k + 1, gens + [k], forbidden | up[k] | down[k])

    rec(0, [], 0)
    return _ordered(rs, found)


def enumerate_upper_ideals(rs: RootSystem) -> list[UpperIdeal]:
    """All upper ideals via antichains; only sensible for small systems."""
    up, down = rs.leq_masks, rs.geq_masks
    m = len(rs)
    found = []

    def rec(start, closure, forbidden):
        found.append(closure)
        for k in range(start, m):
            if not forbidden >> k & 1:
                rec(k + 1, closure | up[k], forbidden | up[k] | down[k])

    rec(0, 0, 0)
    return [UpperIdeal(RootSet(rs, c)) for c in sorted(set(found))]


def abelian_ideals_in_H(rs: RootSystem) -> list[AbelianIdeal]:
    h = heisenberg_set(rs).mask
    return [a for a in enumerate_abelian_ideals(rs) if a.roots.mask & ~h == 0]


def single_root_extensions(rs: RootSystem, s: RootSet) -> list[Root]:
    """Every ``nu`` outside ``s`` such that ``s + {nu}`` is an abelian upper ideal."""
    out = []
    for k, nu in enumerate(rs.positive_roots):
        if s.mask >> k & 1:
            continue
        t = RootSet(rs, s.mask | 1 << k)
        if is_upper_ideal(rs, t) and is_abelian(rs, t):
            out.append(nu)
    return out
