"""The root poset: order, joins, upper sets, paths and jump-paths to theta."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .rootsys import (
    Root,
    RootSystem,
    coroot_height,
    dynkin_adjacency,
    is_long,
    pairing,
    reflect,
    support,
)


class FalsificationError(AssertionError):
    """A claimed identity failed on a concrete input."""


@dataclass(frozen=True)
class RootSet:
    """Canonically ordered set of positive roots of one system."""

    rs: RootSystem
    mask: int

    @classmethod
    def of(cls, rs: RootSystem, roots: Iterable[Root]) -> "RootSet":
        m = 0
        for r in roots:
            m |= 1 << rs.index[tuple(r)]
        return cls(rs, m)

    @property
    def members(self) -> tuple[Root, ...]:
        roots = self.rs.positive_roots
        return tuple(roots[i] for i in self.indices)

    @property
    def indices(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.members)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, r) -> bool:
        i = self.rs.index.get(tuple(r))
        return i is not None and bool(self.mask >> i & 1)

    def __or__(self, other: "RootSet") -> "RootSet":
        return RootSet(self.rs, self.mask | other.mask)

    def __and__(self, other: "RootSet") -> "RootSet":
        return RootSet(self.rs, self.mask & other.mask)

    def __sub__(self, other: "RootSet") -> "RootSet":
        return RootSet(self.rs, self.mask & ~other.mask)

    def __le__(self, other: "RootSet") -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        if isinstance(other, RootSet):
            return self.rs.rtype == other.rs.rtype and self.mask == other.mask
        return NotImplemented

    def __hash__(self):
        return hash((self.rs.rtype, self.mask))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.members]

    def names(self) -> list[str]:
        return [self.rs.name(r) for r in self.members]

    def __repr__(self):
        return f"RootSet({self.rs.rtype}, {{{', '.join(self.names())}}})"


def leq(rs: RootSystem, mu: Root, nu: Root) -> bool:
    return all(b >= a for a, b in zip(mu, nu))


def incomparable(rs: RootSystem, mu: Root, nu: Root) -> bool:
    return not leq(rs, mu, nu) and not leq(rs, nu, mu)


def upper_set(rs: RootSystem, gamma: Root) -> RootSet:
    return RootSet(rs, rs.leq_masks[rs.index[tuple(gamma)]])


def is_simple(rs: RootSystem, v: Root) -> bool:
    return sum(v) == 1 and min(v) == 0


def _chain_between(rs: RootSystem, s1: frozenset[int], s2: frozenset[int]) -> list[int]:
    """Interior nodes of the shortest Dynkin path from ``s1`` to ``s2``."""
    adj = dynkin_adjacency(rs)
    prev = {i: None for i in s1}
    frontier = list(s1)
    while frontier:
        nxt = []
        for i in frontier:
            for j in adj[i]:
                if j not in prev:
                    prev[j] = i
                    nxt.append(j)
        hit = [j for j in nxt if j in s2]
        if hit:
            chain = []
            k = prev[hit[0]]
            while k not in s1:
                chain.append(k)
                k = prev[k]
            return chain
        frontier = nxt
    raise FalsificationError("supports are not connected in the Dynkin diagram")


def join(rs: RootSystem, mu1: Root, mu2: Root) -> Root:
    """Least common upper bound via the support rules.

    Orthogonal supports: ``mu1 + mu2`` plus the simple roots on the Dynkin
    chain connecting them.  Otherwise: coefficient-wise maximum.
    """
    s1, s2 = support(rs, mu1), support(rs, mu2)
    orthogonal = all(rs.gram[a][b] == 0 for a in s1 for b in s2)
    if orthogonal:
        v = [x + y for x, y in zip(mu1, mu2)]
        for k in _chain_between(rs, s1, s2):
            v[k] += 1
    else:
        v = [max(x, y) for x, y in zip(mu1, mu2)]
    v = tuple(v)
    if v not in rs.index:
        raise FalsificationError(f"{rs.rtype}: join rule gives non-root {list(v)} for {mu1} v {mu2}")
    return v


def brute_force_join(rs: RootSystem, mu1: Root, mu2: Root) -> Root:
    """Scan all common upper bounds and return the unique minimal one."""
    up = rs.leq_masks
    common = up[rs.index[tuple(mu1)]] & up[rs.index[tuple(mu2)]]
    minimal = [
        k for k in range(len(rs))
        if common >> k & 1 and rs.geq_masks[k] & common == 1 << k
    ]
    if len(minimal) != 1:
        raise FalsificationError(
            f"{rs.rtype}: {len(minimal)} minimal upper bounds for {mu1}, {mu2}")
    return rs.positive_roots[minimal[0]]


def _up_steps(rs: RootSystem, mu: Root) -> list[tuple[int, Root]]:
    out = []
    for i in range(rs.rank):
        v = list(mu)
        v[i] += 1
        v = tuple(v)
        if v in rs.index:
            out.append((i, v))
    return out


def _path_counts(rs: RootSystem) -> dict[Root, int]:
    counts: dict[Root, int] = {}
    for mu in reversed(rs.positive_roots):
        if mu == rs.theta:
            counts[mu] = 1
        else:
            counts[mu] = sum(counts[v] for _, v in _up_steps(rs, mu))
    return counts


_PATH_COUNTS: dict = {}


def count_paths_to_theta(rs: RootSystem, gamma: Root) -> int:
    """Number of unit-step paths from ``gamma`` up to theta."""
    key = rs.rtype
    if key not in _PATH_COUNTS:
        _PATH_COUNTS[key] = _path_counts(rs)
    return _PATH_COUNTS[key][tuple(gamma)]


def paths_to_theta(rs: RootSystem, gamma: Root, cap: int = 4) -> list[list[Root]]:
    """Materialise all paths, refusing when there are more than ``cap``."""
    n = count_paths_to_theta(rs, gamma)
    if n > cap:
        raise ValueError(f"{n} paths exceed the materialisation cap {cap}")

    def walk(mu):
        if mu == rs.theta:
            yield [mu]
            return
        for _, v in _up_steps(rs, mu):
            for rest in walk(v):
                yield [mu] + rest

    return list(walk(tuple(gamma)))


def unique_path_all_long(rs: RootSystem, gamma: Root) -> bool:
    if count_paths_to_theta(rs, gamma) != 1:
        return False
    (path,) = paths_to_theta(rs, gamma, cap=1)
    return all(is_long(rs, r) for r in path)


@dataclass(frozen=True)
class JumpPath:
    roots: tuple[Root, ...]
    reflections: tuple[int, ...]

    def __len__(self):
        return len(self.reflections)

    def is_path(self) -> bool:
        return all(sum(b) - sum(a) == 1 for a, b in zip(self.roots, self.roots[1:]))


def _jumps(rs: RootSystem, gamma: Root) -> list[tuple[int, Root]]:
    return [
        (i, reflect(rs, gamma, i))
        for i in range(rs.rank)
        # same sign as (a_i, gamma)
        if pairing(rs, gamma, i) < 0
    ]


def _require_long(rs: RootSystem, gamma: Root) -> Root:
    gamma = rs.check_root(gamma)
    if not is_long(rs, gamma):
        raise ValueError(f"jump-paths are defined for long roots only; {rs.name(gamma)} is short")
    return gamma


def count_jump_paths(rs: RootSystem, gamma: Root) -> int:
    gamma = _require_long(rs, gamma)

    @lru_cache(maxsize=None)
    def count(mu):
        if mu == rs.theta:
            return 1
        return sum(count(v) for _, v in _jumps(rs, mu))

    return count(gamma)


def jump_path_lengths(rs: RootSystem, gamma: Root) -> frozenset[int]:
    """Set of lengths over all jump-paths (a singleton if lengths agree)."""
    gamma = _require_long(rs, gamma)

    @lru_cache(maxsize=None)
    def lengths(mu):
        if mu == rs.theta:
            return frozenset({0})
        return frozenset(k + 1 for _, v in _jumps(rs, mu) for k in lengths(v))

    return lengths(gamma)


def jump_paths(rs: RootSystem, gamma: Root, limit: int | None = None) -> list[JumpPath]:
    """All jump-paths from ``gamma`` to theta, optionally stopping after ``limit``."""
    gamma = _require_long(rs, gamma)
    out: list[JumpPath] = []

    def walk(mu, roots, refl):
        if limit is not None and len(out) >= limit:
            return
        if mu == rs.theta:
            out.append(JumpPath(tuple(roots), tuple(refl)))
            return
        for i, v in _jumps(rs, mu):
            walk(v, roots + [v], refl + [i])

    walk(gamma, [gamma], [])
    return out


def w_length(rs: RootSystem, gamma: Root) -> int:
    """Length of the minimal Weyl group element taking theta to ``gamma``."""
    return coroot_height(rs, rs.theta) - coroot_height(rs, gamma)


def covers(rs: RootSystem, gamma: Root) -> list[tuple[int, Root]]:
    """Roots covering ``gamma`` in the root poset, with the simple index added."""
    return _up_steps(rs, tuple(gamma))


def subtractable_simples(rs: RootSystem, gamma: Root) -> list[int]:
    """Simple indices ``i`` with ``gamma - a_i`` a positive root or zero."""
    out = []
    for i in range(rs.rank):
        v = list(gamma)
        v[i] -= 1
        v = tuple(v)
        if v in rs.index or not any(v):
            out.append(i)
    return out


__all__ = [
    "FalsificationError",
    "JumpPath",
    "RootSet",
    "brute_force_join",
    "count_jump_paths",
    "count_paths_to_theta",
    "covers",
    "incomparable",
    "is_simple",
    "join",
    "jump_path_lengths",
    "jump_paths",
    "leq",
    "pairing",
    "paths_to_theta",
    "subtractable_simples",
    "unique_path_all_long",
    "upper_set",
    "w_length",
]
