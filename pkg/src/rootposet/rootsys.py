"""Irreducible reduced root systems built from Cartan matrices.

Roots are plain integer tuples of coefficients over the simple roots.
Inner products are exact ``Fraction`` values, normalised so that long
roots have squared length 2.

Internal simple-root numbering is Bourbaki's for every type.  Classical
types use the usual epsilon conventions (``D_n`` has ``a_n = e_{n-1}+e_n``).
For E and F the bracket notation ``[c1...cn]`` uses a display order that
differs from the internal one (see :data:`DISPLAY_ORDER`).
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple  # tuple[int, ...]

FAMILIES = "ABCDEFG"

#: Display position -> internal (0-based) simple-root index.  E: the
#: unbranched chain (starting at the end with the smallest coefficient of
#: the highest root) followed by the branch node; F4: reversed.
DISPLAY_ORDER: dict[tuple[str, int], tuple[int, ...]] = {
    ("E", 6): (5, 4, 3, 2, 0, 1),
    ("E", 7): (6, 5, 4, 3, 2, 0, 1),
    ("E", 8): (7, 6, 5, 4, 3, 2, 0, 1),
    ("F", 4): (3, 2, 1, 0),
}


def per_system(fn):
    """Cache ``fn(rs)`` on the root system itself; results must be immutable."""

    @functools.wraps(fn)
    def wrapper(rs):
        memo = rs.__dict__.setdefault("_memo", {})
        key = fn.__qualname__
        if key not in memo:
            memo[key] = fn(rs)
        return memo[key]

    return wrapper


class RootSystemError(ValueError):
    """Raised for inadmissible types or for vectors that are not roots."""


@dataclass(frozen=True, order=True)
class RankedType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise RootSystemError(f"rank must be a positive integer, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 2,
            "C": self.rank >= 2,
            "D": self.rank >= 3,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.family]
        if not ok:
            raise RootSystemError(f"type {self.family}{self.rank} is not admissible")

    @classmethod
    def parse(cls, token: str, rank: int | None = None) -> "RankedType":
        """Accept ``"D6"``, ``"d6"`` or ``("D", 6)``."""
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)?\s*", token)
        if not m:
            raise RootSystemError(f"cannot parse root system type {token!r}")
        fam = m.group(1).upper()
        if m.group(2) is not None:
            if rank is not None and rank != int(m.group(2)):
                raise RootSystemError(f"conflicting ranks in {token!r} and {rank}")
            rank = int(m.group(2))
        if rank is None:
            raise RootSystemError(f"missing rank for type {token!r}")
        return cls(fam, rank)

    def __str__(self):
        return f"{self.family}{self.rank}"


def admissible_types(max_rank: int = 8) -> list[RankedType]:
    """Every admissible type with rank at most ``max_rank``, B2=C2 and D3=A3 included."""
    out = []
    for fam in FAMILIES:
        for n in range(1, max_rank + 1):
            try:
                out.append(RankedType(fam, n))
            except RootSystemError:
                pass
    return out


def cartan_matrix(t: RankedType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``a[i][j] = 2(a_i, a_j)/(a_i, a_i)``."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B":
            # a_n short
            bond(n - 2, n - 1, -1, -2)
        elif fam == "C":
            # a_n long
            bond(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif fam == "G":
        # a_1 short, a_2 long
        bond(0, 1, -3, -1)
    return tuple(tuple(r) for r in a)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Squared lengths ``(a_i, a_i)`` making the Cartan matrix symmetrisable, longest = 2."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise RootSystemError("Dynkin diagram is not connected")
    scale = Fraction(2) / max(d)
    return tuple(x * scale for x in d)


def _generate_positive_roots(cartan, n) -> list[Root]:
    """Positive roots by height, via root strings."""
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # length of the string below beta in direction a_i
                p = 0
                v = list(beta)
                while True:
                    v[i] -= 1
                    if tuple(v) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        out.extend(nxt)
        layer = nxt
    return out


def _canonical_key(r: Root):
    # height first, then lexicographically larger coefficient vectors first
    return (sum(r), tuple(-c for c in r))


@dataclass(frozen=True)
class RootSystem:
    """Immutable root system with index-based lookup tables.

    ``positive_roots`` are ordered by height, then by coefficient vector.
    """

    rtype: RankedType
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    dcoeffs: tuple[Fraction, ...] = field(repr=False)
    positive_roots: tuple[Root, ...] = field(repr=False)
    theta: Root = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    @property
    def family(self) -> str:
        return self.rtype.family

    def __len__(self):
        return len(self.positive_roots)

    @cached_property
    def index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix ``(a_i, a_j)`` of the simple roots."""
        n = self.rank
        return tuple(
            tuple(self.dcoeffs[i] * self.cartan[i][j] / 2 for j in range(n)) for i in range(n)
        )

    @cached_property
    def gram_scaled(self) -> tuple[tuple[int, ...], ...]:
        rows = tuple(tuple(x * _GRAM_SCALE for x in r) for r in self.gram)
        assert all(x.denominator == 1 for r in rows for x in r)
        return tuple(tuple(int(x) for x in r) for r in rows)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def is_root(self, v: Iterable[int]) -> bool:
        """True for positive roots only."""
        return tuple(v) in self.index

    def check_root(self, v) -> Root:
        v = tuple(v)
        if v not in self.index:
            raise RootSystemError(f"{list(v)} is not a positive root of {self.rtype}")
        return v

    def long_simple(self, i: int) -> bool:
        return self.dcoeffs[i] == 2

    @cached_property
    def long_simple_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.long_simple(i))

    @cached_property
    def short_simple_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if not self.long_simple(i))

    @cached_property
    def _norms(self) -> tuple[Fraction, ...]:
        return tuple(inner(self, r, r) for r in self.positive_roots)

    @cached_property
    def long_roots(self) -> tuple[Root, ...]:
        return tuple(r for r, q in zip(self.positive_roots, self._norms) if q == 2)

    @cached_property
    def leq_masks(self) -> tuple[int, ...]:
        """``up[i]`` is the bitmask of all roots ``>=`` root ``i``."""
        roots = self.positive_roots
        return tuple(
            sum(1 << j for j, s in enumerate(roots) if all(x >= y for x, y in zip(s, r)))
            for r in roots
        )

    @cached_property
    def geq_masks(self) -> tuple[int, ...]:
        """``down[i]`` is the bitmask of all roots ``<=`` root ``i``."""
        m = len(self.positive_roots)
        return tuple(
            sum(1 << j for j in range(m) if self.leq_masks[j] >> i & 1) for i in range(m)
        )

    # -- rendering -----------------------------------------------------

    @cached_property
    def display_order(self) -> tuple[int, ...]:
        return DISPLAY_ORDER.get((self.family, self.rank), tuple(range(self.rank)))

    def display_index(self, i: int) -> int:
        """1-based display number of internal simple-root index ``i``."""
        return self.display_order.index(i) + 1

    def internal_index(self, k: int) -> int:
        """Internal index of the simple root with display number ``k``."""
        return self.display_order[k - 1]

    def bracket(self, r: Root) -> str:
        return "[" + "".join(str(r[i]) for i in self.display_order) + "]"

    def from_bracket(self, s: str) -> Root:
        """Parse ``"[2432]"`` (display order) into an internal root."""
        digits = [int(c) for c in s.strip("[] ").replace(" ", "")]
        if len(digits) != self.rank:
            raise RootSystemError(f"{s!r} has the wrong length for {self.rtype}")
        v = [0] * self.rank
        for k, c in enumerate(digits):
            v[self.display_order[k]] = c
        return tuple(v)

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @cached_property
    def simple_eps(self) -> tuple[tuple[int, ...], ...]:
        """Epsilon coordinates of the simple roots (classical types only)."""
        if not self.is_classical:
            raise RootSystemError(f"no epsilon model for {self.rtype}")
        n = self.rank
        dim = n + 1 if self.family == "A" else n
        rows = []
        for i in range(n):
            v = [0] * dim
            v[i] = 1
            if i + 1 < dim:
                v[i + 1] = -1
            rows.append(v)
        last = [0] * dim
        if self.family == "B":
            last[n - 1] = 1
            rows[n - 1] = last
        elif self.family == "C":
            last[n - 1] = 2
            rows[n - 1] = last
        elif self.family == "D":
            last[n - 2] = last[n - 1] = 1
            rows[n - 1] = last
        return tuple(tuple(r) for r in rows)

    def to_eps(self, r: Root) -> tuple[int, ...]:
        dim = len(self.simple_eps[0])
        return tuple(sum(c * e[k] for c, e in zip(r, self.simple_eps)) for k in range(dim))

    def from_eps(self, e: Sequence[int]) -> Root:
        """Inverse of :meth:`to_eps` for positive roots."""
        e = tuple(e)
        for r in self.positive_roots:
            if self.to_eps(r) == e:
                return r
        raise RootSystemError(f"{e} is not a positive root of {self.rtype} in epsilon coordinates")

    def eps(self, text: str) -> Root:
        """Parse ``"e1+e3"``, ``"e1-e2"``, ``"2e1"``, ``"e2"``."""
        dim = len(self.simple_eps[0])
        v = [0] * dim
        for sign, coef, idx in re.findall(r"([+-]?)\s*(\d*)\s*e(\d+)", text.replace(" ", "")):
            c = int(coef) if coef else 1
            v[int(idx) - 1] += -c if sign == "-" else c
        return self.from_eps(v)

    def eps_str(self, r: Root) -> str:
        parts = []
        for k, c in enumerate(self.to_eps(r)):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{mag}e{k + 1}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def name(self, r: Root) -> str:
        """Epsilon notation for classical types, brackets otherwise."""
        return self.eps_str(r) if self.is_classical else self.bracket(r)


def build_root_system(t: RankedType | str) -> RootSystem:
    if isinstance(t, str):
        t = RankedType.parse(t)
    cartan = cartan_matrix(t)
    d = symmetrizer(cartan)
    roots = sorted(_generate_positive_roots(cartan, t.rank), key=_canonical_key)
    maximal = [r for r in roots if not any(
        s != r and all(x >= y for x, y in zip(s, r)) for s in roots)]
    if len(maximal) != 1:
        raise RootSystemError(f"{t}: expected a unique maximal root, found {maximal}")
    rs = RootSystem(t, cartan, d, tuple(roots), maximal[0])
    if inner(rs, rs.theta, rs.theta) != 2:
        raise RootSystemError(f"{t}: highest root is not long")
    return rs


_CACHE: dict[RankedType, RootSystem] = {}


def get_root_system(t: RankedType | str) -> RootSystem:
    """Cached :func:`build_root_system`."""
    if isinstance(t, str):
        t = RankedType.parse(t)
    if t not in _CACHE:
        _CACHE[t] = build_root_system(t)
    return _CACHE[t]


_GRAM_SCALE = 6  # clears every denominator of the normalised Gram matrices


def inner(rs: RootSystem, gamma: Sequence[int], mu: Sequence[int]) -> Fraction:
    g = rs.gram_scaled
    total = 0
    for i, a in enumerate(gamma):
        if a:
            row = g[i]
            total += a * sum(b * row[j] for j, b in enumerate(mu) if b)
    return Fraction(total, _GRAM_SCALE)


def pairing(rs: RootSystem, gamma: Sequence[int], i: int) -> int:
    """``<gamma, a_i^vee>``."""
    return sum(gamma[j] * rs.cartan[i][j] for j in range(rs.rank))


def reflect(rs: RootSystem, gamma: Sequence[int], i: int) -> Root:
    v = list(gamma)
    v[i] -= pairing(rs, gamma, i)
    return tuple(v)


def is_long(rs: RootSystem, gamma: Root) -> bool:
    return inner(rs, gamma, gamma) == 2


def height(gamma: Sequence[int]) -> int:
    return sum(gamma)


def coroot_height(rs: RootSystem, gamma: Root) -> int:
    """Height of ``2 gamma/(gamma, gamma)`` in the basis of simple coroots."""
    gamma = rs.check_root(gamma)
    q = inner(rs, gamma, gamma)
    h = sum(c * rs.dcoeffs[i] / q for i, c in enumerate(gamma))
    if h.denominator != 1:
        raise RootSystemError(f"non-integral coroot height {h} for {gamma}")
    return int(h)


def highest_root(rs: RootSystem) -> Root:
    return rs.theta


def support(rs: RootSystem, gamma: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(gamma) if c)


def theta_is_fundamental(rs: RootSystem) -> bool:
    """True iff the highest root is a fundamental weight.

    Counting simple roots not orthogonal to theta is not enough: in C_n only
    a_1 qualifies, but theta = 2 omega_1 there.
    """
    pairings = [pairing(rs, rs.theta, i) for i in range(rs.rank)]
    return sorted(p for p in pairings if p) == [1]


def dynkin_adjacency(rs: RootSystem) -> dict[int, set[int]]:
    n = rs.rank
    return {i: {j for j in range(n) if j != i and rs.cartan[i][j] != 0} for i in range(n)}


def support_connected(rs: RootSystem, gamma: Sequence[int]) -> bool:
    supp = support(rs, gamma)
    if not supp:
        return False
    adj = dynkin_adjacency(rs)
    start = next(iter(supp))
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in adj[i] & supp:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return seen == supp


def expected_positive_count(t: RankedType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]
