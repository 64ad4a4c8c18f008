"""Published classification data, used as golden values by ``verify``.

Classical types are written in epsilon notation, the others as brackets in
display numbering.
"""

from __future__ import annotations

from .rootsys import Root, RootSystem

EXCEPTIONAL_GAMMA = {
    "E6": ["[100000]", "[000010]", "[111110]", "[122101]", "[012211]", "[112211]",
           "[122111]", "[122211]", "[123211]", "[123212]"],
    "E7": ["[1000000]", "[1222101]", "[0123212]", "[1123212]", "[1233211]", "[1223212]",
           "[1233212]", "[1234212]", "[1234312]", "[1234322]"],
    "E8": ["[01234322]", "[12345313]", "[12345422]", "[12345323]", "[12345423]",
           "[12346423]", "[12356423]", "[12456423]", "[13456423]", "[23456423]"],
    "F4": ["[2210]", "[2421]", "[2431]", "[2432]"],
    "G2": ["[31]", "[32]"],
}

# primitive members of the E lists
EXCEPTIONAL_PRIMITIVE = {
    "E6": ["[100000]", "[000010]", "[122101]", "[012211]", "[123211]", "[123212]"],
    "E7": ["[1000000]", "[1222101]", "[0123212]", "[1233211]", "[1234212]", "[1234312]",
           "[1234322]"],
    "E8": ["[01234322]", "[12345313]", "[12345422]", "[12346423]", "[12356423]",
           "[12456423]", "[13456423]", "[23456423]"],
}


def expected_gamma(rs: RootSystem) -> set[Root] | None:
    """The reference list of amazing roots, or ``None`` when no list covers the type."""
    fam, n = rs.family, rs.rank
    key = str(rs.rtype)
    if key in EXCEPTIONAL_GAMMA:
        return {rs.from_bracket(b) for b in EXCEPTIONAL_GAMMA[key]}
    e = rs.eps
    if fam == "A":
        return set(rs.positive_roots)
    if fam == "B" and n >= 3:
        return ({e("e1-e2")} | {e(f"e1+e{j}") for j in range(2, n + 1)}
                | {e(f"e{i}+e{i + 1}") for i in range(2, n)})
    if fam == "C":
        return {e(f"2e{i}") for i in range(1, n + 1)}
    if fam == "D" and n >= 4:
        return ({e("e1-e2"), e(f"e1-e{n}"), e(f"e{n - 1}-e{n}")}
                | {e(f"e1+e{j}") for j in range(2, n + 1)}
                | {e(f"e{i}+e{i + 1}") for i in range(2, n)})
    return None


def expected_primitive(rs: RootSystem) -> set[Root] | None:
    fam, n = rs.family, rs.rank
    key = str(rs.rtype)
    if key in EXCEPTIONAL_PRIMITIVE:
        return {rs.from_bracket(b) for b in EXCEPTIONAL_PRIMITIVE[key]}
    if fam in "CFG":
        return expected_gamma(rs)
    if fam == "A":
        return set(rs.simple_roots)
    e = rs.eps
    if fam == "B" and n >= 3:
        return {e("e1-e2")} | {e(f"e{i}+e{i + 1}") for i in range(1, n)}
    if fam == "D" and n >= 4:
        return ({rs.simple_roots[0], rs.simple_roots[n - 2], rs.simple_roots[n - 1]}
                | {e(f"e{i}+e{i + 1}") for i in range(1, n - 2)})
    return None


def expected_counts(rs: RootSystem) -> tuple[int, int] | None:
    """``(#Gamma, #Gamma_H)`` from the count table, ``None`` outside its range."""
    fam, n = rs.family, rs.rank
    if fam == "A":
        return n * (n + 1) // 2, 2 * n - 1
    if fam == "B" and n >= 3:
        return 2 * n - 2, n
    if fam == "C":
        return n, 1
    if fam == "D" and n >= 4:
        return 2 * n, n + 1
    return {"E6": (10, 7), "E7": (10, 8), "E8": (10, 9), "F4": (4, 3), "G2": (2, 2)}.get(str(rs.rtype))


def table_formulas() -> dict[str, tuple[str, str]]:
    return {
        "A": ("n(n+1)/2", "2n-1"),
        "B": ("2n-2", "n"),
        "C": ("n", "1"),
        "D": ("2n", "n+1"),
        "E6": ("10", "7"),
        "E7": ("10", "8"),
        "E8": ("10", "9"),
        "F4": ("4", "3"),
        "G2": ("2", "2"),
    }


def tree_edges(rs: RootSystem, augmented: bool) -> set[tuple[frozenset[str], int]] | None:
    """Labelled edges of the reference trees, as ``({name, name}, display label)``."""
    fam, n = rs.family, rs.rank

    def edge(a, b, lab):
        return (frozenset({a, b}), lab)

    if fam == "D" and n >= 4 and not augmented:
        out = {edge(f"e1-e{n}", f"e1+e{n - 1}", n), edge(f"e1+e{n}", f"e1+e{n - 1}", n - 1),
               edge("e2+e3", "e1+e3", 1)}
        out |= {edge(f"e1+e{j + 1}", f"e1+e{j}", j) for j in range(2, n - 1)}
        return out
    if fam == "B" and n >= 3:
        out = {edge("e2+e3", "e1+e3", 1)}
        out |= {edge(f"e1+e{j + 1}", f"e1+e{j}", j) for j in range(2, n)}
        if augmented:
            out.add(edge("e1", f"e1+e{n}", n))
        return out
    if str(rs.rtype) == "F4":
        chain = ["[1321]", "[2321]", "[2421]", "[2431]", "[2432]"]
        start = 0 if augmented else 2
        return {edge(chain[k], chain[k + 1], k + 1) for k in range(start, 4)}
    return None
