"""Independent brute-force oracles for cross-checking the engine.

These deliberately avoid the library's own algorithms: conjugacy is decided
by naive witness search over all pairs, centralizers by direct scans.
"""

from tsslab.groups import FiniteGroup


def conj(g: FiniteGroup, q: int, x: int) -> int:
    return g.mul[g.mul[q][x]][g.inv[q]]


def brute_conjugate_witness(g: FiniteGroup, x: int, y: int):
    for q in range(g.order):
        if conj(g, q, x) == y:
            return q
    return None


def brute_conjugacy_partition(g: FiniteGroup) -> list[tuple[int, ...]]:
    """Pairwise witness search, merged into classes sorted by least member."""
    classes: list[set[int]] = []
    for x in range(g.order):
        placed = False
        for cls in classes:
            rep = min(cls)
            if brute_conjugate_witness(g, rep, x) is not None:
                cls.add(x)
                placed = True
                break
        if not placed:
            classes.append({x})
    return sorted(tuple(sorted(c)) for c in classes)


def brute_centralizer(g: FiniteGroup, x: int) -> tuple[int, ...]:
    return tuple(
        y for y in range(g.order) if g.mul[x][y] == g.mul[y][x]
    )


def is_subgroup(g: FiniteGroup, elems) -> bool:
    s = set(elems)
    if g.identity not in s:
        return False
    return all(g.mul[a][b] in s for a in s for b in s) and all(g.inv[a] in s for a in s)
