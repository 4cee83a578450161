"""Finite groups as dense multiplication tables with 0-based element indices.

Every group is a full order x order Cayley table.  All algorithms operate on
integer indices; labels are advisory display strings only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_ASSOC_CAP = 512
DEFAULT_ORDER_CAP = 20000
DEFAULT_SYMMETRIC_CAP = 8


class GroupError(ValueError):
    """Raised for invalid group constructions or out-of-range elements."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """An order-n group: identity, multiplication and inverse tables.

    ``mul`` is a Latin square over 0..order-1; ``assoc_verified`` records
    whether associativity was checked on all triples (skipped above the
    construction cap, where constructor correctness is relied on).
    """

    order: int
    identity: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None
    generators: Optional[tuple[int, ...]] = None
    name: str = "group"
    assoc_verified: bool = True

    def check_index(self, x: int) -> int:
        if not (0 <= x < self.order):
            raise GroupError(f"element index {x} out of range for {self.name} (order {self.order})")
        return x

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        m = self.mul
        return m[m[g][x]][self.inv[g]]

    def commutes(self, x: int, y: int) -> bool:
        m = self.mul
        return m[x][y] == m[y][x]

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def element_order(self, x: int) -> int:
        self.check_index(x)
        m = self.mul
        acc, k = x, 1
        while acc != self.identity:
            acc = m[acc][x]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul
        n = self.order
        for x in range(n):
            row = m[x]
            for y in range(x + 1, n):
                if row[y] != m[y][x]:
                    return False
        return True

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(x) for x in range(self.order))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyPartition:
    """Partition of a group into conjugacy classes, ids ordered by least member."""

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]


@dataclass(frozen=True)
class SemidirectParams:
    """Parameters for Z_p x| Z_m with action r |-> r^k (p the normal factor)."""

    p: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise GroupError(f"p={self.p} is not prime")
        if self.m < 1:
            raise GroupError(f"m={self.m} must be positive")
        if not (1 <= self.k < self.p):
            raise GroupError(f"k={self.k} must satisfy 1 <= k < p={self.p}")
        if pow(self.k, self.m, self.p) != 1:
            raise GroupError(
                f"k^m = {self.k}^{self.m} is not 1 mod {self.p}; the action is ill-defined"
            )


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple[tuple[int, ...], ...]
    solvable: bool


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_latin(mul: np.ndarray) -> None:
    n = mul.shape[0]
    if mul.shape != (n, n):
        raise GroupError("multiplication table is not square")
    if mul.min() < 0 or mul.max() >= n:
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise GroupError(f"entry out of range at row {bad[0]}, column {bad[1]}")
    expect = np.arange(n)
    rows_ok = (np.sort(mul, axis=1) == expect).all(axis=1)
    if not rows_ok.all():
        r = int(np.argmin(rows_ok))
        counts = np.bincount(mul[r], minlength=n)
        c = int(np.argmax(counts > 1))
        raise GroupError(f"not a Latin square: row {r} repeats entry {c}")
    cols_ok = (np.sort(mul.T, axis=1) == expect).all(axis=1)
    if not cols_ok.all():
        c = int(np.argmin(cols_ok))
        counts = np.bincount(mul[:, c], minlength=n)
        r = int(np.argmax(counts > 1))
        raise GroupError(f"not a Latin square: column {c} repeats entry {r}")


def _find_identity(mul: np.ndarray) -> int:
    n = mul.shape[0]
    expect = np.arange(n)
    for e in range(n):
        if (mul[e] == expect).all() and (mul[:, e] == expect).all():
            return e
    raise GroupError("table has no two-sided identity")


def _check_assoc(mul: np.ndarray) -> None:
    # (x*y)*z == x*(y*z), vectorized row by row to bound memory.
    n = mul.shape[0]
    for x in range(n):
        lhs = mul[mul[x], :]        # lhs[y, z] = (x*y)*z
        rhs = mul[x][mul]           # rhs[y, z] = x*(y*z)
        if not np.array_equal(lhs, rhs):
            y, z = map(int, np.argwhere(lhs != rhs)[0])
            raise GroupError(f"associativity fails at triple ({x}, {y}, {z})")


def make_group(
    mul: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    generators: Optional[Sequence[int]] = None,
    name: str = "group",
    assoc_cap: int = DEFAULT_ASSOC_CAP,
) -> FiniteGroup:
    """Validate a raw table and build a FiniteGroup.

    Latin-square, identity and inverse checks always run; the O(n^3)
    associativity check runs only for order <= assoc_cap.
    """
    arr = np.asarray(mul, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise GroupError("multiplication table must be a nonempty square matrix")
    n = arr.shape[0]
    _check_latin(arr)
    identity = _find_identity(arr)
    inv = [0] * n
    for x in range(n):
        y = int(np.argwhere(arr[x] == identity)[0][0])
        if arr[y][x] != identity:
            raise GroupError(f"element {x} has no two-sided inverse")
        inv[x] = y
    assoc_verified = n <= assoc_cap
    if assoc_verified:
        _check_assoc(arr)
    if labels is not None and len(labels) != n:
        raise GroupError("label count does not match group order")
    return FiniteGroup(
        order=n,
        identity=identity,
        mul=tuple(tuple(int(v) for v in row) for row in arr),
        inv=tuple(inv),
        labels=tuple(labels) if labels is not None else None,
        generators=tuple(generators) if generators is not None else None,
        name=name,
        assoc_verified=assoc_verified,
    )


def make_cyclic(n: int) -> FiniteGroup:
    """Z_n with labels as powers of a generator g."""
    if n < 1:
        raise GroupError(f"cyclic group order must be >= 1, got {n}")
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    gens = (1,) if n > 1 else None
    return make_group(mul, labels, gens, name=f"Z{n}")


def make_dihedral(n: int) -> FiniteGroup:
    """D_2n of order 2n: elements s^eps r^i, with s r s = r^-1.

    Index layout: eps*n + i for eps in {0,1}, 0 <= i < n.
    """
    if n < 1:
        raise GroupError(f"dihedral parameter must be >= 1, got {n}")
    order = 2 * n

    def prod(a: int, b: int) -> int:
        e1, i1 = divmod(a, n)
        e2, i2 = divmod(b, n)
        i = ((i1 if e2 == 0 else -i1) + i2) % n
        return ((e1 + e2) % 2) * n + i

    mul = [[prod(a, b) for b in range(order)] for a in range(order)]

    def rot_label(i: int) -> str:
        return "e" if i == 0 else ("r" if i == 1 else f"r^{i}")

    labels = [rot_label(i) for i in range(n)]
    labels += ["s" if i == 0 else ("sr" if i == 1 else f"sr^{i}") for i in range(n)]
    gens = (1, n) if n > 1 else (n,)
    return make_group(mul, labels, gens, name=f"D{order}")


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "e"


def make_symmetric(n: int, cap: int = DEFAULT_SYMMETRIC_CAP) -> FiniteGroup:
    """S_n with elements in lexicographic one-line order, labels in cycle notation."""
    if n < 1:
        raise GroupError(f"symmetric group parameter must be >= 1, got {n}")
    if n > cap:
        raise GroupError(f"symmetric group parameter {n} exceeds cap {cap}")
    order = math.factorial(n)
    if order > DEFAULT_ORDER_CAP:
        raise GroupError(f"S_{n} has order {order}, above the global order cap {DEFAULT_ORDER_CAP}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [
        [index[tuple(p[q[k]] for k in range(n))] for q in perms]
        for p in perms
    ]
    labels = [_cycle_notation(p) for p in perms]
    gens: Optional[tuple[int, ...]] = None
    if n >= 2:
        transposition = tuple([1, 0] + list(range(2, n)))
        ncycle = tuple(list(range(1, n)) + [0])
        gens = (index[transposition],) if n == 2 else (index[transposition], index[ncycle])
    return make_group(mul, labels, gens, name=f"S{n}")


def make_semidirect_cyclic(params: SemidirectParams) -> FiniteGroup:
    """Group of order p*m with elements r^a s^b and s r s^-1 = r^k.

    Index layout: a*m + b for 0 <= a < p, 0 <= b < m.
    """
    p, m, k = params.p, params.m, params.k
    kpow = [pow(k, b, p) for b in range(m)]

    def prod(x: int, y: int) -> int:
        a1, b1 = divmod(x, m)
        a2, b2 = divmod(y, m)
        return ((a1 + a2 * kpow[b1]) % p) * m + (b1 + b2) % m

    order = p * m
    mul = [[prod(x, y) for y in range(order)] for x in range(order)]

    def lab(a: int, b: int) -> str:
        if a == 0 and b == 0:
            return "e"
        ra = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
        sb = "" if b == 0 else ("s" if b == 1 else f"s^{b}")
        return ra + sb

    labels = [lab(a, b) for a in range(p) for b in range(m)]
    gens = (m, 1)  # r = (a=1,b=0), s = (a=0,b=1)
    return make_group(mul, labels, gens, name=f"SD({p},{m},{k})")


def direct_product(g: FiniteGroup, h: FiniteGroup, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Componentwise product; element (x,y) is indexed as x*|H| + y."""
    order = g.order * h.order
    if order > order_cap:
        raise GroupError(
            f"product order {order} exceeds the order cap {order_cap}"
        )
    oh = h.order
    gm, hm = g.mul, h.mul
    pairs = [(x, y) for x in range(g.order) for y in range(h.order)]
    mul = [
        [gm[x1][x2] * oh + hm[y1][y2] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    labels = [f"({g.label(x)},{h.label(y)})" for (x, y) in pairs]
    gens: Optional[tuple[int, ...]] = None
    if g.generators is not None and h.generators is not None:
        gens = tuple(x * oh for x in g.generators) + tuple(h.generators)
    return make_group(mul, labels, gens, name=f"{g.name}x{h.name}")


def split_product_index(idx: int, h_order: int) -> tuple[int, int]:
    """Recover (x, y) from the fixed product index layout x*|H| + y."""
    return divmod(idx, h_order)


@lru_cache(maxsize=128)
def conjugacy_classes(g: FiniteGroup) -> ConjugacyPartition:
    """Exact conjugacy partition; class ids ordered by least member.

    Cached per group object (groups compare by identity and are immutable).
    """
    n = g.order
    class_of = [-1] * n
    classes: list[tuple[int, ...]] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = {g.conj(q, x) for q in range(n)}
        cid = len(classes)
        members = tuple(sorted(orbit))
        classes.append(members)
        for y in members:
            class_of[y] = cid
    return ConjugacyPartition(
        class_of=tuple(class_of),
        classes=tuple(classes),
        representatives=tuple(c[0] for c in classes),
    )


def conjugating_witness(g: FiniteGroup, x: int, y: int) -> Optional[int]:
    """Least q with q x q^-1 = y, or None."""
    g.check_index(x)
    g.check_index(y)
    for q in range(g.order):
        if g.conj(q, x) == y:
            return q
    return None


def centralizer(g: FiniteGroup, x: int) -> tuple[int, ...]:
    """All y commuting with x, sorted."""
    g.check_index(x)
    m = g.mul
    row = m[x]
    return tuple(y for y in range(g.order) if row[y] == m[y][x])


def generated_subgroup(g: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Closure of gens under multiplication (inverses follow by finiteness)."""
    gen_list = sorted(set(gens))
    if not gen_list:
        raise GroupError("generator set must be nonempty")
    for x in gen_list:
        g.check_index(x)
    m = g.mul
    members = {g.identity}
    members.update(gen_list)
    frontier = list(members)
    while frontier:
        new: list[int] = []
        for a in frontier:
            row = m[a]
            for b in gen_list:
                p = row[b]
                if p not in members:
                    members.add(p)
                    new.append(p)
        frontier = new
    return tuple(sorted(members))


def derived_series(g: FiniteGroup) -> DerivedSeries:
    """G >= G' >= G'' >= ... by commutator closure until stabilization."""
    n = g.order
    m = g.mul
    inv = g.inv
    current = tuple(range(n))
    terms = [current]
    while len(current) > 1:
        comms = set()
        for a in current:
            rowa = m[a]
            for b in current:
                comms.add(m[rowa[b]][inv[m[b][a]]])  # [a,b] = (ab)(ba)^-1
        nxt = generated_subgroup(g, comms)
        if nxt == current:
            break
        terms.append(nxt)
        current = nxt
    return DerivedSeries(terms=tuple(terms), solvable=terms[-1] == (g.identity,))
