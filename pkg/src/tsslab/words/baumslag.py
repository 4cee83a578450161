"""Exact arithmetic in the Baumslag-Solitar groups BS(1, n) = <a, b | bab^-1 = a^n>.

Elements live in Z[1/n] x| Z as pairs (r, t) with a = (1, 0), b = (0, 1) and
(r1, t1)(r2, t2) = (r1 + n^t1 * r2, t1 + t2).  The rational part is an exact
Fraction; membership in Z[1/n] is preserved by all operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class BsElement:
    r: Fraction
    t: int

    def __init__(self, r: RationalLike, t: int):
        object.__setattr__(self, "r", Fraction(r))
        object.__setattr__(self, "t", int(t))

    def is_identity(self) -> bool:
        return self.r == 0 and self.t == 0


BS_IDENTITY = BsElement(0, 0)
BS_A = BsElement(1, 0)
BS_B = BsElement(0, 1)


def _check_n(n: int) -> int:
    if n == 0:
        raise ValueError("BS(1, n) requires a nonzero n")
    return n


def _npow(n: int, t: int) -> Fraction:
    return Fraction(n) ** t


def bs_multiply(u: BsElement, v: BsElement, n: int) -> BsElement:
    _check_n(n)
    return BsElement(u.r + _npow(n, u.t) * v.r, u.t + v.t)


def bs_inverse(u: BsElement, n: int) -> BsElement:
    _check_n(n)
    return BsElement(-_npow(n, -u.t) * u.r, -u.t)


def bs_power(u: BsElement, k: int, n: int) -> BsElement:
    if k < 0:
        return bs_power(bs_inverse(u, n), -k, n)
    acc = BS_IDENTITY
    for _ in range(k):
        acc = bs_multiply(acc, u, n)
    return acc


def bs_conjugate(h: BsElement, x: BsElement, n: int) -> BsElement:
    return bs_multiply(bs_multiply(h, x, n), bs_inverse(h, n), n)


def bs_ab(i: RationalLike, j: int) -> BsElement:
    """The element a^i b^j."""
    return BsElement(i, j)


def bs_commutes(u: BsElement, v: BsElement, n: int) -> bool:
    return bs_multiply(u, v, n) == bs_multiply(v, u, n)


@dataclass(frozen=True)
class SwapSearchResult:
    witness: Optional[BsElement]
    bound: int
    depth: int

    @property
    def exhausted(self) -> bool:
        return self.witness is None

    def describe(self) -> str:
        if self.witness is None:
            return f"exhausted({self.bound})"
        return f"witness a^{self.witness.r} b^{self.witness.t}"


def _spiral(bound: int) -> list[int]:
    # 0, 1, -1, 2, -2, ...: deterministic first-witness order.
    out = [0]
    for v in range(1, bound + 1):
        out.extend((v, -v))
    return out


def bs_swap_search(
    u: BsElement, v: BsElement, n: int, bound: int, depth: int = 2
) -> SwapSearchResult:
    """Search conjugators h = (num/n^d, f) with |f| <= bound, |num| <= bound,
    d <= depth, for h u h^-1 = v and h v h^-1 = u simultaneously.

    Exact evaluation; returns the first witness in (f, num, d) spiral order,
    or an exhausted marker.  No witness within the grid is bounded evidence,
    not a disproof.
    """
    _check_n(n)
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if not bs_commutes(u, v, n):
        raise ValueError("swap search requires commuting inputs")
    for f in _spiral(bound):
        for num in _spiral(bound):
            for d in range(depth + 1):
                s = Fraction(num) / _npow(n, d)
                h = BsElement(s, f)
                if bs_conjugate(h, u, n) == v and bs_conjugate(h, v, n) == u:
                    return SwapSearchResult(h, bound, depth)
    return SwapSearchResult(None, bound, depth)


@dataclass(frozen=True)
class BsPairEvidence:
    u: BsElement
    v: BsElement
    verdict: str
    detail: str


@dataclass(frozen=True)
class BsClassificationReport:
    n: int
    radius: int
    bound: int
    branch: str  # "abelian", "inverse_pairs", or "rigid"
    instances: tuple[BsPairEvidence, ...]
    all_ok: bool


def bs_classification_check(
    n: int, radius: int, bound: int = 6, third_radius: int = 3
) -> BsClassificationReport:
    """Reproduce the BS(1, n) classification at desk scale.

    n = -1: every pair {a^x b^2m, a^-x b^2m} within the radius is certified a
    TSS (exact commutation, exact swap witness), and no third element within
    third_radius survives: the inverse-pair argument applies when the pair is
    {g, g^-1}, and the bounded swap search exhausts otherwise.

    n = 1: abelian branch, conjugation is trivial.

    Other n: every distinct commuting pair within the radius is shown
    non-swappable: the exact unique-solution conditions rule it out and the
    bounded swap search confirms exhaustion.
    """
    _check_n(n)
    if radius < 1:
        raise ValueError(f"radius must be >= 1, got {radius}")
    instances: list[BsPairEvidence] = []

    if n == 1:
        # bab^-1 = a: the group is Z^2; distinct elements are never conjugate.
        for i in range(-radius, radius + 1):
            for j in range(-radius, radius + 1):
                u = bs_ab(i, j)
                v = bs_ab(-i, j)
                if u == v:
                    continue
                swapped = bs_conjugate(BS_A, u, 1) == v
                instances.append(
                    BsPairEvidence(
                        u, v,
                        "pass" if not swapped else "fail",
                        "abelian: conjugation is trivial, only singleton TSS",
                    )
                )
        return BsClassificationReport(
            n, radius, bound, "abelian", tuple(instances), all(i.verdict == "pass" for i in instances)
        )

    if n == -1:
        ok = True
        for x in range(1, radius + 1):
            for m in range(-radius, radius + 1):
                u = bs_ab(x, 2 * m)
                v = bs_ab(-x, 2 * m)
                if not bs_commutes(u, v, n):
                    instances.append(BsPairEvidence(u, v, "fail", "expected commuting pair"))
                    ok = False
                    continue
                res = bs_swap_search(u, v, n, bound)
                if res.witness is None:
                    instances.append(BsPairEvidence(u, v, "fail", "no swap witness found"))
                    ok = False
                    continue
                third = _no_third_element(u, v, n, bound, third_radius)
                verdict = "pass" if third is None else "fail"
                ok = ok and third is None
                instances.append(
                    BsPairEvidence(
                        u, v, verdict,
                        f"certified TSS via {res.describe()}; "
                        + (third or "no size-3 superset in reach"),
                    )
                )
        return BsClassificationReport(n, radius, bound, "inverse_pairs", tuple(instances), ok)

    # |n| >= 2: rigid branch.
    ok = True
    elems = [bs_ab(i, j) for i in range(-radius, radius + 1) for j in range(-radius, radius + 1)]
    for idx, u in enumerate(elems):
        for v in elems[idx + 1:]:
            if not bs_commutes(u, v, n):
                continue
            res = bs_swap_search(u, v, n, bound)
            if res.witness is not None:
                instances.append(
                    BsPairEvidence(u, v, "fail", f"unexpected swap witness {res.describe()}")
                )
                ok = False
                continue
            instances.append(
                BsPairEvidence(u, v, f"exhausted({bound})", _rigid_condition(u, v, n, bound))
            )
    return BsClassificationReport(n, radius, bound, "rigid", tuple(instances), ok)


def _no_third_element(
    u: BsElement, v: BsElement, n: int, bound: int, third_radius: int
) -> Optional[str]:
    """None if every third element within reach is excluded, else a failure note."""
    if bs_multiply(u, v, n).is_identity():
        # v = u^-1: a TSS containing both is exactly {u, u^-1}.
        return None
    t = u.t
    for z in range(-third_radius, third_radius + 1):
        w = bs_ab(z, t)
        if w in (u, v):
            continue
        if not (bs_commutes(u, w, n) and bs_commutes(v, w, n)):
            continue
        if bs_swap_search(u, w, n, bound).witness is not None:
            return f"third element a^{z} b^{t} is swappable with u"
    return None


def _rigid_condition(u: BsElement, v: BsElement, n: int, bound: int) -> str:
    """The exact condition ruling out a swap for |n| >= 2, per case."""
    if u.t != v.t:
        return "conjugation preserves the b-exponent; u, v differ there"
    y = u.t
    if y != 0:
        # commuting with equal nonzero tails forces equality:
        # r_u (1 - n^y) = r_v (1 - n^y) and 1 - n^y != 0.
        return "unique-solution condition: equal nonzero b-exponent forces equal elements"
    # y = 0: swapping a^i and a^x needs x = -i and n^f = -1, impossible for |n| >= 2.
    if u.r != -v.r:
        return "exponent condition x = -i fails"
    return (
        f"needs n^f = -1, impossible for n = {n}: |n^f| != 1 for f != 0 "
        f"(checked f in [-{bound}, {bound}] and exactly)"
    )


def format_bs(u: BsElement, n: int) -> str:
    """Canonical text form a^p/n^q b^t with n not dividing p when q > 0."""
    _check_n(n)
    q = 0
    r = u.r
    while (r * _npow(n, q)).denominator != 1:
        q += 1
    p = int(r * _npow(n, q))
    while q > 0 and p % n == 0:  # defensive; q chosen minimal above
        p //= n
        q -= 1
    return f"a^{p}/{n}^{q} b^{u.t}"


def parse_bs(text: str, n: int) -> BsElement:
    """Parse the canonical form, rejecting non-normalized input with a hint."""
    _check_n(n)
    parts = text.split()
    if len(parts) != 2 or not parts[0].startswith("a^") or not parts[1].startswith("b^"):
        raise ValueError(
            f"expected 'a^P/N^Q b^T', got {text!r}"
        )
    rational = parts[0][2:]
    if "/" not in rational:
        raise ValueError(f"expected 'a^P/{n}^Q', got {parts[0]!r}")
    num_text, den_text = rational.split("/", 1)
    if "^" not in den_text:
        raise ValueError(f"denominator must be a power {n}^Q, got {den_text!r}")
    base_text, q_text = den_text.rsplit("^", 1)
    try:
        p = int(num_text)
        base = int(base_text)
        q = int(q_text)
        t = int(parts[1][2:])
    except ValueError:
        raise ValueError(f"non-integer field in {text!r}") from None
    if base != n:
        raise ValueError(f"denominator base {base} does not match n = {n}")
    if q < 0:
        raise ValueError(f"denominator exponent must be >= 0, got {q}")
    if q > 0 and p % n == 0:
        elem = BsElement(Fraction(p) / _npow(n, q), t)
        raise ValueError(
            f"{text!r} is not normalized ({n} divides {p}); "
            f"did you mean {format_bs(elem, n)!r}?"
        )
    return BsElement(Fraction(p) / _npow(n, q), t)
