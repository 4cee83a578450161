"""Finite presentations, homomorphism enumeration, and the image checks that
machine-verify the TSS homomorphism obstructions.

Words over a presentation are sequences of signed 1-based generator numbers:
+i is generator i-1, -i its inverse.  Table-to-table homomorphisms are full
element maps verified on all pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence, Union

from .groups import FiniteGroup, GroupError, generated_subgroup, make_group
from .tss import TssCertificate, TssError, certify_tss, max_tss_size


class HomError(ValueError):
    """Raised for invalid presentations, maps, or premise failures."""


class LemmaViolation(RuntimeError):
    """The fundamental lemma failed on verified premises (engine bug)."""


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, budget: int, found: int):
        super().__init__(
            f"enumeration budget exceeded: {nodes} nodes > {budget}; "
            f"{found} homomorphisms found before the cutoff"
        )
        self.nodes = nodes
        self.budget = budget
        self.found = found


DEFAULT_HOM_BUDGET = 10**8


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[tuple[int, ...], ...]
    name: str = "presentation"

    def __post_init__(self) -> None:
        if self.generator_count < 1:
            raise HomError("presentation needs at least one generator")
        for rel in self.relators:
            if not rel:
                raise HomError("relator words must be nonempty")
            for letter in rel:
                if letter == 0 or abs(letter) > self.generator_count:
                    raise HomError(f"relator letter {letter} references no generator")


@dataclass(frozen=True)
class GeneratorImageMap:
    presentation: Presentation
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.presentation.generator_count:
            raise HomError("one image per generator required")
        for x in self.images:
            self.target.check_index(x)


@dataclass(frozen=True)
class TableHom:
    """Homomorphism between table groups as a full element map."""

    source: FiniteGroup
    target: FiniteGroup
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source.order:
            raise HomError("mapping must cover every source element")
        for x in self.mapping:
            self.target.check_index(x)


def braid_presentation(n: int) -> Presentation:
    """B_n on Artin generators: far commutation plus the braid relation."""
    if n < 2:
        raise HomError(f"braid group needs at least 2 strands, got {n}")
    k = n - 1
    relators: list[tuple[int, ...]] = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if j - i >= 2:
                relators.append((i, j, -i, -j))
            else:
                relators.append((i, j, i, -j, -i, -j))
    return Presentation(k, tuple(relators), name=f"braid:{n}")


def odd_artin_generators(n: int) -> tuple[int, ...]:
    """0-based indices of sigma_1, sigma_3, ... in B_n (a size-floor(n/2) TSS)."""
    if n < 2:
        raise HomError(f"braid group needs at least 2 strands, got {n}")
    return tuple(range(0, n - 1, 2))


def evaluate_word(target: FiniteGroup, images: Sequence[int], word: Sequence[int]) -> int:
    acc = target.identity
    mul = target.mul
    inv = target.inv
    for letter in word:
        x = images[abs(letter) - 1]
        if letter < 0:
            x = inv[x]
        acc = mul[acc][x]
    return acc


def is_homomorphism(m: GeneratorImageMap) -> bool:
    return all(
        evaluate_word(m.target, m.images, rel) == m.target.identity
        for rel in m.presentation.relators
    )


def enumerate_homs(
    pres: Presentation,
    target: FiniteGroup,
    budget: int = DEFAULT_HOM_BUDGET,
    first_image_up_to_conjugacy: bool = False,
) -> Iterator[GeneratorImageMap]:
    """All homomorphisms by depth-first image assignment.

    Each relator is tested as soon as all its generators are assigned.  The
    optional symmetry reduction restricts the first generator image to one
    representative per conjugacy class (off by default; the stream then
    contains one member of each conjugation orbit of homomorphisms).
    """
    k = pres.generator_count
    by_level: list[list[tuple[int, ...]]] = [[] for _ in range(k + 1)]
    for rel in pres.relators:
        by_level[max(abs(letter) for letter in rel)].append(rel)

    first_choices: Sequence[int] = range(target.order)
    if first_image_up_to_conjugacy:
        from .groups import conjugacy_classes

        first_choices = conjugacy_classes(target).representatives

    images: list[int] = []
    state = {"nodes": 0, "found": 0}

    def rec(level: int) -> Iterator[GeneratorImageMap]:
        if level == k:
            state["found"] += 1
            yield GeneratorImageMap(pres, target, tuple(images))
            return
        choices = first_choices if level == 0 else range(target.order)
        for img in choices:
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded(state["nodes"], budget, state["found"])
            images.append(img)
            if all(
                evaluate_word(target, images, rel) == target.identity
                for rel in by_level[level + 1]
            ):
                yield from rec(level + 1)
            images.pop()

    yield from rec(0)


def image_subgroup(m: GeneratorImageMap) -> tuple[int, ...]:
    return generated_subgroup(m.target, set(m.images))


def _is_cyclic_subgroup(g: FiniteGroup, elems: Sequence[int]) -> bool:
    size = len(elems)
    return any(g.element_order(x) == size for x in elems)


def image_is_cyclic(m: GeneratorImageMap) -> bool:
    """Whether the image subgroup is generated by a single element."""
    if not is_homomorphism(m):
        raise HomError("generator images do not satisfy the relators")
    return _is_cyclic_subgroup(m.target, image_subgroup(m))


def is_table_homomorphism(h: TableHom) -> bool:
    sm, tm = h.source.mul, h.target.mul
    f = h.mapping
    for a in range(h.source.order):
        fa = f[a]
        row = sm[a]
        trow = tm[fa]
        for b in range(h.source.order):
            if f[row[b]] != trow[f[b]]:
                return False
    return True


def identity_hom(g: FiniteGroup) -> TableHom:
    return TableHom(g, g, tuple(range(g.order)))


def quotient_hom(g: FiniteGroup, normal: Sequence[int]) -> TableHom:
    """Quotient map G -> G/N for a normal subgroup given by its elements.

    Cosets are indexed in order of their least member, so the identity coset
    is element 0 of the quotient.
    """
    nset = tuple(sorted(set(normal)))
    if generated_subgroup(g, nset) != nset:
        raise HomError("normal-subgroup elements do not form a subgroup")
    for q in range(g.order):
        for x in nset:
            if g.conj(q, x) not in nset:
                raise HomError(f"subgroup is not normal: {q} conjugates {x} outside it")
    coset_key: dict[int, int] = {}
    reps: list[int] = []
    coset_of = [-1] * g.order
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        members = sorted(g.mul[x][u] for u in nset)
        cid = len(reps)
        reps.append(members[0])
        for y in members:
            coset_of[y] = cid
    q_order = len(reps)
    mul = [[coset_of[g.mul[reps[i]][reps[j]]] for j in range(q_order)] for i in range(q_order)]
    labels = [f"[{g.label(r)}]" for r in reps]
    quotient = make_group(mul, labels, name=f"{g.name}/N{len(nset)}")
    return TableHom(g, quotient, tuple(coset_of))


def generating_set(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy deterministic generating set (ascending element order)."""
    if g.order == 1:
        return (g.identity,)
    gens: list[int] = []
    closure: tuple[int, ...] = (g.identity,)
    for x in range(g.order):
        if x in closure:
            continue
        gens.append(x)
        closure = generated_subgroup(g, gens)
        if len(closure) == g.order:
            return tuple(gens)
    raise GroupError("closure never reached the full group")  # pragma: no cover


def enumerate_table_homs(source: FiniteGroup, target: FiniteGroup) -> Iterator[TableHom]:
    """All homomorphisms between table groups, via generator images.

    Every source element is factored as a word in the generating set once;
    a candidate assignment extends to a full map by that factorization and is
    kept iff it preserves all products.
    """
    gens = generating_set(source)
    parent: dict[int, Optional[tuple[int, int]]] = {source.identity: None}
    bfs_order = [source.identity]
    queue = [source.identity]
    while queue:
        x = queue.pop(0)
        for gi, gen in enumerate(gens):
            y = source.mul[x][gen]
            if y not in parent:
                parent[y] = (x, gi)
                bfs_order.append(y)
                queue.append(y)
    if len(bfs_order) != source.order:  # pragma: no cover
        raise GroupError("generating set does not reach the full group")

    def build(assignment: tuple[int, ...]) -> Optional[TableHom]:
        f = [-1] * source.order
        f[source.identity] = target.identity
        for y in bfs_order[1:]:
            x, gi = parent[y]  # type: ignore[misc]
            f[y] = target.mul[f[x]][assignment[gi]]
        hom = TableHom(source, target, tuple(f))
        return hom if is_table_homomorphism(hom) else None

    def rec(level: int, chosen: list[int]) -> Iterator[TableHom]:
        if level == len(gens):
            hom = build(tuple(chosen))
            if hom is not None:
                yield hom
            return
        for img in range(target.order):
            chosen.append(img)
            yield from rec(level + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of a fundamental-lemma check: image collapsed to a point or
    carried over at full size (in which case it is a certified TSS)."""

    branch: str  # "collapsed" or "same_size"
    image: tuple[int, ...]
    certificate: Optional[TssCertificate]


def fundamental_lemma_check(
    hom: Union[TableHom, GeneratorImageMap], s: Sequence[int]
) -> LemmaVerdict:
    """Check that the image of a certified TSS has size |s| or 1, and in the
    former case is itself a certified TSS of the target.

    For table maps, s holds source element indices and is certified here.
    For braid presentations, s holds generator indices and must be a subset
    of the odd Artin generators (the stock TSS of B_n).
    """
    if isinstance(hom, TableHom):
        if not is_table_homomorphism(hom):
            raise HomError("table map does not preserve products")
        cert = certify_tss(hom.source, s)
        if cert is None:
            raise TssError(f"{tuple(s)} is not a TSS in {hom.source.name}")
        image = tuple(sorted({hom.mapping[x] for x in cert.elements}))
        size = len(cert.elements)
        target = hom.target
    elif isinstance(hom, GeneratorImageMap):
        if not hom.presentation.name.startswith("braid:"):
            raise HomError("presentation TSS fixtures are supported for braid groups only")
        if not is_homomorphism(hom):
            raise HomError("generator images do not satisfy the relators")
        strands = int(hom.presentation.name.split(":")[1])
        allowed = set(odd_artin_generators(strands))
        chosen = sorted(set(s))
        if not chosen or not set(chosen) <= allowed:
            raise TssError(
                f"{tuple(s)} is not a subset of the odd Artin generators {sorted(allowed)}"
            )
        image = tuple(sorted({hom.images[i] for i in chosen}))
        size = len(chosen)
        target = hom.target
    else:
        raise HomError(f"unsupported map type {type(hom)!r}")

    if len(image) == 1:
        return LemmaVerdict("collapsed", image, None)
    if len(image) != size:
        raise LemmaViolation(
            f"image size {len(image)} is neither 1 nor {size}: {image}"
        )
    target_cert = certify_tss(target, image)
    if target_cert is None:
        raise LemmaViolation(f"full-size image {image} is not a TSS in {target.name}")
    return LemmaVerdict("same_size", image, target_cert)


@dataclass(frozen=True)
class BraidCorollaryReport:
    strands: int
    target_name: str
    threshold: int
    s_target: int
    applicable: bool
    hom_count: int
    image_order_histogram: dict[int, int]
    all_cyclic: bool
    noncyclic_images: tuple[tuple[int, ...], ...]
    elapsed_s: float


def braid_cyclic_corollary_check(
    n: int,
    target: FiniteGroup,
    budget: int = DEFAULT_HOM_BUDGET,
    on_noncyclic: Optional[Callable[[GeneratorImageMap], None]] = None,
) -> BraidCorollaryReport:
    """Exhaustively check that every homomorphism B_n -> target has cyclic
    image, under the hypothesis S(target) < floor(n/2).

    A violated hypothesis is reported as not applicable, never as a failure.
    """
    if n < 5:
        raise HomError(f"the cyclic-image corollary is stated for n >= 5, got {n}")
    start = time.perf_counter()
    threshold = n // 2
    s_target = max_tss_size(target).s_of_g
    if s_target >= threshold:
        return BraidCorollaryReport(
            strands=n,
            target_name=target.name,
            threshold=threshold,
            s_target=s_target,
            applicable=False,
            hom_count=0,
            image_order_histogram={},
            all_cyclic=True,
            noncyclic_images=(),
            elapsed_s=time.perf_counter() - start,
        )
    pres = braid_presentation(n)
    histogram: dict[int, int] = {}
    count = 0
    noncyclic: list[tuple[int, ...]] = []
    for hom in enumerate_homs(pres, target, budget=budget):
        count += 1
        sub = image_subgroup(hom)
        histogram[len(sub)] = histogram.get(len(sub), 0) + 1
        if not _is_cyclic_subgroup(target, sub):
            noncyclic.append(hom.images)
            if on_noncyclic is not None:
                on_noncyclic(hom)
    return BraidCorollaryReport(
        strands=n,
        target_name=target.name,
        threshold=threshold,
        s_target=s_target,
        applicable=True,
        hom_count=count,
        image_order_histogram=dict(sorted(histogram.items())),
        all_cyclic=not noncyclic,
        noncyclic_images=tuple(noncyclic),
        elapsed_s=time.perf_counter() - start,
    )
