"""Theorem verification suites and the summary-table runner.

Each suite reproduces one classification or corollary over a parameter grid
and reports per-instance verdicts: pass, fail, not-applicable, or
exhausted(bound) for bounded searches in infinite groups.  Failures carry a
minimal counterexample and a re-runnable command line.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import homs, tss
from .groups import (
    FiniteGroup,
    conjugacy_classes,
    derived_series,
    split_product_index,
)
from .schemas import FORMAT_VERSION, certificate_to_json
from .specs import parse_group_spec
from .words import baumslag as bs
from .words import freegroup as f2
from .words import freeproduct as fp


@dataclass(frozen=True)
class SuiteInstance:
    params: dict[str, Any]
    verdict: str  # pass | fail | not-applicable | exhausted(N)
    detail: str
    counterexample: Optional[dict[str, Any]] = None
    repro: Optional[str] = None
    elapsed_s: float = 0.0

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"


@dataclass(frozen=True)
class SuiteResult:
    theorem: str
    instances: tuple[SuiteInstance, ...]
    passed: bool
    elapsed_s: float
    artifacts: tuple[str, ...] = ()


def _instance(params: dict, verdict: str, detail: str, start: float,
              counterexample: Optional[dict] = None, repro: Optional[str] = None) -> SuiteInstance:
    return SuiteInstance(
        params=params,
        verdict=verdict,
        detail=detail,
        counterexample=counterexample,
        repro=repro,
        elapsed_s=time.perf_counter() - start,
    )


# --- abelian -----------------------------------------------------------------

def _run_abelian(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    n = params["n"]
    g = parse_group_spec(f"cyclic:{n}")
    report = tss.max_tss_size(g)
    if report.s_of_g == 1:
        return _instance(params, "pass", f"S({g.name}) = 1", start)
    bad = report.maximal_sets[0]
    return _instance(
        params, "fail", f"S({g.name}) = {report.s_of_g}", start,
        counterexample=certificate_to_json(bad),
        repro=f"tsslab tss max --group cyclic:{n}",
    )


# --- dihedral ----------------------------------------------------------------

def predicted_dihedral_pairs(n: int) -> list[tuple[int, int]]:
    """The full size-2 classification for D_2n as index sets.

    Rotations r^i are indices i, reflections s r^i are indices n+i.  The
    families are {r^i, r^-i} and, when 4 | n, {s r^i, s r^(i+n/2)}.
    """
    sets = [(i, n - i) for i in range(1, (n - 1) // 2 + 1)]
    if n % 4 == 0:
        sets += [(n + i, n + i + n // 2) for i in range(n // 2)]
    return sorted(tuple(sorted(p)) for p in sets)


def _run_dihedral(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    n = params["n"]
    g = parse_group_spec(f"dihedral:{n}")
    report = tss.max_tss_size(g)
    found = [c.elements for c in tss.enumerate_tss(g, 2)]
    expected = [tuple(p) for p in predicted_dihedral_pairs(n)]
    if report.s_of_g == 2 and found == expected:
        note = " (reflection family present)" if n % 4 == 0 else ""
        return _instance(params, "pass", f"S(D{2*n}) = 2, {len(found)} literal sets{note}", start)
    return _instance(
        params, "fail",
        f"S = {report.s_of_g}; found {found}, expected {expected}", start,
        counterexample={"found": [list(t) for t in found],
                        "expected": [list(t) for t in expected]},
        repro=f"tsslab tss list --group dihedral:{n} --size 2",
    )


# --- semidirect --------------------------------------------------------------

def _multiplicative_order(k: int, p: int) -> int:
    x, o = k % p, 1
    while x != 1:
        x = (x * k) % p
        o += 1
    return o


def _run_semidirect(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    p, m, k = params["p"], params["m"], params["k"]
    spec = f"semidirect:{p},{m},{k}"
    if pow(k, m, p) != 1:
        # ord_p(k) does not divide m: the action is ill-defined, no group of
        # order p*m exists with this presentation data.
        return _instance(
            params, "not-applicable",
            f"k^m = {k}^{m} is {pow(k, m, p)} mod {p}, not 1: "
            f"no semidirect product exists for these parameters",
            start,
        )
    g = parse_group_spec(spec)
    # The proof constructs the swap only when -1 is a power of k mod p
    # (even multiplicative order); outside that regime S = 2 is not asserted.
    order_k = _multiplicative_order(k, p)
    minus_one_reachable = any(pow(k, f, p) == p - 1 for f in range(order_k))
    if m % p != 0 or not minus_one_reachable:
        report = tss.max_tss_size(g)
        return _instance(
            params, "not-applicable",
            f"proof construction unavailable (p|m: {m % p == 0}, "
            f"-1 in <k>: {minus_one_reachable}); observed S = {report.s_of_g}",
            start,
        )
    report = tss.max_tss_size(g)
    if report.s_of_g == 2:
        return _instance(params, "pass", f"S({g.name}) = 2", start)
    return _instance(
        params, "fail", f"S({g.name}) = {report.s_of_g}", start,
        counterexample={"counts": {str(a): b for a, b in report.counts.items()}},
        repro=f"tsslab tss max --group {spec}",
    )


# --- direct product ----------------------------------------------------------

def _coordinate_structure_ok(elements: Sequence[int], h_order: int) -> bool:
    firsts = [split_product_index(x, h_order)[0] for x in elements]
    seconds = [split_product_index(x, h_order)[1] for x in elements]
    for coords in (firsts, seconds):
        if len(set(coords)) not in (1, len(coords)):
            return False
    return True


def _run_direct_product(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    left_spec, right_spec = params["left"], params["right"]
    g = parse_group_spec(left_spec)
    h = parse_group_spec(right_spec)
    product_spec = f"product:{left_spec},{right_spec}"
    prod = parse_group_spec(product_spec)
    s_g = tss.max_tss_size(g).s_of_g
    s_h = tss.max_tss_size(h).s_of_g
    report = tss.max_tss_size(prod)
    expected = max(s_g, s_h)
    if report.s_of_g != expected:
        return _instance(
            params, "fail",
            f"S({prod.name}) = {report.s_of_g}, expected max({s_g},{s_h}) = {expected}",
            start,
            counterexample={"s_product": report.s_of_g, "s_left": s_g, "s_right": s_h},
            repro=f"tsslab tss max --group {product_spec}",
        )
    min_attained = False
    for size in range(2, report.s_of_g + 1):
        for cert in tss.enumerate_tss(prod, size):
            if not _coordinate_structure_ok(cert.elements, h.order):
                return _instance(
                    params, "fail",
                    "coordinate-structure corollary violated", start,
                    counterexample=certificate_to_json(cert),
                    repro=f"tsslab tss list --group {product_spec} --size {size}",
                )
            firsts = {split_product_index(x, h.order)[0] for x in cert.elements}
            seconds = {split_product_index(x, h.order)[1] for x in cert.elements}
            if len(firsts) == size and len(seconds) == size:
                # distinct in both coordinates: the projection argument gives
                # size <= min; equality is reported, never asserted.
                if size > min(s_g, s_h):
                    return _instance(
                        params, "fail",
                        f"doubly-distinct TSS of size {size} > min({s_g},{s_h})",
                        start,
                        counterexample=certificate_to_json(cert),
                        repro=f"tsslab tss list --group {product_spec} --size {size}",
                    )
                if size == min(s_g, s_h):
                    min_attained = True
    detail = f"S({prod.name}) = {expected} = max(S)"
    detail += f"; doubly-distinct sets attain min({s_g},{s_h}): {'yes' if min_attained else 'no'}"
    return _instance(params, "pass", detail, start)


# --- free product ------------------------------------------------------------

def _run_free_product(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    left_spec, right_spec = params["left"], params["right"]
    max_syllables = params.get("max_syllables", 4)
    g = parse_group_spec(left_spec)
    h = parse_group_spec(right_spec)
    bound = max(tss.max_tss_size(g).s_of_g, tss.max_tss_size(h).s_of_g)
    certified = 0
    biggest = 1
    for clique in fp.fp_commuting_cliques(g, h, max_syllables):
        verdict = fp.fp_tss_analyze(clique)
        if not verdict.is_tss:
            continue
        certified += 1
        biggest = max(biggest, verdict.size)
        if verdict.size > bound:
            return _instance(
                params, "fail",
                f"TSS of size {verdict.size} > max factor bound {bound}", start,
                counterexample={"words": [fp.format_fp(w) for w in clique]},
                repro=f"tsslab word fp --factors '{left_spec},{right_spec}' analyze "
                      + " ".join(f"'{fp.format_fp(w)}'" for w in clique),
            )
        if verdict.classification != "factor_conjugate":
            return _instance(
                params, "fail",
                f"certified TSS does not reduce to a factor: {verdict.classification}",
                start,
                counterexample={"words": [fp.format_fp(w) for w in clique]},
                repro=f"tsslab word fp --factors '{left_spec},{right_spec}' analyze "
                      + " ".join(f"'{fp.format_fp(w)}'" for w in clique),
            )
    return _instance(
        params, "pass",
        f"ball {max_syllables}: {certified} multi-element TSS, "
        f"largest {biggest} <= max factor bound {bound}",
        start,
    )


# --- inverse pair lemma ------------------------------------------------------

def _run_inverse_pair(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    spec = params["group"]
    g = parse_group_spec(spec)
    report = tss.max_tss_size(g)
    checked = 0
    for size in range(2, report.s_of_g + 1):
        for cert in tss.enumerate_tss(g, size):
            elems = set(cert.elements)
            if any(g.inv[x] in elems and g.inv[x] != x for x in elems):
                checked += 1
                if len(elems) != 2:
                    return _instance(
                        params, "fail",
                        f"TSS with an inverse pair has size {len(elems)}", start,
                        counterexample=certificate_to_json(cert),
                        repro=f"tsslab tss list --group {spec} --size {size}",
                    )
    return _instance(params, "pass", f"{checked} inverse-pair TSS, all of size 2", start)


# --- odd order ---------------------------------------------------------------

def odd_order_corpus(max_order: int) -> list[str]:
    specs = [f"cyclic:{n}" for n in range(1, min(99, max_order) + 1, 2)]
    specs += [f"cyclic:{n}" for n in (125, 243, 343, 499) if n <= max_order]
    semis = [(7, 3, 2), (13, 3, 3), (19, 3, 7)]
    specs += [f"semidirect:{p},{m},{k}" for (p, m, k) in semis if p * m <= max_order]
    products = [
        ("cyclic:3", "cyclic:7"),
        ("cyclic:5", "cyclic:5"),
        ("cyclic:3", "semidirect:7,3,2"),
        ("cyclic:9", "cyclic:49"),
        ("semidirect:7,3,2", "semidirect:7,3,2"),
        ("semidirect:13,3,3", "cyclic:11"),
    ]
    orders = {"cyclic:3": 3, "cyclic:5": 5, "cyclic:7": 7, "cyclic:9": 9,
              "cyclic:11": 11, "cyclic:49": 49,
              "semidirect:7,3,2": 21, "semidirect:13,3,3": 39}
    specs += [
        f"product:{a},{b}" for a, b in products if orders[a] * orders[b] <= max_order
    ]
    return specs


def _run_odd_order(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    spec = params["group"]
    g = parse_group_spec(spec)
    if g.order % 2 == 0:  # pragma: no cover - corpus is odd by construction
        return _instance(params, "not-applicable", f"{g.name} has even order", start)
    report = tss.max_tss_size(g)
    if report.s_of_g == 1:
        return _instance(params, "pass", f"S({g.name}) = 1 (order {g.order})", start)
    return _instance(
        params, "fail", f"S({g.name}) = {report.s_of_g}", start,
        counterexample=certificate_to_json(report.maximal_sets[0]),
        repro=f"tsslab tss max --group {spec}",
    )


# --- solvable ----------------------------------------------------------------

def _run_solvable(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    spec = params["group"]
    g = parse_group_spec(spec)
    series = derived_series(g)
    if not series.solvable:
        return _instance(
            params, "not-applicable",
            f"{g.name} is not solvable (terminal term {len(series.terms[-1])})",
            start,
        )
    report = tss.max_tss_size(g)
    if report.s_of_g <= 4:
        note = ""
        if report.s_of_g >= 3:
            note = f"; size-{report.s_of_g} TSS exists in a solvable group"
        return _instance(
            params, "pass",
            f"S({g.name}) = {report.s_of_g} <= 4 "
            f"(derived length {len(series.terms) - 1}){note}",
            start,
        )
    return _instance(
        params, "fail", f"S({g.name}) = {report.s_of_g} > 4", start,
        counterexample=certificate_to_json(report.maximal_sets[0]),
        repro=f"tsslab tss max --group {spec}",
    )


# --- stabilizer SES ----------------------------------------------------------

def _run_stabilizer_ses(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    spec = params["group"]
    samples = params.get("samples", 20)
    seed = params.get("seed", 0)
    g = parse_group_spec(spec)
    report = tss.max_tss_size(g)
    checked = 0
    for size in range(1, report.s_of_g + 1):
        for cert in tss.enumerate_tss(g, size):
            dec = tss.realized_permutations(g, cert.elements)
            if len(dec.stabilizer) != len(dec.kernel) * len(dec.realized):
                return _instance(
                    params, "fail", "|Stab| != |kernel| * |realized| on a TSS", start,
                    counterexample=certificate_to_json(cert),
                    repro=f"tsslab stab decompose --group {spec} "
                          f"--elements {','.join(map(str, cert.elements))}",
                )
            if len(dec.stabilizer) % math.factorial(size) != 0:
                return _instance(
                    params, "fail", f"{size}! does not divide |Stab|", start,
                    counterexample=certificate_to_json(cert),
                    repro=f"tsslab stab decompose --group {spec} "
                          f"--elements {','.join(map(str, cert.elements))}",
                )
            checked += 1
    rng = random.Random(seed)
    for _ in range(samples):
        size = rng.randint(1, min(4, g.order))
        s = tuple(sorted(rng.sample(range(g.order), size)))
        dec = tss.realized_permutations(g, s)
        if len(dec.stabilizer) != len(dec.kernel) * len(dec.realized):
            return _instance(
                params, "fail",
                "|Stab| != |kernel| * |realized| on a sampled set", start,
                counterexample={"elements": list(s)},
                repro=f"tsslab stab decompose --group {spec} "
                      f"--elements {','.join(map(str, s))}",
            )
        checked += 1
    return _instance(params, "pass", f"SES identity held on {checked} sets", start)


# --- fundamental lemma -------------------------------------------------------

def _lemma_fixtures() -> list[dict]:
    return [
        {"fixture": "identity-d8", "expect": "same_size"},
        {"fixture": "identity-s4", "expect": "same_size"},
        {"fixture": "quotient-d8-r2", "expect": "collapsed"},
        {"fixture": "quotient-s4-v", "expect": "collapsed"},
        {"fixture": "braid-b4-s4", "expect": "same_size"},
        {"fixture": "sweep-s4-s3", "expect": "sweep"},
    ]


def _s4_klein(s4: FiniteGroup) -> list[int]:
    labels = ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")
    return [i for i, lab in enumerate(s4.labels) if lab in labels]


def _run_fundamental_lemma(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    fixture = params["fixture"]
    expect = params["expect"]
    d8 = parse_group_spec("dihedral:4")
    s4 = parse_group_spec("sym:4")
    if fixture == "identity-d8":
        verdict = homs.fundamental_lemma_check(homs.identity_hom(d8), [1, 3])
    elif fixture == "identity-s4":
        verdict = homs.fundamental_lemma_check(homs.identity_hom(s4), _s4_klein(s4))
    elif fixture == "quotient-d8-r2":
        verdict = homs.fundamental_lemma_check(homs.quotient_hom(d8, [0, 2]), [1, 3])
    elif fixture == "quotient-s4-v":
        i12 = s4.labels.index("(1 2)")
        i34 = s4.labels.index("(3 4)")
        normal = [s4.identity] + _s4_klein(s4)
        verdict = homs.fundamental_lemma_check(homs.quotient_hom(s4, normal), [i12, i34])
    elif fixture == "braid-b4-s4":
        pres = homs.braid_presentation(4)
        images = (s4.labels.index("(1 2)"), s4.labels.index("(2 3)"), s4.labels.index("(3 4)"))
        verdict = homs.fundamental_lemma_check(
            homs.GeneratorImageMap(pres, s4, images), homs.odd_artin_generators(4)
        )
    elif fixture == "sweep-s4-s3":
        s3 = parse_group_spec("sym:3")
        all_tss = [c for size in (2, 3) for c in tss.enumerate_tss(s4, size)]
        pairs = 0
        for hom in homs.enumerate_table_homs(s4, s3):
            for cert in all_tss:
                homs.fundamental_lemma_check(hom, cert.elements)  # raises on violation
                pairs += 1
        return _instance(
            params, "pass", f"lemma held on {pairs} (hom, TSS) pairs S4 -> S3", start
        )
    else:
        raise ValueError(f"unknown fixture {fixture!r}")
    if verdict.branch == expect:
        return _instance(
            params, "pass",
            f"{fixture}: image {verdict.image} branch {verdict.branch}", start,
        )
    return _instance(
        params, "fail",
        f"{fixture}: branch {verdict.branch}, expected {expect}", start,
        counterexample={"image": list(verdict.image)},
        repro="tsslab verify fundamental-lemma",
    )


# --- no injection ------------------------------------------------------------

def _run_no_injection(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    source_spec, target_spec = params["source"], params["target"]
    source = parse_group_spec(source_spec)
    target = parse_group_spec(target_spec)
    s_source = tss.max_tss_size(source).s_of_g
    s_target = tss.max_tss_size(target).s_of_g
    if s_source <= s_target:
        return _instance(
            params, "not-applicable",
            f"S({source.name}) = {s_source} <= S({target.name}) = {s_target}", start,
        )
    count = 0
    for hom in homs.enumerate_table_homs(source, target):
        count += 1
        if len(set(hom.mapping)) == source.order:
            return _instance(
                params, "fail", "found an injective homomorphism", start,
                counterexample={"mapping": list(hom.mapping)},
                repro=f"tsslab tss max --group {source_spec}",
            )
    return _instance(
        params, "pass",
        f"none of {count} homomorphisms {source.name} -> {target.name} injective "
        f"(S: {s_source} > {s_target})",
        start,
    )


# --- braid corollary ---------------------------------------------------------

def _run_braid_corollary(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    n = params["strands"]
    target_spec = params["target"]
    budget = params.get("budget", homs.DEFAULT_HOM_BUDGET)
    target = parse_group_spec(target_spec)
    report = homs.braid_cyclic_corollary_check(n, target, budget=budget)
    if not report.applicable:
        return _instance(
            params, "not-applicable",
            f"S({target.name}) = {report.s_target} >= floor({n}/2) = {report.threshold}",
            start,
        )
    if report.all_cyclic:
        return _instance(
            params, "pass",
            f"{report.hom_count} homomorphisms B_{n} -> {target.name}, all cyclic; "
            f"image orders {report.image_order_histogram}",
            start,
        )
    return _instance(
        params, "fail", "non-cyclic image found", start,
        counterexample={"images": list(report.noncyclic_images[0])},
        repro=f"tsslab hom braid-check --strands {n} --target {target_spec}",
    )


# --- free group --------------------------------------------------------------

def _all_reduced_words(length: int) -> list[f2.FreeWord]:
    out: list[f2.FreeWord] = []

    def extend(letters: list[int]) -> None:
        if len(letters) == length:
            out.append(f2.FreeWord(tuple(letters)))
            return
        for x in (1, -1, 2, -2):
            if letters and letters[-1] == -x:
                continue
            letters.append(x)
            extend(letters)
            letters.pop()

    extend([])
    return out


def _run_free_group(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    length = params["length"]
    words = _all_reduced_words(length)
    for w in words:
        if f2.f2_conjugate_test(w, f2.f2_inverse(w)) is not None:
            return _instance(
                params, "fail",
                f"{f2.format_f2(w)} is conjugate to its inverse", start,
                counterexample={"word": f2.format_f2(w)},
                repro=f"tsslab word f2 conjugate {f2.format_f2(w)} "
                      f"{f2.format_f2(f2.f2_inverse(w))}",
            )
        evidence = f2.f2_tss_obstruction(w)
        if not evidence.certified:
            return _instance(
                params, "fail",
                f"obstruction chain failed for {f2.format_f2(w)}", start,
                counterexample={"word": f2.format_f2(w)},
                repro=f"tsslab word f2 obstruction {f2.format_f2(w)}",
            )
    return _instance(
        params, "pass",
        f"all {len(words)} reduced words of length {length}: "
        f"never conjugate to the inverse, obstruction certified",
        start,
    )


# --- Baumslag-Solitar ---------------------------------------------------------

def _run_baumslag(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    n = params["n"]
    radius = params.get("radius", 4)
    bound = params.get("bound", 6)
    report = bs.bs_classification_check(n, radius, bound=bound)
    if not report.all_ok:
        bad = next(i for i in report.instances if i.verdict == "fail")
        return _instance(
            params, "fail", f"BS(1,{n}): {bad.detail}", start,
            counterexample={"u": str(bad.u), "v": str(bad.v)},
            repro=f"tsslab word bs --n {n} classify --radius {radius} --bound {bound}",
        )
    if report.branch == "rigid":
        return _instance(
            params, f"exhausted({bound})",
            f"BS(1,{n}): {len(report.instances)} commuting pairs, no swap witness; "
            f"exact unique-solution conditions verified",
            start,
        )
    detail = (
        f"BS(1,{n}) abelian: only singletons"
        if report.branch == "abelian"
        else f"BS(1,{n}): {len(report.instances)} certified size-2 TSS, no size-3 extension"
    )
    return _instance(params, "pass", detail, start)


# --- oracle equivalence ------------------------------------------------------

def _run_oracle(params: dict) -> SuiteInstance:
    start = time.perf_counter()
    spec = params["group"]
    g = parse_group_spec(spec)
    if g.order > 24:
        return _instance(params, "not-applicable", f"order {g.order} > 24", start)
    s_val = tss.max_tss_size(g).s_of_g
    for size in range(1, s_val + 2):
        pruned = [c.elements for c in tss.enumerate_tss(g, size)]
        brute = tss.brute_force_tss(g, size)
        if pruned != brute:
            diff = sorted(set(pruned) ^ set(brute))[0]
            return _instance(
                params, "fail",
                f"size {size}: pruned and brute-force lists differ", start,
                counterexample={"size": size, "first_difference": list(diff)},
                repro=f"tsslab tss list --group {spec} --size {size}",
            )
    return _instance(
        params, "pass", f"identical TSS lists for sizes 1..{s_val + 1}", start
    )


# --- registry ----------------------------------------------------------------

_SOLVABLE_CORPUS = [
    "cyclic:8", "cyclic:12", "dihedral:3", "dihedral:4", "dihedral:5",
    "dihedral:6", "sym:3", "sym:4", "semidirect:3,6,2", "semidirect:7,3,2",
    "product:dihedral:4,sym:3", "product:sym:3,sym:4", "sym:5",
]

_SMALL_CORPUS = [
    "cyclic:6", "cyclic:8", "dihedral:3", "dihedral:4", "dihedral:5",
    "dihedral:6", "sym:3", "sym:4", "semidirect:3,6,2", "semidirect:7,3,2",
    "product:cyclic:2,dihedral:4", "product:cyclic:3,sym:3",
]

_ORACLE_CORPUS = [
    *(f"cyclic:{n}" for n in (1, 2, 3, 4, 5, 6, 7, 8, 12, 24)),
    *(f"dihedral:{n}" for n in range(3, 13)),
    "sym:3", "sym:4", "semidirect:3,6,2", "semidirect:7,3,2",
    "product:cyclic:2,cyclic:2", "product:cyclic:2,dihedral:4",
    "product:cyclic:3,sym:3", "product:cyclic:2,cyclic:12",
]

_PRODUCT_FACTORS = ["cyclic:5", "cyclic:6", "dihedral:3", "dihedral:4", "sym:3", "sym:4"]
_FACTOR_ORDERS = {"cyclic:5": 5, "cyclic:6": 6, "dihedral:3": 6,
                  "dihedral:4": 8, "sym:3": 6, "sym:4": 24}


def _default_product_grid() -> list[dict]:
    grid = []
    for i, a in enumerate(_PRODUCT_FACTORS):
        for b in _PRODUCT_FACTORS[i:]:
            if _FACTOR_ORDERS[a] * _FACTOR_ORDERS[b] <= 600:
                grid.append({"left": a, "right": b})
    return grid


@dataclass(frozen=True)
class TheoremSpec:
    runner: Callable[[dict], SuiteInstance]
    default_grid: Callable[[dict], list[dict]]
    description: str


THEOREMS: dict[str, TheoremSpec] = {
    "abelian": TheoremSpec(
        _run_abelian,
        lambda opts: [{"n": n} for n in opts.get("ns", list(range(1, 31)))],
        "abelian groups have only singleton TSS",
    ),
    "dihedral": TheoremSpec(
        _run_dihedral,
        lambda opts: [{"n": n} for n in opts.get("ns", list(range(3, 13)))],
        "S(D_2n) = 2 with the literal two-family classification",
    ),
    "semidirect": TheoremSpec(
        _run_semidirect,
        # (7,14,3) has an ill-defined action (ord_7(3) = 6 does not divide 14)
        # and is flagged not-applicable; (7,14,6) and (7,42,3) are the valid
        # even-order instances for those p, m choices.
        lambda opts: [{"p": p, "m": m, "k": k}
                      for (p, m, k) in opts.get(
                          "triples",
                          [(3, 6, 2), (5, 20, 2), (7, 14, 3), (7, 14, 6), (7, 42, 3)])],
        "S(Z_p x| Z_m) = 2 when -1 is a power of the action multiplier",
    ),
    "direct-product": TheoremSpec(
        _run_direct_product,
        lambda opts: opts.get("pairs") or _default_product_grid(),
        "S(G x H) = max(S(G), S(H)) plus the coordinate-structure corollary",
    ),
    "free-product": TheoremSpec(
        _run_free_product,
        lambda opts: opts.get("pairs") or [
            {"left": "cyclic:3", "right": "cyclic:3", "max_syllables": opts.get("max_syllables", 4)},
            {"left": "dihedral:4", "right": "sym:3", "max_syllables": opts.get("max_syllables", 4)},
        ],
        "S(G * H) = max(S(G), S(H)); every TSS is a conjugated factor TSS",
    ),
    "inverse-pair": TheoremSpec(
        _run_inverse_pair,
        lambda opts: [{"group": s} for s in opts.get("groups", _SMALL_CORPUS)],
        "a TSS containing g and g^-1 is exactly {g, g^-1}",
    ),
    "odd-order": TheoremSpec(
        _run_odd_order,
        lambda opts: [{"group": s} for s in odd_order_corpus(opts.get("max_order", 200))],
        "odd-order groups have only singleton TSS",
    ),
    "solvable": TheoremSpec(
        _run_solvable,
        lambda opts: [{"group": s} for s in opts.get("groups", _SOLVABLE_CORPUS)],
        "solvable groups satisfy S(G) <= 4 (size 3 occurs: S_4)",
    ),
    "stabilizer-ses": TheoremSpec(
        _run_stabilizer_ses,
        lambda opts: [{"group": s, "samples": opts.get("samples", 20),
                       "seed": opts.get("seed", 0)}
                      for s in opts.get("groups", _SMALL_CORPUS)],
        "1 -> kernel -> Stab(S) -> Sym(S) -> 1 cardinality identity",
    ),
    "fundamental-lemma": TheoremSpec(
        _run_fundamental_lemma,
        lambda opts: _lemma_fixtures(),
        "TSS images have full size (and are TSS) or collapse to a point",
    ),
    "no-injection": TheoremSpec(
        _run_no_injection,
        lambda opts: opts.get("pairs") or [
            {"source": "sym:4", "target": "dihedral:4"},
            {"source": "sym:4", "target": "cyclic:12"},
            {"source": "dihedral:4", "target": "cyclic:8"},
        ],
        "no injective homomorphism when S(source) > S(target)",
    ),
    "braid-corollary": TheoremSpec(
        _run_braid_corollary,
        lambda opts: opts.get("pairs") or [
            {"strands": 5, "target": "cyclic:6"},
            {"strands": 5, "target": "semidirect:7,3,2"},
            {"strands": 5, "target": "sym:5"},
        ],
        "homomorphisms B_n -> G are cyclic when S(G) < floor(n/2)",
    ),
    "free-group": TheoremSpec(
        _run_free_group,
        lambda opts: [{"length": n} for n in range(1, opts.get("max_len", 6) + 1)],
        "F_2 words are never conjugate to their inverses; S(F_2) = 1 evidence",
    ),
    "baumslag-solitar": TheoremSpec(
        _run_baumslag,
        lambda opts: [{"n": n, "radius": opts.get("radius", 4), "bound": opts.get("bound", 6)}
                      for n in opts.get("ns", [-3, -2, -1, 2, 3])],
        "S(BS(1,n)) is 2 for n = -1 and 1 otherwise (bounded evidence)",
    ),
    "oracle": TheoremSpec(
        _run_oracle,
        lambda opts: [{"group": s} for s in opts.get("groups", _ORACLE_CORPUS)],
        "pruned enumerator matches the no-pruning brute-force oracle",
    ),
}


def _run_instance(arg: tuple[str, dict]) -> SuiteInstance:
    theorem, params = arg
    return THEOREMS[theorem].runner(params)


def verify_suite(
    theorem: str,
    grid: Optional[list[dict]] = None,
    *,
    jobs: int = 1,
    out_dir: Optional[str] = None,
    **options: Any,
) -> SuiteResult:
    """Run one theorem suite over its grid, optionally across worker processes.

    Worker outputs are collected in grid order, so runs are deterministic for
    any job count.
    """
    if theorem not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem!r}; known: {', '.join(sorted(THEOREMS))}")
    start = time.perf_counter()
    spec = THEOREMS[theorem]
    instances_params = grid if grid is not None else spec.default_grid(options)
    args = [(theorem, p) for p in instances_params]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            instances = tuple(pool.map(_run_instance, args))
    else:
        instances = tuple(_run_instance(a) for a in args)
    result = SuiteResult(
        theorem=theorem,
        instances=instances,
        passed=all(not i.failed for i in instances),
        elapsed_s=time.perf_counter() - start,
    )
    if out_dir is not None:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        artifact = path / f"{theorem}.json"
        artifact.write_text(json.dumps(suite_result_to_json(result), indent=2, sort_keys=True) + "\n")
        result = SuiteResult(
            theorem=result.theorem,
            instances=result.instances,
            passed=result.passed,
            elapsed_s=result.elapsed_s,
            artifacts=(str(artifact),),
        )
    return result


def suite_result_to_json(result: SuiteResult) -> dict[str, Any]:
    return {
        "format": FORMAT_VERSION,
        "theorem": result.theorem,
        "passed": result.passed,
        "elapsed_s": result.elapsed_s,
        "artifacts": list(result.artifacts),
        "instances": [
            {
                "params": i.params,
                "verdict": i.verdict,
                "detail": i.detail,
                "counterexample": i.counterexample,
                "repro": i.repro,
                "elapsed_s": i.elapsed_s,
            }
            for i in result.instances
        ],
    }


# --- summary table -----------------------------------------------------------

def table_rows() -> list[tuple[str, str]]:
    """The classification summary: computed S values per family, deterministic."""
    rows: list[tuple[str, str]] = []
    rows.append((str(tss.max_tss_size(parse_group_spec("cyclic:12")).s_of_g), "Abelian (Z12)"))
    ev_ok = all(
        f2.f2_tss_obstruction(w).certified for w in _all_reduced_words(4)
    )
    rows.append(("1" if ev_ok else "?", "Free group F2 (words <= 4, bounded)"))
    rows.append((str(tss.max_tss_size(parse_group_spec("semidirect:7,3,2")).s_of_g),
                 "Odd order (Z7 x| Z3)"))
    bs_rigid = bs.bs_classification_check(2, 3, bound=4)
    rows.append(("1" if bs_rigid.all_ok else "?", "BS(1,2) (radius 3, bounded)"))
    rows.append((str(tss.max_tss_size(parse_group_spec("dihedral:5")).s_of_g), "Dihedral (D10)"))
    rows.append((str(tss.max_tss_size(parse_group_spec("semidirect:3,6,2")).s_of_g),
                 "Z3 x| Z6 (k=2)"))
    bs_minus = bs.bs_classification_check(-1, 3, bound=4)
    rows.append(("2" if bs_minus.all_ok else "?", "BS(1,-1) (radius 3)"))
    s4_val = tss.max_tss_size(parse_group_spec("sym:4")).s_of_g
    rows.append((f"{s4_val} (<= 4)", "Solvable (S4; bound from the SES)"))
    prod = tss.max_tss_size(parse_group_spec("product:dihedral:3,sym:4")).s_of_g
    rows.append((f"max = {prod}", "Direct product (D6 x S4)"))
    g3 = parse_group_spec("cyclic:3")
    biggest = 1
    for clique in fp.fp_commuting_cliques(g3, parse_group_spec("cyclic:3"), 3):
        verdict = fp.fp_tss_analyze(clique)
        if verdict.is_tss:
            biggest = max(biggest, verdict.size)
    rows.append((f"max = {biggest}", "Free product (Z3 * Z3, ball 3)"))
    return rows
