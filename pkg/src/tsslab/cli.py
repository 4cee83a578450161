"""Command-line surface.

Exit codes: 0 pass, 1 theorem-check failure, 2 usage or input error,
3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Optional

from . import homs, tss, verify
from .cayley import from_cayley_table, to_cayley_table
from .groups import GroupError, conjugacy_classes, derived_series
from .schemas import (
    braid_report_to_json,
    certificate_to_json,
    stabilizer_to_json,
    tss_report_to_json,
)
from .specs import parse_group_spec
from .words import baumslag as bs
from .words import freegroup as f2
from .words import freeproduct as fp

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsslab",
        description="Exact computation engine for totally symmetric sets in groups.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--jobs", type=int,
                        default=int(os.environ.get("TSSLAB_JOBS", "1")),
                        help="worker processes for verify grids (env TSSLAB_JOBS)")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    parser.add_argument("--budget", type=int, default=homs.DEFAULT_HOM_BUDGET,
                        help="node budget for homomorphism enumeration")
    parser.add_argument("--out", type=str, default=None,
                        help="directory for JSON evidence artifacts")
    sub = parser.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="build or inspect table groups")
    group_sub = p_group.add_subparsers(dest="group_command", required=True)
    p_build = group_sub.add_parser("build", help="emit a Cayley-table document")
    p_build.add_argument("--spec", required=True)
    p_build.add_argument("--to", type=str, default=None, help="output file (default stdout)")
    p_info = group_sub.add_parser("info", help="order, abelianness, classes, solvability")
    p_info.add_argument("--spec", "--group", dest="spec", required=True)

    p_tss = sub.add_parser("tss", help="totally symmetric set search")
    tss_sub = p_tss.add_subparsers(dest="tss_command", required=True)
    p_max = tss_sub.add_parser("max", help="S(G) with maximal certified sets")
    p_max.add_argument("--group", required=True)
    p_max.add_argument("--up-to-conjugacy", action="store_true")
    p_list = tss_sub.add_parser("list", help="all TSS of one size")
    p_list.add_argument("--group", required=True)
    p_list.add_argument("--size", type=int, required=True)
    p_list.add_argument("--up-to-conjugacy", action="store_true")
    p_check = tss_sub.add_parser("check", help="decide one candidate set")
    p_check.add_argument("--group", required=True)
    p_check.add_argument("--elements", required=True, help="comma-separated indices")

    p_stab = sub.add_parser("stab", help="stabilizer decompositions")
    stab_sub = p_stab.add_subparsers(dest="stab_command", required=True)
    p_dec = stab_sub.add_parser("decompose")
    p_dec.add_argument("--group", required=True)
    p_dec.add_argument("--elements", required=True)

    p_hom = sub.add_parser("hom", help="homomorphism enumeration and checks")
    hom_sub = p_hom.add_subparsers(dest="hom_command", required=True)
    p_enum = hom_sub.add_parser("enumerate")
    p_enum.add_argument("--presentation", required=True, help="braid:N")
    p_enum.add_argument("--target", required=True)
    p_enum.add_argument("--limit", type=int, default=20,
                        help="image tuples shown in text mode")
    p_braid = hom_sub.add_parser("braid-check")
    p_braid.add_argument("--strands", type=int, required=True)
    p_braid.add_argument("--target", required=True)

    p_word = sub.add_parser("word", help="exact infinite-group word operations")
    word_sub = p_word.add_subparsers(dest="word_command", required=True)
    p_f2 = word_sub.add_parser("f2", help="free group on a, b")
    p_f2.add_argument("op", choices=("reduce", "mul", "inverse", "commutes",
                                     "conjugate", "obstruction"))
    p_f2.add_argument("words", nargs="+")
    p_bs = word_sub.add_parser("bs", help="Baumslag-Solitar BS(1,n)")
    p_bs.add_argument("--n", type=int, required=True)
    p_bs.add_argument("op", choices=("mul", "inverse", "commutes", "swap", "classify"))
    p_bs.add_argument("words", nargs="*")
    p_bs.add_argument("--bound", type=int, default=6)
    p_bs.add_argument("--radius", type=int, default=4)
    p_fp = word_sub.add_parser("fp", help="free product of two table groups")
    p_fp.add_argument("--factors", required=True, help="<spec>,<spec>")
    p_fp.add_argument("op", choices=("mul", "inverse", "reduce", "cyclic", "analyze"))
    p_fp.add_argument("words", nargs="+")

    p_verify = sub.add_parser("verify", help="run a theorem suite")
    p_verify.add_argument("theorem", choices=sorted(verify.THEOREMS))
    p_verify.add_argument("--grid", type=str, default=None,
                          help="theorem-specific grid override")
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--max-len", type=int, default=None)
    p_verify.add_argument("--max-syllables", type=int, default=None)
    p_verify.add_argument("--radius", type=int, default=None)
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.add_argument("--samples", type=int, default=None)

    sub.add_parser("table", help="the summary table of S values per family")
    return parser


def _emit(doc: dict[str, Any], args: argparse.Namespace, text_lines: list[str],
          csv_rows: Optional[list[list[Any]]] = None) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


def _parse_elements(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise GroupError(f"bad element list {text!r}; expected comma-separated integers")


def _cmd_group(args: argparse.Namespace) -> int:
    if args.group_command == "build":
        g = parse_group_spec(args.spec)
        text = to_cayley_table(g)
        if args.to:
            Path(args.to).write_text(text)
            print(f"wrote {g.name} (order {g.order}) to {args.to}")
        else:
            sys.stdout.write(text)
        return EXIT_PASS
    g = parse_group_spec(args.spec)
    part = conjugacy_classes(g)
    series = derived_series(g)
    doc = {
        "name": g.name,
        "order": g.order,
        "abelian": g.is_abelian,
        "conjugacy_classes": len(part.classes),
        "class_sizes": [len(c) for c in part.classes],
        "solvable": series.solvable,
        "derived_series_orders": [len(t) for t in series.terms],
        "assoc_verified": g.assoc_verified,
    }
    lines = [f"{k}: {v}" for k, v in doc.items()]
    _emit(doc, args, lines, [[k, v] for k, v in doc.items()])
    return EXIT_PASS


def _cmd_tss(args: argparse.Namespace) -> int:
    g = parse_group_spec(args.group)
    if args.tss_command == "max":
        report = tss.max_tss_size(g, up_to_conjugacy=args.up_to_conjugacy)
        doc = tss_report_to_json(report, order=g.order)
        lines = [f"group: {g.name} (order {g.order})", f"s_of_g: {report.s_of_g}"]
        lines += [f"tss of size {k}: {v}" for k, v in sorted(report.counts.items())]
        for cert in report.maximal_sets:
            labels = ", ".join(g.label(x) for x in cert.elements)
            lines.append(f"maximal {cert.elements}: {{{labels}}}")
        rows = [["group", "s_of_g"], [g.name, report.s_of_g]]
        _emit(doc, args, lines, rows)
        return EXIT_PASS
    if args.tss_command == "list":
        certs = tss.enumerate_tss(g, args.size)
        if args.up_to_conjugacy:
            certs = tss.dedup_up_to_conjugacy(g, certs)
        doc = {
            "format": 1,
            "group": g.name,
            "size": args.size,
            "sets": [certificate_to_json(c) for c in certs],
        }
        lines = [f"{len(certs)} TSS of size {args.size} in {g.name}"]
        for cert in certs:
            labels = ", ".join(g.label(x) for x in cert.elements)
            lines.append(f"{cert.elements}: {{{labels}}} witnesses {cert.witnesses}")
        rows = [["elements", "labels"]] + [
            [" ".join(map(str, c.elements)), " | ".join(g.label(x) for x in c.elements)]
            for c in certs
        ]
        _emit(doc, args, lines, rows)
        return EXIT_PASS
    elems = _parse_elements(args.elements)
    cert = tss.certify_tss(g, elems)
    doc = {
        "group": g.name,
        "elements": sorted(elems),
        "is_tss": cert is not None,
        "certificate": certificate_to_json(cert) if cert else None,
    }
    lines = [f"{tuple(sorted(elems))} in {g.name}: "
             + ("TSS" if cert else "not a TSS")]
    if cert:
        lines.append(f"witnesses: {cert.witnesses}")
    _emit(doc, args, lines, [["is_tss", cert is not None]])
    return EXIT_PASS


def _cmd_stab(args: argparse.Namespace) -> int:
    g = parse_group_spec(args.group)
    elems = _parse_elements(args.elements)
    dec = tss.realized_permutations(g, elems)
    doc = stabilizer_to_json(dec)
    doc["group"] = g.name
    doc["elements"] = sorted(elems)
    lines = [
        f"set {tuple(sorted(elems))} in {g.name}",
        f"|stabilizer| = {len(dec.stabilizer)}, |kernel| = {len(dec.kernel)}, "
        f"|realized| = {len(dec.realized)} "
        f"({len(dec.kernel)} * {len(dec.realized)} = {len(dec.kernel) * len(dec.realized)})",
    ]
    for perm, witness in sorted(dec.realized.items()):
        lines.append(f"permutation {perm}: witness {witness} ({g.label(witness)})")
    _emit(doc, args, lines,
          [["stabilizer", "kernel", "realized"],
           [len(dec.stabilizer), len(dec.kernel), len(dec.realized)]])
    return EXIT_PASS


def _cmd_hom(args: argparse.Namespace) -> int:
    target = parse_group_spec(args.target)
    if args.hom_command == "enumerate":
        if not args.presentation.startswith("braid:"):
            raise GroupError(f"unsupported presentation {args.presentation!r}; use braid:N")
        strands = int(args.presentation.split(":", 1)[1])
        pres = homs.braid_presentation(strands)
        found = list(homs.enumerate_homs(pres, target, budget=args.budget))
        doc = {
            "format": 1,
            "presentation": args.presentation,
            "target": target.name,
            "hom_count": len(found),
            "images": [list(h.images) for h in found],
        }
        lines = [f"{len(found)} homomorphisms {args.presentation} -> {target.name}"]
        for h in found[: args.limit]:
            lines.append(f"images {h.images}")
        if len(found) > args.limit:
            lines.append(f"... {len(found) - args.limit} more (use --format json for all)")
        _emit(doc, args, lines,
              [["images"]] + [[" ".join(map(str, h.images))] for h in found])
        return EXIT_PASS
    streamed: list[str] = []

    def on_noncyclic(hom: homs.GeneratorImageMap) -> None:
        line = f"non-cyclic image: generator images {hom.images}"
        streamed.append(line)
        if args.format == "text":
            print(line)

    report = homs.braid_cyclic_corollary_check(
        args.strands, target, budget=args.budget, on_noncyclic=on_noncyclic
    )
    doc = braid_report_to_json(report)
    if not report.applicable:
        lines = [
            f"corollary not applicable: S({target.name}) = {report.s_target} "
            f">= floor({args.strands}/2) = {report.threshold}"
        ]
    else:
        lines = [
            f"{report.hom_count} homomorphisms B_{args.strands} -> {target.name}",
            f"image order histogram: {report.image_order_histogram}",
            f"all cyclic: {report.all_cyclic}",
        ]
    _emit(doc, args, lines,
          [["hom_count", "all_cyclic", "applicable"],
           [report.hom_count, report.all_cyclic, report.applicable]])
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / f"braid-{args.strands}-{target.name}.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n"
        )
    return EXIT_PASS if report.all_cyclic else EXIT_FAIL


def _cmd_word_f2(args: argparse.Namespace) -> int:
    op = args.op
    if op == "reduce":
        w = f2.f2_reduce(f2.parse_f2_letters(args.words[0]))
        print(f2.format_f2(w))
        return EXIT_PASS
    words = [f2.parse_f2(t) for t in args.words]
    if op == "mul":
        acc = words[0]
        for w in words[1:]:
            acc = f2.f2_multiply(acc, w)
        print(f2.format_f2(acc))
    elif op == "inverse":
        print(f2.format_f2(f2.f2_inverse(words[0])))
    elif op == "commutes":
        res = f2.f2_commutes(words[0], words[1])
        if res is None:
            print("no")
            return EXIT_PASS
        print(f"yes: root {f2.format_f2(res.root)}, exponents ({res.exp_u}, {res.exp_v})")
    elif op == "conjugate":
        witness = f2.f2_conjugate_test(words[0], words[1])
        print("no" if witness is None else f"yes: witness {f2.format_f2(witness)}")
    else:
        ev = f2.f2_tss_obstruction(words[0])
        print(
            f"word {f2.format_f2(ev.word)}: root {f2.format_f2(ev.root)}^{ev.exponent}; "
            f"swap partner forced to {f2.format_f2(ev.inverse_power)}; "
            f"conjugate to it: {ev.conjugate_to_inverse}; "
            f"no size-2 TSS: {ev.certified}"
        )
    return EXIT_PASS


def _cmd_word_bs(args: argparse.Namespace) -> int:
    n = args.n
    if args.op == "classify":
        report = bs.bs_classification_check(n, args.radius, bound=args.bound)
        print(f"BS(1,{n}) branch {report.branch}: {len(report.instances)} instances, "
              f"all_ok {report.all_ok}")
        for inst in report.instances[:10]:
            print(f"  {bs.format_bs(inst.u, n)} / {bs.format_bs(inst.v, n)}: "
                  f"{inst.verdict} ({inst.detail})")
        if len(report.instances) > 10:
            print(f"  ... {len(report.instances) - 10} more")
        return EXIT_PASS if report.all_ok else EXIT_FAIL
    words = [bs.parse_bs(t, n) for t in args.words]
    if args.op == "mul":
        acc = words[0]
        for w in words[1:]:
            acc = bs.bs_multiply(acc, w, n)
        print(bs.format_bs(acc, n))
    elif args.op == "inverse":
        print(bs.format_bs(bs.bs_inverse(words[0], n), n))
    elif args.op == "commutes":
        print("yes" if bs.bs_commutes(words[0], words[1], n) else "no")
    else:
        res = bs.bs_swap_search(words[0], words[1], n, args.bound)
        print(res.describe() if res.witness is None
              else f"witness {bs.format_bs(res.witness, n)}")
    return EXIT_PASS


def _cmd_word_fp(args: argparse.Namespace) -> int:
    spec = args.factors
    cut = _split_factor_specs(spec)
    left = parse_group_spec(cut[0])
    right = parse_group_spec(cut[1])
    if args.op == "reduce":
        w = fp.parse_fp_raw(args.words[0], left, right)
        print(fp.format_fp(w))
        return EXIT_PASS
    words = [fp.parse_fp(t, left, right) for t in args.words]
    if args.op == "mul":
        acc = words[0]
        for w in words[1:]:
            acc = fp.fp_multiply(acc, w)
        print(fp.format_fp(acc))
    elif args.op == "inverse":
        print(fp.format_fp(fp.fp_inverse(words[0])))
    elif args.op == "cyclic":
        core, conj = fp.fp_cyclic_reduce(words[0])
        print(f"core {fp.format_fp(core)}, conjugator {fp.format_fp(conj)}")
    else:
        verdict = fp.fp_tss_analyze(words)
        print(f"classification {verdict.classification}; TSS: {verdict.is_tss}; "
              f"{verdict.reason}")
        if verdict.factor_certificate is not None:
            tag = "G" if verdict.factor_tag == 0 else "H"
            print(f"factor {tag} elements {verdict.factor_elements}, "
                  f"conjugator {fp.format_fp(verdict.conjugator)}")
    return EXIT_PASS


def _split_factor_specs(text: str) -> tuple[str, str]:
    # split at the top-level comma: specs contain commas only inside
    # semidirect:P,M,K and product:..., both of which parse greedily.
    from .specs import GroupSpecError, _parse

    try:
        _, rest = _parse(text.strip())
    except GroupSpecError as exc:
        raise GroupError(f"bad factor pair {text!r}: {exc}") from exc
    if not rest.startswith(","):
        raise GroupError(f"factor pair {text!r} must be '<spec>,<spec>'")
    head = text.strip()[: len(text.strip()) - len(rest)]
    return head, rest[1:]


def _cmd_verify(args: argparse.Namespace) -> int:
    options: dict[str, Any] = {"seed": args.seed}
    if args.max_order is not None:
        options["max_order"] = args.max_order
    if args.max_len is not None:
        options["max_len"] = args.max_len
    if args.max_syllables is not None:
        options["max_syllables"] = args.max_syllables
    if args.radius is not None:
        options["radius"] = args.radius
    if args.bound is not None:
        options["bound"] = args.bound
    if args.samples is not None:
        options["samples"] = args.samples
    grid = _parse_grid(args.theorem, args.grid, options) if args.grid else None
    result = verify.verify_suite(
        args.theorem, grid, jobs=args.jobs, out_dir=args.out, **options
    )
    doc = verify.suite_result_to_json(result)
    lines = [f"theorem {result.theorem}: {'PASS' if result.passed else 'FAIL'} "
             f"({len(result.instances)} instances, {result.elapsed_s:.2f}s)"]
    for inst in result.instances:
        lines.append(f"  {inst.params}: {inst.verdict} - {inst.detail}")
        if inst.failed and inst.repro:
            lines.append(f"    reproduce: {inst.repro}")
    rows = [["params", "verdict", "detail"]] + [
        [json.dumps(i.params, sort_keys=True), i.verdict, i.detail] for i in result.instances
    ]
    _emit(doc, args, lines, rows)
    return EXIT_PASS if result.passed else EXIT_FAIL


def _parse_grid(theorem: str, text: str, options: dict[str, Any]) -> list[dict]:
    """Grid mini-syntax: integers/ranges for n-grids, 'p,m,k' triples joined
    by ';' for semidirect, 'spec+spec' pairs joined by ';' for pair grids."""
    items = [t for t in text.split(";") if t.strip()]
    if theorem in ("abelian", "dihedral"):
        return [{"n": n} for n in _parse_ints(text)]
    if theorem == "free-group":
        return [{"length": n} for n in _parse_ints(text)]
    if theorem == "baumslag-solitar":
        return [{"n": n, "radius": options.get("radius", 4),
                 "bound": options.get("bound", 6)} for n in _parse_ints(text)]
    if theorem == "semidirect":
        out = []
        for item in items:
            p, m, k = (int(v) for v in item.split(","))
            out.append({"p": p, "m": m, "k": k})
        return out
    if theorem in ("direct-product", "free-product"):
        out = []
        for item in items:
            left, right = item.split("+", 1)
            params: dict[str, Any] = {"left": left.strip(), "right": right.strip()}
            if theorem == "free-product":
                params["max_syllables"] = options.get("max_syllables", 4)
            out.append(params)
        return out
    if theorem == "braid-corollary":
        out = []
        for item in items:
            strands, target = item.split("+", 1)
            out.append({"strands": int(strands), "target": target.strip()})
        return out
    if theorem == "no-injection":
        out = []
        for item in items:
            source, target = item.split("+", 1)
            out.append({"source": source.strip(), "target": target.strip()})
        return out
    # corpus-style suites take group specs joined by ';'
    params_extra: dict[str, Any] = {}
    if theorem == "stabilizer-ses":
        params_extra = {"samples": options.get("samples", 20),
                        "seed": options.get("seed", 0)}
    return [{"group": item.strip(), **params_extra} for item in items]


def _parse_ints(text: str) -> list[int]:
    out: list[int] = []
    for tok in text.replace(";", ",").split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "-" in tok[1:]:  # allow leading minus
            lo_text, hi_text = tok.rsplit("-", 1)
            out.extend(range(int(lo_text), int(hi_text) + 1))
        else:
            out.append(int(tok))
    return out


def _cmd_table(args: argparse.Namespace) -> int:
    rows = verify.table_rows()
    doc = {"format": 1, "rows": [{"s": s, "family": fam} for s, fam in rows]}
    width = max(len(s) for s, _ in rows)
    lines = [f"{'S(G)':<{width + 2}} Group"]
    lines += [f"{s:<{width + 2}} {fam}" for s, fam in rows]
    csv_rows = [["s", "family"]] + [[s, fam] for s, fam in rows]
    _emit(doc, args, lines, csv_rows)
    return EXIT_PASS


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "group":
            return _cmd_group(args)
        if args.command == "tss":
            return _cmd_tss(args)
        if args.command == "stab":
            return _cmd_stab(args)
        if args.command == "hom":
            return _cmd_hom(args)
        if args.command == "word":
            if args.word_command == "f2":
                return _cmd_word_f2(args)
            if args.word_command == "bs":
                return _cmd_word_bs(args)
            return _cmd_word_fp(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_table(args)
    except homs.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GroupError, tss.TssError, homs.HomError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
