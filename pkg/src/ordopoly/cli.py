"""Command line front end (``ordopoly`` / ``python -m ordopoly``)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import extensions as ext
from .errors import (
    BudgetExceeded,
    CycleError,
    GuardExceeded,
    LabelOutOfRange,
    NotAnExtensionError,
    NotDeletableError,
    NotNaturalError,
    ParseError,
)
from .orderpoly import default_budget, evaluate, extended, omega
from .poset import builtin, load
from .verify import corpus, verify_poset

EXIT_PARSE = 1
EXIT_INVARIANT = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _source_name(spec: str) -> str:
    return spec if ":" in spec and not os.path.exists(spec) else ""


def _poset(args):
    spec = args.poset
    if ":" in spec and not os.path.exists(spec):
        return builtin(spec)
    try:
        return load(spec, relabel=args.relabel)
    except FileNotFoundError:
        raise ParseError(f"no such file: {spec}") from None


def _budget(args) -> int:
    if args.force:
        return 0
    return args.budget if args.budget is not None else default_budget()


def _emit(args, text: str | None = None, data=None) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def cmd_validate(args) -> int:
    P = _poset(args)
    problems = []
    if any(a >= b for a, b in P.relations()):
        problems.append("labeling is not natural")
    closure = set()
    for a, b in P.covers:
        closure.add((a, b))
    changed = True
    while changed:
        new = {(a, d) for a, b in closure for c, d in closure if b == c} - closure
        changed = bool(new)
        closure |= new
    if closure != set(P.relations()):
        problems.append("closure of covers differs from stored order")
    data = {
        "p": P.p,
        "covers": [list(c) for c in P.covers],
        "relations": len(P.relations()),
        "minimal": P.minimal(),
        "maximal": P.maximal(),
        "longest_chain": P.longest_chain(),
        "problems": problems,
    }
    text = "\n".join([
        f"p = {P.p}",
        f"covers ({len(P.covers)}): " + " ".join(f"{a}<{b}" for a, b in P.covers),
        f"relations in closure: {data['relations']}",
        f"minimal: {P.minimal()}  maximal: {P.maximal()}",
        f"longest chain: {P.longest_chain()}",
        "status: " + ("ok" if not problems else "; ".join(problems)),
    ])
    _emit(args, text, data)
    return EXIT_INVARIANT if problems else 0


def cmd_extensions(args) -> int:
    P = _poset(args)
    budget = _budget(args)
    count = 0
    words = []
    for w in ext.iter_words(P):
        count += 1
        if budget and count > budget:
            raise BudgetExceeded(budget, count)
        if args.count_only:
            continue
        if args.format == "json":
            words.append(ext.format_word(w))
        else:
            print(ext.format_word(w))
    if args.format == "json":
        data = {"count": count} if args.count_only else {"count": count, "extensions": words}
        _emit(args, data=data)
    elif args.count_only:
        print(count)
    return 0


def cmd_analyze(args) -> int:
    P = _poset(args)
    if args.word is not None:
        ws = [ext.extension(P, args.word)]
    else:
        if P.p > 10 and not args.force:
            raise GuardExceeded("analyze lists every extension; pass --word or --force for p > 10")
        ws = list(ext.enumerate_extensions(P))
    rows = []
    for w in ws:
        st = ext.stats(w)
        rows.append({
            "word": ext.format_word(w.word),
            "des": st.des,
            "descents": sorted(st.descents),
            "deletable": sorted(st.deletable),
            "del": st.ndel,
            "fixed": sorted(set(w.word) - st.deletable),
        })
    text = "\n".join(
        f"{r['word']}: des={r['des']} descents={_fmt_set(r['descents'])} "
        f"Del={_fmt_set(r['deletable'])} del={r['del']} fixed={_fmt_set(r['fixed'])}"
        for r in rows
    )
    _emit(args, text, rows if args.word is None else rows[0])
    return 0


def _number(v) -> str:
    return str(v) if not isinstance(v, Fraction) or v.denominator != 1 else str(v.numerator)


def cmd_omega(args) -> int:
    P = _poset(args)
    om = omega(P, _budget(args), args.threads)
    if args.n is not None:
        v = om(args.n)
        _emit(args, _number(v), {"n": args.n, "value": _number(v)})
    else:
        _emit(args, str(om.poly), om.poly.to_dict())
    return 0


def cmd_epoly(args) -> int:
    P = _poset(args)
    E = extended(P, _budget(args), args.threads)
    if args.format == "json":
        data = E.to_dict()
        if args.n is not None:
            z = args.z if args.z is not None else Fraction(1)
            data["evaluation"] = {"n": args.n, "z": str(z), "value": _number(evaluate(E, args.n, z))}
        _emit(args, data=data)
        return 0
    if args.n is not None:
        if args.z is not None:
            print(_number(evaluate(E, args.n, args.z)))
        else:
            coeffs = E.at_n(args.n)
            print(" + ".join(f"{c}*z^{k}" for k, c in enumerate(coeffs) if c) or "0")
        return 0
    if args.symbolic:
        print(E.pretty())
        return 0
    print(f"E(n,z) = {E.poly}")
    print(f"sum form: {E.pretty()}")
    print("table (des, fixed): count")
    for (l, f), e in sorted(E.table.entries.items()):
        print(f"  ({l}, {f}): {e}")
    print(f"extensions: {E.n_extensions}  max entry: {E.table.max_entry()}")
    return 0


def cmd_classes(args) -> int:
    P = _poset(args)
    cp = ext.class_partition(P, max_p_guard=args.max_p)
    if args.format == "json":
        print(cp.to_json())
        return 0
    for c in cp.classes:
        members = ", ".join(ext.format_word(m) or "()" for m in c.members)
        print(f"[{ext.format_word(c.root.word)}] des={c.descents} del={c.ndel} size={len(c.members)}: {members}")
    print(f"classes: {len(cp.classes)}  union size: {len(cp.union())}  disjoint: {cp.is_disjoint()}")
    return 0


def cmd_verify(args) -> int:
    ns = [args.n] if args.n is not None else list(range(5))
    if args.poset:
        items = [(_source_name(args.poset), _poset(args))]
    else:
        items = list(corpus(seed=args.seed))
    failures = []
    lines = []
    for name, P in items:
        rep = verify_poset(P, name, ns, _budget(args), args.threads)
        n_ok = sum(c.ok for c in rep.checks)
        lines.append(f"{'ok  ' if rep.ok else 'FAIL'} {name or repr(P)}: {n_ok}/{len(rep.checks)} checks")
        for c in rep.checks:
            if not c.ok:
                failures.append({"poset": name, "covers": [list(x) for x in P.covers], "p": P.p,
                                 "check": c.name, "detail": c.detail})
                lines.append(f"     mismatch in {c.name}: {c.detail}")
            elif args.poset:
                lines.append(f"     {c.name}: ok")
    summary = f"{len(items) - len({f['poset'] for f in failures})}/{len(items)} posets verified"
    _emit(args, "\n".join(lines + [summary]), {"posets": len(items), "failures": failures})
    return EXIT_MISMATCH if failures else 0


def cmd_bench(args) -> int:
    specs = [args.poset] if args.poset else ["grid:3,3", "grid:4,4", "grid:3,5"]
    rows = []
    for spec in specs:
        P = builtin(spec) if ":" in spec and not os.path.exists(spec) else load(spec)
        t0 = time.perf_counter()
        E = extended(P, _budget(args), args.threads)
        dt = time.perf_counter() - t0
        rows.append({
            "poset": spec,
            "extensions": E.n_extensions,
            "seconds": round(dt, 4),
            "extensions_per_second": int(E.n_extensions / dt) if dt > 0 else None,
            "table_size": len(E.table.entries),
            "max_entry": E.table.max_entry(),
        })
    text = "\n".join(
        f"{r['poset']}: {r['extensions']} extensions in {r['seconds']}s "
        f"({r['extensions_per_second']}/s), table cells {r['table_size']}, max entry {r['max_entry']}"
        for r in rows
    )
    _emit(args, text, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--relabel", action="store_true",
                        help="repair a non-natural labeling of a poset file instead of failing")
    common.add_argument("--budget", type=int, default=None,
                        help="maximum number of linear extensions to enumerate "
                             "(default: $ORDOPOLY_BUDGET or 10^7)")
    common.add_argument("--force", action="store_true", help="ignore the enumeration budget")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="ordopoly",
        description="Strict and extended strict order polynomials of finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_poset=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--poset", required=needs_poset,
                        help="poset file (text or JSON) or builtin chain:p, antichain:p, grid:l,m, fence:m")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "parse a poset and report its invariants")
    sp = add("extensions", cmd_extensions, "list the linear extensions")
    sp.add_argument("--count-only", action="store_true")
    sp = add("analyze", cmd_analyze, "descents and deletable labels per extension")
    sp.add_argument("--word", help="a single word, e.g. '1 3 2 4' or 1324")
    sp = add("omega", cmd_omega, "strict order polynomial")
    sp.add_argument("--n", type=int)
    sp.add_argument("--symbolic", action="store_true")
    sp = add("epoly", cmd_epoly, "extended strict order polynomial")
    sp.add_argument("--n", type=int)
    sp.add_argument("--z", type=Fraction)
    sp.add_argument("--symbolic", action="store_true", help="print only the sum-of-binomials form")
    sp = add("classes", cmd_classes, "partition of all subposet extensions into classes")
    sp.add_argument("--max-p", type=int, default=12)
    sp = add("verify", cmd_verify, "cross-check against brute force and closed forms", needs_poset=False)
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    add("bench", cmd_bench, "time the enumeration on grid posets", needs_poset=False)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}; rerun with --force or a larger --budget", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, LabelOutOfRange, ValueError) as exc:
        if isinstance(exc, (CycleError, NotNaturalError, NotAnExtensionError, NotDeletableError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVARIANT
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
