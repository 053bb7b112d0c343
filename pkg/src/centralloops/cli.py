"""Command-line front end.

Exit status 0 on success, 1 on domain errors (bad table, not a loop, not a
C-loop, ...), 2 on usage errors.  Every error writes ``ERROR <kind>: ...`` as
its first line on stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import identities
from .autotopism import (
    Autotopism,
    constructed_autotopism,
    cs_pair,
    enumerate_autotopisms,
    verify,
)
from .fixtures import C12_ROWS
from .magma import (
    LoopStructure,
    MagmaError,
    as_loop,
    from_table,
    load_table,
    right_translations,
    write_table_file,
)
from .parastrophe import ParastropheKind, equivalence_report, parastrophe
from .perm import PermError, parse_cycles
from .sts import build_cs_family, cardinality_check, verify_sts


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_loop(path: str) -> LoopStructure:
    try:
        q = load_table(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return as_loop(q)


def read_bases_file(text: str, n: int) -> list[Autotopism]:
    """One triple per line as ``U ; V ; W`` in cycle notation; ``#`` starts a comment line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 3:
            raise PermError(f"bases line {lineno}: expected 'U ; V ; W', got {line!r}")
        out.append(Autotopism(*(parse_cycles(p, n) for p in parts)))
    return out


def _cmd_check(args, out) -> int:
    L = _load_loop(args.table)
    names = [args.identity] if args.identity else [
        "c", "lc", "rc", "associative", "left-alternative", "right-alternative",
        "power-associative", "nuclear-square", "steiner", "commutative",
    ]
    print(f"order {L.order}, identity {L.identity}", file=out)
    for name in names:
        report = identities.check(L, name)
        line = f"{name}: holds={str(report.holds).lower()}"
        if not report.holds:
            w = ",".join(map(str, report.witness))
            clause = f" clause={report.clause}" if report.clause else ""
            line += f"{clause} witness=({w}) {report.detail}"
        print(line, file=out)
    return 0


def _print_construction(L: LoopStructure, x: int, out) -> Autotopism:
    pair = constructed_autotopism(L, x)
    f, inv = pair.forward, pair.inverse
    print(f"x = {x}", file=out)
    print(f"x^2 = {pair.square}", file=out)
    print(f"trivial = {str(pair.trivial).lower()}", file=out)
    print(f"alpha1S2 = {f.U}", file=out)
    print(f"beta1T2 = {f.V}", file=out)
    print(f"gamma1R2 = {f.W}", file=out)
    print(f"alpha2S1 = {inv.U}", file=out)
    print(f"beta2T1 = {inv.V}", file=out)
    print(f"gamma2R1 = {inv.W}", file=out)
    return f


def _cmd_autotopism(args, out) -> int:
    L = _load_loop(args.table)
    if not 0 <= args.x < L.order:
        raise UsageError(f"--x must lie in 0..{L.order - 1}")
    _print_construction(L, args.x, out)
    cs = cs_pair(L, args.x)
    print(f"S1,T1,R1 = {cs.first}", file=out)
    print(f"S2,T2,R2 = {cs.second}", file=out)
    return 0


def _cmd_parastrophe(args, out) -> int:
    L = _load_loop(args.table)
    out.write(write_table_file(parastrophe(L.carrier, args.kind)))
    return 0


def _cmd_equiv(args, out) -> int:
    L = _load_loop(args.table)
    for line in equivalence_report(L).lines():
        print(line, file=out)
    return 0


def _cmd_sts(args, out) -> int:
    L = _load_loop(args.table)
    bases = None
    if args.bases:
        try:
            with open(args.bases, encoding="utf-8") as fh:
                bases = [verify(L, *b.components()) for b in read_bases_file(fh.read(), L.order)]
        except OSError as exc:
            raise UsageError(f"cannot read {args.bases}: {exc.strerror}") from None
    family = build_cs_family(L, bases)
    print("index set: every (base, x) with x^2 != e, bases in file order, x ascending", file=out)
    print(f"ground set: {len(family.points)} autotopisms", file=out)
    for i, a in enumerate(family.points):
        print(f"  [{i}] U={a.U} V={a.V} W={a.W}", file=out)
    print(f"triples: {len(family.triples)}", file=out)
    for tr, prov in zip(family.triples, family.provenance):
        src = " ".join(f"(base={b},x={x})" for b, x in prov)
        print(f"  {{{tr[0]}, {tr[1]}, {tr[2]}}} from {src}", file=out)
    for line in verify_sts(family).lines():
        print(line, file=out)
    for line in cardinality_check(family).lines():
        print(line, file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    L = _load_loop(args.table)
    atps = enumerate_autotopisms(L)
    print(f"autotopisms: {len(atps)}", file=out)
    for a in atps:
        print(f"{a.U} ; {a.V} ; {a.W}", file=out)
    return 0


def _cmd_demo(args, out) -> int:
    L = as_loop(from_table(C12_ROWS))
    print("C-loop of order 12 (non-associative), fix x = 4", file=out)
    print(f"C identity holds: {str(identities.is_c(L).holds).lower()}", file=out)
    f = _print_construction(L, 4, out)
    R = right_translations(L)
    names = []
    for comp in f.components():
        k = next((i for i, r in enumerate(R) if r == comp), None)
        names.append(f"R_{k}" if k is not None else "?")
    verify(L, *f.components())
    print(f"(alpha1S2, beta1T2, gamma1R2) = ({', '.join(names)}) in Aut(L): verified", file=out)
    alpha = R[10]
    print(f"alpha = R_10 = {alpha}", file=out)
    print(f"alpha^2 = {alpha ** 2}", file=out)
    print(f"alpha^-2 = {alpha ** -2}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="centralloops", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run loop identity checks")
    c.add_argument("--table", required=True)
    c.add_argument("--identity", choices=sorted(identities.IDENTITIES))
    c.set_defaults(func=_cmd_check)

    a = sub.add_parser("autotopism", help="construct the autotopism generated by an element")
    a.add_argument("--table", required=True)
    a.add_argument("--x", type=int, required=True)
    a.set_defaults(func=_cmd_autotopism)

    q = sub.add_parser("parastrophe", help="print a conjugate table in .tbl format")
    q.add_argument("--table", required=True)
    q.add_argument("--kind", required=True, choices=[k.value for k in ParastropheKind])
    q.set_defaults(func=_cmd_parastrophe)

    r = sub.add_parser("equiv-report", help="components versus parastrophes")
    r.add_argument("--table", required=True)
    r.set_defaults(func=_cmd_equiv)

    s = sub.add_parser("sts", help="build and check the CS-autotopism triple family")
    s.add_argument("--table", required=True)
    s.add_argument("--bases", help="file of base autotopisms, one 'U ; V ; W' per line")
    s.set_defaults(func=_cmd_sts)

    e = sub.add_parser("enumerate", help="list all autotopisms (order <= 8)")
    e.add_argument("--table", required=True)
    e.set_defaults(func=_cmd_enumerate)

    d = sub.add_parser("demo", help="replay the order-12 construction")
    d.set_defaults(func=_cmd_demo)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"ERROR usage: {exc}", file=err)
        return 2
    except (MagmaError, PermError, ValueError, AssertionError) as exc:
        kind = getattr(exc, "kind", "domain")
        print(f"ERROR {kind}: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
