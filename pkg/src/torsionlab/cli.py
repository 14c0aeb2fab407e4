"""Command line: ``torsionlab {verify,koszul,wpr,cohomology,list}``.

Exit codes: 0 everything passed, 1 something failed, 2 an unknown or
bound-exhausted result is present, 3 usage or descriptor error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import REFERENCE_INDEX, SPECS, default_sequence, module_from_descriptor, resolve_id, run_suite, \
    suite_exit_code
from .graded import box, total_degree_window
from .homology import NotProZeroUpTo, ProZeroCertified, cech_cohomology, koszul_homology, wpr_test
from .rings.descriptor import DescriptorError, RingDescriptor

EXIT_PASS, EXIT_FAIL, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_window(spec: str | None, default: int) -> tuple[int, int]:
    """``"8"`` -> ``(-8, 8)``; ``"-2:5"`` -> ``(-2, 5)``."""
    if spec is None:
        return -default, default
    try:
        if ":" in spec:
            lo, hi = (int(x) for x in spec.split(":", 1))
        else:
            hi = int(spec)
            lo = -hi
    except ValueError:
        raise UsageError(f"bad window {spec!r}; use N or LO:HI") from None
    if lo > hi:
        raise UsageError(f"empty window {spec!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="torsionlab", description="Exact checks for torsion and local cohomology examples.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--p", type=int, default=None, help="prime for the p-adic families")

    v = sub.add_parser("verify", parents=[common], help="run corpus checks")
    v.add_argument("ids", nargs="*", default=["all"], help="check ids, or 'all'")
    v.add_argument("--bound", type=int, default=None)
    v.add_argument("--window", default=None, help="window size N")
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--levels", type=int, default=None)
    v.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0")

    ring = _Parser(add_help=False)
    ring.add_argument("--ring", required=True, help="path to a ring descriptor (JSON)")
    ring.add_argument("--seq", default=None, help="comma-separated terms, e.g. 'x,y^2'")
    ring.add_argument("--window", default=None, help="N or LO:HI")

    k = sub.add_parser("koszul", parents=[common, ring], help="Koszul homology dimensions")
    k.add_argument("--i", type=int, default=1, help="homological degree")
    k.add_argument("--power", type=int, default=1, help="use the sequence a^u")

    w = sub.add_parser("wpr", parents=[common, ring], help="pro-zero test of Koszul homology")
    w.add_argument("--bounds", type=int, nargs=2, metavar=("U", "V"), default=(4, 8))

    c = sub.add_parser("cohomology", parents=[common, ring], help="Čech cohomology dimensions")
    c.add_argument("--i", type=int, default=1, help="cohomological degree")
    c.add_argument("--bound", type=int, default=24, help="power bound for the colimit")

    sub.add_parser("list", parents=[common], help="list check ids")
    return p


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _load(args):
    desc = RingDescriptor.load(args.ring)
    module = module_from_descriptor(desc)
    if args.seq:
        seq = [t.strip() for t in args.seq.split(",") if t.strip()]
    else:
        seq = default_sequence(desc)
    if not seq:
        raise UsageError("empty sequence: pass --seq or give the descriptor generators")
    try:
        for t in seq:
            if isinstance(t, str):
                for part in t.replace(" ", "").split("*"):
                    module.var_index(part.partition("^")[0])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad sequence term: {exc}") from None
    return module, seq


def cmd_list(args) -> int:
    rows = [{"check_id": cid, "paper_ref": s.ref, "title": s.title, "reference": REFERENCE_INDEX[s.ref]}
            for cid, s in SPECS.items()]
    _emit(args, {"version": 1, "checks": rows},
          [f"{r['check_id']:<12} {r['paper_ref']:<7} {r['title']}" for r in rows])
    return EXIT_PASS


def cmd_verify(args) -> int:
    ids = None if args.ids in (["all"], []) else args.ids
    try:
        ids = [resolve_id(i) for i in ids] if ids else None
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    window = None
    if args.window is not None:
        try:
            window = int(args.window)
        except ValueError:
            raise UsageError("verify takes a single window size") from None
    doc = run_suite(ids, args.seed, not args.no_timing, bound=args.bound, window=window, samples=args.samples,
                    p=args.p, levels=args.levels)
    lines = [f"{'check':<12} {'status':<8} {'subchecks':>9} {'ms':>7}"]
    for c in doc["checks"]:
        lines.append(f"{c['check_id']:<12} {c['status']:<8} {len(c['witnesses']):>9} {c['runtime_ms']:>7}")
        for w in c["witnesses"]:
            if w["status"] != "pass":
                lines.append(f"    {w['name']}: {w['status']}")
    _emit(args, doc, lines)
    return suite_exit_code(doc)


def cmd_koszul(args) -> int:
    module, seq = _load(args)
    _, hi = parse_window(args.window, 6)
    degrees = total_degree_window(module.nvars, max(hi, 0))
    dims = koszul_homology(module, seq, args.i, degrees, args.power)
    nonzero = {d: v for d, v in dims.items() if v}
    doc = {"version": 1, "command": "koszul", "i": args.i, "power": args.power,
           "window": {"total_degree": max(hi, 0)},
           "pieces": [{"degree": list(d), "dim": v} for d, v in sorted(nonzero.items())]}
    lines = [f"H_{args.i}(a^{args.power}) on total degree <= {max(hi, 0)}: "
             f"{len(nonzero)} nonzero pieces of {len(dims)}"]
    lines += [f"  {module.name_of(d) if min(d) >= 0 else list(d)}  dim {v}" for d, v in sorted(nonzero.items())]
    _emit(args, doc, lines)
    return EXIT_PASS


def cmd_wpr(args) -> int:
    module, seq = _load(args)
    U, V = args.bounds
    if U < 1 or V < U:
        raise UsageError("--bounds needs 1 <= U <= V")
    _, hi = parse_window(args.window, 8)
    verdict = wpr_test(module, seq, U, V, max(hi, 0))
    doc = {"version": 1, "command": "wpr", "result": verdict.to_json()}
    lines = [doc["result"]["verdict"]]
    if isinstance(verdict, NotProZeroUpTo):
        wit = verdict.witness
        cyc = " + ".join(f"{t['coeff']}*{t['monomial']} e{t['e']}" for t in wit["cycle"])
        img = " + ".join(f"{t['coeff']}*{t['monomial']} e{t['e']}" for t in wit["image"])
        lines.append(f"  surviving cycle in H_{wit['i']}(a^{wit['v']}): {cyc}  ->  {img} in H_{wit['i']}(a^{wit['u']})")
    elif isinstance(verdict, ProZeroCertified):
        for c in verdict.certificates:
            lines.append(f"  i={c['i']} u={c['u']}: zero map from v={c['v']}")
    else:
        lines.append(f"  {verdict.reason}")
    _emit(args, doc, lines)
    return EXIT_PASS if isinstance(verdict, ProZeroCertified) else EXIT_UNKNOWN


def cmd_cohomology(args) -> int:
    module, seq = _load(args)
    lo, hi = parse_window(args.window, 4)
    table = cech_cohomology(module, seq, args.i, box(module.nvars, lo, hi), args.bound, {"box": [lo, hi]})
    doc = {"version": 1, "command": "cohomology", "result": table.to_json()}
    nonzero = [p for p in table.pieces if p.dim]
    lines = [f"{table.op} on box [{lo}, {hi}]^{module.nvars}: {table.verdict}, {len(nonzero)} nonzero pieces"]
    lines += [f"  {list(p.degree)}  dim {p.dim}" for p in nonzero]
    _emit(args, doc, lines)
    return EXIT_PASS if table.verdict == "stabilized" else EXIT_UNKNOWN


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "koszul": cmd_koszul, "wpr": cmd_wpr,
            "cohomology": cmd_cohomology}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"torsionlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DescriptorError as exc:
        print(f"torsionlab: descriptor error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
