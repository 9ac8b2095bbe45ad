"""Command line interface.

Subcommands: count, enumerate, distance, verify, dna, serve.  Exit codes:
0 success, 1 verification mismatch, 2 usage or input errors, 3 resource
guard tripped.  All output is deterministic; --output redirects it to a
file and --json (where offered) wraps reports in a JSON envelope with
counts as decimal strings.  REVCODE_CEILING overrides the enumeration and
sweep ceilings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Iterator

from . import codefile, counter, distance, dna, enumerator, oracle
from .errors import RevcodeError, TooLarge
from .reverse import ReverseSpace, ReversibleCode

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revcode",
        description="Reversible and reversible-complementary codes over GF(4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="census of codes by isomorphism type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--contains-one", action="store_true")
    p.add_argument("--mode", choices=["paper", "verified", "both"], default="both")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--iso-types", action="store_true",
                   help="append the number of types with nonzero verified count")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default=None)

    p = sub.add_parser("enumerate", help="list all codes of one type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--contains-one", action="store_true")
    p.add_argument("--format", choices=["matrix", "generator", "dna"],
                   default="matrix")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("distance", help="distance report for codes")
    p.add_argument("--in", dest="infile", default=None,
                   help="code file in matrix format")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--contains-one", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="cross-check enumerator, counter, oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default=None)

    p = sub.add_parser("dna", help="strand constraint report / export")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--export", action="store_true",
                   help="emit strands, one per line, instead of the report")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _emit(out: IO[str], lines: list[str]) -> None:
    for line in lines:
        out.write(line + "\n")


def cmd_count(args, out: IO[str]) -> int:
    table = counter.count_table(args.n, args.contains_one, counter.Mode(args.mode))
    if args.t is not None or args.s is not None:
        if args.t is None or args.s is None:
            raise RevcodeError("--t and --s must be given together")
        table.entries = [table.entry(args.t, args.s)]
        table.totals = dict(table.entries[0].counts)
        table.discrepancies = [
            d for d in table.discrepancies if d == (args.t, args.s)
        ]
    iso = counter.count_iso_types(args.n, args.contains_one) if args.iso_types else None
    if args.json:
        payload = table.to_dict()
        if iso is not None:
            payload["iso_types"] = iso
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = table.to_lines()
        if iso is not None:
            lines.append(f"iso_types={iso}")
        _emit(out, lines)
    return EXIT_OK


def _records(args, rs: ReverseSpace) -> Iterator[str]:
    count = 0
    for code in enumerator.enumerate_type(rs, args.t, args.s, args.contains_one):
        if args.limit is not None and count >= args.limit:
            return
        if args.format == "matrix":
            yield codefile.emit_code(code)
        elif args.format == "generator":
            rows = enumerator.generator_matrix(code, rs)
            yield codefile.emit_rows(code.n, rows)
        else:
            yield "\n".join(dna.export_dna(code.space)) + "\n"
        count += 1


def cmd_enumerate(args, out: IO[str]) -> int:
    rs = ReverseSpace(args.n)
    first = True
    for record in _records(args, rs):
        if not first:
            out.write("\n")
        out.write(record)
        first = False
    return EXIT_OK


def _load_codes(args) -> list[ReversibleCode]:
    if args.infile is not None:
        with open(args.infile, "r", encoding="ascii") as fh:
            return [codefile.parse_code(fh.read())]
    if args.n is None or args.t is None or args.s is None:
        raise RevcodeError("give --in FILE, or --n/--t/--s to sweep a type")
    rs = ReverseSpace(args.n)
    return list(enumerator.enumerate_type(rs, args.t, args.s, args.contains_one))


def cmd_distance(args, out: IO[str]) -> int:
    codes = _load_codes(args)
    reports = []
    for code in codes:
        rs = ReverseSpace(code.n)
        reports.append(distance.distance_report(code, rs))
    if args.json:
        out.write(
            json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2) + "\n"
        )
    else:
        for i, r in enumerate(reports):
            if i:
                out.write("\n")
            _emit(out, r.to_lines())
    return EXIT_OK


def verify_n(n: int) -> tuple[list[str], bool, dict]:
    """Cross-check oracle, enumerator, and VERIFIED counter for one length."""
    rs = ReverseSpace(n)
    lines = ["report=verify", f"n={n}"]
    payload: dict = {"report": "verify", "n": n, "filters": {}}
    ok = True
    cells_checked = 0
    mismatch_lines: list[str] = []
    for with_one in (False, True):
        label = "contains_one" if with_one else "plain"
        table = oracle.oracle_count_table(n, with_one)
        oracle_cells = {(e.t, e.s): e.counts["oracle"] for e in table.entries}
        records = [
            rec for rec in oracle.brute_force_reversible(n)
            if rec.contains_one or not with_one
        ]
        oracle_sets: dict[tuple[int, int], set] = {}
        for rec in records:
            oracle_sets.setdefault((rec.t, rec.s), set()).add(rec.space.rows)
        totals = {"oracle": 0, "enumerator": 0, "counter": 0}
        for (t, s), expected in sorted(oracle_cells.items()):
            cells_checked += 1
            enumerated = {
                code.space.rows
                for code in enumerator.enumerate_type(rs, t, s, with_one)
            }
            counted = counter.count_cell(n, t, s, with_one, counter.Mode.VERIFIED)
            totals["oracle"] += expected
            totals["enumerator"] += len(enumerated)
            totals["counter"] += counted
            same_set = enumerated == oracle_sets.get((t, s), set())
            if len(enumerated) != expected or counted != expected or not same_set:
                ok = False
                mismatch_lines.append(
                    f"mismatch filter={label} t={t} s={s} "
                    f"oracle={expected} enumerator={len(enumerated)} "
                    f"counter={counted} same_set={str(same_set).lower()}"
                )
        for name, value in totals.items():
            lines.append(f"{label}_{name}_total={value}")
        payload["filters"][label] = dict(totals)
    lines.append(f"cells_checked={cells_checked}")
    lines.extend(mismatch_lines)
    lines.append(f"mismatches={len(mismatch_lines)}")
    lines.append(f"result={'PASS' if ok else 'FAIL'}")
    payload["cells_checked"] = cells_checked
    payload["mismatches"] = len(mismatch_lines)
    payload["result"] = "PASS" if ok else "FAIL"
    return lines, ok, payload


def cmd_verify(args, out: IO[str]) -> int:
    lines, ok, payload = verify_n(args.n)
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        _emit(out, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_dna(args, out: IO[str]) -> int:
    with open(args.infile, "r", encoding="ascii") as fh:
        code = codefile.parse_code(fh.read())
    rs = ReverseSpace(code.n)
    if args.export:
        for strand in dna.export_dna(code.space):
            out.write(strand + "\n")
        return EXIT_OK
    report = dna.constraint_report(code.space, rs)
    if args.json:
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        _emit(out, report.to_lines())
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": cmd_count,
        "enumerate": cmd_enumerate,
        "distance": cmd_distance,
        "verify": cmd_verify,
        "dna": cmd_dna,
    }
    if args.command == "serve":
        return cmd_serve(args)
    handler = handlers[args.command]
    try:
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="ascii", newline="\n") as fh:
                return handler(args, fh)
        return handler(args, sys.stdout)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (RevcodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
