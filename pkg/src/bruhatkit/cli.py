"""Command-line surface: queries, batch scans, machine-readable exports.

Element notation accepted by --u/--v/--w:

* ``id`` for the identity,
* dot-separated words of simple indices, e.g. ``1.2.1``,
* one-line permutation notation (family A only, rank <= 8), e.g. ``3412``.

Subsets (--I/--J) are comma-separated simple indices; the empty string is
the empty set.

Exit codes: 0 success, 2 input error, 3 precondition/hypothesis failure,
4 enumeration cap exceeded.  The env var BRUHAT_GROUP_CAP overrides the cap.

Report JSON schema:
``{"kind": str, "value": int, "witness": {...}, "meta": {"type": str,
"rank": int, "seed": int, "version": str}}``.

Report CSV: header ``kind,value`` followed by the witness keys in their
documented order; UTF-8, LF line endings.  Scan CSV columns per target are
listed in ``complexity.SCAN_COLUMNS``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .complexity import (SCAN_COLUMNS, SCAN_TARGETS, ComplexityReport,
                         levi_borel_complexity, partial_flag_levi_complexity,
                         partial_flag_torus_complexity, scan,
                         torus_complexity_richardson,
                         torus_complexity_schubert)
from .deodhar import (component_shape, enumerate_distinguished,
                      positive_distinguished, td_span)
from .errors import (GroupTooLargeError, InvalidInputError, PreconditionError)
from .rootsys import (Root, RootSystem, positive_root_count, root_system,
                      weyl_group_order)
from .weyl import (DEFAULT_GROUP_CAP, WeylElement, from_word, identity,
                   reduced_word, word_string)


# -- element and subset codecs ---------------------------------------------


def parse_word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split("."))
    except ValueError:
        raise InvalidInputError(
            f"cannot parse word {text!r}: expected dot-separated integers "
            f"like 1.2.1") from None


def element_from_oneline(rs: RootSystem, perm: Sequence[int]) -> WeylElement:
    p = list(perm)
    word_rev = []
    while True:
        i = next((i for i in range(1, len(p)) if p[i - 1] > p[i]), None)
        if i is None:
            break
        p[i - 1], p[i] = p[i], p[i - 1]
        word_rev.append(i)
    return from_word(rs, reversed(word_rev))


def element_to_oneline(w: WeylElement) -> str:
    """One-line notation (family A only)."""
    if w.system.datum.family != "A":
        raise InvalidInputError("one-line notation is specific to family A")
    p = list(range(1, w.system.rank + 2))
    for i in reduced_word(w):
        p[i - 1], p[i] = p[i], p[i - 1]
    return "".join(map(str, p))


@dataclass(frozen=True)
class ElementCodec:
    """One element-notation token: either a word ('id' or dot-separated
    simple indices) or a one-line permutation (family A only)."""

    notation: str  # "word" or "oneline"
    payload: str

    @classmethod
    def detect(cls, rs: RootSystem, text: str) -> "ElementCodec":
        text = text.strip()
        if text == "id" or "." in text or (text.isdigit() and len(text) == 1):
            return cls("word", text)
        if text.isdigit() and rs.datum.family == "A":
            return cls("oneline", text)
        raise InvalidInputError(
            f"cannot parse element {text!r}: use 'id', a dot-separated word "
            f"like 1.2.1, or (family A) one-line notation like 3412")

    def to_element(self, rs: RootSystem) -> WeylElement:
        if self.notation == "word":
            if self.payload == "id":
                return identity(rs)
            return from_word(rs, parse_word(self.payload))
        if self.notation == "oneline":
            if rs.datum.family != "A":
                raise InvalidInputError(
                    "one-line notation is only valid for family A")
            digits = [int(c) for c in self.payload]
            if sorted(digits) != list(range(1, rs.rank + 2)):
                raise InvalidInputError(
                    f"{self.payload!r} is not a permutation of "
                    f"1..{rs.rank + 1}")
            return element_from_oneline(rs, digits)
        raise InvalidInputError(f"unknown notation {self.notation!r}")


def parse_element(rs: RootSystem, text: str) -> WeylElement:
    return ElementCodec.detect(rs, text).to_element(rs)


def parse_subset(text: str | None) -> frozenset[int]:
    if text is None or text.strip() == "":
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise InvalidInputError(
            f"cannot parse subset {text!r}: expected comma-separated "
            f"integers like 1,3") from None


def root_string(root: Root) -> str:
    parts = []
    for i, c in enumerate(root, start=1):
        if c == 0:
            continue
        body = f"a{i}" if abs(c) == 1 else f"{abs(c)}a{i}"
        parts.append(("-" if c < 0 else "+" if parts else "") + body)
    return "".join(parts) if parts else "0"


def _display(rs: RootSystem, w: WeylElement) -> str:
    if rs.datum.family == "A" and rs.rank <= 8:
        return f"{word_string(w)} (oneline {element_to_oneline(w)})"
    return word_string(w)


# -- output helpers ---------------------------------------------------------


def _meta(args) -> dict:
    return {"type": args.type, "rank": args.rank,
            "seed": getattr(args, "seed", 0), "version": __version__}


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value))
    return str(value)


_ELEMENT_KEYS = ("u", "v", "w", "levi_factor", "coset_factor",
                 "max_toric_witness")


def _emit_report(report: ComplexityReport, args, out,
                 rs: RootSystem | None = None) -> None:
    if args.format == "json":
        payload = {"kind": report.kind, "value": report.value,
                   "witness": report.witness, "meta": _meta(args)}
        out.write(json.dumps(payload) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        keys = list(report.witness)
        writer.writerow(["kind", "value"] + keys)
        writer.writerow([report.kind, report.value]
                        + [_csv_cell(report.witness[k]) for k in keys])
    else:
        oneline_ok = (rs is not None and rs.datum.family == "A"
                      and rs.rank <= 8)
        out.write(f"kind: {report.kind}\n")
        out.write(f"value: {report.value}\n")
        for key, value in report.witness.items():
            cell = _csv_cell(value)
            if oneline_ok and key in _ELEMENT_KEYS:
                cell = _display(rs, parse_element(rs, value))
            out.write(f"{key}: {cell}\n")


def _open_out(args):
    path = getattr(args, "out", None)
    if path:
        return open(path, "w", encoding="utf-8", newline="")
    return None


# -- subcommands -------------------------------------------------------------


def cmd_info(args, out) -> int:
    rs = root_system(args.type, args.rank)
    order = weyl_group_order(args.type, args.rank)
    if args.format == "json":
        payload = {
            "type": args.type, "rank": args.rank,
            "positive_roots": positive_root_count(args.type, args.rank),
            "weyl_order": order,
            "cartan": [list(row) for row in rs.cartan],
            "meta": _meta(args),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"type: {args.type}{args.rank}\n")
        out.write(f"rank: {args.rank}\n")
        out.write(f"positive roots: {len(rs.positive_roots)}\n")
        out.write(f"weyl group order: {order}\n")
        out.write("cartan matrix:\n")
        for row in rs.cartan:
            out.write("  " + " ".join(f"{x:3d}" for x in row) + "\n")
    return 0


def cmd_complexity(args, out) -> int:
    rs = root_system(args.type, args.rank)
    kind = args.kind

    def need(flag: str):
        value = getattr(args, flag)
        if value is None:
            raise InvalidInputError(
                f"--{flag} is required for --kind {kind}")
        return value

    if kind == "richardson":
        u = parse_element(rs, need("u"))
        v = parse_element(rs, need("v"))
        report = torus_complexity_richardson(u, v)
    elif kind == "schubert":
        report = torus_complexity_schubert(parse_element(rs, need("w")))
    elif kind == "levi":
        w = parse_element(rs, need("w"))
        report = levi_borel_complexity(parse_subset(need("I")), w)
    elif kind == "partial":
        w = parse_element(rs, need("w"))
        j_sub = parse_subset(need("J"))
        if args.I is None:
            report = partial_flag_torus_complexity(w, j_sub)
        else:
            report = partial_flag_levi_complexity(w, j_sub,
                                                  parse_subset(args.I))
    else:
        raise InvalidInputError(f"unknown kind {kind!r}")
    _emit_report(report, args, out, rs)
    return 0


def cmd_scan(args, out) -> int:
    rs = root_system(args.type, args.rank)
    cap = int(os.environ.get("BRUHAT_GROUP_CAP", DEFAULT_GROUP_CAP))
    rows = scan(rs, args.target, max_length=args.max_length,
                jobs=args.jobs, cap=cap)
    columns = SCAN_COLUMNS[args.target]
    if args.format == "json":
        out.write(json.dumps({"meta": {**_meta(args),
                                       "target": args.target}}) + "\n")
        for row in rows:
            out.write(json.dumps({k: row[k] for k in columns}) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in columns])
    else:
        out.write("\t".join(columns) + "\n")
        for row in rows:
            out.write("\t".join(_csv_cell(row[k]) for k in columns) + "\n")
    return 0


def cmd_deodhar(args, out) -> int:
    rs = root_system(args.type, args.rank)
    word = parse_word(args.v_word)
    u = parse_element(rs, args.u)
    subexprs = enumerate_distinguished(word, u)
    positive = (positive_distinguished(word, u) if subexprs else None)
    rows = []
    for se in subexprs:
        span = td_span(se)
        shape = component_shape(se)
        rows.append({
            "mask": se.mask_string(),
            "evaluation": word_string(se.evaluation),
            "j_plus": sorted(se.j_plus),
            "j_circ": sorted(se.j_circ),
            "j_minus": sorted(se.j_minus),
            "betas": [f"{k}:{root_string(b)}" for k, b in se.betas],
            "shape": [shape.circ_count, shape.minus_count],
            "td": span.rank,
            "positive": se == positive,
        })
    columns = ("mask", "evaluation", "j_plus", "j_circ", "j_minus",
               "betas", "shape", "td", "positive")
    if args.format == "json":
        out.write(json.dumps({"meta": _meta(args),
                              "v_word": list(word),
                              "u": word_string(u),
                              "count": len(rows)}) + "\n")
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in columns])
    else:
        out.write(f"v-word: {'.'.join(map(str, word))}   "
                  f"u: {_display(rs, u)}   "
                  f"distinguished subexpressions: {len(rows)}\n")
        for row in rows:
            flag = " (positive)" if row["positive"] else ""
            out.write(f"mask ({row['mask']}){flag}\n")
            out.write(f"  J+={set(row['j_plus']) or '{}'} "
                      f"Jo={set(row['j_circ']) or '{}'} "
                      f"J-={set(row['j_minus']) or '{}'}\n")
            out.write(f"  betas: {'; '.join(row['betas']) or '-'}\n")
            out.write(f"  shape: ({row['shape'][0]},{row['shape'][1]})  "
                      f"td: {row['td']}\n")
    return 0


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatkit",
        description="Exact Weyl group combinatorics: Bruhat intervals, "
                    "distinguished subexpressions, and torus/Levi-Borel "
                    "complexity of Schubert and Richardson varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"),
                       help="root system family")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", default="text",
                       choices=["text", "json", "csv"])
        p.add_argument("--seed", type=int, default=0,
                       help="recorded in output metadata")

    p_info = sub.add_parser("info", help="root system summary")
    common(p_info)

    p_cx = sub.add_parser("complexity", help="one complexity query")
    common(p_cx)
    p_cx.add_argument("--kind", required=True,
                      choices=["richardson", "schubert", "levi", "partial"])
    p_cx.add_argument("--u")
    p_cx.add_argument("--v")
    p_cx.add_argument("--w")
    p_cx.add_argument("--I")
    p_cx.add_argument("--J")

    p_scan = sub.add_parser("scan", help="batch scan over the Weyl group")
    common(p_scan)
    p_scan.add_argument("--target", required=True, choices=list(SCAN_TARGETS))
    p_scan.add_argument("--out", help="output file (default stdout)")
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--max-length", type=int, default=None)

    p_deo = sub.add_parser("deodhar",
                           help="list distinguished subexpressions")
    common(p_deo)
    p_deo.add_argument("--v-word", required=True,
                       help="reduced word, dot-separated, e.g. 1.2.1")
    p_deo.add_argument("--u", required=True)

    return parser


def _report_error(args, exc: Exception, code: int) -> None:
    fmt = getattr(args, "format", "text") if args is not None else "text"
    if fmt == "json":
        sys.stderr.write(json.dumps(
            {"error": {"exit_code": code,
                       "hypothesis": type(exc).__name__,
                       "message": str(exc)}}) + "\n")
    else:
        sys.stderr.write(f"error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {"info": cmd_info, "complexity": cmd_complexity,
                "scan": cmd_scan, "deodhar": cmd_deodhar}
    sink = _open_out(args)
    out = sink if sink is not None else sys.stdout
    try:
        return handlers[args.command](args, out)
    except InvalidInputError as exc:
        _report_error(args, exc, 2)
        return 2
    except GroupTooLargeError as exc:
        _report_error(args, exc, 4)
        return 4
    except PreconditionError as exc:
        _report_error(args, exc, 3)
        return 3
    finally:
        if sink is not None:
            sink.close()


if __name__ == "__main__":
    sys.exit(main())
