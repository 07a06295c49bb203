"""Command-line front end.

stdout carries data, stderr diagnostics.  Exit codes: 0 success, 1 invalid
input, 2 a configured cap would be exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Sequence

from . import __version__
from .characters import (
    character_table,
    decompose,
    induce_class_function,
    irrep_dimension,
    irrep_labels,
    irreducible_character,
    label_to_json,
    pieri_decompose_MT,
    validate_label,
)
from .rays import (
    DEFAULT_MAX_CELLS,
    CapExceededError,
    ClusterType,
    betti,
    default_max_cells,
    enumerate_ray_partitions,
    poincare_table,
    stream_json,
)
from .stability import analyze, report_csv, report_tex
from .structure import BelowThreshold, character_polynomial_MT, pad_multipartition
from .wreath import (
    DEFAULT_MAX_GROUP_ORDER,
    all_types,
    check_group_cap,
    class_table_rows,
    default_max_group_order,
)

log = logging.getLogger("wreathstab")

FORMATS = ("json", "csv", "tex", "plain")
FORCE_MAX_CELLS = 16
FORCE_MAX_GROUP_ORDER = 10**7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_K(text: str) -> ClusterType:
    try:
        sizes = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        return ClusterType(sizes)
    except ValueError as exc:
        raise UsageError(f"malformed cluster type {text!r}: {exc}") from None


def _parse_label(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"label must be a JSON list of lists: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise UsageError("label must be a JSON list of lists")
    return data


def _cluster(args) -> ClusterType:
    if args.K is not None and (args.k is not None or args.n is not None):
        raise UsageError("--K is mutually exclusive with --k/--n")
    if args.K is not None:
        return _parse_K(args.K)
    if args.k is None or args.n is None:
        raise UsageError("give either --K or both --k and --n")
    if args.k < 1 or args.n < 0:
        raise UsageError("need k >= 1 and n >= 0")
    return ClusterType.uniform(args.k, args.n)


def _caps(args) -> tuple[int, int]:
    cells = args.max_cells if args.max_cells is not None else default_max_cells()
    order = args.max_group_order if args.max_group_order is not None else default_max_group_order()
    if args.force:
        cells = max(cells, FORCE_MAX_CELLS)
        order = max(order, FORCE_MAX_GROUP_ORDER)
        print(
            f"warning: caps raised to {cells} cells and group order {order}; "
            "runs may be slow",
            file=sys.stderr,
        )
    return cells, order


def _require_format(args, allowed: Sequence[str]) -> str:
    if args.format not in allowed:
        raise UsageError(f"format {args.format!r} not supported here; choose from {', '.join(allowed)}")
    return args.format


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _part_text(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _label_text(label) -> str:
    return "[" + ";".join(_part_text(c) for c in label) + "]"


# --- commands --------------------------------------------------------------


def cmd_betti(args) -> str:
    K = _cluster(args)
    if args.p < 0 or args.q < 1:
        raise UsageError("need p >= 0 and q >= 1")
    cells, _ = _caps(args)
    if args.d is not None:
        table = {args.d: betti(K, args.p, args.q, args.d, max_cells=cells)}
    else:
        table = poincare_table(K, args.p, args.q, max_cells=cells)
    fmt = args.format
    if fmt == "json":
        return _dump({str(d): r for d, r in table.items()})
    if fmt == "csv":
        return _csv([["degree", "rank"]] + [[d, r] for d, r in table.items()])
    if fmt == "tex":
        body = "".join(f"{d} & {r} \\\\\n" for d, r in table.items())
        return "\\begin{tabular}{rr}\ndegree & rank \\\\ \\hline\n" + body + "\\end{tabular}\n"
    return "".join(f"{d} {r}\n" for d, r in table.items())


def cmd_rays(args) -> str:
    K = _cluster(args)
    cells, _ = _caps(args)
    _require_format(args, ("json",))
    filt = None
    if args.d is not None:
        if args.q < 1 or args.p < 0:
            raise UsageError("need p >= 0 and q >= 1")
        filt = (args.p, args.q, args.d)
    return "".join(line + "\n" for line in stream_json(enumerate_ray_partitions(K, filt, max_cells=cells)))


def cmd_classes(args) -> str:
    _, order = _caps(args)
    _check_kn(args)
    check_group_cap(args.k, args.n, order)
    rows = class_table_rows(args.k, args.n)
    fmt = _require_format(args, ("csv", "json", "plain"))
    if fmt == "json":
        return _dump([{"type": t.to_json(), "size": s, "centralizer": c} for t, s, c in rows])
    if fmt == "plain":
        return "".join(f"{t.label()} {s} {c}\n" for t, s, c in rows)
    return _csv([["type", "size", "centralizer"]] + [[t.label(), s, c] for t, s, c in rows])


def _check_kn(args) -> None:
    if args.k is None or args.n is None:
        raise UsageError("--k and --n are required")
    if args.k < 1 or args.n < 0:
        raise UsageError("need k >= 1 and n >= 0")


def cmd_irreps(args) -> str:
    _, order = _caps(args)
    _check_kn(args)
    k, n = args.k, args.n
    labels = irrep_labels(k, n)
    try:
        check_group_cap(k, n, order)
        table = character_table(k, n, order)
    except CapExceededError as exc:
        print(f"note: {exc}; emitting labels and dimensions only", file=sys.stderr)
        table = None
    types = all_types(k, n)
    fmt = _require_format(args, ("csv", "json", "plain"))
    if fmt == "json":
        out = []
        for lab in labels:
            row = {"label": label_to_json(lab), "dimension": irrep_dimension(k, lab)}
            if table is not None:
                row["character"] = [int(table[lab](t)) for t in types]
            out.append(row)
        doc = {"k": k, "n": n, "irreps": out}
        if table is not None:
            doc["classes"] = [t.to_json() for t in types]
        return _dump(doc)
    header = ["label", "dimension"] + ([t.label() for t in types] if table is not None else [])
    rows = [
        [_label_text(lab), irrep_dimension(k, lab)] + ([int(table[lab](t)) for t in types] if table else [])
        for lab in labels
    ]
    if fmt == "plain":
        return "".join(" ".join(map(str, r)) + "\n" for r in rows)
    return _csv([header] + rows)


def cmd_charpoly(args) -> str:
    _, order = _caps(args)
    if args.k is None or args.d is None or args.label is None:
        raise UsageError("--k, --d and --label are required")
    label = validate_label(args.k, _parse_label(args.label), args.d)
    check_group_cap(args.k, args.d, order)
    poly = character_polynomial_MT(irreducible_character(args.k, args.d, label, order))
    fmt = _require_format(args, ("json", "plain"))
    if fmt == "plain":
        return poly.to_text() + "\n"
    return _dump({"k": args.k, "d": args.d, "label": label_to_json(label), "polynomial": poly.to_json()})


def cmd_decompose(args) -> str:
    _, order = _caps(args)
    if None in (args.k, args.d, args.label, args.n):
        raise UsageError("--k, --d, --label and --n are required")
    label = validate_label(args.k, _parse_label(args.label), args.d)
    if args.n < args.d:
        raise UsageError("need n >= d")
    parts = pieri_decompose_MT(args.k, args.d, label, args.n)
    if args.verify:
        check_group_cap(args.k, args.n, order)
        brute = decompose(induce_class_function(irreducible_character(args.k, args.d, label, order), args.n, max_order=order), order)
        if brute != {lab: 1 for lab in parts}:
            raise RuntimeError(f"brute-force decomposition {brute} disagrees with the Pieri rule")
    rows = [{"label": label_to_json(lab), "multiplicity": 1, "dimension": irrep_dimension(args.k, lab)} for lab in parts]
    fmt = _require_format(args, ("json", "csv", "plain"))
    if fmt == "json":
        return _dump(rows)
    if fmt == "csv":
        return _csv([["label", "multiplicity", "dimension"]] + [[_label_text(label_to_json(r["label"])), r["multiplicity"], r["dimension"]] for r in rows])
    return "".join(f"{_label_text(r['label'])} {r['multiplicity']} {r['dimension']}\n" for r in rows)


def cmd_pad(args) -> str:
    label = _parse_label(args.label)
    out = pad_multipartition(label, args.n)
    if isinstance(out, BelowThreshold):
        return _dump({"n": args.n, "defined": False, "threshold": out.threshold})
    return _dump({"n": args.n, "defined": True, "label": label_to_json(out)})


def cmd_stable(args) -> tuple[str, int]:
    cells, _ = _caps(args)
    if None in (args.k, args.d):
        raise UsageError("--k and --d are required")
    if args.q < 2:
        raise UsageError("stability analysis requires q >= 2")
    report = analyze(args.k, args.p, args.q, args.d, args.window, args.extrapolation, max_cells=cells)
    fmt = _require_format(args, ("json", "csv", "tex"))
    text = report.to_json() + "\n" if fmt == "json" else report_csv(report) if fmt == "csv" else report_tex(report)
    truncated = report.genDeg is None
    if truncated:
        print("error: the cell cap cuts the fitting window short; verdicts SKIPPED", file=sys.stderr)
    return text, 2 if truncated else 0


def cmd_selftest(args) -> tuple[str, int]:
    from .acceptance import run_all

    results = run_all()
    for r in results:
        print(f"criterion {r.number}: {r.seconds:.2f}s", file=sys.stderr)
    lines = [r.line(timing=False) for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"selftest: {'PASS' if ok else 'FAIL'} ({sum(r.passed for r in results)}/{len(results)})")
    return "\n".join(lines) + "\n", 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wreathstab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default="json"):
        p.add_argument("--format", choices=FORMATS, default=fmt_default)
        p.add_argument("--max-cells", type=int, default=None, help=f"cell cap (default {DEFAULT_MAX_CELLS})")
        p.add_argument("--max-group-order", type=int, default=None, help=f"group order cap (default {DEFAULT_MAX_GROUP_ORDER})")
        p.add_argument("--force", action="store_true", help="raise caps; warns on stderr")
        p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("betti", help="Poincare table of a vertical configuration space")
    p.add_argument("--K", help="cluster sizes, comma separated")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, help="single degree (pruned search) instead of the full table")
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("rays", help="stream ray partitions as JSON lines")
    p.add_argument("--K")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--d", type=int)
    common(p)
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("classes", help="conjugacy classes of S_k wr S_n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p, "csv")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("irreps", help="irreducible labels, dimensions and characters")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p, "csv")
    p.set_defaults(func=cmd_irreps)

    p = sub.add_parser("charpoly", help="character polynomial of M(T) for an irreducible T")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--label", required=True, help='JSON list of partitions, e.g. "[[1],[]]"')
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("decompose", help="Pieri decomposition of M(T)_n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--label", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check by brute-force characters")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("pad", help="pad a multipartition to size n")
    p.add_argument("--label", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pad)

    p = sub.add_parser("stable", help="stability report for H^d of V^k_n(R^{p,q})")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--extrapolation", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("selftest", help="run every acceptance criterion")
    common(p, "plain")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        result = args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
