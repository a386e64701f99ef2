"""Command line interface.

    wreathgelfand classes      --k K --n N [--marked]
    wreathgelfand chartable    --k K --n N
    wreathgelfand genchartable --k K --n N [--method def|mn]
    wreathgelfand verify SUITE --k K --n N [--samples S] [--seed SEED]
    wreathgelfand eval         --k K --index LABEL --element ELEMENT [--method def|mn]

All commands take ``--format text|csv|json`` and ``--cap``. Exit status is 0 on
success, 1 when a verification or consistency check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import gelfand
from .exactnum import render
from .irrchar import CharacterTable, character_table
from .shapes import Marked, parse_shape, render_shape
from .verify import SUITES, run_suite
from .wreath import (
    DEFAULT_CAP,
    CapExceeded,
    class_representative,
    class_size,
    g_classes,
    group_order,
    k_class_size,
    k_classes,
    marked_type_of,
    parse_element,
    render_element,
)

SCHEMA_VERSION = "1"
REPRESENTATIVE_LIMIT = 10**4


@dataclass
class OutputDocument:
    k: int
    n: int
    kind: str
    rows: list[str] = field(default_factory=list)
    cols: list[str] = field(default_factory=list)
    orders: list[int] = field(default_factory=list)
    values: list[list[str]] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        out = {
            "schema_version": self.schema_version,
            "group": {"k": self.k, "n": self.n},
            "kind": self.kind,
            "rows": self.rows,
            "cols": self.cols,
            "orders": self.orders,
            "values": self.values,
        }
        out.update(self.extra)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> OutputDocument:
        known = {"schema_version", "group", "kind", "rows", "cols", "orders", "values"}
        return cls(
            k=d["group"]["k"],
            n=d["group"]["n"],
            kind=d["kind"],
            rows=list(d["rows"]),
            cols=list(d["cols"]),
            orders=list(d["orders"]),
            values=[list(r) for r in d["values"]],
            extra={key: v for key, v in d.items() if key not in known},
            schema_version=d["schema_version"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> OutputDocument:
        return cls.from_dict(json.loads(text))


def table_document(table: CharacterTable, kind: str) -> OutputDocument:
    return OutputDocument(
        k=table.k,
        n=table.n,
        kind=kind,
        rows=[render_shape(r) for r in table.row_labels],
        cols=[render_shape(c) for c in table.col_labels],
        orders=list(table.class_orders),
        values=[[render(v) for v in row] for row in table.values],
    )


# -- renderers -----------------------------------------------------------------------

def _grid_text(header: list[str], body: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = []
    for r in [header] + body:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _grid_csv(header: list[str], body: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(body)
    return buf.getvalue()


def render_document(doc: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return doc.to_json()
    if doc.kind in ("chartable", "genchartable"):
        header = [""] + doc.cols
        body = [["Order"] + [str(o) for o in doc.orders]]
        body += [[r] + vals for r, vals in zip(doc.rows, doc.values)]
    elif doc.kind == "classes":
        reps = doc.extra.get("representatives")
        header = ["class", "order"] + (["representative"] if reps else [])
        body = [
            [c, str(o)] + ([reps[i]] if reps else [])
            for i, (c, o) in enumerate(zip(doc.cols, doc.orders))
        ]
    elif doc.kind == "value":
        header = ["index", "element", "class", "value"]
        body = [[doc.extra["index"], doc.extra["element"], doc.extra["class"], doc.extra["value"]]]
    else:  # verify-report
        rep = doc.extra["report"]
        header = ["suite", "k", "n", "checks", "failures", "status"]
        body = [[
            rep["suite"], str(doc.k), str(doc.n), str(rep["checks"]),
            str(rep["failure_count"]), "PASS" if rep["passed"] else "FAIL",
        ]]
        if fmt == "text":
            out = _grid_text(header, body)
            for f in rep["failures"]:
                out += f"  failure: {f}\n"
            return out
    return _grid_csv(header, body) if fmt == "csv" else _grid_text(header, body)


# -- commands ------------------------------------------------------------------------

def cmd_classes(k: int, n: int, marked: bool) -> OutputDocument:
    if marked:
        labels = list(k_classes(n, k))
        orders = [k_class_size(c) for c in labels]
    else:
        labels = list(g_classes(n, k))
        orders = [class_size(c) for c in labels]
    extra = {}
    if group_order(n, k) <= REPRESENTATIVE_LIMIT:
        extra["representatives"] = [render_element(class_representative(c)) for c in labels]
    assert sum(orders) == group_order(n, k)
    return OutputDocument(
        k, n, "classes", cols=[render_shape(c) for c in labels], orders=orders, extra=extra
    )


def cmd_chartable(k: int, n: int) -> OutputDocument:
    return table_document(character_table(n, k), "chartable")


def cmd_genchartable(k: int, n: int, method: str, cap: int) -> OutputDocument:
    return table_document(gelfand.gen_char_table(n, k, _method(method), cap), "genchartable")


def cmd_verify(suite: str, k: int, n: int, samples, seed: int, cap: int) -> OutputDocument:
    rep = run_suite(suite, n, k, samples, seed, cap)
    return OutputDocument(k, n, "verify-report", extra={"report": rep.to_dict()})


def cmd_eval(k: int, index: str, element: str, method: str, cap: int) -> OutputDocument:
    idx = parse_shape(index, k)
    if not isinstance(idx, Marked):
        raise ValueError("the index must carry a marked part, e.g. '1|2*'")
    x = parse_element(element, k)
    if x.n != idx.size:
        raise ValueError(f"element has degree {x.n}, index has size {idx.size}")
    cls = marked_type_of(x)
    if _method(method) == "mn":
        if k != 2:
            raise ValueError("method 'mn' needs k = 2")
        value = render(gelfand.gen_char_mn(idx, cls))
    else:
        value = render(gelfand.gen_char_def_fast(idx, x, cap))
    return OutputDocument(
        k, x.n, "value",
        extra={"index": render_shape(idx), "element": render_element(x),
               "class": render_shape(cls), "value": value},
    )


def _method(m: str) -> str:
    return "mn" if m == "mn" else "definition"


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, required=True, help="order of the cyclic group")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest group enumerated by brute force")
    sized = argparse.ArgumentParser(add_help=False, parents=[common])
    sized.add_argument("--n", type=int, required=True, help="degree of the symmetric group")

    parser = argparse.ArgumentParser(
        prog="wreathgelfand",
        description="Characters and generalized characters of Z_k wr S_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", parents=[sized], help="list (K-)conjugacy classes")
    p.add_argument("--marked", action="store_true", help="list K-classes (marked types)")

    sub.add_parser("chartable", parents=[sized], help="irreducible character table")

    p = sub.add_parser("genchartable", parents=[sized], help="generalized character table")
    p.add_argument("--method", choices=("def", "mn"), default="def")

    p = sub.add_parser("verify", parents=[sized], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("eval", parents=[common], help="evaluate one generalized character")
    p.add_argument("--index", required=True, help="marked shape label, e.g. '1|2*'")
    p.add_argument("--element", required=True, help="'colors ; permutation'")
    p.add_argument("--method", choices=("def", "mn"), default="def")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.k < 1:
        parser.error("--k must be >= 1")
    if getattr(args, "n", 1) < 1:
        parser.error("--n must be >= 1")
    try:
        if args.command == "classes":
            doc = cmd_classes(args.k, args.n, args.marked)
        elif args.command == "chartable":
            doc = cmd_chartable(args.k, args.n)
        elif args.command == "genchartable":
            if args.method == "mn" and args.k != 2:
                parser.error("--method mn needs --k 2")
            doc = cmd_genchartable(args.k, args.n, args.method, args.cap)
        elif args.command == "verify":
            if args.suite == "mn-vs-def" and args.k != 2:
                parser.error("suite mn-vs-def needs --k 2")
            doc = cmd_verify(args.suite, args.k, args.n, args.samples, args.seed, args.cap)
        else:
            doc = cmd_eval(args.k, args.index, args.element, args.method, args.cap)
    except (ValueError, CapExceeded) as exc:
        print(f"wreathgelfand: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"wreathgelfand: internal consistency failure: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_document(doc, args.format))
    if doc.kind == "verify-report" and not doc.extra["report"]["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
