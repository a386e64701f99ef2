"""Print generalized character tables for small groups.

    python3 scripts/reproduce_tables.py                # S_3, S_4, H_2, H_3
    python3 scripts/reproduce_tables.py --out tables/  # also write CSV and JSON files
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from wreathgelfand.cli import render_document, table_document
from wreathgelfand.gelfand import gen_char_table


@dataclass
class TableConfig:
    groups: list[tuple[int, int]] = field(default_factory=lambda: [(1, 3), (1, 4), (2, 2), (2, 3)])
    method: str = "definition"
    out: Path | None = None


def run(cfg: TableConfig) -> None:
    for k, n in cfg.groups:
        doc = table_document(gen_char_table(n, k, cfg.method), "genchartable")
        print(f"== Z_{k} wr S_{n}: Z_{k} wr S_{n - 1}-generalized characters ==")
        print(render_document(doc, "text"))
        if cfg.out is not None:
            cfg.out.mkdir(parents=True, exist_ok=True)
            stem = cfg.out / f"genchartable_k{k}_n{n}"
            stem.with_suffix(".csv").write_text(render_document(doc, "csv"))
            stem.with_suffix(".json").write_text(render_document(doc, "json"))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--group", action="append", metavar="K,N", help="repeatable; default S3 S4 H2 H3")
    ap.add_argument("--method", choices=("definition", "mn"), default="definition")
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    cfg = TableConfig(method=a.method, out=a.out)
    if a.group:
        cfg.groups = [tuple(int(v) for v in g.split(",")) for g in a.group]
    run(cfg)


if __name__ == "__main__":
    main()
