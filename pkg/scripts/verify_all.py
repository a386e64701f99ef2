"""Run every verification suite over a grid of small groups and summarize.

Exit status is 1 if any suite fails.
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from wreathgelfand.verify import run_suite


@dataclass
class VerifyConfig:
    plan: list[tuple[str, int, int]] = field(default_factory=lambda: [
        ("gelfand", 1, 4), ("gelfand", 2, 2), ("gelfand", 2, 3), ("gelfand", 3, 3),
        ("orthogonality", 1, 3), ("orthogonality", 1, 4), ("orthogonality", 2, 2),
        ("orthogonality", 2, 3), ("orthogonality", 3, 3),
        ("mn-vs-def", 2, 2), ("mn-vs-def", 2, 3), ("mn-vs-def", 2, 4),
        ("induced", 2, 2), ("induced", 2, 3), ("induced", 3, 2),
        ("zonal-eq", 2, 2), ("zonal-eq", 2, 3),
    ])
    samples: int | None = None
    seed: int = 0
    json_out: bool = False


def run(cfg: VerifyConfig) -> bool:
    ok = True
    reports = []
    for suite, k, n in cfg.plan:
        t0 = time.perf_counter()
        rep = run_suite(suite, n, k, cfg.samples, cfg.seed)
        dt = time.perf_counter() - t0
        ok &= rep.passed
        reports.append(rep.to_dict() | {"k": k, "n": n, "seconds": round(dt, 2)})
        if not cfg.json_out:
            status = "PASS" if rep.passed else "FAIL"
            print(f"{suite:14s} k={k} n={n}  {rep.checks:6d} checks  {status}  ({dt:.1f}s)")
            for f in rep.failures[:3]:
                print(f"    {f}")
    if cfg.json_out:
        print(json.dumps(reports, indent=2))
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    raise SystemExit(0 if run(VerifyConfig(samples=a.samples, seed=a.seed, json_out=a.json)) else 1)


if __name__ == "__main__":
    main()
