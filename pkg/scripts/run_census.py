"""Exhaustive check of the lambda_2 characterization over small connected graphs.

    python3 scripts/run_census.py --max-n 7 --workers 4 --out census.json
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from distspec.census import DEFAULT_CAP, EXTENDED_CAP, in_family_count_by_partitions, verify_theorem


@dataclass
class CensusConfig:
    max_n: int = 7
    workers: int = 1
    out: Path | None = None

    @property
    def cap(self) -> int:
        return EXTENDED_CAP if self.max_n > DEFAULT_CAP else DEFAULT_CAP


def run(cfg: CensusConfig) -> dict:
    report = verify_theorem(cfg.max_n, workers=cfg.workers, cap=cfg.cap)
    print(report.table())
    oracle = {r.order: in_family_count_by_partitions(r.order) for r in report.per_order}
    for r in report.per_order:
        if r.in_family_count != oracle[r.order]:
            print(f"n={r.order}: in-family count {r.in_family_count} but partition count {oracle[r.order]}")
    print(f"elapsed {report.elapsed:.1f}s with {cfg.workers} worker(s)")
    return {"config": {k: str(v) if isinstance(v, Path) else v for k, v in asdict(cfg).items()},
            **report.to_json(include_timing=True)}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    p.add_argument("--workers", type=int, default=CensusConfig.workers)
    p.add_argument("--out", type=Path)
    a = p.parse_args()
    result = run(CensusConfig(a.max_n, a.workers, a.out))
    if a.out:
        a.out.write_text(json.dumps(result, indent=2) + "\n")


if __name__ == "__main__":
    main()
