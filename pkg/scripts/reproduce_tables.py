"""Print the four lambda_2 tables and the scattered eigenvalue anchors next to
their certified enclosures."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from distspec.census import anchor_eigenvalues, closed_form_anchors, reproduce_tables
from distspec.rational import format_decimal


@dataclass
class TableConfig:
    width: Fraction = Fraction(1, 10**10)
    digits: int = 12


def run(cfg: TableConfig) -> bool:
    ok = True
    print(f"{'table':>5} {'sizes':<16} {'printed':>9} {'enclosure':>34} match")
    for r in reproduce_tables(cfg.width):
        enc = f"[{format_decimal(r.lo, cfg.digits)}, {format_decimal(r.hi, cfg.digits)}]"
        flag = "yes" if r.matches else "NO"
        note = " (near rounding boundary)" if r.near_rounding_boundary else ""
        print(f"{r.table:>5} {str(list(r.sizes)):<16} {r.printed:>9} {enc:>34} {flag}{note}")
        ok &= r.matches
    print()
    for a in anchor_eigenvalues(cfg.width) + closed_form_anchors(cfg.width):
        flag = "yes" if a.matches else "NO"
        print(f"{a.label:<42} k={a.k:<2} {a.printed:>18} -> {a.rendered:>14} {flag}")
        ok &= a.matches
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--width", type=Fraction, default=TableConfig.width)
    a = p.parse_args()
    raise SystemExit(0 if run(TableConfig(width=a.width)) else 2)


if __name__ == "__main__":
    main()
