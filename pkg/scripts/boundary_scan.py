"""Exact sign scans at t = -2929/5000 along the four-clique families.

For each prefix (n1, n2, n3) the scan walks n4 upward and reports where the
structural condition and the certified spectral comparison change, and for
the (1, 1, n3, n4) family it prints the exact rational cut in n4.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from distspec.classifier import theorem_condition
from distspec.families import build_graph, poly_h, r_affine_in_n4, r_n4_threshold
from distspec.rational import format_decimal
from distspec.spectra import THRESHOLD, Lambda2Position, compare_lambda2_threshold


@dataclass
class ScanConfig:
    prefixes: list[tuple[int, int, int]] = field(
        default_factory=lambda: [(1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 3), (1, 3, 4), (2, 2, 2)]
    )
    extra: int = 4
    r_n3: list[int] = field(default_factory=lambda: [873, 874, 875, 1000, 1746, 1747])


def scan_prefix(prefix: tuple[int, int, int], extra: int) -> None:
    n4 = prefix[-1]
    last = None
    while True:
        sizes = prefix + (n4,)
        structural = theorem_condition(sizes)[0]
        spectral = compare_lambda2_threshold(build_graph(sizes))
        agree = structural == (spectral is Lambda2Position.BELOW)
        print(f"  {list(sizes)}: structural {structural!s:<5} spectral {spectral.value:<11} agree {agree}")
        if not structural:
            if last is None:
                last = n4
            if n4 - last >= extra:
                break
        n4 += 1


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--extra", type=int, default=ScanConfig.extra, help="rows to print past each flip")
    cfg = ScanConfig(extra=p.parse_args().extra)

    for prefix in cfg.prefixes:
        print(f"prefix {list(prefix)}")
        scan_prefix(prefix, cfg.extra)

    print("h(1,2,3,n4) at t:")
    for n4 in (869, 870, 871, 872):
        print(f"  n4={n4}: {format_decimal(poly_h(1, 2, 3, n4).poly(THRESHOLD), 8)}")

    print("r(n3, n4)(t) = slope*n4 + intercept:")
    for n3 in cfg.r_n3:
        slope, intercept = r_affine_in_n4(n3)
        cut = r_n4_threshold(n3)
        cut_text = "none (slope <= 0)" if cut is None else f"{cut} ~ {format_decimal(cut, 4)}"
        print(f"  n3={n3}: slope {format_decimal(slope, 10)}, intercept {format_decimal(intercept, 6)}, n4 cut {cut_text}")


if __name__ == "__main__":
    main()
