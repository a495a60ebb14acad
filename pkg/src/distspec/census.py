"""Exhaustive small-order verification of the characterization, plus the
table and anchor reproductions.

Connected graphs are generated one isomorphism class at a time by adding a
vertex to every connected graph of the previous order (every connected graph
has a non-cut vertex, so nothing is missed) and deduplicating by a canonical
form computed with colour refinement and individualisation.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import sqrt
from typing import Callable, Iterator

from .classifier import classify, theorem_condition
from .families import build_graph
from .graph import Graph, complete, delete_edge, empty, join, path, star
from .graph6 import emit_graph6, parse_graph6
from .rational import format_decimal, parse_rational
from .spectra import CertifiedSpectrum

DEFAULT_CAP = 7
EXTENDED_CAP = 8


# -- canonical form ---------------------------------------------------------------

def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition; colours stay ordered."""
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = adj[v]
            counts: dict[int, int] = {}
            while nb:
                low = nb & -nb
                c = colors[low.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
                nb ^= low
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors, ncolors = new, len(ranking)


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits (graph6 order) of the graph relabelled so that
    ``order[k]`` becomes vertex k."""
    n = len(order)
    code = 0
    for j in range(1, n):
        vj = order[j]
        for i in range(j):
            code = (code << 1) | ((adj[order[i]] >> vj) & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """``(code, canonical relabelling)``; equal codes iff isomorphic graphs.

    The search tree (refine, then individualise each vertex of the first
    non-singleton cell) depends only on the isomorphism class, so the
    minimum code over its leaves is an invariant.
    """
    adj = g.adj
    n = g.order
    best: list = [None, None]

    def visit(colors: list[int]):
        colors = _refine(adj, colors)
        k = max(colors) + 1
        if k == n:
            order = [0] * n
            for v, c in enumerate(colors):
                order[c] = v
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        for v in range(n):
            if colors[v] == target:
                visit([2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)])

    visit([0] * n)
    order = best[1]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    return best[0], g.relabel(perm)


def canonical_code(g: Graph) -> tuple[int, int]:
    return g.order, canonical_form(g)[0]


# -- enumeration --------------------------------------------------------------------

def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} exceeds the census cap {cap} (raise the cap explicitly, max {EXTENDED_CAP})")
    if cap > EXTENDED_CAP:
        raise ValueError(f"census cap cannot exceed {EXTENDED_CAP}")


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (complete(1),)
    seen: dict[int, Graph] = {}
    for h in _connected(n - 1):
        for mask in range(1, 1 << (n - 1)):
            rows = list(h.adj) + [mask]
            for v in range(n - 1):
                if (mask >> v) & 1:
                    rows[v] |= 1 << (n - 1)
            code, canon = canonical_form(Graph(n, tuple(rows)))
            if code not in seen:
                seen[code] = canon
    return tuple(seen[c] for c in sorted(seen))


def enumerate_connected(n: int, cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    """Every connected graph of order n once per isomorphism class, canonically labelled."""
    _check_cap(n, cap)
    yield from _connected(n)


# -- verification ---------------------------------------------------------------------

@dataclass
class OrderRecord:
    order: int
    connected_count_up_to_iso: int
    in_family_count: int
    agreement_failures: list[str] = field(default_factory=list)


@dataclass
class CensusReport:
    max_order: int
    per_order: list[OrderRecord]
    elapsed: float = 0.0

    @property
    def verified(self) -> bool:
        return all(not r.agreement_failures for r in self.per_order)

    @property
    def total_graphs(self) -> int:
        return sum(r.connected_count_up_to_iso for r in self.per_order)

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "max_order": self.max_order,
            "verified": self.verified,
            "total_graphs": self.total_graphs,
            "per_order": [asdict(r) for r in self.per_order],
        }
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def table(self) -> str:
        lines = [f"{'n':>3} {'graphs':>7} {'in family':>10} {'failures':>9}"]
        for r in self.per_order:
            lines.append(
                f"{r.order:>3} {r.connected_count_up_to_iso:>7} {r.in_family_count:>10} {len(r.agreement_failures):>9}"
            )
        lines.append(f"verified: {self.verified}")
        return "\n".join(lines)


def _classify_chunk(g6s: list[str]) -> list[tuple[str, bool, bool]]:
    out = []
    for s in g6s:
        v = classify(parse_graph6(s), width=None)
        out.append((s, v.structural, v.agree))
    return out


def _chunks(items: list, k: int) -> list[list]:
    size = -(-len(items) // k)
    return [items[i : i + size] for i in range(0, len(items), size)]


def verify_theorem(max_n: int, workers: int = 1, cap: int = DEFAULT_CAP) -> CensusReport:
    """Classify every connected graph of order 2..max_n both ways and collect disagreements.

    Work is split into contiguous chunks of the canonically sorted graph list,
    so the report does not depend on the number of workers.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    _check_cap(max_n, cap)
    start = time.perf_counter()
    records = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(2, max_n + 1):
            g6s = [emit_graph6(g) for g in enumerate_connected(n, cap)]
            if pool is None:
                results = _classify_chunk(g6s)
            else:
                results = [r for part in pool.map(_classify_chunk, _chunks(g6s, workers * 4)) for r in part]
            records.append(
                OrderRecord(
                    order=n,
                    connected_count_up_to_iso=len(g6s),
                    in_family_count=sum(1 for _, s, _ in results if s),
                    agreement_failures=sorted(s for s, _, ok in results if not ok),
                )
            )
    finally:
        if pool is not None:
            pool.shutdown()
    return CensusReport(max_n, records, time.perf_counter() - start)


def in_family_count_by_partitions(n: int) -> int:
    """K_n plus the partitions of n-1 into 2-4 parts that pass the theorem condition."""
    if n < 2:
        return 0

    def parts(m: int, k: int, lo: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if m >= lo:
                yield (m,)
            return
        for a in range(lo, m // k + 1):
            for rest in parts(m - a, k - 1, a):
                yield (a,) + rest

    count = 1
    for k in (2, 3, 4):
        count += sum(1 for p in parts(n - 1, k, 1) if theorem_condition(p)[0])
    return count


def automorphism_count(g: Graph) -> int:
    """Brute force |Aut(g)|; only for tiny graphs."""
    from itertools import permutations

    return sum(1 for p in permutations(range(g.order)) if g.relabel(p).adj == g.adj)


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on vertex set 0..n-1 (not up to isomorphism)."""
    from .graph import is_connected

    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if (mask >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if is_connected(g):
            yield g


# -- tables and anchors -------------------------------------------------------------------

TABLES: dict[int, tuple[tuple[int, ...], dict[int, str]]] = {
    1: (
        (1, 2, 4),
        {
            4: "-0.5877", 5: "-0.5872", 6: "-0.5869", 7: "-0.5866", 8: "-0.5864", 9: "-0.5863",
            10: "-0.5861", 11: "-0.58604", 12: "-0.58595", 13: "-0.58588", 14: "-0.58582",
        },
    ),
    2: ((1, 2, 5), {5: "-0.5867", 6: "-0.5864", 7: "-0.5861", 8: "-0.5859"}),
    3: ((1, 3, 3), {3: "-0.5878", 4: "-0.5870", 5: "-0.5865", 6: "-0.5862", 7: "-0.5859"}),
    4: ((2, 2, 2), {2: "-0.5887", 3: "-0.5872", 4: "-0.5864", 5: "-0.5859"}),
}

ENCLOSURE_WIDTH = Fraction(1, 10**10)


def _decimals(printed: str) -> int:
    return len(printed.partition(".")[2])


@dataclass
class PrintedComparison:
    """A certified enclosure set against a value printed to ``decimals`` places."""

    label: str
    k: int
    printed: str
    lo: Fraction
    hi: Fraction

    @property
    def decimals(self) -> int:
        return _decimals(self.printed)

    @property
    def rendered(self) -> str:
        return format_decimal((self.lo + self.hi) / 2, self.decimals)

    @property
    def matches(self) -> bool:
        """Whole enclosure within half a unit of the last printed digit."""
        p = parse_rational(self.printed)
        half = Fraction(1, 2 * 10**self.decimals)
        return p - half <= self.lo and self.hi <= p + half

    @property
    def near_rounding_boundary(self) -> bool:
        """Within 5% of a printed unit of a half-unit boundary (5e-6 at four decimals)."""
        mid = (self.lo + self.hi) / 2
        frac = (abs(mid) * 10**self.decimals) % 1
        return abs(frac - Fraction(1, 2)) < Fraction(1, 20)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "k": self.k,
            "printed": self.printed,
            "computed": self.rendered,
            "lo": format_decimal(self.lo, 12),
            "hi": format_decimal(self.hi, 12),
            "matches": self.matches,
            "near_rounding_boundary": self.near_rounding_boundary,
        }


@dataclass
class TableRow(PrintedComparison):
    table: int = 0
    sizes: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {"table": self.table, "sizes": list(self.sizes), **super().to_json()}


def reproduce_tables(width: Fraction = ENCLOSURE_WIDTH) -> list[TableRow]:
    rows = []
    for t, (prefix, values) in TABLES.items():
        for n4, printed in values.items():
            sizes = prefix + (n4,)
            lo, hi = CertifiedSpectrum.of_graph(build_graph(sizes)).enclose(2, width)
            rows.append(
                TableRow(
                    label=f"lambda_2 of K1 v ({' u '.join(f'K{s}' for s in sizes)})",
                    k=2, printed=printed, lo=lo, hi=hi, table=t, sizes=sizes,
                )
            )
    return rows


def _k1_join_p4() -> Graph:
    return join(complete(1), path(4))


def _c4() -> Graph:
    return join(empty(2), empty(2))


# (description, graph factory, k, printed value or closed form)
ANCHORS: list[tuple[str, Callable[[], Graph], int, str]] = [
    ("lambda_2 of K1 v 4K3", lambda: build_graph((3, 3, 3, 3)), 2, "-0.5830"),
    ("lambda_2 of K1 v (K1 u 3K4)", lambda: build_graph((1, 4, 4, 4)), 2, "-0.5855"),
    ("lambda_2 of K1 v (K1 u 3K2)", lambda: build_graph((1, 2, 2, 2)), 2, "-0.5925"),
    ("lambda_6 of K1 v (3K1 u K2)", lambda: build_graph((1, 1, 1, 2)), 6, "-2.6288"),
    ("lambda_9 of K1 v (K1 u 2K2 u K3)", lambda: build_graph((1, 2, 2, 3)), 9, "-3.6122"),
    ("lambda_2 of K1 v (K1 u K2 u K4 u K15)", lambda: build_graph((1, 2, 4, 15)), 2, "-0.58577"),
    ("lambda_2 of K1 v (K1 u K2 u K5 u K9)", lambda: build_graph((1, 2, 5, 9)), 2, "-0.58576"),
    ("lambda_2 of K1 v (K1 u K2 u K6 u K7)", lambda: build_graph((1, 2, 6, 7)), 2, "-0.58576"),
    ("lambda_2 of K1 v (K1 u K2 u 2K6)", lambda: build_graph((1, 2, 6, 6)), 2, "-0.5860"),
    ("lambda_2 of K1 v (K1 u 2K3 u K8)", lambda: build_graph((1, 3, 3, 8)), 2, "-0.58576"),
    ("lambda_2 of K1 v (K1 u K3 u K4 u K5)", lambda: build_graph((1, 3, 4, 5)), 2, "-0.58575"),
    ("lambda_2 of K1 v (K1 u K3 u 2K4)", lambda: build_graph((1, 3, 4, 4)), 2, "-0.5862"),
    ("lambda_2 of K1 v (2K2 u 2K3)", lambda: build_graph((2, 2, 3, 3)), 2, "sqrt(2) - 2"),
    ("lambda_2 of K1 v (3K2 u K6)", lambda: build_graph((2, 2, 2, 6)), 2, "-0.5856"),
    ("lambda_2 of K1 v P4", _k1_join_p4, 2, "-0.3820"),
]

CLOSED_FORMS: dict[str, float] = {
    "1 - sqrt(3)": 1 - sqrt(3),
    "2 - sqrt(7)": 2 - sqrt(7),
    "3 - sqrt(13)": 3 - sqrt(13),
    "4 - sqrt(21)": 4 - sqrt(21),
    "(3 - sqrt(17))/2": (3 - sqrt(17)) / 2,
    "sqrt(2) - 2": sqrt(2) - 2,
    "-2": -2.0,
    "-1": -1.0,
    "0": 0.0,
}

# eigenvalues the argument states in closed form
CLOSED_FORM_ANCHORS: list[tuple[str, Callable[[], Graph], int, str]] = [
    ("lambda_2 of P3", lambda: path(3), 2, "1 - sqrt(3)"),
    ("lambda_2 of S4", lambda: star(4), 2, "2 - sqrt(7)"),
    ("lambda_4 of S4", lambda: star(4), 4, "-2"),
    ("lambda_2 of S5", lambda: star(5), 2, "3 - sqrt(13)"),
    ("lambda_2 of S6", lambda: star(6), 2, "4 - sqrt(21)"),
    ("lambda_2 of K4 - e", lambda: delete_edge(complete(4), 0, 1), 2, "(3 - sqrt(17))/2"),
    ("lambda_2 of K1 v (2K2 u 2K3)", lambda: build_graph((2, 2, 3, 3)), 2, "sqrt(2) - 2"),
    ("lambda_2 of C4", _c4, 2, "0"),
    ("lambda_2 of K5", lambda: complete(5), 2, "-1"),
]

CLOSED_FORM_TOLERANCE = 1e-9


@dataclass
class AnchorCheck(PrintedComparison):
    """Printed decimal or closed-form reference; closed forms are checked to 1e-9."""

    @property
    def closed_form(self) -> float | None:
        return CLOSED_FORMS.get(self.printed)

    @property
    def decimals(self) -> int:
        return 10 if self.closed_form is not None else _decimals(self.printed)

    @property
    def error(self) -> float | None:
        v = self.closed_form
        if v is None:
            return None
        return max(abs(float(self.lo) - v), abs(float(self.hi) - v))

    @property
    def matches(self) -> bool:
        if self.closed_form is not None:
            return self.error <= CLOSED_FORM_TOLERANCE
        return super().matches

    @property
    def near_rounding_boundary(self) -> bool:
        return False if self.closed_form is not None else super().near_rounding_boundary


def _check_anchors(entries, width: Fraction) -> list[AnchorCheck]:
    out = []
    for label, make, k, printed in entries:
        lo, hi = CertifiedSpectrum.of_graph(make()).enclose(k, width)
        out.append(AnchorCheck(label, k, printed, lo, hi))
    return out


def anchor_eigenvalues(width: Fraction = ENCLOSURE_WIDTH) -> list[AnchorCheck]:
    return _check_anchors(ANCHORS, width)


def closed_form_anchors(width: Fraction = ENCLOSURE_WIDTH) -> list[AnchorCheck]:
    return _check_anchors(CLOSED_FORM_ANCHORS, width)
