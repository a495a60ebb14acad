"""Command-line interface.

Exit status: 0 on success, 1 on usage or input errors, 2 when a verification
(census, tables, anchors or a classification cross-check) finds a disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import census
from .classifier import classify
from .families import CliqueJoinSpec, build_graph, poly_f, poly_g, poly_h, poly_r, poly_s
from .graph import Graph, GraphError, complete, cycle, distance_matrix, is_connected, path, star
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .rational import format_decimal, format_scientific, parse_rational
from .spectra import CertifiedSpectrum, float_spectrum

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2
DIGITS = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_NAMED = re.compile(r"^([KPCS])_?(\d+)$")
_NAMED_BUILDERS = {"K": complete, "P": path, "C": cycle, "S": star}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def read_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.clique_join is not None:
        return build_graph(CliqueJoinSpec(_int_list(args.clique_join)))
    m = _NAMED.match(args.named.strip())
    if not m:
        raise UsageError(f"named graph must look like K5, P4, C6 or S5, got {args.named!r}")
    return _NAMED_BUILDERS[m.group(1)](int(m.group(2)))


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--g6", help="graph6 string (order <= 62)")
    g.add_argument("--clique-join", metavar="A,B,...", help="K1 v (K_A u K_B u ...), 2 to 4 sizes")
    g.add_argument("--named", metavar="Kn|Pn|Cn|Sn", help="complete graph, path, cycle or star")


def _interval_json(lo: Fraction, hi: Fraction) -> dict:
    return {
        "value": format_decimal((lo + hi) / 2, DIGITS),
        "lo": format_decimal(lo, DIGITS + 2),
        "hi": format_decimal(hi, DIGITS + 2),
        "width": format_scientific(hi - lo),
    }


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("distance spectra need a connected graph")


def cmd_spectrum(args) -> tuple[dict, int]:
    g = read_graph(args)
    _require_connected(g)
    d = distance_matrix(g)
    spec = CertifiedSpectrum.of_matrix(d)
    enc = spec.enclosure(args.width)
    return {
        "graph6": emit_graph6(g) if g.order <= 62 else None,
        "order": g.order,
        "char_poly": {"coefficients": [str(c) for c in spec.poly.coeffs], "text": str(spec.poly)},
        "eigenvalues": [{"k": k, **_interval_json(lo, hi)} for k, (lo, hi) in enumerate(enc.intervals, 1)],
        "float_eigenvalues": [f"{x:.{DIGITS}f}" for x in float_spectrum(d)],
    }, EXIT_OK


def cmd_lambda(args) -> tuple[dict, int]:
    g = read_graph(args)
    _require_connected(g)
    if not 1 <= args.k <= g.order:
        raise UsageError(f"k must be in 1..{g.order}")
    lo, hi = CertifiedSpectrum.of_graph(g).enclose(args.k, args.width)
    return {"order": g.order, "k": args.k, **_interval_json(lo, hi)}, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    g = read_graph(args)
    v = classify(g)
    out = {"order": g.order, **v.to_json(DIGITS)}
    return out, EXIT_OK if v.agree else EXIT_DISAGREE


def cmd_verify(args) -> tuple[dict, int]:
    cap = census.EXTENDED_CAP if args.extended else census.DEFAULT_CAP
    if args.max_n > cap:
        raise UsageError(f"--max-n above {cap} needs --extended (maximum {census.EXTENDED_CAP})")
    report = census.verify_theorem(args.max_n, workers=args.workers, cap=cap)
    if args.table:
        print(report.table(), file=sys.stderr)
    return report.to_json(include_timing=args.timing), EXIT_OK if report.verified else EXIT_DISAGREE


def _rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()})
    return buf.getvalue()


def cmd_tables(args) -> tuple[dict | str, int]:
    rows = census.reproduce_tables()
    status = EXIT_OK if all(r.matches for r in rows) else EXIT_DISAGREE
    data = [r.to_json() for r in rows]
    return (_rows_csv(data) if args.csv else {"rows": data}), status


def cmd_anchors(args) -> tuple[dict | str, int]:
    rows = census.anchor_eigenvalues() + census.closed_form_anchors()
    status = EXIT_OK if all(r.matches for r in rows) else EXIT_DISAGREE
    data = [r.to_json() for r in rows]
    return (_rows_csv(data) if args.csv else {"anchors": data}), status


_FAMILIES = {"f": (poly_f, 2), "g": (poly_g, 3), "h": (poly_h, 4), "r": (poly_r, 2), "s": (poly_s, 1)}


def cmd_poly(args) -> tuple[dict, int]:
    fn, arity = _FAMILIES[args.family]
    params = _int_list(args.params)
    if len(params) != arity:
        raise UsageError(f"family {args.family} takes {arity} parameter(s), got {len(params)}")
    fp = fn(*params)
    out: dict = {
        "family": args.family,
        "kind": fp.kind.value,
        "params": params,
        "coefficients": [str(c) for c in fp.poly.coeffs],
        "text": str(fp.poly),
    }
    if args.eval is not None:
        try:
            t = parse_rational(args.eval)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        value = Fraction(fp.poly(t))
        out["eval"] = {
            "at": f"{t.numerator}/{t.denominator}",
            "value": f"{value.numerator}/{value.denominator}",
            "sign": (value > 0) - (value < 0),
            "decimal": format_decimal(value, DIGITS),
        }
    return out, EXIT_OK


def _width(text: str) -> Fraction:
    try:
        w = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if w <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return w


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="distspec", description="Certified distance spectra and the lambda_2 < -0.5858 characterization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="certified distance spectrum of a graph")
    _add_input(p)
    p.add_argument("--width", type=_width, default=Fraction(1, 10**10))
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("lambda", help="certified enclosure of the k-th distance eigenvalue")
    p.add_argument("k", type=int)
    _add_input(p)
    p.add_argument("--width", type=_width, default=Fraction(1, 10**10))
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("classify", help="structural and spectral verdict for lambda_2 < -0.5858")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive check over all connected graphs up to an order")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--extended", action="store_true", help="allow order 8")
    p.add_argument("--timing", action="store_true", help="include elapsed time (output no longer byte-stable)")
    p.add_argument("--table", action="store_true", help="also print a summary table to stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="reproduce the four lambda_2 tables")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("anchors", help="reproduce the scattered eigenvalue constants")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_anchors)

    p = sub.add_parser("poly", help="family polynomials f, g, h, r, s")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--params", required=True, metavar="A,B,...")
    p.add_argument("--eval", metavar="P/Q|DECIMAL", help="evaluate exactly at a rational point")
    p.set_defaults(func=cmd_poly)
    return parser


_VALUE_OPTIONS = ("--eval", "--width")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--eval -2929/5000`` into ``--eval=-2929/5000``; argparse would
    otherwise read the negative rational as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_attach_negative_values(argv))
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        result, status = args.func(args)
    except UsageError as exc:
        print(f"distspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, GraphError, ValueError) as exc:
        print(f"distspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
