"""Exact rational parsing and decimal rendering for the CLI and reports."""

from __future__ import annotations

import re
from fractions import Fraction

_DECIMAL = re.compile(r"^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a decimal literal such as ``"-0.5858"`` or ``"1e-9"`` exactly."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            q = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {text!r}") from exc
        return q
    m = _DECIMAL.match(s)
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"not a decimal number: {text!r}")
    sign, whole, frac, exp = m.groups()
    frac = frac or ""
    value = Fraction(int((whole or "0") + frac), 10 ** len(frac))
    if exp:
        value *= Fraction(10) ** int(exp)
    return -value if sign == "-" else value


def round_half_away(x: Fraction, digits: int) -> Fraction:
    scale = 10**digits
    q, r = divmod(abs(Fraction(x)) * scale, 1)
    q = int(q) + (1 if r >= Fraction(1, 2) else 0)
    return Fraction(q if x >= 0 else -q, scale)


def format_decimal(x: Fraction, digits: int) -> str:
    """Exact rational rendered at ``digits`` decimals, rounding half away from zero."""
    r = round_half_away(Fraction(x), digits)
    scale = 10**digits
    q = abs(r.numerator * (scale // r.denominator))
    whole, frac = divmod(q, scale)
    sign = "-" if r < 0 else ""
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def format_scientific(x: Fraction, digits: int = 3) -> str:
    return f"{float(x):.{digits}e}"
