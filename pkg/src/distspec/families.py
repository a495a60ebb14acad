"""Closed-form characteristic polynomial factors of K1 v (K_n1 u ... u K_nr).

The formulas below are transcribed coefficient by coefficient; they are never
re-derived from determinants.  ``factorization_identity_check`` ties them to
the generic exact characteristic polynomial, so a transcription slip in
either path shows up as a failed identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable

from .graph import MAX_ORDER, Graph, GraphError, complete, join, union_all
from .polynomial import IntPolynomial
from .spectra import THRESHOLD, char_poly


@dataclass(frozen=True)
class CliqueJoinSpec:
    """Clique sizes of K1 v (K_n1 u ... u K_nr), 2 <= r <= 4, kept sorted."""

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        s = tuple(sorted(int(x) for x in sizes))
        if not 2 <= len(s) <= 4:
            raise ValueError(f"need 2 to 4 clique sizes, got {len(s)}")
        if s[0] < 1:
            raise ValueError("clique sizes must be positive")
        object.__setattr__(self, "sizes", s)

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return 1 + sum(self.sizes)

    def __str__(self) -> str:
        return "K1 v (" + " u ".join(f"K{n}" for n in self.sizes) + ")"


def build_graph(spec: CliqueJoinSpec | Iterable[int]) -> Graph:
    """Apex (vertex 0) joined to disjoint cliques of the given sizes."""
    if not isinstance(spec, CliqueJoinSpec):
        spec = CliqueJoinSpec(spec)
    if spec.order > MAX_ORDER:
        raise GraphError(f"order {spec.order} exceeds the explicit-graph cap {MAX_ORDER}")
    return join(complete(1), union_all(complete(n) for n in spec.sizes))


class Kind(str, enum.Enum):
    F = "F"
    G4 = "G4"
    H = "H"
    R = "R"
    S = "S"


@dataclass(frozen=True)
class FamilyPolynomial:
    kind: Kind
    params: tuple[int, ...]
    poly: IntPolynomial

    def __call__(self, t: Fraction | int) -> Fraction:
        return eval_at(self, t)


def _esym(ns: tuple[int, ...], k: int) -> int:
    return sum(prod(c) for c in combinations(ns, k))


def _check_positive(*ns: int) -> None:
    if any(n < 1 for n in ns):
        raise ValueError("family parameters must be positive integers")


def _desc(*coeffs: int) -> IntPolynomial:
    """Build from coefficients listed highest degree first."""
    return IntPolynomial(reversed(coeffs))


def poly_f(n1: int, n2: int) -> FamilyPolynomial:
    _check_positive(n1, n2)
    p = _desc(
        1,
        -(n1 + n2 - 2),
        -(3 * n1 * n2 + 2 * n1 + 2 * n2 - 1),
        -(2 * n1 * n2 + n1 + n2),
    )
    return FamilyPolynomial(Kind.F, (n1, n2), p)


def poly_g(n1: int, n2: int, n3: int) -> FamilyPolynomial:
    _check_positive(n1, n2, n3)
    ns = (n1, n2, n3)
    e1, e2, e3 = (_esym(ns, k) for k in (1, 2, 3))
    p = _desc(
        1,
        -(e1 - 3),
        -3 * (e2 + e1 - 1),
        -(5 * (e2 + e3) + 3 * e1 - 1),
        -(3 * e3 + 2 * e2 + e1),
    )
    return FamilyPolynomial(Kind.G4, ns, p)


def poly_h(n1: int, n2: int, n3: int, n4: int) -> FamilyPolynomial:
    _check_positive(n1, n2, n3, n4)
    ns = (n1, n2, n3, n4)
    e1, e2, e3, e4 = (_esym(ns, k) for k in (1, 2, 3, 4))
    p = _desc(
        1,
        -(e1 - 4),
        -(3 * e2 + 4 * e1 - 6),
        -(5 * e3 + 8 * e2 + 6 * e1 - 4),
        -(7 * e4 + 8 * e3 + 7 * e2 + 4 * e1 - 1),
        -(4 * e4 + 3 * e3 + 2 * e2 + e1),
    )
    return FamilyPolynomial(Kind.H, ns, p)


def poly_r(n3: int, n4: int) -> FamilyPolynomial:
    """Quartic cofactor of (x + 2) in h for the (1, 1, n3, n4) family."""
    _check_positive(n3, n4)
    p = _desc(
        1,
        -(n3 + n4),
        -(3 * n3 * n4 + 8 * n3 + 8 * n4 + 5),
        -(12 * n3 * n4 + 11 * n3 + 11 * n4 + 6),
        -(6 * n3 * n4 + 4 * n3 + 4 * n4 + 2),
    )
    return FamilyPolynomial(Kind.R, (n3, n4), p)


def poly_s(n4: int) -> FamilyPolynomial:
    """Quartic cofactor of (x + 3) in h for the (1, 2, 2, n4) family."""
    _check_positive(n4)
    p = _desc(1, -(n4 + 4), -(16 * n4 + 26), -(38 * n4 + 32), -(17 * n4 + 11))
    return FamilyPolynomial(Kind.S, (n4,), p)


def eval_at(p: FamilyPolynomial | IntPolynomial, t: Fraction | int) -> Fraction:
    poly = p.poly if isinstance(p, FamilyPolynomial) else p
    return Fraction(poly(Fraction(t)))


def family_polynomial(spec: CliqueJoinSpec | Iterable[int]) -> FamilyPolynomial:
    if not isinstance(spec, CliqueJoinSpec):
        spec = CliqueJoinSpec(spec)
    return {2: poly_f, 3: poly_g, 4: poly_h}[spec.r](*spec.sizes)


def expected_char_poly(spec: CliqueJoinSpec | Iterable[int]) -> IntPolynomial:
    """(x + 1)^(n - r - 1) times the family polynomial."""
    if not isinstance(spec, CliqueJoinSpec):
        spec = CliqueJoinSpec(spec)
    return IntPolynomial.linear_power(1, spec.order - spec.r - 1) * family_polynomial(spec).poly


def factorization_identity_check(spec: CliqueJoinSpec | Iterable[int]) -> bool:
    if not isinstance(spec, CliqueJoinSpec):
        spec = CliqueJoinSpec(spec)
    return char_poly(build_graph(spec)) == expected_char_poly(spec)


def r_affine_in_n4(n3: int, t: Fraction = THRESHOLD) -> tuple[Fraction, Fraction]:
    """``r_{1,1,n3,n4}(t) = slope * n4 + intercept``; returns ``(slope, intercept)``."""
    t = Fraction(t)
    slope = -(t**3) - (3 * n3 + 8) * t**2 - (12 * n3 + 11) * t - (6 * n3 + 4)
    intercept = t**4 - n3 * t**3 - (8 * n3 + 5) * t**2 - (11 * n3 + 6) * t - (4 * n3 + 2)
    return slope, intercept


def r_n4_threshold(n3: int, t: Fraction = THRESHOLD) -> Fraction | None:
    """Exact root in n4 of ``r_{1,1,n3,n4}(t) = 0``.

    For a positive slope, r(t) < 0 holds exactly when n4 is below this value.
    Returns None when the slope is not positive (r(t) then never changes sign
    from negative as n4 grows).
    """
    slope, intercept = r_affine_in_n4(n3, t)
    if slope <= 0:
        return None
    return -intercept / slope


def specs_up_to_order(max_order: int) -> list[CliqueJoinSpec]:
    """Every sorted spec with 2-4 parts and total order (apex included) <= max_order."""
    out = []

    def rec(prefix: list[int], remaining: int, lo: int):
        if len(prefix) >= 2:
            out.append(CliqueJoinSpec(prefix))
        if len(prefix) == 4:
            return
        for k in range(lo, remaining + 1):
            rec(prefix + [k], remaining - k, k)

    rec([], max_order - 1, 1)
    return sorted(out, key=lambda s: (s.order, s.sizes))
