"""Exact univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending degree order.  Everything that the
certified spectral code needs lives here: arithmetic, exact division,
primitive-PRS gcd, Yun square-free decomposition and Sturm chains evaluated
at rational points without ever leaving the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(a) for a in coeffs)
        object.__setattr__(self, "coeffs", c)

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, a: int) -> IntPolynomial:
        return cls((a,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def linear_power(cls, root_shift: int, exponent: int) -> IntPolynomial:
        """``(x + root_shift) ** exponent``."""
        return cls((root_shift, 1)) ** exponent

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------
    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * a for i, a in enumerate(self.coeffs) if i)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
            if g == 1:
                break
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the positive content and make the leading coefficient positive."""
        c = self.content()
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return IntPolynomial(a // c for a in self.coeffs)

    def divmod_exact(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division over the rationals; raises if the quotient is not integral."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.degree
        lc = divisor.leading
        if len(rem) - 1 < d:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("quotient has non-integer coefficients")
            quot[k - d] = q
            for j, b in enumerate(divisor.coeffs):
                rem[k - d + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod_exact(divisor)
        if r:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def pseudo_rem(self, divisor: IntPolynomial) -> IntPolynomial:
        """``lc(divisor)**(deg self - deg divisor + 1) * self mod divisor``."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        d = divisor.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < d:
            return self
        lc = divisor.leading
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            rem = [lc * a for a in rem]
            for j, b in enumerate(divisor.coeffs):
                rem[k - d + j] -= c * b
            rem[k] = 0
        return IntPolynomial(rem)

    # -- evaluation ---------------------------------------------------
    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_scaled(self, num: int, den: int) -> int:
        """``den**degree * p(num/den)`` as an exact integer (``den > 0``)."""
        acc = 0
        pw = 1
        for a in reversed(self.coeffs):
            acc = acc * num + a * pw
            pw *= den
        return acc

    def sign_at(self, t: Fraction | int) -> int:
        t = Fraction(t)
        v = self.eval_scaled(t.numerator, t.denominator)
        return (v > 0) - (v < 0)

    def shift(self, a: int) -> IntPolynomial:
        """``p(x + a)``."""
        out = IntPolynomial()
        lin = IntPolynomial((a, 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out


def _coerce(v: IntPolynomial | int) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    return IntPolynomial((v,))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] (positive leading coefficient)."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p = c * prod(a_i ** i)`` with pairwise coprime, square-free ``a_i``.

    Returns ``(a_i, i)`` for non-constant factors only; each ``a_i`` is primitive
    with positive leading coefficient.
    """
    if p.degree < 1:
        return []
    # gcd tower: tower[k] = prod_{i>k} a_i ** (i - k)
    tower = [p.primitive()]
    while tower[-1].degree > 0:
        q = tower[-1]
        tower.append(poly_gcd(q, q.derivative()))
    quots = [tower[k].exact_div(tower[k + 1]).primitive() for k in range(len(tower) - 1)]
    quots.append(IntPolynomial((1,)))
    out: list[tuple[IntPolynomial, int]] = []
    for k in range(len(quots) - 1):
        a = quots[k].exact_div(quots[k + 1]).primitive()
        if a.degree > 0:
            out.append((a, k + 1))
    return out


def _variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


class SturmChain:
    """Sturm sequence of a square-free integer polynomial.

    Uses negated pseudo-remainders normalised to primitive parts with the
    sign correction that keeps the chain a genuine Sturm sequence.
    """

    def __init__(self, p: IntPolynomial):
        if p.degree < 0:
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [p, p.derivative()]
        while chain[-1].degree > 0:
            a, b = chain[-2], chain[-1]
            r = a.pseudo_rem(b)
            if not r:
                break
            k = a.degree - b.degree + 1
            flip = -1 if (b.leading < 0 and k % 2 == 1) else 1
            r = r * (-flip)
            c = r.content()
            chain.append(IntPolynomial(x // c for x in r.coeffs))
        if not chain[-1]:
            chain.pop()
        if chain[-1].degree > 0:
            raise ValueError("polynomial is not square-free")
        self.chain = chain
        self.poly = p

    @cached_property
    def _var_pos_inf(self) -> int:
        return _variations((q.leading > 0) - (q.leading < 0) for q in self.chain)

    @cached_property
    def _var_neg_inf(self) -> int:
        return _variations(
            ((q.leading > 0) - (q.leading < 0)) * (-1 if q.degree % 2 else 1) for q in self.chain
        )

    def variations(self, t: Fraction) -> int:
        num, den = t.numerator, t.denominator
        signs = []
        for q in self.chain:
            v = q.eval_scaled(num, den)
            signs.append((v > 0) - (v < 0))
        return _variations(signs)

    def count_greater(self, t: Fraction | int) -> int:
        """Distinct real roots strictly greater than ``t``."""
        return self.variations(Fraction(t)) - self._var_pos_inf

    def count_between(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in the half-open interval ``(lo, hi]``."""
        return self.variations(Fraction(lo)) - self.variations(Fraction(hi))

    def count_real(self) -> int:
        return self._var_neg_inf - self._var_pos_inf


class RootCounter:
    """Counts real roots of an arbitrary nonzero polynomial *with multiplicity*."""

    def __init__(self, p: IntPolynomial):
        if not p:
            raise ValueError("root counting needs a nonzero polynomial")
        self.poly = p
        self.factors = [(SturmChain(a), m) for a, m in squarefree_decomposition(p)]

    def count_greater(self, t: Fraction | int) -> int:
        t = Fraction(t)
        return sum(m * ch.count_greater(t) for ch, m in self.factors)

    def multiplicity(self, t: Fraction | int) -> int:
        """Multiplicity of ``t`` as a root of the polynomial (0 if not a root)."""
        t = Fraction(t)
        for ch, m in self.factors:
            if ch.poly.eval_scaled(t.numerator, t.denominator) == 0:
                return m
        return 0

    def count_real(self) -> int:
        return sum(m * ch.count_real() for ch, m in self.factors)

    def squarefree_part(self) -> IntPolynomial:
        out = IntPolynomial((1,))
        for ch, _ in self.factors:
            out = out * ch.poly
        return out


def sturm_count_greater(p: IntPolynomial, t: Fraction | int) -> int:
    """Number of real roots of ``p`` strictly above ``t``, counted with multiplicity."""
    return RootCounter(p).count_greater(t)


def from_roots(roots: Sequence[int]) -> IntPolynomial:
    out = IntPolynomial((1,))
    for r in roots:
        out = out * IntPolynomial((-r, 1))
    return out
