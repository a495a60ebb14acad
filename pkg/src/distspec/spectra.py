"""Certified distance spectra.

The decision path is exact throughout: integer characteristic polynomials,
Sturm counting at rational points, and rational LDL^T inertia as a second,
independent counter.  ``float_spectrum`` is a plain Jacobi eigensolver used
only for display and as a guard-banded third opinion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError, distance_matrix
from .polynomial import IntPolynomial, RootCounter, SturmChain, poly_gcd

THRESHOLD = Fraction(-2929, 5000)

Interval = tuple[Fraction, Fraction]


class ConvergenceError(RuntimeError):
    pass


# -- characteristic polynomial ------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for m < 3.3e24."""
    if m < 2:
        return False
    for b in _MR_BASES:
        if m % b == 0:
            return m == b
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


_PRIMES: dict[int, list[int]] = {}


def _prime(bits: int, i: int) -> int:
    """The i-th largest prime below 2**bits."""
    cache = _PRIMES.setdefault(bits, [])
    m = cache[-1] - 2 if cache else (1 << bits) - 1
    while len(cache) <= i:
        while not _is_prime(m):
            m -= 2
        cache.append(m)
        m -= 2
    return cache[i]


def _charpoly_mod(a: np.ndarray, p: int) -> list[int]:
    """Faddeev-LeVerrier over Z/p; returns ascending coefficients mod p.

    Works in float64 so the products go through BLAS; the caller picks p small
    enough that every partial sum is an integer below 2**53, hence exact.
    """
    n = a.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    diag = np.diag_indices(n)
    m = np.eye(n)
    for k in range(1, n + 1):
        am = np.fmod(a @ m, p)
        c = (-int(am.trace()) * pow(k, -1, p)) % p
        coeffs[n - k] = c
        am[diag] = np.fmod(am[diag] + c, p)
        m = am
    return coeffs


def _coefficient_bound(n: int, max_entry: int) -> int:
    # |c_k| <= C(n,k) * (sqrt(k) * M)^k <= 2^n * (n M^2)^(n/2)  (Hadamard)
    return (1 << n) * (n * max_entry * max_entry) ** ((n + 1) // 2)


def char_poly_exact(d: DistanceMatrix | Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - D) as an exact integer polynomial.

    Faddeev-LeVerrier is run modulo enough primes to exceed twice the
    Hadamard bound on the coefficients, then lifted by Chinese remaindering
    into the symmetric range.  Every step is exact.
    """
    rows = d.rows() if isinstance(d, DistanceMatrix) else [list(r) for r in d]
    n = len(rows)
    if n == 0:
        return IntPolynomial((1,))
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    max_entry = max(1, max(abs(x) for r in rows for x in r))
    # n * M * p < 2**52 keeps every float64 dot product exact
    bits = 52 - (n * max_entry).bit_length()
    if bits < 20:
        raise ValueError("matrix too large for the modular characteristic polynomial")
    a = np.array(rows, dtype=float)
    bound = 2 * _coefficient_bound(n, max_entry) + 1
    modulus = 1
    acc = [0] * (n + 1)
    i = 0
    while modulus <= bound:
        p = _prime(bits, i)
        i += 1
        res = _charpoly_mod(a, p)  # |a_ij| <= M < p already; reducing would break the n*M*p bound
        inv = pow(modulus % p, -1, p)
        for j in range(n + 1):
            delta = ((res[j] - acc[j]) * inv) % p
            acc[j] += modulus * delta
        modulus *= p
    half = modulus // 2
    return IntPolynomial(c - modulus if c > half else c for c in acc)


def char_poly(g: Graph) -> IntPolynomial:
    return char_poly_exact(distance_matrix(g))


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def char_poly_value(d: DistanceMatrix, x: int) -> int:
    """det(xI - D) at an integer point, by Bareiss elimination."""
    n = d.order
    return bareiss_det([[(x if i == j else 0) - d.entries[i][j] for j in range(n)] for i in range(n)])


# -- Sturm-based certification ---------------------------------------------------

def sturm_count_greater(p: IntPolynomial, t: Fraction | int) -> int:
    """Eigenvalues (roots with multiplicity) strictly greater than ``t``."""
    return RootCounter(p).count_greater(t)


def _spectral_bound(d: DistanceMatrix) -> int:
    # spectral radius <= max absolute row sum
    return max(1, max(sum(abs(x) for x in row) for row in d.entries)) + 1


def _mid(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


class CertifiedSpectrum:
    """Exact view of the spectrum of a symmetric integer matrix.

    Eigenvalue ``k`` (1-based, non-increasing) is located by Sturm counts on
    the characteristic polynomial.  Isolating intervals ``(lo, hi]`` for the
    distinct eigenvalues are computed lazily and refined in place.
    """

    def __init__(self, poly: IntPolynomial, bound: int | None = None):
        if poly.degree < 1:
            raise ValueError("need a polynomial of positive degree")
        self.poly = poly
        self.order = poly.degree
        self.counter = RootCounter(poly)
        if self.counter.count_real() != self.order:
            raise ValueError("polynomial does not have only real roots")
        if bound is None:
            lc = abs(poly.leading)
            bound = 1 + max(-(-abs(c) // lc) for c in poly.coeffs[:-1])
        self.bound = Fraction(bound)

    @classmethod
    def of_matrix(cls, d: DistanceMatrix) -> CertifiedSpectrum:
        return cls(char_poly_exact(d), _spectral_bound(d))

    @classmethod
    def of_graph(cls, g: Graph) -> CertifiedSpectrum:
        return cls.of_matrix(distance_matrix(g))

    def count_greater(self, t: Fraction | int) -> int:
        return self.counter.count_greater(t)

    def enclose(self, k: int, width: Fraction | float | str = Fraction(1, 10**9)) -> Interval:
        """Interval ``(lo, hi]`` of length <= width with lambda_k inside, by bisection."""
        if not 1 <= k <= self.order:
            raise ValueError(f"k must be in 1..{self.order}")
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        lo, hi = -self.bound, self.bound
        while hi - lo > width:
            mid = _mid(lo, hi)
            if self.count_greater(mid) >= k:
                lo = mid
            else:
                hi = mid
        return lo, hi

    # -- isolation of distinct eigenvalues --------------------------------
    @cached_property
    def _sqf_chain(self) -> SturmChain:
        return SturmChain(self.counter.squarefree_part())

    @cached_property
    def _isolated(self) -> list[list]:
        """``[lo, hi, multiplicity]`` per distinct eigenvalue, descending."""
        chain = self._sqf_chain
        out: list[list] = []
        stack = [(-self.bound, self.bound)]
        while stack:
            lo, hi = stack.pop()
            c = chain.count_between(lo, hi)
            if c == 0:
                continue
            if c == 1:
                out.append([lo, hi, self._multiplicity_in(lo, hi)])
                continue
            mid = _mid(lo, hi)
            stack.append((lo, mid))
            stack.append((mid, hi))
        out.sort(key=lambda r: r[0], reverse=True)
        return out

    def _multiplicity_in(self, lo: Fraction, hi: Fraction) -> int:
        for ch, m in self.counter.factors:
            if ch.count_between(lo, hi):
                return m
        raise AssertionError("isolated root not found in any factor")

    def _distinct_index(self, k: int) -> int:
        if not 1 <= k <= self.order:
            raise ValueError(f"k must be in 1..{self.order}")
        seen = 0
        for idx, (_, _, m) in enumerate(self._isolated):
            seen += m
            if k <= seen:
                return idx
        raise AssertionError("multiplicities do not add up to the order")

    def _refine(self, idx: int) -> None:
        box = self._isolated[idx]
        lo, hi = box[0], box[1]
        mid = _mid(lo, hi)
        if self._sqf_chain.count_between(lo, mid):
            box[1] = mid
        else:
            box[0] = mid

    def isolating_interval(self, k: int, width: Fraction | None = None) -> Interval:
        idx = self._distinct_index(k)
        if width is not None:
            while self._isolated[idx][1] - self._isolated[idx][0] > width:
                self._refine(idx)
        lo, hi, _ = self._isolated[idx]
        return lo, hi

    def multiplicities(self) -> list[int]:
        return [m for _, _, m in self._isolated]

    def enclosure(self, width: Fraction | float | str = Fraction(1, 10**9)) -> SpectrumEnclosure:
        width = Fraction(width)
        intervals: list[Interval] = []
        for idx in range(len(self._isolated)):
            while self._isolated[idx][1] - self._isolated[idx][0] > width:
                self._refine(idx)
            lo, hi, m = self._isolated[idx]
            intervals.extend([(lo, hi)] * m)
        return SpectrumEnclosure(tuple(intervals), width)

    def midpoint(self, k: int, width: Fraction = Fraction(1, 10**12)) -> float:
        lo, hi = self.isolating_interval(k, width)
        return float(_mid(lo, hi))


def compare_eigenvalues(a: CertifiedSpectrum, i: int, b: CertifiedSpectrum, j: int) -> int:
    """Exact sign of ``lambda_i(a) - lambda_j(b)``.

    Isolating intervals are tightened until they separate; if they keep
    overlapping, a common root of the two square-free parts inside the
    overlap proves equality.
    """
    ia, ib = a._distinct_index(i), b._distinct_index(j)
    common: SturmChain | None = None
    common_done = False
    while True:
        alo, ahi, _ = a._isolated[ia]
        blo, bhi, _ = b._isolated[ib]
        if ahi <= blo:
            return -1
        if bhi <= alo:
            return 1
        if not common_done:
            g = poly_gcd(a._sqf_chain.poly, b._sqf_chain.poly)
            common = SturmChain(g) if g.degree > 0 else None
            common_done = True
        if common is not None and common.count_between(max(alo, blo), min(ahi, bhi)):
            return 0
        a._refine(ia)
        b._refine(ib)


@dataclass(frozen=True)
class SpectrumEnclosure:
    intervals: tuple[Interval, ...]
    width: Fraction

    def __len__(self) -> int:
        return len(self.intervals)

    def contains(self, k: int, value: float, slack: float = 0.0) -> bool:
        lo, hi = self.intervals[k - 1]
        return float(lo) - slack <= value <= float(hi) + slack


def lambda_k_enclosure(g: Graph, k: int, width: Fraction | float | str = Fraction(1, 10**9)) -> Interval:
    """Certified interval ``(lo, hi]`` containing lambda_k(g), ``hi - lo <= width``."""
    return CertifiedSpectrum.of_graph(g).enclose(k, width)


class Lambda2Position(str, enum.Enum):
    BELOW = "Below"
    AT_THRESHOLD = "AtThreshold"
    ABOVE = "Above"


def threshold_position(counter: RootCounter, t: Fraction = THRESHOLD) -> Lambda2Position:
    above = counter.count_greater(t)
    if above >= 2:
        return Lambda2Position.ABOVE
    if above + counter.multiplicity(t) >= 2:
        return Lambda2Position.AT_THRESHOLD
    return Lambda2Position.BELOW


def compare_lambda2_threshold(g: Graph, t: Fraction = THRESHOLD) -> Lambda2Position:
    """Where lambda_2(g) sits relative to ``t`` (default -2929/5000), exactly."""
    if g.order < 2:
        raise GraphError("lambda_2 comparison needs at least two vertices")
    return threshold_position(RootCounter(char_poly(g)), t)


# -- inertia -----------------------------------------------------------------------

@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def order(self) -> int:
        return self.positive + self.negative + self.zero


def inertia_shifted(d: DistanceMatrix | Sequence[Sequence[int]], t: Fraction | int) -> Inertia:
    """Inertia of ``D - tI`` by exact symmetric elimination (Sylvester's law)."""
    t = Fraction(t)
    rows = d.rows() if isinstance(d, DistanceMatrix) else [list(r) for r in d]
    n = len(rows)
    m = [[Fraction(rows[i][j]) - (t if i == j else 0) for j in range(n)] for i in range(n)]
    live = list(range(n))
    pos = neg = 0
    while live:
        k = next((i for i in live if m[i][i] != 0), None)
        if k is not None:
            piv = m[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            live.remove(k)
            col = [m[i][k] for i in live]
            for a, i in enumerate(live):
                if col[a] == 0:
                    continue
                f = col[a] / piv
                row_i, row_k = m[i], m[k]
                for j in live:
                    row_i[j] -= f * row_k[j]
            continue
        pair = next(((i, j) for i in live for j in live if i < j and m[i][j] != 0), None)
        if pair is None:
            break
        k, l = pair
        a_kl = m[k][l]
        # 2x2 block [[0, a], [a, 0]] has eigenvalues +a and -a
        pos += 1
        neg += 1
        live.remove(k)
        live.remove(l)
        ck = [m[i][k] for i in live]
        cl = [m[i][l] for i in live]
        for a, i in enumerate(live):
            for b, j in enumerate(live):
                m[i][j] -= (ck[a] * cl[b] + cl[a] * ck[b]) / a_kl
    return Inertia(pos, neg, n - pos - neg)


# -- floating point --------------------------------------------------------------

def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
    ``tol * max|a_ij|``.  Returns eigenvalues sorted non-increasing."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = np.abs(a).max() or 1.0
    target = tol * scale
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(a[offdiag] ** 2))
        if off <= target:
            return np.sort(np.diag(a))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def float_spectrum(d: DistanceMatrix) -> list[float]:
    return [float(x) for x in jacobi_eigenvalues(np.array(d.rows(), dtype=float))]


# -- interlacing -----------------------------------------------------------------

def interlacing_check(a: DistanceMatrix, s: Iterable[int]) -> bool:
    """Cauchy interlacing between ``a`` and its principal submatrix on ``s``,
    decided exactly: ``mu_{n-m+i}(A) <= mu_i(B) <= mu_i(A)``."""
    idx = sorted(set(s))
    if not idx:
        raise ValueError("subset must be nonempty")
    sa = CertifiedSpectrum.of_matrix(a)
    sb = CertifiedSpectrum.of_matrix(a.principal(idx))
    return interlaces(sa, sb)


def interlaces(sa: CertifiedSpectrum, sb: CertifiedSpectrum) -> bool:
    n, m = sa.order, sb.order
    for i in range(1, m + 1):
        if compare_eigenvalues(sb, i, sa, i) > 0:
            return False
        if compare_eigenvalues(sa, n - m + i, sb, i) > 0:
            return False
    return True
