"""Exact integer q-polynomials, cyclotomic residue arithmetic, and
fixed-point counting against root-of-unity evaluations.

Root-of-unity values are represented as residues modulo the d-th
cyclotomic polynomial, so every verdict is an exact integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .poset import PosetError


class IntPolynomial:
    """Dense polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("integer coefficients required")
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == (IntPolynomial((other,))).coeffs
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divexact_one_minus_qb(self, b):
        """Exact division by (1 - q^b); raises if a remainder is left."""
        x = list(self.coeffs)
        if not x:
            return IntPolynomial(())
        deg = len(x) - 1
        if deg < b:
            raise ValueError("division by (1-q^b) leaves a remainder")
        y = [0] * (deg - b + 1)
        for i in range(len(y)):
            y[i] = x[i] + (y[i - b] if i >= b else 0)
        # the quotient has degree deg-b, so the top b equations must close
        for i in range(len(y), deg + 1):
            if x[i] + y[i - b] != 0:
                raise ValueError("division by (1-q^b) leaves a remainder")
        return IntPolynomial(y)

    def divexact(self, other):
        """General exact division; raises on nonzero remainder."""
        num = list(self.coeffs)
        den = other.coeffs
        if not den:
            raise ZeroDivisionError
        if not num:
            return IntPolynomial(())
        if len(num) < len(den):
            raise ValueError("exact division with remainder")
        out = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(out) - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c % lead:
                raise ValueError("exact division with remainder")
            q = c // lead
            out[i] = q
            if q:
                for j, dj in enumerate(den):
                    num[i + j] -= q * dj
        if any(num):
            raise ValueError("exact division with remainder")
        return IntPolynomial(out)

    def substitute_power(self, k):
        """q -> q^k."""
        out = [0] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k] = c
        return IntPolynomial(out)

    def has_nonnegative_coeffs(self):
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def one_minus_q_power(b):
    return IntPolynomial((1,) + (0,) * (b - 1) + (-1,))


def q_rational_product(numerator_exponents, denominator_exponents,
                       require_nonnegative=False):
    """Exact polynomial prod (1-q^a) / prod (1-q^b).

    The full numerator is expanded first, then each denominator factor is
    divided out exactly; a nonzero remainder signals a wrong exponent
    multiset and raises ValueError.
    """
    num = IntPolynomial.one()
    for a in numerator_exponents:
        num = num * one_minus_q_power(a)
    for b in denominator_exponents:
        num = num.divexact_one_minus_qb(b)
    if require_nonnegative and not num.has_nonnegative_coeffs():
        raise ValueError("product has a negative coefficient")
    return num


def size_gf_product(poset, ell):
    """Product formula prod_p (1-q^{r(p)+ell+1})/(1-q^{r(p)+1}) for the
    size generating function of height-ell maps on a graded poset."""
    if not poset.is_graded:
        raise PosetError("size product formula needs a graded poset")
    nums = [poset.rank_of(p) + ell + 1 for p in poset.elements]
    dens = [poset.rank_of(p) + 1 for p in poset.elements]
    return q_rational_product(nums, dens)


def q_catalan(degrees, h):
    """prod_i (1-q^{h+d_i})/(1-q^{d_i})."""
    return q_rational_product([h + d for d in degrees], list(degrees))


def q_multi_catalan(degrees, h, ell):
    """prod_{j<ell} prod_i (1-q^{h+d_i+2j})/(1-q^{d_i+2j})."""
    nums, dens = [], []
    for j in range(ell):
        nums += [h + d + 2 * j for d in degrees]
        dens += [d + 2 * j for d in degrees]
    return q_rational_product(nums, dens)


# -- cyclotomic arithmetic -------------------------------------------------------

_CYCLOTOMIC = {}


def cyclotomic(d):
    """The d-th cyclotomic polynomial, by exact recursive division."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d in _CYCLOTOMIC:
        return _CYCLOTOMIC[d]
    poly = IntPolynomial((-1,) + (0,) * (d - 1) + (1,))  # q^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = poly.divexact(cyclotomic(e))
    _CYCLOTOMIC[d] = poly
    return poly


@dataclass(frozen=True)
class CyclotomicValue:
    """Residue of an integer polynomial modulo the d-th cyclotomic
    polynomial; equals an integer iff the residue is constant."""

    order: int
    residue: tuple

    def is_integer(self):
        return all(c == 0 for c in self.residue[1:])

    def as_integer(self):
        if not self.is_integer():
            raise ValueError("value is not a rational integer")
        return self.residue[0] if self.residue else 0

    def __repr__(self):
        if self.is_integer():
            return f"CyclotomicValue({self.as_integer()})"
        return f"CyclotomicValue(order={self.order}, residue={list(self.residue)})"


def eval_at_root_of_unity(X, N, k):
    """Value of X at exp(2*pi*i*k/N), exactly.

    Reduces X modulo the d-th cyclotomic polynomial where
    d = N / gcd(N, k), since the evaluation point is a primitive d-th
    root of unity.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if not (0 <= k < N):
        k %= N
    d = N // gcd(N, k) if k else 1
    phi = cyclotomic(d)
    num = list(X.coeffs)
    dd = len(phi.coeffs) - 1
    # monic long division
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * phi.coeffs[j]
    res = tuple(num[:dd])
    while res and res[-1] == 0:
        res = res[:-1]
    return CyclotomicValue(d, res)


# -- fixed points vs polynomial values --------------------------------------------


@dataclass
class CSPRow:
    k: int
    fixed: int
    value: int | None
    ok: bool


@dataclass
class CSPReport:
    N: int
    holds: bool
    rows: list

    def table(self):
        return [(r.k, r.fixed, r.value, r.ok) for r in self.rows]


def csp_check(orbit_lengths, N, X):
    """Compare fixed-point counts of every power of the cyclic action
    against exact root-of-unity values of X.

    orbit_lengths: orbit sizes with multiplicity (or objects with a
    .length attribute).  The action must satisfy op^N = id, i.e. every
    orbit length must divide N; otherwise ValueError.
    """
    lengths = [getattr(o, "length", o) for o in orbit_lengths]
    for L in lengths:
        if N % L:
            raise ValueError(f"orbit of length {L} does not divide N={N}")
    total = sum(lengths)
    if X(1) != total:
        # X(1) must count the whole state space; report as a failure row
        pass
    rows = []
    holds = True
    for k in range(N):
        fixed = sum(L for L in lengths if k % L == 0)
        val = eval_at_root_of_unity(X, N, k)
        if val.is_integer():
            v = val.as_integer()
            ok = v == fixed
        else:
            v = None
            ok = False
        holds = holds and ok
        rows.append(CSPRow(k, fixed, v, ok))
    return CSPReport(N, holds, rows)
