"""Down-degree expectations on ideal lattices and toggle certificates.

Three distributions on J(P) are supported exactly: uniform, the
maximal-chain distribution (weights from linear-extension counts of the
ideal and its complement), and the multichain family interpolating
between them.  A toggle certificate is a rational coefficient vector
making down-degree plus a combination of toggleability statistics
constant across the whole lattice; the solver runs fraction-free-style
Gaussian elimination over the deduplicated equation set and re-validates
any solution against every ideal before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .dynamics import toggleability
from .poset import OrderIdeal, PosetError

__all__ = [
    "Distribution", "uniform_distribution", "maxchain_distribution",
    "mchain_distribution", "expectation", "edge_density", "is_cde",
    "is_mcde", "ToggleCertificate", "tcde_solve", "validate_certificate",
    "toggleability",
]


@dataclass
class Distribution:
    """Exact probability weights over the order ideals of a poset."""

    poset: object
    weights: dict  # ideal mask -> Fraction
    kind: str

    def __post_init__(self):
        total = sum(self.weights.values())
        if total != 1:
            raise ValueError(f"weights sum to {total}, not 1")
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("negative weight")


def uniform_distribution(poset):
    masks = poset.ideal_masks()
    w = Fraction(1, len(masks))
    return Distribution(poset, {m: w for m in masks}, "uni")


def maxchain_distribution(poset):
    """Weight of an ideal proportional to the number of maximal chains of
    the ideal lattice through it: extensions below times extensions
    above."""
    masks = poset.ideal_masks()
    below = {0: 1}
    for mask in masks:
        if mask == 0:
            continue
        total = 0
        mm = poset.ideal_max_mask(mask)
        while mm:
            b = mm & -mm
            total += below[mask ^ b]
            mm ^= b
        below[mask] = total
    full = poset.full_mask
    above = {full: 1}
    for mask in reversed(masks):
        if mask == full:
            continue
        total = 0
        comp = full & ~mask
        m = comp
        while m:
            b = m & -m
            i = b.bit_length() - 1
            if poset._down_cover_mask[i] & mask == poset._down_cover_mask[i]:
                total += above[mask | b]
            m ^= b
        above[mask] = total
    norm = (poset.n + 1) * below[full]
    weights = {m: Fraction(below[m] * above[m], norm) for m in masks}
    return Distribution(poset, weights, "maxchain")


def _chain_count_arrays(poset, ell):
    """D[t][j]: chains of t+1 ideals ending at position j;
    U[t][j]: chains of t+1 ideals starting at position j."""
    subs, sups = poset._containment
    J = len(poset.ideal_masks())
    D = [[1] * J]
    U = [[1] * J]
    for _ in range(ell - 1):
        D.append([sum(D[-1][i] for i in subs[j]) for j in range(J)])
        U.append([sum(U[-1][i] for i in sups[j]) for j in range(J)])
    return D, U


def mchain_distribution(poset, ell):
    """Pick a uniformly random chain of ell ideals and a uniform position
    in it; mchain(1) is the uniform distribution."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    masks = poset.ideal_masks()
    D, U = _chain_count_arrays(poset, ell)
    J = len(masks)
    counts = [0] * J
    for i in range(ell):
        dd, uu = D[i], U[ell - 1 - i]
        for j in range(J):
            counts[j] += dd[j] * uu[j]
    norm = sum(counts)
    weights = {m: Fraction(c, norm) for m, c in zip(masks, counts)}
    return Distribution(poset, weights, f"mchain({ell})")


def expectation(dist, stat):
    """Exact expected value; stat is 'ddeg', an element label (meaning
    the toggleability statistic at that element), or a callable on
    order ideals."""
    P = dist.poset
    if stat == "ddeg":
        fn = lambda m: P.ideal_ddeg(m)
    elif callable(stat):
        fn = lambda m: stat(OrderIdeal(P, m))
    else:
        idx = P.index(stat)
        def fn(m, i=idx):
            plus, minus = _toggleability_mask(P, m, i)
            return plus - minus
    return sum(w * fn(m) for m, w in dist.weights.items())


def _toggleability_mask(poset, mask, i):
    b = 1 << i
    if mask & b:
        return (0, 1 if poset._up_cover_mask[i] & mask == 0 else 0)
    ok = poset._down_cover_mask[i] & mask == poset._down_cover_mask[i]
    return (1 if ok else 0, 0)


def edge_density(poset):
    """Hasse edges of the ideal lattice divided by its size; equals the
    expected down-degree under the uniform distribution."""
    masks = poset.ideal_masks()
    return Fraction(sum(poset.ideal_ddeg(m) for m in masks), len(masks))


def is_cde(poset):
    """Expected down-degree agrees between the maximal-chain and uniform
    distributions on the ideal lattice."""
    return expectation(maxchain_distribution(poset), "ddeg") == edge_density(poset)


def is_mcde(poset, upto=None, mode="polynomial"):
    """Multichain down-degree expectations all equal the edge density.

    mode='polynomial' proves the identity for every height: both sides
    are polynomials in the height of degree at most n+1, so agreement at
    heights 1..n+2 settles it.  mode='finite' checks heights 1..upto.
    """
    from .ppartitions import sum_ddeg_ppartitions

    delta = edge_density(poset)
    if mode == "polynomial":
        heights = range(1, poset.n + 3)
    elif mode == "finite":
        heights = range(1, (upto or 6) + 1)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for ell in heights:
        lhs = sum_ddeg_ppartitions(poset, ell)
        rhs = delta * ell * poset.multichain_count(ell)
        if lhs != rhs:
            return False
    return True


@dataclass
class ToggleCertificate:
    """Rational coefficients c_p with ddeg + sum_p c_p*T_p constant on
    the whole ideal lattice; the constant is the edge density."""

    coefficients: dict  # label -> Fraction
    delta: Fraction

    def cleared(self):
        """Integer-scaled form (m, m*coefficients, m*delta)."""
        den = lcm(self.delta.denominator,
                  *[c.denominator for c in self.coefficients.values()]) \
            if self.coefficients else self.delta.denominator
        return den, {p: c * den for p, c in self.coefficients.items()}, \
            self.delta * den

    def plus_minus_form(self):
        """Coefficients (c_{p+}, c_{p-}) of the equivalent identity
        sum_p c_{p+}*T_{p+} + c_{p-}*T_{p-} = delta."""
        return {p: (c, 1 - c) for p, c in self.coefficients.items()}


def validate_certificate(poset, coefficients, delta):
    """Exhaustive check of the certificate identity at every ideal."""
    coeffs = {p: Fraction(c) for p, c in coefficients.items()}
    delta = Fraction(delta)
    idxs = [(poset.index(p), c) for p, c in coeffs.items()]
    for mask in poset.ideal_masks():
        total = Fraction(poset.ideal_ddeg(mask))
        for i, c in idxs:
            plus, minus = _toggleability_mask(poset, mask, i)
            total += c * (plus - minus)
        if total != delta:
            return False
    return True


def tcde_solve(poset):
    """Search for a toggle certificate; None when the lattice has none.

    Sets delta to the edge density and solves the exact rational system
    over all ideals by Gaussian elimination after row deduplication.
    Free variables are pinned to zero (the certificate need not be
    unique).  Any solution is re-validated exhaustively before return.
    """
    masks = poset.ideal_masks()
    n = poset.n
    delta = edge_density(poset)
    rows = set()
    for mask in masks:
        coeffs = []
        for i in range(n):
            plus, minus = _toggleability_mask(poset, mask, i)
            coeffs.append(plus - minus)
        rhs = delta - poset.ideal_ddeg(mask)
        rows.add(tuple(coeffs) + (rhs,))
    matrix = [list(map(Fraction, r)) for r in sorted(rows, key=repr)]

    piv_rows = []
    piv_cols = []
    r = 0
    for col in range(n):
        pivot = None
        for k in range(r, len(matrix)):
            if matrix[k][col] != 0:
                pivot = k
                break
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        pv = matrix[r][col]
        matrix[r] = [v / pv for v in matrix[r]]
        for k in range(len(matrix)):
            if k != r and matrix[k][col] != 0:
                f = matrix[k][col]
                matrix[k] = [a - f * b for a, b in zip(matrix[k], matrix[r])]
        piv_rows.append(r)
        piv_cols.append(col)
        r += 1
    for k in range(r, len(matrix)):
        if matrix[k][n] != 0:
            return None  # inconsistent: no certificate exists
    sol = [Fraction(0)] * n
    for row, col in zip(piv_rows, piv_cols):
        sol[col] = matrix[row][n]
    coefficients = {poset.label(i): sol[i] for i in range(n)}
    cert = ToggleCertificate(coefficients, delta)
    if not validate_certificate(poset, cert.coefficients, cert.delta):
        raise PosetError("solver produced an invalid certificate")
    return cert
