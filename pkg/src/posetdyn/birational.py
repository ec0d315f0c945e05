"""Birational toggles and rowmotion on positive rational labelings.

Detropicalized dynamics: sums become products, maxima become sums, so
every expression is subtraction-free and total on positive values.
Identities of these rational maps are verified by exact evaluation at
random positive rational points (seeded, recorded); rational exponents
are always cleared to integers before comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .poset import Poset, PosetError

DEFAULT_SEED_RANGE = 2 ** 16


@dataclass(frozen=True)
class PositiveLabeling:
    """Strictly positive rational values plus boundary parameters."""

    poset: Poset
    values: tuple
    alpha: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)

    def __post_init__(self):
        if any(v <= 0 for v in self.values) or self.alpha <= 0 or self.omega <= 0:
            raise ValueError("labels and boundary parameters must be positive")

    @classmethod
    def from_dict(cls, poset, values, alpha=1, omega=1):
        vals = tuple(Fraction(values[x]) for x in poset.elements)
        return cls(poset, vals, Fraction(alpha), Fraction(omega))

    @classmethod
    def random(cls, poset, rng, alpha=1, omega=1, span=DEFAULT_SEED_RANGE):
        vals = tuple(Fraction(rng.randint(1, span), rng.randint(1, span))
                     for _ in range(poset.n))
        return cls(poset, vals, Fraction(alpha), Fraction(omega))

    def __getitem__(self, x):
        return self.values[self.poset.index(x)]

    def as_dict(self):
        return dict(zip(self.poset.elements, self.values))

    def max_bits(self):
        return max((v.numerator.bit_length() + v.denominator.bit_length()
                    for v in self.values), default=0)


def birational_toggle(f, p):
    """Replace the value at p by (sum of lower neighbours) divided by the
    value times the harmonic sum of upper neighbours; an involution."""
    P = f.poset
    i = P.index(p)
    dns = P._down[i]
    ups = P._up[i]
    below = sum((f.values[j] for j in dns), start=Fraction(0)) \
        if dns else f.alpha
    above_recip = sum((1 / f.values[j] for j in ups), start=Fraction(0)) \
        if ups else 1 / f.omega
    vals = list(f.values)
    vals[i] = below / (f.values[i] * above_recip)
    return PositiveLabeling(P, tuple(vals), f.alpha, f.omega)


def birational_rowmotion(f):
    """Toggle composition along a linear extension, top rank first."""
    P = f.poset
    vals = list(f.values)
    for i in range(P.n - 1, -1, -1):
        dns = P._down[i]
        ups = P._up[i]
        below = sum((vals[j] for j in dns), start=Fraction(0)) \
            if dns else f.alpha
        above_recip = sum((1 / vals[j] for j in ups), start=Fraction(0)) \
            if ups else 1 / f.omega
        vals[i] = below / (vals[i] * above_recip)
    return PositiveLabeling(P, tuple(vals), f.alpha, f.omega)


def birational_toggleability(f, p):
    """(T_plus, T_minus) as positive rationals: the multiplicative
    headroom below and above the value at p."""
    P = f.poset
    i = P.index(p)
    dns = P._down[i]
    ups = P._up[i]
    below = sum((f.values[j] for j in dns), start=Fraction(0)) \
        if dns else f.alpha
    above_recip = sum((1 / f.values[j] for j in ups), start=Fraction(0)) \
        if ups else 1 / f.omega
    return (f.values[i] / below, 1 / (f.values[i] * above_recip))


def birational_ddeg(f):
    """Product of the upward toggleabilities over all elements."""
    out = Fraction(1)
    for p in f.poset.elements:
        out *= birational_toggleability(f, p)[1]
    return out


@dataclass
class OrderReport:
    """Outcome of empirical period detection from random seeds."""

    period: int | None
    seeds: list
    reason: str
    bit_curves: list = field(default_factory=list)


def detect_order(poset, trials=3, cap=None, seed=0, alpha=1, omega=1,
                 max_bits=200_000):
    """Iterate birational rowmotion from independent random positive
    seeds and report the common minimal period, if one exists within the
    cap.  Blow-up of the rational entries beyond max_bits is reported as
    evidence of infinite order rather than ground through.
    """
    if trials < 1 or (cap is not None and cap < 1):
        raise ValueError("need trials >= 1 and cap >= 1")
    if cap is None:
        if not poset.is_graded:
            raise PosetError("supply an explicit cap for ungraded posets")
        cap = 4 * (poset.rank + 2) + 4
    rng = random.Random(seed)
    periods = []
    curves = []
    seeds_used = []
    for _ in range(trials):
        f0 = PositiveLabeling.random(poset, rng, alpha=alpha, omega=omega)
        seeds_used.append(f0)
        curve = [f0.max_bits()]
        f = birational_rowmotion(f0)
        steps = 1
        period = None
        while True:
            curve.append(f.max_bits())
            if f.values == f0.values:
                period = steps
                break
            if steps >= cap:
                break
            if f.max_bits() > max_bits:
                curves.append(curve)
                return OrderReport(None, seeds_used,
                                   "bit growth exceeded; probably infinite order",
                                   curves)
            f = birational_rowmotion(f)
            steps += 1
        curves.append(curve)
        if period is None:
            return OrderReport(None, seeds_used, f"no period found <= {cap}",
                               curves)
        periods.append(period)
    if len(set(periods)) != 1:
        return OrderReport(None, seeds_used,
                           f"seeds disagree: {sorted(set(periods))}", curves)
    return OrderReport(periods[0], seeds_used, "ok", curves)


def birational_orbit(f, cap):
    """The finite rowmotion orbit through f, or None within the cap."""
    orbit = [f]
    g = birational_rowmotion(f)
    while g.values != f.values:
        if len(orbit) > cap:
            return None
        orbit.append(g)
        g = birational_rowmotion(g)
    return orbit


@dataclass
class BirationalHomomesyReport:
    holds: bool
    orbit_lengths: list
    details: list


def check_orbit_product(poset, orbit):
    """Exact check of the orbit product identity
    (prod ddeg_B)^(rank+2) == (omega/alpha)^(#P * orbit length)."""
    h = poset.rank + 2
    prod = Fraction(1)
    for f in orbit:
        prod *= birational_ddeg(f)
    lhs = prod ** h
    ratio = orbit[0].omega / orbit[0].alpha
    rhs = ratio ** (poset.n * len(orbit))
    return lhs == rhs, prod


def check_certificate_pointwise(poset, certificate, f):
    """Multiplicative lift of a toggle certificate at one labeling:
    prod_p T_plus^{c_p} * T_minus^{1-c_p} == (omega/alpha)^delta, with
    all rational exponents cleared to integers."""
    if any(len(poset._up[i]) > 2 or len(poset._down[i]) > 2
           for i in range(poset.n)):
        raise PosetError("certificate lifting needs up/down degree <= 2")
    pm = certificate.plus_minus_form()
    den = lcm(certificate.delta.denominator,
              *[c.denominator for c in certificate.coefficients.values()]) \
        if certificate.coefficients else certificate.delta.denominator
    lhs = Fraction(1)
    for p, (cp, cm) in pm.items():
        tp, tm = birational_toggleability(f, p)
        lhs *= tp ** int(cp * den)
        lhs *= tm ** int(cm * den)
    rhs = (f.omega / f.alpha) ** int(certificate.delta * den)
    return lhs == rhs


def birational_homomesy_check(poset, certificate, trials=3, seed=0,
                              alpha=2, omega=3, cap=None):
    """Verify, at random positive points, both the pointwise certificate
    lift and the orbit product identity on every finite orbit found."""
    rng = random.Random(seed)
    details = []
    lengths = []
    if cap is None:
        cap = 4 * (poset.rank + 2) + 4
    for t in range(trials):
        f0 = PositiveLabeling.random(poset, rng, alpha=alpha, omega=omega)
        point_ok = check_certificate_pointwise(poset, certificate, f0)
        orbit = birational_orbit(f0, cap)
        if orbit is None:
            return BirationalHomomesyReport(
                False, lengths, details + [("no finite orbit", t)])
        ok, prod = check_orbit_product(poset, orbit)
        lengths.append(len(orbit))
        details.append({"trial": t, "orbit_length": len(orbit),
                        "pointwise": point_ok, "orbit_product": ok,
                        "ddeg_product": prod})
        if not (ok and point_ok):
            return BirationalHomomesyReport(False, lengths, details)
    return BirationalHomomesyReport(True, lengths, details)


def refined_rectangle_check(a, b, trials=2, seed=0, alpha=2, omega=3):
    """File and rank refinements on the a x b grid: over any finite
    orbit, the product of upward toggleabilities along a file (fixed
    first coordinate) obeys
    (prod)^(a+b) == (omega/alpha)^(b * orbit length), and along a rank
    (fixed second coordinate) the exponent on the right is a."""
    from .families import rectangle

    P = rectangle(a, b)
    rng = random.Random(seed)
    h = a + b
    for _ in range(trials):
        f0 = PositiveLabeling.random(P, rng, alpha=alpha, omega=omega)
        orbit = birational_orbit(f0, 4 * h + 4)
        if orbit is None:
            return False
        ratio = (f0.omega / f0.alpha) ** len(orbit)
        for i in range(1, a + 1):
            prod = Fraction(1)
            for f in orbit:
                for j in range(1, b + 1):
                    prod *= birational_toggleability(f, (i, j))[1]
            if prod ** h != ratio ** b:
                return False
        for j in range(1, b + 1):
            prod = Fraction(1)
            for f in orbit:
                for i in range(1, a + 1):
                    prod *= birational_toggleability(f, (i, j))[1]
            if prod ** h != ratio ** a:
                return False
    return True


# -- tropicalization oracle -------------------------------------------------------


def leading_exponent(value, t):
    """Nearest integer e with value close to t^e: the unique e with
    t^(e-1/2) <= value < t^(e+1/2), computed exactly.  Valid whenever the
    constant factor multiplying the dominant power stays inside
    (1/sqrt(t), sqrt(t))."""
    if value <= 0:
        raise ValueError("positive values only")
    e = 0
    v = Fraction(value)
    while v >= t:
        v /= t
        e += 1
    while v < 1:
        v *= t
        e -= 1
    # v in [1, t); round up when v is closer to t than to 1 in log scale
    if v * v >= t:
        e += 1
    return e


def tropicalize_check(poset, rng, t=10 ** 6, span=4):
    """Substituting t^g for the labels and reading leading exponents
    recovers the piecewise-linear toggle of g; checked per element at a
    random small integer labeling."""
    from .dynamics import RationalLabeling, pl_toggle, pl_toggleability

    g = {p: rng.randint(-span, span) for p in poset.elements}
    galpha, gomega = rng.randint(-span, span), rng.randint(-span, span)
    f = PositiveLabeling.from_dict(
        poset, {p: Fraction(t) ** g[p] for p in poset.elements},
        alpha=Fraction(t) ** galpha, omega=Fraction(t) ** gomega)
    gl = RationalLabeling.from_dict(poset, g, alpha=galpha, omega=gomega)
    for p in poset.elements:
        lifted = birational_toggle(f, p)[p]
        expected = pl_toggle(gl, p)[p]
        if leading_exponent(lifted, t) != expected:
            return False
        tp, tm = birational_toggleability(f, p)
        ep, em = pl_toggleability(gl, p)
        if leading_exponent(tp, t) != ep or leading_exponent(tm, t) != em:
            return False
    return True
