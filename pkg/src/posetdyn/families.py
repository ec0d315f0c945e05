"""Constructors for the named poset families and their numerology.

Covers the grid-like families (rectangle, shifted staircase, propeller,
trapezoid), the crystallographic positive-root posets built from root
vector arithmetic, the two non-crystallographic root posets (hard-coded
Hasse diagrams), and the two exceptional 16- and 27-element posets
(transcribed cover lists).  For every family the largest degree equals
rank + 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import Poset, PosetError, canonical_poset_key


def rectangle(a, b):
    """Product of chains [a] x [b]; labels are 1-based (i, j) pairs."""
    if a < 1 or b < 1:
        raise ValueError("rectangle needs a, b >= 1")
    els = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    covers = []
    for i, j in els:
        if i < a:
            covers.append(((i, j), (i + 1, j)))
        if j < b:
            covers.append(((i, j), (i, j + 1)))
    return Poset(els, covers)


def shifted_staircase(n):
    """Cells (i, j) with 1 <= i <= j <= n-1, ordered componentwise."""
    if n < 2:
        raise ValueError("shifted staircase needs n >= 2")
    els = [(i, j) for i in range(1, n) for j in range(i, n)]
    covers = []
    for i, j in els:
        if j + 1 < n:
            covers.append(((i, j), (i, j + 1)))
        if i + 1 <= j and (i + 1, j) in set(els):
            covers.append(((i, j), (i + 1, j)))
    return Poset(els, covers)


def propeller(n):
    """Chain of n-1, then two incomparable blades, then a chain of n-1."""
    if n < 2:
        raise ValueError("propeller needs n >= 2")
    lo = [("lo", i) for i in range(1, n)]
    hi = [("hi", i) for i in range(1, n)]
    blades = [("mid", 1), ("mid", 2)]
    els = lo + blades + hi
    covers = []
    for i in range(1, n - 1):
        covers.append((("lo", i), ("lo", i + 1)))
        covers.append((("hi", i), ("hi", i + 1)))
    for b in blades:
        covers.append((("lo", n - 1), b))
        covers.append((b, ("hi", 1)))
    return Poset(els, covers)


def trapezoid(k, n):
    """The trapezoid poset: k zigzag columns, column c carrying
    n - 2k + 2c + 1 elements; defined for 1 <= k <= n/2."""
    if not (1 <= k <= n / 2):
        raise ValueError("trapezoid needs 1 <= k <= n/2")
    els = [(c, y) for c in range(k) for y in range(n - 2 * k + 2 * c + 1)]
    present = set(els)
    covers = []
    for c, y in els:
        if (c, y + 1) in present:
            covers.append(((c, y), (c, y + 1)))
        if (c + 1, y + 1) in present:
            covers.append(((c, y), (c + 1, y + 1)))
    return Poset(els, covers)


# -- root posets ---------------------------------------------------------------


def _root_poset_from_vectors(roots, simples):
    """Order positive roots by componentwise difference; covers are the
    pairs whose difference is a simple root."""
    simple_set = {tuple(s) for s in simples}
    els = [tuple(r) for r in roots]
    covers = []
    for alpha in els:
        for beta in els:
            diff = tuple(b - a for a, b in zip(alpha, beta))
            if diff in simple_set:
                covers.append((alpha, beta))
    return Poset(els, covers)


def _positive_roots(family, n):
    """Positive roots in the standard e-basis coordinates."""
    if family == "A":
        dim = n + 1
        roots = []
        for i in range(dim):
            for j in range(i + 1, dim):
                v = [0] * dim
                v[i], v[j] = 1, -1
                roots.append(v)
        simples = []
        for i in range(n):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            simples.append(v)
        return roots, simples
    if family in ("B", "C", "D"):
        dim = n
        roots = []
        for i in range(dim):
            for j in range(i + 1, dim):
                for sj in (-1, 1):
                    v = [0] * dim
                    v[i], v[j] = 1, sj
                    roots.append(v)
        simples = []
        for i in range(n - 1):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            simples.append(v)
        if family == "B":
            for i in range(dim):
                v = [0] * dim
                v[i] = 1
                roots.append(v)
            s = [0] * dim
            s[n - 1] = 1
            simples.append(s)
        elif family == "C":
            for i in range(dim):
                v = [0] * dim
                v[i] = 2
                roots.append(v)
            s = [0] * dim
            s[n - 1] = 2
            simples.append(s)
        else:  # D
            s = [0] * dim
            s[n - 2], s[n - 1] = 1, 1
            simples.append(s)
        return roots, simples
    raise ValueError(f"unsupported crystallographic family {family!r}")


_H3_COVERS = [
    (1, 4), (2, 4), (2, 5), (3, 5), (4, 6), (5, 6), (5, 7), (6, 8), (7, 8),
    (7, 9), (8, 10), (8, 11), (9, 11), (10, 12), (11, 12), (12, 13),
    (13, 14), (14, 15),
]


def root_poset(family, n):
    """Positive-root poset of the given type.

    A/B/C/D are built from root-vector arithmetic (n is the Lie rank);
    H needs n = 3 and I takes n = m >= 2, both with hard-coded diagrams.
    """
    family = family.upper()
    if family in ("A", "B", "C", "D"):
        lo = 2 if family == "D" else 1
        if n < lo:
            raise ValueError(f"{family}_n needs n >= {lo}")
        if family == "D" and n == 2:
            # D_2 = A_1 + A_1: two incomparable roots
            return Poset([(1, -1), (1, 1)], [])
        roots, simples = _positive_roots(family, n)
        return _root_poset_from_vectors(roots, simples)
    if family == "H":
        if n != 3:
            raise ValueError("only H_3 carries a root poset here")
        return Poset(range(1, 16), _H3_COVERS)
    if family == "I":
        m = n
        if m < 2:
            raise ValueError("I_2(m) needs m >= 2")
        els = ["a", "b"] + [f"c{i}" for i in range(1, m - 1)]
        covers = []
        if m >= 3:
            covers += [("a", "c1"), ("b", "c1")]
            covers += [(f"c{i}", f"c{i+1}") for i in range(1, m - 2)]
        return Poset(els, covers)
    raise ValueError(f"unknown root-poset family {family!r}")


# -- exceptional minuscule posets (transcribed cover lists) --------------------

_CAYLEY_COVERS = [
    (-4, -3), (-3, -2), (-2, -1), (-2, 1), (-1, 2), (1, 0), (0, 6), (1, 2),
    (2, 3), (3, 4), (2, 6), (3, 7), (4, 8), (6, 7), (7, 8), (7, 11),
    (8, 12), (11, 12), (12, 13), (13, 14),
]

_FREUDENTHAL_COVERS = (
    _H3_COVERS
    + [(-4, 1), (-4, 2), (-5, 2), (-5, 3)]
    + [(-6, -4), (-6, -5), (-7, -5), (-8, -6), (-8, -7), (-9, -7),
       (-10, -8), (-11, -8), (-11, -9), (-12, -10), (-12, -11),
       (-13, -12), (-14, -13), (-15, -14)]
)


def cayley_plane():
    """16-element poset attached to the E6 minuscule weight."""
    els = sorted({x for c in _CAYLEY_COVERS for x in c})
    return Poset(els, _CAYLEY_COVERS)


def freudenthal():
    """27-element poset attached to the E7 minuscule weight."""
    els = sorted({x for c in _FREUDENTHAL_COVERS for x in c})
    return Poset(els, _FREUDENTHAL_COVERS)


# -- family specs ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name of a poset family instance, e.g. rect:3x4."""

    kind: str
    params: tuple = ()

    def poset(self):
        return make(self)

    def __str__(self):
        k, p = self.kind, self.params
        if k == "rect":
            return f"rect:{p[0]}x{p[1]}"
        if k == "trap":
            return f"trap:{p[0]},{p[1]}"
        if k == "shifted":
            return f"shifted:{p[0]}"
        if k == "prop":
            return f"prop:{p[0]}"
        if k == "root":
            fam, n = p
            if fam == "I":
                return f"root:I2({n})"
            return f"root:{fam}{n}"
        return k  # e6, e7, file:...


def parse_spec(text):
    """Parse CLI syntax: rect:3x4, trap:3,7, root:B4, root:I2(8),
    shifted:6, prop:4, e6, e7, file:<path>."""
    t = text.strip()
    if t in ("e6", "e7"):
        return FamilySpec(t)
    if t.startswith("file:"):
        return FamilySpec("file", (t[5:],))
    if ":" not in t:
        raise ValueError(f"cannot parse poset spec {text!r}")
    head, rest = t.split(":", 1)
    if head == "rect":
        a, b = rest.split("x")
        return FamilySpec("rect", (int(a), int(b)))
    if head == "trap":
        k, n = rest.split(",")
        return FamilySpec("trap", (int(k), int(n)))
    if head == "shifted":
        return FamilySpec("shifted", (int(rest),))
    if head == "prop":
        return FamilySpec("prop", (int(rest),))
    if head == "root":
        if rest.upper().startswith("I2(") and rest.endswith(")"):
            return FamilySpec("root", ("I", int(rest[3:-1])))
        fam = rest[0].upper()
        return FamilySpec("root", (fam, int(rest[1:])))
    raise ValueError(f"cannot parse poset spec {text!r}")


def make(spec):
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "rect":
        return rectangle(*p)
    if k == "trap":
        return trapezoid(*p)
    if k == "shifted":
        return shifted_staircase(*p)
    if k == "prop":
        return propeller(*p)
    if k == "root":
        return root_poset(*p)
    if k == "e6":
        return cayley_plane()
    if k == "e7":
        return freudenthal()
    if k == "file":
        return Poset.load(p[0])
    raise ValueError(f"unknown family kind {k!r}")


def coxeter_number(spec):
    """rank + 2, uniformly across the families."""
    P = make(spec)
    return P.rank + 2


_HOST_DEGREES = {
    "e6": (2, 5, 6, 8, 9, 12),
    "e7": (2, 6, 8, 10, 12, 14, 18),
}


def degrees(spec):
    """Degree multiset of the underlying reflection group.

    For root posets the degrees are recovered from the rank-level sizes:
    the number of elements at rank i equals the number of degrees
    exceeding i + 1.  Minuscule families report their host type.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "root":
        P = make(spec)
        if P.n == 0:
            return ()
        if not P.is_graded:
            raise PosetError("root poset is not graded")
        prof = list(P.rank_profile)
        width = prof[0]
        degs = []
        for j in range(1, width + 1):
            degs.append(max(i + 2 for i, c in enumerate(prof) if c >= j))
        return tuple(sorted(degs))
    if k == "rect":
        n = p[0] + p[1]
        return tuple(range(2, n + 1))  # type A_{n-1}
    if k == "shifted":
        n = p[0]
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))  # D_n
    if k == "prop":
        n = p[0]
        return tuple(sorted(list(range(2, 2 * n + 1, 2)) + [n + 1]))  # D_{n+1}
    if k in _HOST_DEGREES:
        return _HOST_DEGREES[k]
    raise PosetError(f"family {k!r} has no defined degrees")


# -- catalogues -----------------------------------------------------------------


def minuscule_specs(max_size):
    """Connected minuscule posets with at most max_size elements,
    deduplicated up to isomorphism."""
    specs = []
    b = 1
    while 1 * b <= max_size:
        a = 1
        while a <= b and a * b <= max_size:
            specs.append(FamilySpec("rect", (a, b)))
            a += 1
        b += 1
    n = 4
    while n * (n - 1) // 2 <= max_size:
        specs.append(FamilySpec("shifted", (n,)))
        n += 1
    n = 3
    while 2 * n <= max_size:
        specs.append(FamilySpec("prop", (n,)))
        n += 1
    if 16 <= max_size:
        specs.append(FamilySpec("e6"))
    if 27 <= max_size:
        specs.append(FamilySpec("e7"))
    out, seen = [], set()
    for s in specs:
        key = canonical_poset_key(make(s))
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


def coincidental_specs(max_a=5, max_b=4, max_m=8):
    """Root posets of the well-behaved types at desk scale."""
    specs = [FamilySpec("root", ("A", n)) for n in range(1, max_a + 1)]
    specs += [FamilySpec("root", ("B", n)) for n in range(2, max_b + 1)]
    specs.append(FamilySpec("root", ("H", 3)))
    specs += [FamilySpec("root", ("I", m)) for m in range(2, max_m + 1)]
    return specs


def doppelganger_pairs(max_n, include_exceptional=True):
    """The three families of equal-order-polynomial pairs, bounded by n.

    Yields (spec_P, spec_Q) with P minuscule and Q the partner poset:
    (rectangle, trapezoid) for each 1 <= k <= n/2, the 15-element
    (shifted staircase, H3) pair, and (propeller, I2(2n)) pairs.
    """
    pairs = []
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            pairs.append((FamilySpec("rect", (k, n - k)),
                          FamilySpec("trap", (k, n))))
    if include_exceptional and max_n >= 6:
        pairs.append((FamilySpec("shifted", (6,)), FamilySpec("root", ("H", 3))))
    for n in range(2, max_n // 2 + 1):
        pairs.append((FamilySpec("prop", (n,)), FamilySpec("root", ("I", 2 * n))))
    return pairs
