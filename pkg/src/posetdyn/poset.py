"""Finite posets, order ideals, and exact enumerative invariants.

Elements are opaque hashable labels.  Internally elements are re-indexed
along a fixed topological order (minimal elements first), so order ideals
are integer bitmasks whose down-closure only depends on lower covers, which
always sit at smaller indices.  All arithmetic is exact: counts are Python
ints, polynomial coefficients are ``fractions.Fraction``.  No floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property

DEFAULT_IDEAL_CAP = 10**8


class PosetError(Exception):
    """Base class for poset construction and enumeration failures."""


class CycleError(PosetError):
    """The supplied cover relation contains a directed cycle."""


class HasseError(PosetError):
    """A supplied cover pair is implied by transitivity of the others."""


class UnknownElementError(PosetError):
    """A cover refers to an element that was not declared."""


class CapExceededError(PosetError):
    """An enumeration exceeded its configured size cap."""


class NotAutonomousError(PosetError):
    """The given subset is not autonomous in the host poset."""


def _topological_order(n, up):
    """Kahn's algorithm; deterministic (smallest original index first)."""
    indeg = [0] * n
    for i in range(n):
        for j in up[i]:
            indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        fresh = []
        for j in up[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                fresh.append(j)
        if fresh:
            ready = sorted(ready + fresh)
    if len(order) != n:
        raise CycleError("cover relation contains a cycle")
    return order


class Poset:
    """Immutable finite poset given by its Hasse diagram.

    Parameters
    ----------
    elements : iterable of hashable labels
    covers : iterable of (lower, upper) label pairs

    Construction validates the input: unknown labels and duplicate
    labels are rejected, cycles are rejected, and any cover pair that is
    transitively implied by the others raises ``HasseError`` rather than
    being silently dropped.
    """

    def __init__(self, elements, covers=()):
        labels = list(elements)
        if len(set(labels)) != len(labels):
            raise UnknownElementError("duplicate element labels")
        index0 = {x: i for i, x in enumerate(labels)}
        up0 = [[] for _ in labels]
        down0 = [[] for _ in labels]
        seen = set()
        for lo, hi in covers:
            if lo not in index0:
                raise UnknownElementError(f"cover uses undeclared element {lo!r}")
            if hi not in index0:
                raise UnknownElementError(f"cover uses undeclared element {hi!r}")
            if lo == hi:
                raise CycleError(f"self-cover at {lo!r}")
            a, b = index0[lo], index0[hi]
            if (a, b) in seen:
                continue
            seen.add((a, b))
            up0[a].append(b)
            down0[b].append(a)

        order = _topological_order(len(labels), up0)
        pos = [0] * len(order)
        for new, old in enumerate(order):
            pos[old] = new
        self._labels = tuple(labels[old] for old in order)
        self._index = {x: i for i, x in enumerate(self._labels)}
        self._up = tuple(tuple(sorted(pos[j] for j in up0[old])) for old in order)
        self._down = tuple(tuple(sorted(pos[j] for j in down0[old])) for old in order)

        n = len(self._labels)
        above = [0] * n
        for i in reversed(range(n)):
            m = 0
            for j in self._up[i]:
                m |= above[j] | (1 << j)
            above[i] = m
        below = [0] * n
        for i in range(n):
            m = 0
            for j in self._down[i]:
                m |= below[j] | (1 << j)
            below[i] = m
        self._above = tuple(above)
        self._below = tuple(below)

        for i in range(n):
            ups = self._up[i]
            for j in ups:
                for c in ups:
                    if c != j and (above[c] >> j) & 1:
                        raise HasseError(
                            f"cover ({self._labels[i]!r}, {self._labels[j]!r}) "
                            "is implied by transitivity"
                        )

    # -- basic structure ------------------------------------------------

    @property
    def n(self):
        return len(self._labels)

    def __len__(self):
        return len(self._labels)

    @property
    def elements(self):
        """Element labels in the internal (topological) order."""
        return self._labels

    @property
    def covers(self):
        """Cover pairs as (lower, upper) labels, deterministic order."""
        out = []
        for i in range(self.n):
            for j in self._up[i]:
                out.append((self._labels[i], self._labels[j]))
        return tuple(out)

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElementError(f"unknown element {x!r}") from None

    def label(self, i):
        return self._labels[i]

    def up_covers(self, x):
        return tuple(self._labels[j] for j in self._up[self.index(x)])

    def down_covers(self, x):
        return tuple(self._labels[j] for j in self._down[self.index(x)])

    def leq(self, x, y):
        i, j = self.index(x), self.index(y)
        return i == j or bool((self._above[i] >> j) & 1)

    def less(self, x, y):
        i, j = self.index(x), self.index(y)
        return bool((self._above[i] >> j) & 1)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    @cached_property
    def minimal_elements(self):
        return tuple(self._labels[i] for i in range(self.n) if not self._down[i])

    @cached_property
    def maximal_elements(self):
        return tuple(self._labels[i] for i in range(self.n) if not self._up[i])

    @cached_property
    def _up_cover_mask(self):
        return tuple(sum(1 << j for j in ups) for ups in self._up)

    @cached_property
    def _down_cover_mask(self):
        return tuple(sum(1 << j for j in dns) for dns in self._down)

    @cached_property
    def _down_closure(self):
        """Mask of everything <= element i, element included."""
        return tuple(self._below[i] | (1 << i) for i in range(self.n))

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @cached_property
    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self._up[i] + self._down[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    # -- rank structure ---------------------------------------------------

    @cached_property
    def _longest_path_rank(self):
        r = [0] * self.n
        for i in range(self.n):
            if self._down[i]:
                r[i] = 1 + max(r[d] for d in self._down[i])
        return tuple(r)

    @cached_property
    def is_graded(self):
        """Every maximal chain has the same length."""
        if self.n == 0:
            return True
        r = self._longest_path_rank
        for i in range(self.n):
            for j in self._up[i]:
                if r[j] != r[i] + 1:
                    return False
        tops = {r[i] for i in range(self.n) if not self._up[i]}
        return len(tops) == 1

    @property
    def rank(self):
        """Rank r(P) of a graded poset: the common maximal-chain length."""
        if not self.is_graded:
            raise PosetError("poset is not graded")
        return max(self._longest_path_rank) if self.n else 0

    def rank_of(self, x):
        if not self.is_graded:
            raise PosetError("poset is not graded")
        return self._longest_path_rank[self.index(x)]

    @cached_property
    def rank_profile(self):
        """Tuple whose i-th entry counts elements of rank i (graded only)."""
        if not self.is_graded:
            raise PosetError("poset is not graded")
        prof = [0] * (self.rank + 1)
        for i in range(self.n):
            prof[self._longest_path_rank[i]] += 1
        return tuple(prof)

    # -- derived posets ---------------------------------------------------

    def dual(self):
        return Poset(self._labels, [(b, a) for a, b in self.covers])

    def restrict(self, subset):
        """Induced subposet on the given labels."""
        keep = set(subset)
        idxs = [i for i in range(self.n) if self._labels[i] in keep]
        if len(idxs) != len(keep):
            raise UnknownElementError("restriction uses unknown labels")
        keep_mask = sum(1 << i for i in idxs)
        covers = []
        for a in idxs:
            for b in idxs:
                if (self._above[a] >> b) & 1:
                    between = self._above[a] & self._below[b] & keep_mask
                    if between == 0:
                        covers.append((self._labels[a], self._labels[b]))
        return Poset([self._labels[i] for i in idxs], covers)

    # -- order ideals -------------------------------------------------------

    def ideal_masks(self, cap=None):
        """All order ideals as bitmasks, sorted ascending (= lexicographic
        on membership).  Cached after the first call."""
        cached = self.__dict__.get("_ideal_masks_cache")
        if cached is not None:
            return cached
        limit = DEFAULT_IDEAL_CAP if cap is None else cap
        dcm = self._down_cover_mask
        n = self.n
        masks = []

        def rec(i, mask):
            if i == n:
                masks.append(mask)
                if len(masks) > limit:
                    raise CapExceededError(
                        f"more than {limit} order ideals; raise the cap"
                    )
                return
            rec(i + 1, mask)
            if dcm[i] & mask == dcm[i]:
                rec(i + 1, mask | (1 << i))

        rec(0, 0)
        masks.sort()
        self.__dict__["_ideal_masks_cache"] = tuple(masks)
        self.__dict__["_ideal_positions"] = {m: k for k, m in enumerate(masks)}
        return self.__dict__["_ideal_masks_cache"]

    def ideal_position(self, mask):
        self.ideal_masks()
        return self.__dict__["_ideal_positions"][mask]

    def ideal_count(self, cap=None):
        return len(self.ideal_masks(cap))

    def order_ideals(self, cap=None):
        return [OrderIdeal(self, m) for m in self.ideal_masks(cap)]

    def ideal_max_mask(self, mask):
        """Maximal elements of an ideal: members with no up-cover inside."""
        ucm = self._up_cover_mask
        out = 0
        m = mask
        while m:
            b = m & -m
            i = b.bit_length() - 1
            if ucm[i] & mask == 0:
                out |= b
            m ^= b
        return out

    def ideal_ddeg(self, mask):
        return self.ideal_max_mask(mask).bit_count()

    def members(self, mask):
        out = []
        m = mask
        while m:
            b = m & -m
            out.append(self._labels[b.bit_length() - 1])
            m ^= b
        return tuple(out)

    def mask_of(self, labels):
        return sum(1 << self.index(x) for x in labels)

    def is_ideal_mask(self, mask):
        dcm = self._down_cover_mask
        m = mask
        while m:
            b = m & -m
            if dcm[b.bit_length() - 1] & mask != dcm[b.bit_length() - 1]:
                return False
            m ^= b
        return True

    @cached_property
    def _containment(self):
        """(subsets_of, supersets_of) position lists over the ideal list.

        Quadratic in the number of ideals; intended for desk-scale posets.
        """
        masks = self.ideal_masks()
        subs = [[] for _ in masks]
        sups = [[] for _ in masks]
        for a, ma in enumerate(masks):
            for b in range(a, len(masks)):
                mb = masks[b]
                if ma & ~mb == 0:
                    subs[b].append(a)
                    sups[a].append(b)
        return subs, sups

    # -- linear extensions ---------------------------------------------------

    def linear_extension(self):
        """The fixed topological order used internally."""
        return self._labels

    def linear_extension_count(self, cap=None):
        """Number of linear extensions, exactly (maximal chains of J(P))."""
        masks = self.ideal_masks(cap)
        count = {0: 1}
        for mask in masks:
            if mask == 0:
                continue
            total = 0
            mm = self.ideal_max_mask(mask)
            while mm:
                b = mm & -mm
                total += count[mask ^ b]
                mm ^= b
            count[mask] = total
        return count[self.full_mask]

    def linear_extensions(self, cap=None):
        """Iterate over all linear extensions as label tuples."""
        limit = DEFAULT_IDEAL_CAP if cap is None else cap
        n = self.n
        dcm = self._down_cover_mask
        emitted = 0
        current = []

        def rec(mask):
            nonlocal emitted
            if len(current) == n:
                emitted += 1
                if emitted > limit:
                    raise CapExceededError("linear extension cap exceeded")
                yield tuple(current)
                return
            for i in range(n):
                b = 1 << i
                if mask & b == 0 and dcm[i] & mask == dcm[i]:
                    current.append(self._labels[i])
                    yield from rec(mask | b)
                    current.pop()

        yield from rec(0)

    # -- the order polynomial -----------------------------------------------

    def multichain_count(self, ell):
        """Number of multichains of ell order ideals (= height-ell maps)."""
        if ell < 0:
            raise ValueError("height must be >= 0")
        if ell == 0:
            return 1
        subs, _ = self._containment
        v = [1] * len(self.ideal_masks())
        for _ in range(ell - 1):
            v = [sum(v[i] for i in subs[j]) for j in range(len(v))]
        return sum(v)

    def order_polynomial(self):
        """Exact polynomial agreeing with multichain_count at every height."""
        pts = [(Fraction(l), Fraction(self.multichain_count(l)))
               for l in range(1, self.n + 2)]
        return RationalPolynomial.interpolate(pts)

    # -- serialization -------------------------------------------------------

    def to_dict(self):
        try:
            elems = sorted(self._labels)
        except TypeError:
            elems = sorted(self._labels, key=repr)
        covs = [(a, b) for a, b in self.covers]
        try:
            covs.sort()
        except TypeError:
            covs.sort(key=repr)
        return {
            "elements": [_label_to_json(x) for x in elems],
            "covers": [[_label_to_json(a), _label_to_json(b)] for a, b in covs],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        elems = [_label_from_json(x) for x in d["elements"]]
        covers = [(_label_from_json(a), _label_from_json(b)) for a, b in d["covers"]]
        return cls(elems, covers)

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(fh.read())

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return (set(self._labels) == set(other._labels)
                and set(self.covers) == set(other.covers))

    def __hash__(self):
        return hash((frozenset(self._labels), frozenset(self.covers)))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.covers)})"


def _label_to_json(x):
    if isinstance(x, tuple):
        return [_label_to_json(v) for v in x]
    return x


def _label_from_json(x):
    if isinstance(x, list):
        return tuple(_label_from_json(v) for v in x)
    return x


class OrderIdeal:
    """A down-closed subset of a host poset, stored as a bitmask."""

    __slots__ = ("poset", "mask")

    def __init__(self, poset, mask):
        self.poset = poset
        self.mask = mask

    @classmethod
    def from_members(cls, poset, labels):
        mask = poset.mask_of(labels)
        if not poset.is_ideal_mask(mask):
            raise PosetError(f"{set(labels)!r} is not down-closed")
        return cls(poset, mask)

    @property
    def members(self):
        return self.poset.members(self.mask)

    @property
    def ddeg(self):
        """Number of maximal elements; the down-degree of self in J(P)."""
        return self.poset.ideal_ddeg(self.mask)

    @property
    def max_elements(self):
        return self.poset.members(self.poset.ideal_max_mask(self.mask))

    def __contains__(self, x):
        return bool((self.mask >> self.poset.index(x)) & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        if not isinstance(other, OrderIdeal):
            return NotImplemented
        return self.poset is other.poset and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.poset), self.mask))

    def __repr__(self):
        return f"OrderIdeal({set(self.members) if self.mask else '{}'})"


class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({list(self.coeffs)})"

    @classmethod
    def interpolate(cls, points):
        """Lagrange interpolation through exact (x, y) pairs."""
        coeffs = [Fraction(0)] * len(points)

        def mul(a, b):
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return out

        for i, (xi, yi) in enumerate(points):
            basis = [Fraction(1)]
            den = Fraction(1)
            for j, (xj, _) in enumerate(points):
                if j == i:
                    continue
                basis = mul(basis, [-Fraction(xj), Fraction(1)])
                den *= Fraction(xi) - Fraction(xj)
            scale = Fraction(yi) / den
            for k, c in enumerate(basis):
                coeffs[k] += scale * c
        return cls(coeffs)


# -- transfer map between the order and chain polytopes -----------------------


def _as_point(poset, f):
    vals = {}
    for x in poset.elements:
        if x not in f:
            raise UnknownElementError(f"point missing value at {x!r}")
        vals[x] = Fraction(f[x])
    return vals


def in_order_polytope(poset, f):
    vals = _as_point(poset, f)
    if any(v < 0 or v > 1 for v in vals.values()):
        return False
    return all(vals[a] <= vals[b] for a, b in poset.covers)


def in_chain_polytope(poset, g):
    vals = _as_point(poset, g)
    if any(v < 0 for v in vals.values()):
        return False
    # max weighted chain, computed bottom-up
    best = {}
    for x in poset.elements:
        downs = poset.down_covers(x)
        best[x] = vals[x] + (max(best[d] for d in downs) if downs else 0)
    return max(best.values(), default=Fraction(0)) <= 1


def transfer_map(poset, f):
    """Map a point of the order polytope to the chain polytope.

    The value at p becomes min over the covers of p (1 at maximal
    elements) minus the value at p.
    """
    vals = _as_point(poset, f)
    if not in_order_polytope(poset, vals):
        raise ValueError("point is outside the order polytope")
    out = {}
    for x in poset.elements:
        ups = poset.up_covers(x)
        top = min(vals[u] for u in ups) if ups else Fraction(1)
        out[x] = top - vals[x]
    return out

def transfer_inverse(poset, g):
    vals = _as_point(poset, g)
    if not in_chain_polytope(poset, vals):
        raise ValueError("point is outside the chain polytope")
    out = {}
    for x in reversed(poset.elements):  # top-down
        ups = poset.up_covers(x)
        top = min(out[u] for u in ups) if ups else Fraction(1)
        out[x] = top - vals[x]
    return out


# -- canonical forms, isomorphism, comparability ------------------------------


def _refine_colors(n, out_adj, in_adj, colors):
    while True:
        sigs = []
        for i in range(n):
            sigs.append((colors[i],
                         tuple(sorted(colors[j] for j in out_adj[i])),
                         tuple(sorted(colors[j] for j in in_adj[i]))))
        ids = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical(n, out_adj, in_adj):
    """Canonical (encoding, old->slot permutation) for a digraph.

    Individualization-refinement with a twin shortcut: vertices of a cell
    with identical neighborhoods are interchangeable, so only one branches.
    """
    out_sets = [frozenset(a) for a in out_adj]
    in_sets = [frozenset(a) for a in in_adj]
    best_enc = [None]
    best_perm = [None]

    def twins(x, y):
        return (out_sets[x] - {y} == out_sets[y] - {x}
                and in_sets[x] - {y} == in_sets[y] - {x})

    def search(colors):
        colors = _refine_colors(n, out_adj, in_adj, colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = colors  # discrete coloring: color id = slot
            edges = sorted(perm[a] * n + perm[b]
                           for a in range(n) for b in out_adj[a])
            enc = tuple(edges)
            if best_enc[0] is None or enc < best_enc[0]:
                best_enc[0] = enc
                best_perm[0] = list(perm)
            return
        reps = []
        for v in target:
            if not any(twins(v, r) for r in reps):
                reps.append(v)
        for v in reps:
            branched = list(colors)
            branched[v] = -1
            search(branched)

    search([0] * n)
    return (n, best_enc[0]), best_perm[0]


def _poset_canonical(poset):
    return _canonical(poset.n, poset._up, poset._down)


def _comparability_adj(poset):
    n = poset.n
    adj = [[] for _ in range(n)]
    for i in range(n):
        m = poset._above[i]
        while m:
            b = m & -m
            j = b.bit_length() - 1
            adj[i].append(j)
            adj[j].append(i)
            m ^= b
    return [sorted(a) for a in adj]


def canonical_poset_key(poset):
    key, _ = poset.__dict__.setdefault("_canon_cache", _poset_canonical(poset))
    return key


def canonical_comparability_key(poset):
    cached = poset.__dict__.get("_comp_canon_cache")
    if cached is None:
        adj = _comparability_adj(poset)
        cached = _canonical(poset.n, adj, adj)
        poset.__dict__["_comp_canon_cache"] = cached
    return cached[0]


def comparability_graph(poset):
    """Undirected comparability graph as a label -> frozenset(label) map."""
    adj = _comparability_adj(poset)
    return {poset.label(i): frozenset(poset.label(j) for j in adj[i])
            for i in range(poset.n)}


def _witness_from_canons(P, permP, Q, permQ):
    slot_to_q = {}
    for j, s in enumerate(permQ):
        slot_to_q[s] = j
    return {P.label(i): Q.label(slot_to_q[permP[i]]) for i in range(P.n)}


def comp_isomorphic(P, Q):
    """Comparability-graph isomorphism; returns a vertex bijection or None."""
    if P.n != Q.n:
        return None
    kP = canonical_comparability_key(P)
    kQ = canonical_comparability_key(Q)
    if kP != kQ:
        return None
    permP = P.__dict__["_comp_canon_cache"][1]
    permQ = Q.__dict__["_comp_canon_cache"][1]
    wit = _witness_from_canons(P, permP, Q, permQ)
    for x in P.elements:
        for y in P.elements:
            if x != y and P.comparable(x, y) != Q.comparable(wit[x], wit[y]):
                raise AssertionError("canonical labeling produced a bad witness")
    return wit


def poset_isomorphic(P, Q):
    """Poset isomorphism; returns a label bijection or None."""
    if P.n != Q.n:
        return None
    if canonical_poset_key(P) != canonical_poset_key(Q):
        return None
    permP = P.__dict__["_canon_cache"][1]
    permQ = Q.__dict__["_canon_cache"][1]
    wit = _witness_from_canons(P, permP, Q, permQ)
    covsQ = set(Q.covers)
    for a, b in P.covers:
        if (wit[a], wit[b]) not in covsQ:
            raise AssertionError("canonical labeling produced a bad witness")
    return wit


def is_self_dual(poset):
    return poset_isomorphic(poset, poset.dual()) is not None


# -- autonomous subsets --------------------------------------------------------


def is_autonomous(poset, subset):
    """Every outside element relates uniformly to all of the subset."""
    amask = poset.mask_of(subset)
    if amask == 0:
        return False
    for i in range(poset.n):
        if (amask >> i) & 1:
            continue
        up = poset._above[i] & amask
        if up != 0 and up != amask:
            return False
        down = poset._below[i] & amask
        if down != 0 and down != amask:
            return False
    return True


def autonomous_subsets(poset):
    """All nonempty autonomous subsets (singletons and the whole poset
    included).  Exponential scan; fine at desk scale."""
    if poset.n > 20:
        raise CapExceededError("autonomous-subset scan limited to 20 elements")
    out = []
    for mask in range(1, 1 << poset.n):
        labels = poset.members(mask)
        if is_autonomous(poset, labels):
            out.append(frozenset(labels))
    return out


def dualize_autonomous(poset, subset):
    """Reverse the order inside an autonomous subset, keeping everything
    else (including all external relations) fixed."""
    if not is_autonomous(poset, subset):
        raise NotAutonomousError(f"{set(subset)!r} is not autonomous")
    inside = set(subset)
    labels = poset.elements
    n = poset.n

    def new_leq(x, y):
        if x == y:
            return True
        xin, yin = x in inside, y in inside
        if xin and yin:
            return poset.leq(y, x)
        return poset.leq(x, y)

    covers = []
    for x in labels:
        for y in labels:
            if x == y or not new_leq(x, y):
                continue
            if any(z != x and z != y and new_leq(x, z) and new_leq(z, y)
                   for z in labels):
                continue
            covers.append((x, y))
    assert n == poset.n
    return Poset(labels, covers)


# -- generation of all posets up to isomorphism -------------------------------

_ALL_POSETS = {}


def all_posets(n):
    """All posets on n unlabeled elements, one per isomorphism class.

    Built inductively: each poset on n elements arises from one on n-1
    by attaching a new maximal element above an order ideal.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in _ALL_POSETS:
        return _ALL_POSETS[n]
    if n == 1:
        _ALL_POSETS[1] = [Poset((0,), ())]
        return _ALL_POSETS[1]
    seen = {}
    for P in all_posets(n - 1):
        base_covers = list(P.covers)
        for dmask in P.ideal_masks():
            gens = P.members(P.ideal_max_mask(dmask))
            covers = base_covers + [(g, n - 1) for g in gens]
            Q = Poset(tuple(range(n)), covers)
            key = canonical_poset_key(Q)
            if key not in seen:
                seen[key] = Q
    _ALL_POSETS[n] = list(seen.values())
    return _ALL_POSETS[n]


def connected_posets(n):
    return [P for P in all_posets(n) if P.is_connected]


def dualization_path(P, Q):
    """BFS sequence of autonomous dualizations carrying P to a poset
    isomorphic to Q.  Returns (steps, final, iso) where steps is a list of
    (poset, subset) pairs, final = result of applying them, and iso maps
    final's labels to Q's.  None when com(P) and com(Q) differ."""
    if canonical_comparability_key(P) != canonical_comparability_key(Q):
        return None
    target = canonical_poset_key(Q)
    start_key = canonical_poset_key(P)
    # node: canonical key -> (concrete poset, path of (poset, subset))
    frontier = [(P, [])]
    visited = {start_key}
    while frontier:
        nxt = []
        for cur, path in frontier:
            if canonical_poset_key(cur) == target:
                iso = poset_isomorphic(cur, Q)
                return path, cur, iso
            for A in autonomous_subsets(cur):
                if len(A) == 1:
                    continue
                dualized = dualize_autonomous(cur, A)
                key = canonical_poset_key(dualized)
                if key in visited and key != target:
                    continue
                if key == target:
                    iso = poset_isomorphic(dualized, Q)
                    return path + [(cur, A)], dualized, iso
                visited.add(key)
                nxt.append((dualized, path + [(cur, A)]))
        frontier = nxt
    return None
