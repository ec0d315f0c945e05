"""Height-ell order-preserving maps, their set-valued generalization,
and the associated statistics and generating functions.

A height-ell map T assigns each element a value in {0..ell} weakly
increasing along the order; it is the same data as a nested chain of
ell order ideals I_0 <= ... <= I_{ell-1} via I_i = T^{-1}{0..i}.
Generating functions are computed by transfer-matrix recursions over the
ideal lattice, so they stay cheap even when the map count explodes.
"""

from __future__ import annotations

from fractions import Fraction

from .poset import CapExceededError, DEFAULT_IDEAL_CAP, OrderIdeal, Poset, PosetError
from .sieving import IntPolynomial


class PPartition:
    """A height-ell weakly order-preserving map into {0..ell}."""

    __slots__ = ("poset", "height", "values")

    def __init__(self, poset, height, values):
        self.poset = poset
        self.height = height
        if isinstance(values, dict):
            vals = tuple(values[x] for x in poset.elements)
        else:
            vals = tuple(values)
        if len(vals) != poset.n:
            raise PosetError("value vector has the wrong length")
        for v in vals:
            if not (0 <= v <= height):
                raise PosetError(f"value {v} outside [0, {height}]")
        for a, b in poset.covers:
            if vals[poset.index(a)] > vals[poset.index(b)]:
                raise PosetError(f"values decrease along cover ({a!r}, {b!r})")
        self.values = vals

    def __getitem__(self, x):
        return self.values[self.poset.index(x)]

    def as_dict(self):
        return {x: v for x, v in zip(self.poset.elements, self.values)}

    def ideal_chain(self):
        """The ideals T^{-1}{0..i} for i = 0..height-1."""
        out = []
        for i in range(self.height):
            mask = 0
            for k, v in enumerate(self.values):
                if v <= i:
                    mask |= 1 << k
            out.append(OrderIdeal(self.poset, mask))
        return out

    @property
    def ddeg(self):
        """Sum of down-degrees of the ideals in the chain.

        Computed as sum over p of (min of the values above p, or ell) -
        value at p, which agrees with the chain formula.
        """
        P, vals = self.poset, self.values
        total = 0
        for i in range(P.n):
            ups = P._up[i]
            top = min((vals[j] for j in ups), default=self.height)
            total += top - vals[i]
        return total

    @property
    def size(self):
        return sum(self.values)

    @property
    def acard(self):
        """Total count of new maximal elements across the chain steps."""
        P = self.poset
        total = 0
        prev = 0
        for i in range(self.height):
            mask = sum(1 << k for k, v in enumerate(self.values) if v <= i)
            diff = mask & ~prev
            m = diff
            while m:
                b = m & -m
                k = b.bit_length() - 1
                if P._up_cover_mask[k] & diff == 0:
                    total += 1
                m ^= b
            prev = mask
        return total

    def __eq__(self, other):
        if not isinstance(other, PPartition):
            return NotImplemented
        return (self.poset is other.poset and self.height == other.height
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.poset), self.height, self.values))

    def __repr__(self):
        return f"PPartition(height={self.height}, values={self.as_dict()})"


def ppartition_ddeg(T):
    return T.ddeg


def ppartition_size(T):
    return T.size


def ppartition_acard(T):
    return T.acard


def count_ppartitions(poset, ell):
    return poset.multichain_count(ell)


def enumerate_ppartitions(poset, ell, cap=None):
    """Iterate all height-ell maps, generated as nested ideal chains."""
    if ell < 1:
        raise ValueError("height must be >= 1")
    limit = DEFAULT_IDEAL_CAP if cap is None else cap
    masks = poset.ideal_masks()
    _, sups = poset._containment
    n = poset.n
    emitted = 0
    values = [ell] * n

    def assign(pos_mask_bits, level):
        m = pos_mask_bits
        while m:
            b = m & -m
            values[b.bit_length() - 1] = level
            m ^= b

    def rec(level, pos):
        nonlocal emitted
        if level == ell:
            emitted += 1
            if emitted > limit:
                raise CapExceededError("height-ell map cap exceeded")
            yield PPartition(poset, ell, tuple(values))
            return
        for nxt in sups[pos]:
            new_bits = masks[nxt] & ~masks[pos]
            assign(new_bits, level)
            yield from rec(level + 1, nxt)
            assign(new_bits, ell)

    for start in range(len(masks)):
        assign(masks[start], 0)
        yield from rec(1, start)
        assign(masks[start], ell)


def _chain_gf(poset, ell, weight_exponents):
    """Sum over ideal chains I_0 <= ... <= I_{ell-1} of
    q^{sum_i w(I_i)} where w is given per ideal position."""
    masks = poset.ideal_masks()
    subs, _ = poset._containment
    J = len(masks)

    def shifted(coeffs, k):
        return [0] * k + coeffs

    vecs = [shifted([1], weight_exponents[j]) for j in range(J)]
    for _ in range(ell - 1):
        new = []
        for j in range(J):
            acc = []
            for i in subs[j]:
                src = vecs[i]
                if len(src) > len(acc):
                    acc += [0] * (len(src) - len(acc))
                for t, c in enumerate(src):
                    acc[t] += c
            new.append(shifted(acc, weight_exponents[j]))
        vecs = new
    total = []
    for v in vecs:
        if len(v) > len(total):
            total += [0] * (len(v) - len(total))
        for t, c in enumerate(v):
            total[t] += c
    return IntPolynomial(total)


def ddeg_generating_function(poset, ell):
    """Sum of q^{ddeg(T)} over all height-ell maps T."""
    if ell < 1:
        raise ValueError("height must be >= 1")
    masks = poset.ideal_masks()
    w = [poset.ideal_ddeg(m) for m in masks]
    return _chain_gf(poset, ell, w)


def size_generating_function(poset, ell):
    """Sum of q^{|T|} over all height-ell maps T."""
    if ell < 1:
        raise ValueError("height must be >= 1")
    masks = poset.ideal_masks()
    n = poset.n
    w = [n - m.bit_count() for m in masks]
    return _chain_gf(poset, ell, w)


def sum_ddeg_ppartitions(poset, ell):
    """Sum of ddeg(T) over all height-ell maps, via chain counting."""
    masks = poset.ideal_masks()
    subs, sups = poset._containment
    J = len(masks)
    ddegs = [poset.ideal_ddeg(m) for m in masks]
    # D[t][j]: chains of t ideals ending at j; U[t][j]: starting at j
    D = [[1] * J]
    for _ in range(ell - 1):
        prev = D[-1]
        D.append([sum(prev[i] for i in subs[j]) for j in range(J)])
    U = [[1] * J]
    for _ in range(ell - 1):
        prev = U[-1]
        U.append([sum(prev[i] for i in sups[j]) for j in range(J)])
    total = 0
    for i in range(ell):
        dd = D[i]          # chains of i+1 ideals ending here
        uu = U[ell - 1 - i]  # chains of ell-i ideals starting here
        total += sum(ddegs[j] * dd[j] * uu[j] for j in range(J))
    return total


# -- set-valued maps -------------------------------------------------------------


class SetValuedPPartition:
    """Map into nonempty subsets of {0..ell} with max <= min along the
    order; excess counts the extra values beyond one per element."""

    __slots__ = ("poset", "height", "values")

    def __init__(self, poset, height, values):
        self.poset = poset
        self.height = height
        if isinstance(values, dict):
            vals = tuple(frozenset(values[x]) for x in poset.elements)
        else:
            vals = tuple(frozenset(v) for v in values)
        for s in vals:
            if not s:
                raise PosetError("empty value set")
            if any(not (0 <= v <= height) for v in s):
                raise PosetError("value outside range")
        for a, b in poset.covers:
            if max(vals[poset.index(a)]) > min(vals[poset.index(b)]):
                raise PosetError(f"max/min violated along ({a!r}, {b!r})")
        self.values = vals

    def __getitem__(self, x):
        return self.values[self.poset.index(x)]

    def as_dict(self):
        return {x: set(s) for x, s in zip(self.poset.elements, self.values)}

    @property
    def excess(self):
        return sum(len(s) - 1 for s in self.values)

    @property
    def size_partition(self):
        """Weakly decreasing list of the value-set sizes."""
        return tuple(sorted((len(s) for s in self.values), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, SetValuedPPartition):
            return NotImplemented
        return (self.poset is other.poset and self.height == other.height
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.poset), self.height, self.values))

    def __repr__(self):
        return f"SetValuedPPartition(height={self.height}, values={self.as_dict()})"


def excess_generating_function(poset, ell):
    """Polynomial in x whose coefficient of x^e counts the set-valued
    height-ell maps of excess e.

    Transfer-matrix recursion over sandwich states (I, K): I is the ideal
    of elements whose minimum value is <= i, K the sub-ideal of elements
    whose maximum is also <= i; K must contain I minus its maximal
    elements.  An element sitting in I \\ K since step i contributes a
    factor x on entry and (1+x) per further step, which accounts for the
    free interior choices of its value set.
    """
    if ell < 1:
        raise ValueError("height must be >= 1")
    masks = poset.ideal_masks()
    states = []
    for I in masks:
        mx = poset.ideal_max_mask(I)
        sub = mx
        while True:
            states.append((I, I & ~sub))
            if sub == 0:
                break
            sub = (sub - 1) & mx
    index = {s: i for i, s in enumerate(states)}
    S = len(states)
    # transitions s -> s' with componentwise containment
    trans = [[] for _ in range(S)]
    for a, (Ia, Ka) in enumerate(states):
        for b, (Ib, Kb) in enumerate(states):
            if Ia & ~Ib == 0 and Ka & ~Kb == 0:
                trans[b].append(a)

    def padd(acc, src, mul):
        # acc += src * mul; mul given as coefficient list
        need = len(src) + len(mul) - 1
        if len(acc) < need:
            acc += [0] * (need - len(acc))
        for i, c in enumerate(src):
            if c:
                for j, m in enumerate(mul):
                    acc[i + j] += c * m
        return acc

    onepx = {}

    def weight(prev_I, I, K):
        fresh = (I & ~K) & ~prev_I
        held = (I & ~K) & prev_I
        a, b = fresh.bit_count(), held.bit_count()
        if b not in onepx:
            # (1+x)^b
            row = [1]
            for _ in range(b):
                row = [x + y for x, y in zip(row + [0], [0] + row)]
            onepx[b] = row
        return [0] * a + [c for c in onepx[b]] if a else list(onepx[b])

    vecs = []
    for (I, K) in states:
        vecs.append(weight(0, I, K))
    for _ in range(ell):
        new = [[0] for _ in range(S)]
        for b, (Ib, Kb) in enumerate(states):
            acc = [0]
            for a in trans[b]:
                Ia = states[a][0]
                acc = padd(acc, vecs[a], weight(Ia, Ib, Kb))
            new[b] = acc
        vecs = new
    full = poset.full_mask
    return IntPolynomial(vecs[index[(full, full)]])


def count_setvalued(poset, ell, excess=None):
    """Exact count of set-valued height-ell maps; with excess=None a
    dict excess -> count of all nonzero counts."""
    gf = excess_generating_function(poset, ell)
    if excess is None:
        return {e: c for e, c in enumerate(gf.coeffs) if c}
    return gf.coeffs[excess] if excess <= gf.degree else 0


def enumerate_setvalued(poset, ell, excess, cap=None):
    """Stream the set-valued maps of the given excess, assigning value
    sets element by element along the fixed linear extension with budget
    pruning.  Exponential; intended as a witness source at small scale."""
    if ell < 1 or excess < 0:
        raise ValueError("need ell >= 1 and excess >= 0")
    limit = DEFAULT_IDEAL_CAP if cap is None else cap
    n = poset.n
    all_vals = list(range(ell + 1))
    subsets = []  # nonempty subsets of {0..ell} as (min, max, size, frozenset)
    for mask in range(1, 1 << (ell + 1)):
        vals = frozenset(v for v in all_vals if (mask >> v) & 1)
        subsets.append((min(vals), max(vals), len(vals), vals))
    subsets.sort()
    emitted = 0
    chosen = [None] * n

    def rec(i, budget):
        nonlocal emitted
        if i == n:
            if budget == 0:
                emitted += 1
                if emitted > limit:
                    raise CapExceededError("set-valued enumeration cap exceeded")
                yield SetValuedPPartition(poset, ell, tuple(chosen))
            return
        low = 0
        for d in poset._down[i]:
            low = max(low, max(chosen[d]))
        for mn, _mx, sz, vals in subsets:
            if mn < low or sz - 1 > budget:
                continue
            chosen[i] = vals
            yield from rec(i + 1, budget - (sz - 1))
        chosen[i] = None

    yield from rec(0, excess)


def count_setvalued_by_sizes(poset, ell, size_partition):
    """Count set-valued height-ell maps whose sorted value-set sizes form
    the given partition.  Exhaustive with budget pruning."""
    target = tuple(sorted(size_partition, reverse=True))
    excess = sum(target) - poset.n
    if excess < 0 or len(target) != poset.n:
        raise ValueError("size partition must have one part per element")
    count = 0
    for T in enumerate_setvalued(poset, ell, excess):
        if T.size_partition == target:
            count += 1
    return count


def setvalued_reflection(poset, subset, T):
    """Transport a set-valued map across the dualization of an autonomous
    subset: values inside the subset reflect through their global min and
    max.  Preserves height, excess, and the size partition."""
    from .poset import dualize_autonomous

    Q = dualize_autonomous(poset, subset)
    inside = set(subset)
    lo = min(min(T[x]) for x in inside)
    hi = max(max(T[x]) for x in inside)
    vals = {}
    for x in poset.elements:
        if x in inside:
            vals[x] = frozenset(lo + hi - v for v in T[x])
        else:
            vals[x] = T[x]
    return SetValuedPPartition(Q, T.height, vals)
