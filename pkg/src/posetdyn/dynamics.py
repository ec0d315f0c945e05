"""Toggles and rowmotion on order ideals, their piecewise-linear lift to
rational labelings, orbit decomposition, and homomesy verdicts.

Rowmotion is computed by the direct complement-minima description; the
toggle-composition route (sweeping a linear extension from top to
bottom) is kept alongside and cross-asserted when CROSS_CHECK is on.
Height-ell map spaces are walked with packed-integer states so orbit
decompositions of state spaces with ~10^6 points stay affordable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poset import CapExceededError, OrderIdeal, Poset
from .ppartitions import PPartition

# When True, rowmotion double-computes via toggle composition and asserts
# agreement, and height-ell rowmotion asserts the multiset identity
# between new maxima and old complement minima.  Tests switch it on.
CROSS_CHECK = False


# -- combinatorial toggles -------------------------------------------------------


def toggle_mask(poset, mask, i):
    b = 1 << i
    if mask & b:
        if poset._up_cover_mask[i] & mask == 0:
            return mask ^ b
        return mask
    if poset._down_cover_mask[i] & mask == poset._down_cover_mask[i]:
        return mask | b
    return mask


def toggle(I, p):
    """Add or remove p when the result stays an ideal; otherwise fix."""
    P = I.poset
    return OrderIdeal(P, toggle_mask(P, I.mask, P.index(p)))


def toggleability(I, p):
    """(can toggle in, can toggle out) as 0/1 indicators; never both."""
    P = I.poset
    i = P.index(p)
    b = 1 << i
    if I.mask & b:
        return (0, 1 if P._up_cover_mask[i] & I.mask == 0 else 0)
    ok = P._down_cover_mask[i] & I.mask == P._down_cover_mask[i]
    return (1 if ok else 0, 0)


def rowmotion_mask(poset, mask):
    """The ideal generated by the minimal elements of the complement."""
    comp = poset.full_mask & ~mask
    out = 0
    m = comp
    while m:
        b = m & -m
        i = b.bit_length() - 1
        if poset._down_cover_mask[i] & comp == 0:
            out |= poset._down_closure[i]
        m ^= b
    if CROSS_CHECK:
        assert out == rowmotion_mask_via_toggles(poset, mask)
    return out


def rowmotion_mask_via_toggles(poset, mask, order=None):
    """Toggle composition along a linear extension, top rank first."""
    if order is None:
        idxs = range(poset.n - 1, -1, -1)
    else:
        idxs = [poset.index(x) for x in reversed(order)]
    for i in idxs:
        mask = toggle_mask(poset, mask, i)
    return mask


def rowmotion(I):
    return OrderIdeal(I.poset, rowmotion_mask(I.poset, I.mask))


# -- orbit decomposition ---------------------------------------------------------


@dataclass
class Orbit:
    """One cycle of an invertible operator with accumulated statistics."""

    representative: object
    length: int
    ddeg_sum: object
    ddeg_multiset: tuple
    stat_sums: dict = field(default_factory=dict)

    @property
    def ddeg_average(self):
        return Fraction(self.ddeg_sum, self.length)


def orbits(step, states, ddeg=None, stats=None, decode=None, cap=None):
    """Partition a finite state space into cycles of `step`.

    states are hashable encodings; ddeg and the optional named statistics
    are functions of a state.  The representative is the least state of
    the cycle (decoded when a decoder is given).
    """
    visited = set()
    out = []
    stats = stats or {}
    for s0 in states:
        if s0 in visited:
            continue
        cycle = []
        s = s0
        while s not in visited:
            visited.add(s)
            cycle.append(s)
            s = step(s)
            if cap is not None and len(cycle) > cap:
                raise CapExceededError("orbit exceeds the configured cap")
        if s != s0:
            raise ValueError("operator is not invertible on the given states")
        dvals = tuple(ddeg(x) for x in cycle) if ddeg else ()
        rep = min(cycle)
        out.append(Orbit(
            representative=decode(rep) if decode else rep,
            length=len(cycle),
            ddeg_sum=sum(dvals) if dvals else 0,
            ddeg_multiset=tuple(sorted(dvals)),
            stat_sums={name: sum(fn(x) for x in cycle)
                       for name, fn in stats.items()},
        ))
    return out


def row_orbits(poset, stats=None, cap=None):
    """Rowmotion orbit decomposition of the full ideal lattice."""
    masks = poset.ideal_masks()
    named = {}
    if stats:
        for name, fn in stats.items():
            named[name] = (lambda m, f=fn: f(OrderIdeal(poset, m)))
    return orbits(
        lambda m: rowmotion_mask(poset, m),
        masks,
        ddeg=poset.ideal_ddeg,
        stats=named,
        decode=lambda m: OrderIdeal(poset, m),
        cap=cap,
    )


def rowmotion_order(poset):
    from math import lcm
    return lcm(*[o.length for o in row_orbits(poset)]) if poset.n else 1


# -- piecewise-linear level ------------------------------------------------------


@dataclass(frozen=True)
class RationalLabeling:
    """Exact rational labeling with boundary parameters; the virtual
    bottom carries alpha and the virtual top carries omega."""

    poset: Poset
    values: tuple
    alpha: Fraction = Fraction(0)
    omega: Fraction = Fraction(1)

    @classmethod
    def from_dict(cls, poset, values, alpha=0, omega=1):
        vals = tuple(Fraction(values[x]) for x in poset.elements)
        return cls(poset, vals, Fraction(alpha), Fraction(omega))

    def __getitem__(self, x):
        return self.values[self.poset.index(x)]

    def as_dict(self):
        return dict(zip(self.poset.elements, self.values))

    def replace_value(self, i, v):
        vals = list(self.values)
        vals[i] = v
        return RationalLabeling(self.poset, tuple(vals), self.alpha, self.omega)


def pl_toggle(f, p):
    """min over upper neighbours plus max over lower neighbours minus the
    current value; an involution fixing every other coordinate."""
    P = f.poset
    i = P.index(p)
    ups = P._up[i]
    dns = P._down[i]
    top = min((f.values[j] for j in ups), default=f.omega)
    bot = max((f.values[j] for j in dns), default=f.alpha)
    return f.replace_value(i, top + bot - f.values[i])


def pl_rowmotion(f):
    for i in range(f.poset.n - 1, -1, -1):
        f = pl_toggle(f, f.poset.label(i))
    return f


def pl_toggleability(f, p):
    """(T_plus, T_minus): headroom below and above the value at p."""
    P = f.poset
    i = P.index(p)
    ups = P._up[i]
    dns = P._down[i]
    top = min((f.values[j] for j in ups), default=f.omega)
    bot = max((f.values[j] for j in dns), default=f.alpha)
    return (f.values[i] - bot, top - f.values[i])


def pl_ddeg(f):
    """Sum of the upward toggleabilities; equals the coordinate sum of
    the transfer-map image when f lies in the order polytope."""
    return sum(pl_toggleability(f, p)[1] for p in f.poset.elements)


def pl_orbit(f, cap):
    """Cycle of pl_rowmotion through f, or None when no period <= cap."""
    seen = [f]
    g = pl_rowmotion(f)
    while g.values != f.values:
        if len(seen) > cap:
            return None
        seen.append(g)
        g = pl_rowmotion(g)
    return seen


def pl_fixed_point(poset):
    """The rank-proportional labeling fixed by every toggle (graded P)."""
    h = poset.rank + 2
    vals = {p: Fraction(poset.rank_of(p) + 1, h) for p in poset.elements}
    return RationalLabeling.from_dict(poset, vals)


# -- rowmotion on height-ell maps -------------------------------------------------


def _pp_bits(ell):
    return max(1, ell.bit_length())


def pp_pack(poset, ell, values):
    b = _pp_bits(ell)
    out = 0
    for i, v in enumerate(values):
        out |= v << (i * b)
    return out


def pp_unpack(poset, ell, packed):
    b = _pp_bits(ell)
    m = (1 << b) - 1
    return [(packed >> (i * b)) & m for i in range(poset.n)]


def pp_states(poset, ell, cap=None):
    """All height-ell maps as packed integers, produced from nested ideal
    chains; the count equals the order polynomial at ell."""
    from .poset import DEFAULT_IDEAL_CAP

    limit = DEFAULT_IDEAL_CAP if cap is None else cap
    masks = poset.ideal_masks()
    _, sups = poset._containment
    n = poset.n
    b = _pp_bits(ell)
    emitted = 0
    values = [ell] * n

    def assign(bits, level):
        m = bits
        while m:
            lb = m & -m
            values[lb.bit_length() - 1] = level
            m ^= lb

    def rec(level, pos):
        nonlocal emitted
        if level == ell:
            emitted += 1
            if emitted > limit:
                raise CapExceededError("state cap exceeded")
            out = 0
            for i in range(n):
                out |= values[i] << (i * b)
            yield out
            return
        for nxt in sups[pos]:
            bits = masks[nxt] & ~masks[pos]
            assign(bits, level)
            yield from rec(level + 1, nxt)
            assign(bits, ell)

    for start in range(len(masks)):
        assign(masks[start], 0)
        yield from rec(1, start)
        assign(masks[start], ell)


def pp_step(poset, ell):
    """Packed-state rowmotion: toggle every element, top rank first."""
    n = poset.n
    b = _pp_bits(ell)
    mask = (1 << b) - 1
    ups = poset._up
    dns = poset._down
    order = range(n - 1, -1, -1)

    def step(packed):
        vals = [(packed >> (i * b)) & mask for i in range(n)]
        for i in order:
            top = min((vals[j] for j in ups[i]), default=ell)
            bot = max((vals[j] for j in dns[i]), default=0)
            vals[i] = top + bot - vals[i]
        out = 0
        for i in range(n):
            out |= vals[i] << (i * b)
        if CROSS_CHECK:
            _assert_pp_row_characterization(poset, ell,
                                            pp_unpack(poset, ell, packed), vals)
        return out

    return step


def _assert_pp_row_characterization(poset, ell, old, new):
    # multiset of new chain maxima == multiset of old complement minima
    lhs, rhs = [], []
    for i in range(ell):
        newmask = sum(1 << k for k, v in enumerate(new) if v <= i)
        oldmask = sum(1 << k for k, v in enumerate(old) if v <= i)
        lhs.extend(poset.members(poset.ideal_max_mask(newmask)))
        comp = poset.full_mask & ~oldmask
        m = comp
        while m:
            bb = m & -m
            k = bb.bit_length() - 1
            if poset._down_cover_mask[k] & comp == 0:
                rhs.append(poset.label(k))
            m ^= bb
    assert sorted(lhs, key=repr) == sorted(rhs, key=repr)


def pp_ddeg_fn(poset, ell):
    n = poset.n
    b = _pp_bits(ell)
    mask = (1 << b) - 1
    ups = poset._up

    def ddeg(packed):
        vals = [(packed >> (i * b)) & mask for i in range(n)]
        total = 0
        for i in range(n):
            top = min((vals[j] for j in ups[i]), default=ell)
            total += top - vals[i]
        return total

    return ddeg


def pp_rowmotion(T):
    """Rowmotion on a height-ell map (piecewise-linear toggles pulled
    back through division by the height)."""
    step = pp_step(T.poset, T.height)
    packed = pp_pack(T.poset, T.height, T.values)
    return PPartition(T.poset, T.height,
                      pp_unpack(T.poset, T.height, step(packed)))


def pp_orbits(poset, ell, stats=None, cap=None):
    """Rowmotion orbit decomposition of the height-ell state space."""
    step = pp_step(poset, ell)
    named = {}
    if stats:
        for name, fn in stats.items():
            named[name] = (lambda s, f=fn: f(
                PPartition(poset, ell, pp_unpack(poset, ell, s))))
    return orbits(
        step,
        pp_states(poset, ell, cap=cap),
        ddeg=pp_ddeg_fn(poset, ell),
        stats=named,
        decode=lambda s: PPartition(poset, ell, pp_unpack(poset, ell, s)),
        cap=cap,
    )


def frozen_rank_orbit(poset, ell):
    """The staircase states valued 0 below a rank threshold and ell at or
    above it; they form a single rowmotion cycle of full length."""
    out = []
    for i in range(poset.rank + 2):
        vals = [0 if poset.rank_of(p) < i else ell for p in poset.elements]
        out.append(PPartition(poset, ell, vals))
    return out


# -- homomesy ---------------------------------------------------------------------


@dataclass
class HomomesyReport:
    homomesic: bool
    value: object
    averages: list

    def __bool__(self):
        return self.homomesic


def homomesy_check(orbit_list, stat="ddeg", expected=None):
    """Exact per-orbit averages of a statistic; homomesic when they all
    coincide (and equal `expected`, when given)."""
    avgs = []
    for o in orbit_list:
        if stat == "ddeg":
            total = o.ddeg_sum
        else:
            total = o.stat_sums[stat]
        avgs.append(Fraction(total, o.length))
    if not avgs:
        return HomomesyReport(True, expected, [])
    same = all(a == avgs[0] for a in avgs)
    ok = same and (expected is None or avgs[0] == expected)
    return HomomesyReport(ok, avgs[0] if same else None, avgs)


# -- equivariant transport across an autonomous dualization -----------------------


def equivariant_dualization(poset, subset):
    """The dualized poset together with an ideal bijection commuting with
    rowmotion.

    Inside the subset the bijection realigns each rowmotion cycle of the
    subset's own ideal lattice with the cycle of the complementation
    image, pinning the full and empty ideals in place; outside it is the
    identity.  Returns (Q, mapping) where mapping sends frozensets of
    labels (ideals of P) to frozensets of labels (ideals of Q).
    """
    from .poset import dualize_autonomous

    Q = dualize_autonomous(poset, subset)
    A = poset.restrict(subset)
    Astar = Q.restrict(subset)
    aset = frozenset(subset)

    def orbit_of(h, m0):
        cyc = [m0]
        m = rowmotion_mask(h, m0)
        while m != m0:
            cyc.append(m)
            m = rowmotion_mask(h, m)
        return cyc

    psi = {}
    seenA = set()
    full = A.full_mask
    for m0 in A.ideal_masks():
        if m0 in seenA:
            continue
        cyc = orbit_of(A, m0)
        seenA.update(cyc)
        if full in cyc:
            k = cyc.index(full)
            base_src = full
            base_img = Astar.mask_of(subset)
            cyc = cyc[k:] + cyc[:k]
        else:
            base_src = cyc[0]
            base_img = Astar.mask_of(
                aset - set(A.members(cyc[0])))  # complementation image
        img = base_img
        for m in cyc:
            psi[frozenset(A.members(m))] = frozenset(Astar.members(img))
            img = rowmotion_mask(Astar, img)

    def mapping(ideal_labels):
        s = frozenset(ideal_labels)
        inside = s & aset
        return frozenset(s - aset) | psi[inside]

    table = {}
    for m in poset.ideal_masks():
        table[frozenset(poset.members(m))] = mapping(poset.members(m))
    return Q, table


def dualization_orbit_bijection(poset, subset, check=True):
    """Orbit-level consequence of the equivariant ideal bijection: pairs
    of rowmotion orbits of matching length and ddeg sum."""
    Q, table = equivariant_dualization(poset, subset)
    if check:
        for src, img in table.items():
            r_src = poset.members(rowmotion_mask(poset, poset.mask_of(src)))
            r_img = Q.members(rowmotion_mask(Q, Q.mask_of(img)))
            assert table[frozenset(r_src)] == frozenset(r_img), \
                "transported ideal map fails to commute with rowmotion"
    pairs = []
    seen = set()
    for m in poset.ideal_masks():
        src = frozenset(poset.members(m))
        if src in seen:
            continue
        cyc = [src]
        cur = frozenset(poset.members(rowmotion_mask(poset, m)))
        while cur != src:
            cyc.append(cur)
            cur = frozenset(
                poset.members(rowmotion_mask(poset, poset.mask_of(cur))))
        seen.update(cyc)
        src_ddeg = sum(poset.ideal_ddeg(poset.mask_of(s)) for s in cyc)
        img_cyc = [table[s] for s in cyc]
        img_ddeg = sum(Q.ideal_ddeg(Q.mask_of(s)) for s in img_cyc)
        pairs.append(((len(cyc), src_ddeg), (len(img_cyc), img_ddeg)))
    return Q, pairs
