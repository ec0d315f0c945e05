from fractions import Fraction

import pytest

from posetdyn.cde import (ToggleCertificate, edge_density, expectation, is_cde,
                          is_mcde, maxchain_distribution, mchain_distribution,
                          tcde_solve, toggleability, uniform_distribution,
                          validate_certificate)
from posetdyn.families import (coincidental_specs, make, minuscule_specs,
                               rectangle, root_poset, trapezoid)
from posetdyn.poset import OrderIdeal, Poset


H3_FIGURE_COEFFS = {1: 1, 2: 1, 3: 1, 4: 0, 5: 0, 6: -1, 7: 0, 8: -2,
                    9: 0, 10: -1, 11: -2, 12: -4, 13: -3, 14: -2, 15: -1}


class TestToggleability:
    def test_empty_ideal(self):
        P = rectangle(2, 3)
        empty = OrderIdeal(P, 0)
        for p in P.minimal_elements:
            assert toggleability(empty, p) == (1, 0)
        assert toggleability(empty, (2, 3)) == (0, 0)

    def test_full_ideal(self):
        P = rectangle(2, 3)
        full = OrderIdeal(P, P.full_mask)
        for p in P.maximal_elements:
            assert toggleability(full, p) == (0, 1)

    def test_never_both(self):
        P = root_poset("A", 3)
        for m in P.ideal_masks():
            I = OrderIdeal(P, m)
            for p in P.elements:
                t = toggleability(I, p)
                assert t in ((0, 0), (0, 1), (1, 0))

    def test_ddeg_is_sum_of_down_toggles(self):
        P = rectangle(2, 3)
        for m in P.ideal_masks():
            I = OrderIdeal(P, m)
            assert I.ddeg == sum(toggleability(I, p)[1] for p in P.elements)


class TestDistributions:
    def test_uniform_2x2(self):
        d = uniform_distribution(rectangle(2, 2))
        assert set(d.weights.values()) == {Fraction(1, 6)}

    def test_mchain_one_is_uniform(self):
        for spec in ["rect:2x2", "root:A3", "trap:2,5"]:
            P = make(spec)
            assert mchain_distribution(P, 1).weights == \
                uniform_distribution(P).weights

    def test_maxchain_vs_direct_enumeration(self):
        # oracle: walk every maximal chain of the ideal lattice
        for spec in ["rect:2x2", "rect:2x3", "root:A3"]:
            P = make(spec)
            counts = {m: 0 for m in P.ideal_masks()}
            total = 0
            full = P.full_mask

            def rec(mask, path):
                nonlocal total
                if mask == full:
                    total += 1
                    for m in path:
                        counts[m] += 1
                    return
                comp = full & ~mask
                mm = comp
                while mm:
                    b = mm & -mm
                    i = b.bit_length() - 1
                    if P._down_cover_mask[i] & mask == P._down_cover_mask[i]:
                        rec(mask | b, path + [mask | b])
                    mm ^= b

            rec(0, [0])
            oracle = {m: Fraction(c, total * (P.n + 1))
                      for m, c in counts.items()}
            assert maxchain_distribution(P).weights == oracle

    def test_weights_validate(self):
        with pytest.raises(ValueError):
            from posetdyn.cde import Distribution
            P = rectangle(2, 2)
            Distribution(P, {m: Fraction(1, 7) for m in P.ideal_masks()}, "bad")


class TestExpectations:
    def test_edge_density_2x2(self):
        assert edge_density(rectangle(2, 2)) == 1

    def test_mchain_toggle_symmetric(self):
        for spec in ["rect:2x2", "root:A2", "trap:2,5"]:
            P = make(spec)
            for ell in [1, 2, 3]:
                d = mchain_distribution(P, ell)
                for p in P.elements:
                    assert expectation(d, p) == 0

    def test_maxchain_differs_from_uniform(self):
        P = Poset("abc", [("a", "b")])
        assert maxchain_distribution(P).weights != \
            uniform_distribution(P).weights

    def test_coincidental_edge_density(self):
        for spec, n in [("root:A4", 4), ("root:B3", 3), ("root:H3", 3),
                        ("root:I2(8)", 2)]:
            assert edge_density(make(spec)) == Fraction(n, 2)

    def test_expectation_callable(self):
        P = rectangle(2, 2)
        d = uniform_distribution(P)
        assert expectation(d, lambda I: len(I)) == 2


class TestCdeChecks:
    def test_chain_is_cde(self):
        P = Poset(range(4), [(i, i + 1) for i in range(3)])
        assert is_cde(P)

    def test_d4_not_cde(self):
        assert not is_cde(root_poset("D", 4))

    def test_mcde_finite_vs_polynomial(self):
        for spec in ["rect:2x3", "trap:2,5"]:
            P = make(spec)
            assert is_mcde(P, mode="polynomial")
            assert is_mcde(P, upto=5, mode="finite")

    def test_trapezoids_paper_cases(self):
        assert is_mcde(trapezoid(3, 7))
        assert is_mcde(trapezoid(3, 8))

    def test_non_mcde_example(self):
        # three minimal elements under one top: not even CDE
        P = Poset("abcd", [("a", "d"), ("b", "d"), ("c", "d")])
        assert not is_cde(P)
        assert not is_mcde(P)
        assert not is_mcde(root_poset("D", 4))


class TestTcde:
    def test_minuscule_all_have_certificates(self):
        for spec in minuscule_specs(16):
            P = make(spec)
            cert = tcde_solve(P)
            assert cert is not None, str(spec)
            assert cert.delta == Fraction(P.n, P.rank + 2)

    def test_coincidental_roots_have_certificates(self):
        for spec in coincidental_specs(max_a=4, max_b=3, max_m=8):
            P = make(spec)
            cert = tcde_solve(P)
            assert cert is not None, str(spec)
            assert cert.delta == Fraction(P.n, P.rank + 2)

    def test_h3_figure_certificate(self):
        P = root_poset("H", 3)
        # scaled identity: 2*ddeg + sum c_p T_p = 3
        halves = {p: Fraction(c, 2) for p, c in H3_FIGURE_COEFFS.items()}
        assert validate_certificate(P, halves, Fraction(3, 2))
        cert = tcde_solve(P)
        assert cert is not None and cert.delta == Fraction(3, 2)
        scale, scaled, delta = cert.cleared()
        assert delta == scale * Fraction(3, 2)

    def test_i2_two_minimal_certificate(self):
        for m in range(2, 9):
            P = root_poset("I", m)
            assert validate_certificate(
                P, {"a": Fraction(1, 2), "b": Fraction(1, 2)}, 1)
            cert = tcde_solve(P)
            assert cert is not None and cert.delta == 1

    def test_trapezoid_2_5_not_tcde(self):
        assert tcde_solve(trapezoid(2, 5)) is None

    def test_d4_not_tcde(self):
        assert tcde_solve(root_poset("D", 4)) is None

    def test_certificate_validation_is_exhaustive(self):
        P = rectangle(2, 2)
        cert = tcde_solve(P)
        wrong = dict(cert.coefficients)
        first = next(iter(wrong))
        wrong[first] += 1
        assert not validate_certificate(P, wrong, cert.delta)

    def test_implication_chain(self):
        # tCDE => mCDE => CDE on assorted posets
        for spec in ["rect:2x3", "root:B2", "prop:3", "root:I2(6)"]:
            P = make(spec)
            assert tcde_solve(P) is not None
            assert is_mcde(P)
            assert is_cde(P)

    def test_plus_minus_form(self):
        P = rectangle(2, 2)
        cert = tcde_solve(P)
        pm = cert.plus_minus_form()
        # check the rewritten identity directly on every ideal
        for m in P.ideal_masks():
            I = OrderIdeal(P, m)
            total = Fraction(0)
            for p, (cp, cm) in pm.items():
                plus, minus = toggleability(I, p)
                total += cp * plus + cm * minus
            assert total == cert.delta
