"""Klyachko elements, Theta series, Lagrange inversion, Raney identity."""

from fractions import Fraction

import pytest

from chopf import colorcore as cc
from chopf import fqsym, special, symql
from chopf.linear import Poly


def qmono(*exps):
    out = Poly.const(1)
    for j, e in enumerate(exps, start=1):
        if e:
            out = out * Poly.var(f"q{j}", e)
    return out


class TestKlyachko:
    def test_k3_display(self):
        ribbons = symql.s_to_ribbon(special.klyachko_multi(3))
        assert ribbons == {
            (3,): Poly.const(1),
            (2, 1): qmono(1, 1),
            (1, 2): qmono(1),
            (1, 1, 1): qmono(2, 1),
        }

    def test_k4_display(self):
        ribbons = symql.s_to_ribbon(special.klyachko_multi(4))
        assert ribbons == {
            (4,): Poly.const(1),
            (3, 1): qmono(1, 1, 1),
            (2, 2): qmono(1, 1),
            (2, 1, 1): qmono(2, 2, 1),
            (1, 3): qmono(1),
            (1, 2, 1): qmono(2, 1, 1),
            (1, 1, 2): qmono(2, 1),
            (1, 1, 1, 1): qmono(3, 2, 1),
        }

    def test_single_q_specialization(self):
        q = Poly.var("q")
        for n in range(1, 6):
            spec = special.specialize_q(special.klyachko_multi(n), n)
            assert spec == special.klyachko_single(n)
        # direct maj values
        ribbons = symql.s_to_ribbon(special.klyachko_single(3))
        assert ribbons == {(3,): Poly.const(1), (2, 1): q ** 2,
                          (1, 2): q, (1, 1, 1): q ** 3}

    def test_constructions_agree(self):
        for n in range(1, 6):
            a = special.klyachko_g_expansion(n)
            b = special.colored_to_polynomial(special.klyachko_multi_colored(n))
            assert a == b

    def test_k1_trivial(self):
        k1 = special.klyachko_single(1)
        assert k1 == symql.S([(1,)], cc.cyclic(1))

    def test_k2_at_minus_one(self):
        # K_2(-1) = 2 S^2 - S^{11}
        k2 = special.klyachko_single(2)
        at = k2.map_coeffs(lambda c: Poly.coerce(c).subs({"q": -1}).scalar())
        m1 = cc.cyclic(1)
        assert at == 2 * symql.S([(2,)], m1) - symql.S([(1,), (1,)], m1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_primitivity(self, n):
        assert special.primitivity_check(n)


class TestTheta:
    def test_degree_one_slice(self):
        t = special.theta(2, 3, with_y=False)
        slice1 = t.homogeneous_component(1)
        expected = sum((fqsym.G((1,), (l,), cc.NAT) for l in range(3)),
                       fqsym.g_basis(cc.NAT).zero)
        assert slice1 == expected

    def test_factor_grouplike(self):
        for level in range(3):
            f = special.theta_factor(level, 4, with_y=False)
            d = fqsym.g_coproduct(f)
            expected = {}
            for k1, c1 in f.terms.items():
                for k2, c2 in f.terms.items():
                    if len(k1[0]) + len(k2[0]) <= 4:
                        expected[(k1, k2)] = c1 * c2
            assert d.terms == expected

    def test_grouplike(self):
        assert special.theta_grouplike(2, 3)

    def test_y_weights_track_color_content(self):
        t = special.theta(2, 3, with_y=True)
        for (perm, colors), coeff in t.terms.items():
            expected = Poly.const(1)
            for level in range(3):
                m = sum(1 for c in colors if c == level)
                if m and level:
                    expected = expected * Poly.var(f"y{m}") ** level
            assert coeff == expected


class TestLagrange:
    def test_display_through_degree_2(self):
        g = special.lagrange_solve(2, 1)
        assert g[0] == {((0, 0),): 1}
        assert g[1] == {((1, 0), (0, 0)): 1}
        assert g[2] == {((2, 0), (0, 0), (0, 0)): 1,
                        ((1, 0), (1, 0), (0, 0)): 1}

    def test_catalan_counts(self):
        for n, cat in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)]:
            assert len(special.lagrange_solve(n, 1)[n]) == cat
            assert len(special.lagrange_solve(n, 2)[n]) == cat * 2 ** (n + 1)

    def test_polish_codes(self):
        for n in range(0, 6):
            for pi in cc.nondecreasing_parking_functions(n):
                word = special.ndpf_word(pi)
                assert special.is_polish_code(word)
                assert special.tree_to_word(special.word_to_tree(word)) == word

    def test_s2010_tree(self):
        tree = special.word_to_tree((2, 0, 1, 0))
        assert tree == [[], [[]]]
        assert special.tree_to_word([[], [[]]]) == (2, 0, 1, 0)

    def test_fixed_point(self):
        assert special.lagrange_fixed_point_check(6, 1)
        assert special.lagrange_fixed_point_check(4, 2)


class TestRaney:
    def test_level1_degree2(self):
        got = special.raney_specialize(2, 1)
        y, z = Poly.var("y1"), Poly.var("z1")
        assert got == Fraction(3, 2) * y ** 3 * z ** 2

    @pytest.mark.parametrize("n,l", [(1, 1), (2, 1), (3, 1), (4, 1),
                                     (1, 2), (2, 2), (3, 2), (4, 2)])
    def test_identity(self, n, l):
        assert special.raney_identity_check(n, l)

    def test_cayley_collapse(self):
        for n in range(1, 6):
            assert special.cayley_value(n) == (n + 1) ** (n - 1)
