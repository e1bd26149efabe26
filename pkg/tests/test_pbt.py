"""Colored planar binary trees inside FQSym."""

import itertools

import pytest

from chopf import colorcore as cc
from chopf import fqsym, pbt
from chopf.colorcore import cyclic

M1 = cyclic(1)
M2 = cyclic(2)

LEAF = None


def node(l=LEAF, r=LEAF):
    return (l, r)


class TestRealization:
    def test_single_node(self):
        x = pbt.p_element(node(), (1,), M2)
        assert x == fqsym.F((1,), (1,), M2)

    def test_fibers_partition_s3(self):
        total = 0
        for t in cc.binary_trees(3):
            total += len(pbt.perms_of_shape(t))
        assert total == 6
        assert len(cc.binary_trees(3)) == 5

    def test_size2_shapes(self):
        assert cc.bst_insert((1, 2)) != cc.bst_insert((2, 1))

    def test_dimension_by_disjoint_supports(self):
        # P_{T,u} have pairwise disjoint F supports: dimension l^n C_n
        for n in range(1, 5):
            seen = set()
            count = 0
            for t in cc.binary_trees(n):
                for u in itertools.product((0, 1), repeat=n):
                    x = pbt.p_element(t, u, M2)
                    keys = set(x.terms)
                    assert not (keys & seen)
                    seen |= keys
                    count += 1
            catalan = len(cc.binary_trees(n))
            assert count == 2 ** n * catalan


class TestProduct:
    def test_classical_size_1_times_1(self):
        x = pbt.P(node(), (0,), M1)
        got = pbt.p_product(x, x)
        left_comb = node(node(), LEAF)
        right_comb = node(LEAF, node())
        assert got == pbt.P(left_comb, (0, 0), M1) + pbt.P(right_comb, (0, 0), M1)

    def test_unit(self):
        x = pbt.P(node(), (1,), M2)
        one = pbt.pbt_basis(M2).one
        assert pbt.p_product(one, x) == x
        assert pbt.p_product(x, one) == x

    def test_regrouping_closure(self):
        for l in (1, 2):
            monoid = cyclic(l)
            for n1 in range(1, 3):
                for n2 in range(1, 5 - n1):
                    for t1 in cc.binary_trees(n1):
                        for t2 in cc.binary_trees(n2):
                            for u1 in itertools.product(range(l), repeat=n1):
                                for u2 in itertools.product(range(l), repeat=n2):
                                    x = pbt.P(t1, u1, monoid)
                                    y = pbt.P(t2, u2, monoid)
                                    prod = pbt.p_product(x, y)
                                    assert all(c > 0 for c in prod.terms.values())

    def test_orientation_self_test(self):
        assert pbt.orientation_self_test()


class TestCoproduct:
    def test_size2(self):
        x = pbt.P(node(node(), LEAF), (0, 1), M2)
        d = pbt.p_coproduct(x)
        # counit parts present
        e = (LEAF, ())
        assert d.terms.get((e, (node(node(), LEAF), (0, 1)))) == 1
        assert d.terms.get(((node(node(), LEAF), (0, 1)), e)) == 1

    def test_hopf_compatibility_small(self):
        from chopf.linear import tensor_bilinear
        keys = []
        for n in range(0, 3):
            for t in cc.binary_trees(n):
                for u in itertools.product((0, 1), repeat=n):
                    keys.append((t, u))
        basis = pbt.pbt_basis(M2)

        def rule(k1, k2):
            return pbt.p_product(basis.monomial(k1), basis.monomial(k2)).terms.items()

        for k1 in keys:
            for k2 in keys:
                x, y = basis.monomial(k1), basis.monomial(k2)
                lhs = pbt.p_coproduct(pbt.p_product(x, y))
                rhs = tensor_bilinear(pbt.p_coproduct(x), pbt.p_coproduct(y), rule)
                assert lhs == rhs

    def test_coproduct_closure_size4(self):
        for n in range(1, 5):
            for t in cc.binary_trees(n):
                x = pbt.P(t, (0,) * n, M1)
                d = pbt.p_coproduct(x)
                assert all(c > 0 for c in d.terms.values())
