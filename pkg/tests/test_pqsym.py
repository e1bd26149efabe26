"""Colored parking functions, type-B parking functions, NC^B."""

import itertools
import random

import pytest

from chopf import colorcore as cc
from chopf import pqsym
from chopf.colorcore import cyclic
from chopf.linear import TensorElement, tensor_bilinear, tensor_pairing

M1 = cyclic(1)
M2 = cyclic(2)


def w(text):
    return tuple(int(ch) for ch in text)


class TestGBasis:
    def test_product_small(self):
        x = pqsym.Gp((1,), (0,), M2)
        y = pqsym.Gp((1,), (1,), M2)
        got = pqsym.pg_product(x, y)
        expected = pqsym.Gp((1, 1), (0, 1), M2) + pqsym.Gp((1, 2), (0, 1), M2) \
            + pqsym.Gp((2, 1), (0, 1), M2)
        assert got == expected

    def test_unit(self):
        x = pqsym.Gp((1, 1), (0, 1), M2)
        one = pqsym.pg_basis(M2).one
        assert pqsym.pg_product(one, x) == x
        assert pqsym.pg_product(x, one) == x

    def test_triple_product_exhausts_pf3(self):
        x = pqsym.Gp((1,), (0,), M1)
        got = pqsym.pg_product(pqsym.pg_product(x, x), x)
        assert len(got.terms) == 16
        assert sum(got.terms.values()) == 16
        assert {k[0] for k in got.terms} == set(cc.parking_functions(3))

    def test_coproduct_paper_example(self):
        x = pqsym.Gp(w("41142"), w("22115"), cc.ColorMonoid("nat"))
        got = pqsym.pg_coproduct(x)
        e = ((), ())
        expected = {
            (e, (w("41142"), w("22115"))): 1,
            ((w("112"), w("215")), (w("11"), w("21"))): 1,
            ((w("41142"), w("22115")), e): 1,
        }
        assert got.terms == expected

    def test_coproduct_primitive(self):
        x = pqsym.Gp((1,), (1,), M2)
        e = ((), ())
        assert pqsym.pg_coproduct(x).terms == {
            (e, ((1,), (1,))): 1, (((1,), (1,)), e): 1}


class TestFBasis:
    def test_product_small(self):
        x = pqsym.Fp((1,), (0,), M2)
        y = pqsym.Fp((1,), (1,), M2)
        got = pqsym.pf_product(x, y)
        assert got == pqsym.Fp((1, 2), (0, 1), M2) + pqsym.Fp((2, 1), (1, 0), M2)

    def test_coproduct_with_parkization(self):
        x = pqsym.Fp((1, 1), (0, 1), M2)
        got = pqsym.pf_coproduct(x)
        e = ((), ())
        expected = {
            (e, ((1, 1), (0, 1))): 1,
            (((1,), (0,)), ((1,), (1,))): 1,
            (((1, 1), (0, 1)), e): 1,
        }
        assert got.terms == expected

    def test_duality_adjunction(self):
        keys = {n: [k for k in pqsym.colored_parking_functions(n, 2)]
                for n in range(4)}
        gb, fb = pqsym.pg_basis(M2), pqsym.pf_basis(M2)
        rng = random.Random(7)
        for n in range(4):
            for ku in keys[n]:
                du = pqsym.pg_coproduct(gb.monomial(ku))
                for i in range(n + 1):
                    vs = keys[i] if len(keys[i]) < 8 else rng.sample(keys[i], 8)
                    ws = keys[n - i] if len(keys[n - i]) < 8 \
                        else rng.sample(keys[n - i], 8)
                    for kv in vs:
                        for kw in ws:
                            v, w_ = fb.monomial(kv), fb.monomial(kw)
                            lhs = tensor_pairing(du, v, w_)
                            rhs = pqsym.pair_p(pqsym.pf_product(v, w_),
                                               gb.monomial(ku))
                            assert lhs == rhs

    def test_hopf_compatibility(self):
        keys = [k for n in range(3) for k in pqsym.colored_parking_functions(n, 2)]
        fb = pqsym.pf_basis(M2)
        for k1 in keys:
            for k2 in keys:
                x, y = fb.monomial(k1), fb.monomial(k2)
                lhs = pqsym.pf_coproduct(pqsym.pf_product(x, y))
                rhs = tensor_bilinear(pqsym.pf_coproduct(x),
                                      pqsym.pf_coproduct(y),
                                      pqsym.pf_product_keys)
                assert lhs == rhs

    def test_counts(self):
        for n, count in [(1, 2), (2, 12), (3, 128)]:
            assert sum(1 for _ in pqsym.colored_parking_functions(n, 2)) == count


class TestLevel2:
    def test_n3_list(self):
        got = pqsym.level2_parking_functions(3)
        assert len(got) == 27
        nontrivial = sorted(k for k in got if any(k[1]))
        expected = sorted([
            (w("111"), w("100")), (w("111"), w("110")), (w("112"), w("100")),
            (w("121"), w("100")), (w("211"), w("010")), (w("113"), w("100")),
            (w("131"), w("100")), (w("311"), w("010")), (w("122"), w("010")),
            (w("212"), w("100")), (w("221"), w("100")),
        ])
        assert nontrivial == expected

    def test_match_rule_n4(self):
        assert not pqsym.is_level2_pf(w("1122"), w("0010"))
        assert not pqsym.is_level2_pf(w("1122"), w("1010"))
        assert pqsym.is_level2_pf(w("1133"), w("0010"))
        assert pqsym.is_level2_pf(w("1133"), w("1010"))

    def test_counts_n_to_the_n(self):
        for n in range(1, 5):
            assert len(pqsym.level2_parking_functions(n)) == n ** n

    def test_closure(self):
        report = pqsym.typeb_closure_check(4)
        assert report["closed"]
        assert report["bad_products"] == []
        assert report["bad_coproducts"] == []


class TestNCB:
    def test_enumeration_counts(self):
        for n in range(1, 6):
            assert len(pqsym.ncb_enumerate(n, 2)) == cc.binomial(2 * n, n)
        # l = 3: coefficients of 1/(1 - 3(1-sqrt(1-4t))/2)
        for n, count in [(1, 3), (2, 12), (3, 51), (4, 222), (5, 978)]:
            assert len(pqsym.ncb_enumerate(n, 3)) == count

    def test_key_validation(self):
        with pytest.raises(ValueError):
            pqsym.ncb_key((2, 1), (0,), 2)          # not nondecreasing
        with pytest.raises(ValueError):
            pqsym.ncb_key((1, 2), (0,), 2)          # two factors, one color
        assert pqsym.ncb_key((1, 1), (1,), 2) == ((1, 1), (1,))

    def test_product_regroups(self):
        x = pqsym.Pb((1,), (0,), 2)
        y = pqsym.Pb((1,), (1,), 2)
        got = pqsym.p_product(x, y)
        assert got == pqsym.Pb((1, 2), (0, 1), 2)
        z = pqsym.p_product(x, x)
        assert z == pqsym.Pb((1, 2), (0, 0), 2)

    def test_structure_constants(self):
        rng = random.Random(11)
        keys = [k for n in range(1, 4) for k in pqsym.ncb_enumerate(n, 2)]
        for _ in range(25):
            k1, k2 = rng.choice(keys), rng.choice(keys)
            basis = pqsym.ncb_basis(2)
            prod = pqsym.p_product(basis.monomial(k1), basis.monomial(k2))
            assert all(isinstance(c, int) and c > 0 for c in prod.terms.values())

    def test_cocommutative(self):
        for n in range(0, 5):
            for key in pqsym.ncb_enumerate(n, 2):
                d = pqsym.p_coproduct(pqsym.ncb_basis(2).monomial(key))
                assert d.swap() == d


class TestConnectedStats:
    def test_level1(self):
        assert [pqsym.connected_pf_count(n) for n in range(1, 6)] == \
            [1, 2, 11, 92, 1014]

    def test_level2(self):
        assert [pqsym.connected_pf_count(n, 2) for n in range(1, 6)] == \
            [2, 8, 88, 1472, 32448]

    def test_n1(self):
        for l in (1, 2, 3, 5):
            assert pqsym.connected_pf_count(1, l) == l
