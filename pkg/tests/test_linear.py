"""Element/Poly/series arithmetic: exactness, ring axioms, paper series."""

import random
from fractions import Fraction

import pytest

from chopf.colorcore import NAT, cyclic, factorial
from chopf.linear import (Basis, Element, Poly, cyclotomic, outer, pairing,
                          tensor_pairing)
from chopf.series import (TruncatedSeries, free_generator_exponents,
                          product_power)


B = Basis("test", cyclic(2))


def key(p, u):
    return (tuple(p), tuple(u))


class TestElement:
    def test_add_scale(self):
        x = B.monomial(key((1,), (0,)))
        assert (2 * x + 3 * x).terms == {key((1,), (0,)): 5}
        assert (x - x).is_zero()
        assert (x - x).terms == {}

    def test_zero_strip(self):
        e = B.element({key((1,), (0,)): 0, key((1,), (1,)): 2})
        assert e.terms == {key((1,), (1,)): 2}

    def test_basis_mismatch(self):
        other = Basis("other", cyclic(2))
        with pytest.raises(ValueError):
            B.monomial(key((1,), (0,))) + other.monomial(key((1,), (0,)))

    def test_pairing(self):
        f = B.monomial(key((2, 1), (1, 0)))
        g = B.monomial(key((2, 1), (1, 0)))
        h = B.monomial(key((2, 1), (1, 1)))
        assert pairing(f, g) == 1
        assert pairing(f, h) == 0
        assert pairing(2 * f + h, 3 * g) == 6

    def test_tensor_swap_and_pairing(self):
        x = B.monomial(key((1,), (0,)))
        y = B.monomial(key((1,), (1,)))
        t = outer(x, y)
        assert t.swap() == outer(y, x)
        assert tensor_pairing(t, x, y) == 1
        assert tensor_pairing(t, y, x) == 0

    def test_bilinearity_random(self):
        rng = random.Random(3)
        keys = [key((1,), (c,)) for c in (0, 1)] + [key((1, 2), (c, d))
                                                    for c in (0, 1) for d in (0, 1)]
        for _ in range(50):
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            x = B.element({rng.choice(keys): rng.randint(-3, 3) for _ in range(3)})
            y = B.element({rng.choice(keys): rng.randint(-3, 3) for _ in range(3)})
            z = B.element({rng.choice(keys): rng.randint(-3, 3) for _ in range(3)})
            assert pairing(a * x + b * y, z) == a * pairing(x, z) + b * pairing(y, z)


class TestPoly:
    def test_arithmetic(self):
        q = Poly.var("q")
        p = (q + 1) * (q - 1)
        assert p == q * q - 1
        assert (q + 1) ** 2 == q * q + 2 * q + 1
        assert p - p == 0

    def test_subs(self):
        q1, q2 = Poly.var("q1"), Poly.var("q2")
        p = q1 ** 2 * q2 + 3 * q1
        assert p.subs({"q1": 2, "q2": 5}) == 26
        q = Poly.var("q")
        assert p.subs({"q1": q, "q2": q}) == q ** 3 + 3 * q

    def test_fraction_coeffs(self):
        h = Fraction(1, 2) * Poly.var("y")
        assert h + h == Poly.var("y")

    def test_cyclotomic(self):
        assert cyclotomic(1) == [-1, 1]
        assert cyclotomic(2) == [1, 1]
        assert cyclotomic(3) == [1, 1, 1]
        assert cyclotomic(4) == [1, 0, 1]
        assert cyclotomic(6) == [1, -1, 1]

    def test_reduce_univariate(self):
        q = Poly.var("q")
        # q^2 = -q - 1 mod cyclotomic(3)
        assert (q ** 2).reduce_univariate("q", cyclotomic(3)) == -q - 1
        assert (q ** 3).reduce_univariate("q", cyclotomic(3)) == 1

    def test_ring_axioms_random(self):
        rng = random.Random(5)
        vars = ["q", "y1", "z1"]
        def rand_poly():
            p = Poly()
            for _ in range(3):
                mono = tuple(sorted((v, rng.randint(1, 2))
                                    for v in rng.sample(vars, rng.randint(0, 2))))
                p = p + Poly({mono: rng.randint(-3, 3)})
            return p
        for _ in range(40):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)


class TestSeries:
    def test_connected_series(self):
        # 1 - (sum n! t^n)^(-1) = t + t^2 + 3t^3 + 13t^4 + 71t^5 + 461t^6
        f = TruncatedSeries.from_terms(factorial, 6)
        c = 1 - f.reciprocal()
        assert c.coeffs == (0, 1, 1, 3, 13, 71, 461)

    def test_connected_parking_series(self):
        f = TruncatedSeries.from_terms(lambda n: (n + 1) ** (n - 1) if n else 1, 6)
        p = 1 - f.reciprocal()
        assert p.coeffs == (0, 1, 2, 11, 92, 1014, 13795)

    def test_reciprocal_trivial(self):
        one_minus_t = TruncatedSeries([1, -1], 8)
        assert (one_minus_t * one_minus_t.reciprocal()) == TruncatedSeries.one(8)

    def test_reciprocal_involutive(self):
        rng = random.Random(9)
        for _ in range(10):
            s = TruncatedSeries([rng.randint(1, 4)] +
                                [Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                                 for _ in range(8)], 8)
            assert s.reciprocal().reciprocal() == s

    def test_sqrt(self):
        s = TruncatedSeries([1, -4], 8)
        r = s.sqrt()
        assert r * r == s
        # 1 - 2 sum C_{n-1} t^n
        assert r.coeffs[:5] == (1, -2, -2, -4, -10)

    def test_compose_scale(self):
        f = TruncatedSeries.from_terms(lambda n: 1, 6)  # 1/(1-t)
        g = f.compose(TruncatedSeries([0, 2], 6))
        assert g.coeffs == tuple(2 ** n for n in range(7))
        assert g == f.scale_variable(2)

    def test_product_power_roundtrip(self):
        exps = {1: 2, 2: 4, 3: 24}
        h = product_power({n: -e for n, e in exps.items()}, 7)
        back = free_generator_exponents(h)
        assert all(back.get(n, 0) == e for n, e in exps.items())
        assert product_power({n: -e for n, e in back.items()}, 7) == h

    def test_ring_axioms(self):
        rng = random.Random(13)
        def rand_series():
            return TruncatedSeries([rng.randint(-5, 5) for _ in range(7)], 6)
        for _ in range(30):
            a, b, c = rand_series(), rand_series(), rand_series()
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
