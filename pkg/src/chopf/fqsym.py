"""The Hopf algebra of colored free quasi-symmetric functions.

Basis keys are colored permutations ``(perm, colors)``.  The G basis
multiplies by convolution (colors stay with their positions) and
comultiplies by extracting the values below a threshold; the F basis is
its dual under the diagonal pairing, with shifted-shuffle product and
deconcatenation coproduct.  When the colors form a semigroup the wreath
product induces an internal product on each homogeneous component.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import colorcore as cc
from .colorcore import ColorMonoid
from .linear import Basis, Element, TensorElement, bilinear_extend, linear_extend


@lru_cache(maxsize=None)
def g_basis(monoid: ColorMonoid) -> Basis:
    return Basis("fqsym.G", monoid)


@lru_cache(maxsize=None)
def f_basis(monoid: ColorMonoid) -> Basis:
    return Basis("fqsym.F", monoid)


@lru_cache(maxsize=None)
def word_basis(monoid: ColorMonoid) -> Basis:
    return Basis("words", monoid)


def G(perm, colors, monoid: ColorMonoid) -> Element:
    key = (tuple(perm), monoid.reduce_word(colors))
    _check_key(key)
    return g_basis(monoid).monomial(key)


def F(perm, colors, monoid: ColorMonoid) -> Element:
    key = (tuple(perm), monoid.reduce_word(colors))
    _check_key(key)
    return f_basis(monoid).monomial(key)


def _check_key(key):
    perm, colors = key
    if len(perm) != len(colors):
        raise ValueError("permutation and color word lengths differ")
    if not cc.is_permutation(perm):
        raise ValueError(f"{perm} is not a permutation")


# ---------------------------------------------------------------------------
# products and coproducts

def g_product_keys(k1, k2):
    (p1, u1), (p2, u2) = k1, k2
    u = u1 + u2
    return [((tau, u), 1) for tau in cc.convolution(p1, p2)]


def f_product_keys(k1, k2):
    return [(w, 1) for w in cc.shifted_shuffle(k1, k2)]


def g_product(x: Element, y: Element) -> Element:
    _expect(x, "fqsym.G")
    return bilinear_extend(x, y, g_product_keys)


def f_product(x: Element, y: Element) -> Element:
    _expect(x, "fqsym.F")
    return bilinear_extend(x, y, f_product_keys)


def g_coproduct_key(key):
    """Split the values of a colored permutation below/above each threshold;
    these are exactly the shifted-shuffle preimages."""
    perm, colors = key
    n = len(perm)
    out = []
    for k in range(n + 1):
        left_p, left_u, right_p, right_u = [], [], [], []
        for v, c in zip(perm, colors):
            if v <= k:
                left_p.append(v)
                left_u.append(c)
            else:
                right_p.append(v - k)
                right_u.append(c)
        out.append((((tuple(left_p), tuple(left_u)),
                     (tuple(right_p), tuple(right_u))), 1))
    return out


def f_coproduct_key(key):
    perm, colors = key
    n = len(perm)
    out = []
    for i in range(n + 1):
        left = (cc.standardize(perm[:i]), colors[:i])
        right = (cc.standardize(perm[i:]), colors[i:])
        out.append(((left, right), 1))
    return out


def g_coproduct(x: Element) -> TensorElement:
    _expect(x, "fqsym.G")
    return linear_extend(x, lambda k: x.basis.tensor(dict(g_coproduct_key(k))))


def f_coproduct(x: Element) -> TensorElement:
    _expect(x, "fqsym.F")
    return linear_extend(x, lambda k: x.basis.tensor(dict(f_coproduct_key(k))))


def counit(x: Element):
    return x.terms.get(((), ()), 0)


# ---------------------------------------------------------------------------
# F <-> G relabelling
#
# F_{sigma,u} = G_{sigma^{-1}, phi(u).sigma^{-1}}; phi defaults to the
# identity, which reproduces the printed examples.  For group colors phi can
# be chosen as the inverse map.

def _phi(u, monoid, phi):
    if phi == "identity":
        return u
    if phi == "inverse":
        return tuple(monoid.negate(c) for c in u)
    raise ValueError(f"unknown phi {phi!r}")


def f_to_g_key(key, monoid: ColorMonoid, phi="identity"):
    perm, colors = key
    inv = cc.inverse(perm)
    return (inv, cc.word_right_action(_phi(colors, monoid, phi), inv))


def g_to_f_key(key, monoid: ColorMonoid, phi="identity"):
    perm, colors = key
    inv = cc.inverse(perm)
    return (inv, _phi(cc.word_right_action(colors, inv), monoid, phi))


def f_to_g(x: Element, phi="identity") -> Element:
    _expect(x, "fqsym.F")
    monoid = x.basis.monoid
    target = g_basis(monoid)
    return Element(target, {f_to_g_key(k, monoid, phi): c
                            for k, c in x.terms.items()})


def g_to_f(x: Element, phi="identity") -> Element:
    _expect(x, "fqsym.G")
    monoid = x.basis.monoid
    target = f_basis(monoid)
    return Element(target, {g_to_f_key(k, monoid, phi): c
                            for k, c in x.terms.items()})


def pair(f: Element, g: Element):
    """Duality pairing <F_{sigma,u}, G_{sigma',u'}> = delta delta."""
    names = {f.basis.name, g.basis.name}
    if names != {"fqsym.F", "fqsym.G"}:
        raise ValueError(f"pairing needs dual F/G elements, got {names}")
    if f.basis.monoid != g.basis.monoid:
        raise ValueError("pairing across different color monoids")
    total = 0
    for k, c in f.terms.items():
        if k in g.terms:
            total = total + c * g.terms[k]
    return total


# ---------------------------------------------------------------------------
# internal product (wreath)

def internal_product(x: Element, y: Element, strict=False) -> Element:
    """Degreewise product transported from the wreath product C wr S_n.

    On F keys this is the group law itself; on G keys the opposite law.
    Terms of distinct degrees multiply to zero unless ``strict`` asks for an
    error.
    """
    if x.basis != y.basis:
        raise ValueError("internal product needs one basis")
    name = x.basis.name
    if name not in ("fqsym.F", "fqsym.G"):
        raise ValueError(f"no internal product on {name}")
    monoid = x.basis.monoid
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            if len(k1[0]) != len(k2[0]):
                if strict:
                    raise ValueError("internal product of distinct degrees")
                continue
            if name == "fqsym.F":
                k = cc.wreath_multiply(k1, k2, monoid)
            else:
                k = cc.wreath_multiply(k2, k1, monoid)
            out[k] = out.get(k, 0) + c1 * c2
    return Element(x.basis, out)


def internal_unit(n: int, monoid: ColorMonoid, basis="fqsym.F") -> Element:
    key = cc.wreath_identity(n)
    b = f_basis(monoid) if basis == "fqsym.F" else g_basis(monoid)
    return b.monomial(key)


# ---------------------------------------------------------------------------
# word realization (the ground-truth oracle)

def std_preimages(perm, k):
    """All words over {1..k} whose standardization is ``perm``."""
    n = len(perm)
    if n == 0:
        return [()]
    inv = cc.inverse(perm)
    # reading positions by increasing rank, letters must rise weakly and
    # strictly whenever the position jumps backwards
    strict = [1 if inv[j + 1] < inv[j] else 0 for j in range(n - 1)]
    total = sum(strict)
    out = []
    for comb in itertools.combinations_with_replacement(range(1, k + 1 - total), n):
        vals = []
        bump = 0
        for j, v in enumerate(comb):
            if j > 0:
                bump += strict[j - 1]
            vals.append(v + bump)
        word = [0] * n
        ok = True
        for rank, v in enumerate(vals):
            word[inv[rank] - 1] = v
        out.append(tuple(word))
    return out


def expand_to_words(x: Element, k: int) -> Element:
    """Noncommutative polynomial realization over the alphabet prefix of
    size k; standardization preimages of each key, colors kept in place."""
    if x.basis.name == "fqsym.F":
        x = f_to_g(x)
    _expect(x, "fqsym.G")
    wb = word_basis(x.basis.monoid)
    out = {}
    for (perm, colors), c in x.terms.items():
        for w in std_preimages(perm, k):
            key = (w, colors)
            out[key] = out.get(key, 0) + c
    return Element(wb, out)


def word_product(x: Element, y: Element) -> Element:
    _expect(x, "words")
    return bilinear_extend(x, y, lambda k1, k2:
                           [((k1[0] + k2[0], k1[1] + k2[1]), 1)])


def expand_doubled(x: Element, k: int) -> TensorElement:
    """Expand over the ordinal sum of two copies of the alphabet prefix and
    sort each monomial into its A'/A'' parts; this is the alphabet-doubling
    coproduct, used only as an oracle."""
    if x.basis.name == "fqsym.F":
        x = f_to_g(x)
    wb = word_basis(x.basis.monoid)
    out = {}
    for (perm, colors), c in x.terms.items():
        for w in std_preimages(perm, 2 * k):
            lw, lu, rw, ru = [], [], [], []
            for a, col in zip(w, colors):
                if a <= k:
                    lw.append(a)
                    lu.append(col)
                else:
                    rw.append(a - k)
                    ru.append(col)
            key = ((tuple(lw), tuple(lu)), (tuple(rw), tuple(ru)))
            out[key] = out.get(key, 0) + c
    return TensorElement(wb, out)


def _expect(x, name):
    if x.basis.name != name:
        raise ValueError(f"expected a {name} element, got {x.basis.name}")
