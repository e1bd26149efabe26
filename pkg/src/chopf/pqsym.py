"""Colored parking-function Hopf algebra, type-B parking functions and
type-B non-crossing partitions.

Keys are pairs ``(word, colors)`` with a parking-function word.  The G basis
multiplies by parking convolution and comultiplies by value thresholds; the
dual F basis by shifted shuffle and deconcatenation-then-parkization.  Level
2 parking functions are the type-B objects; the P basis on colored
nondecreasing parking functions realizes non-crossing partitions of type B.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import colorcore as cc
from .colorcore import ColorMonoid
from .linear import Basis, Element, TensorElement, bilinear_extend, linear_extend


@lru_cache(maxsize=None)
def pg_basis(monoid: ColorMonoid) -> Basis:
    return Basis("pqsym.G", monoid)


@lru_cache(maxsize=None)
def pf_basis(monoid: ColorMonoid) -> Basis:
    return Basis("pqsym.F", monoid)


@lru_cache(maxsize=None)
def ncb_basis(l: int) -> Basis:
    return Basis("ncb.P", cc.cyclic(l))


def Gp(word, colors, monoid: ColorMonoid) -> Element:
    return pg_basis(monoid).monomial(_key(word, colors, monoid))


def Fp(word, colors, monoid: ColorMonoid) -> Element:
    return pf_basis(monoid).monomial(_key(word, colors, monoid))


def _key(word, colors, monoid):
    word = tuple(word)
    if not cc.is_parking(word):
        raise ValueError(f"{word} is not a parking function")
    colors = monoid.reduce_word(colors)
    if len(word) != len(colors):
        raise ValueError("word and color lengths differ")
    return (word, colors)


# ---------------------------------------------------------------------------
# products and coproducts

def pg_product_keys(k1, k2):
    """Parking convolution: words whose halves parkize to the operands,
    colors concatenated."""
    (a1, u1), (a2, u2) = k1, k2
    n1 = len(a1)
    n = n1 + len(a2)
    u = u1 + u2
    out = []
    for a in cc.parking_functions(n):
        if cc.parkize(a[:n1]) == a1 and cc.parkize(a[n1:]) == a2:
            out.append(((a, u), 1))
    return out


def pg_product(x: Element, y: Element) -> Element:
    _expect(x, "pqsym.G")
    return bilinear_extend(x, y, pg_product_keys)


def pg_coproduct_key(key):
    """Shifted-shuffle preimages: split the letters at each value threshold;
    both sides must come out parking with the right sizes."""
    word, colors = key
    n = len(word)
    out = []
    for k in range(n + 1):
        lw, lu, rw, ru = [], [], [], []
        for a, c in zip(word, colors):
            if a <= k:
                lw.append(a)
                lu.append(c)
            else:
                rw.append(a - k)
                ru.append(c)
        if len(lw) != k:
            continue
        if not (cc.is_parking(tuple(lw)) and cc.is_parking(tuple(rw))):
            continue
        out.append((((tuple(lw), tuple(lu)), (tuple(rw), tuple(ru))), 1))
    return out


def pg_coproduct(x: Element) -> TensorElement:
    _expect(x, "pqsym.G")
    return linear_extend(x, lambda k: x.basis.tensor(dict(pg_coproduct_key(k))))


def pf_product_keys(k1, k2):
    return [(w, 1) for w in cc.shifted_shuffle(k1, k2)]


def pf_product(x: Element, y: Element) -> Element:
    _expect(x, "pqsym.F")
    return bilinear_extend(x, y, pf_product_keys)


def pf_coproduct_key(key):
    word, colors = key
    out = []
    for i in range(len(word) + 1):
        left = (cc.parkize(word[:i]), colors[:i])
        right = (cc.parkize(word[i:]), colors[i:])
        out.append(((left, right), 1))
    return out


def pf_coproduct(x: Element) -> TensorElement:
    _expect(x, "pqsym.F")
    return linear_extend(x, lambda k: x.basis.tensor(dict(pf_coproduct_key(k))))


def pair_p(f: Element, g: Element):
    names = {f.basis.name, g.basis.name}
    if names != {"pqsym.F", "pqsym.G"}:
        raise ValueError(f"pairing needs dual parking F/G elements, got {names}")
    total = 0
    for k, c in f.terms.items():
        if k in g.terms:
            total = total + c * g.terms[k]
    return total


def colored_parking_functions(n: int, l: int):
    for a in cc.parking_functions(n):
        for u in itertools.product(range(l), repeat=n):
            yield (a, u)


def connected_pf_count(n: int, l: int = 1) -> int:
    return len(cc.connected_parking_functions(n)) * l ** n


# ---------------------------------------------------------------------------
# type-B (level 2) parking functions

def is_level2_pf(word, colors) -> bool:
    """Type-B rules: color 1 only on matches, equal letters to the left of a
    1-colored letter carry color 1,  and every value keeps at least one
    0-colored occurrence."""
    word, colors = tuple(word), tuple(colors)
    if not cc.is_parking(word) or any(c not in (0, 1) for c in colors):
        return False
    ma = cc.matches(word)
    for i, (a, c) in enumerate(zip(word, colors)):
        if c == 1:
            if a not in ma:
                return False
            if any(word[j] == a and colors[j] != 1 for j in range(i)):
                return False
    for v in set(word):
        if not any(a == v and c == 0 for a, c in zip(word, colors)):
            return False
    return True


@lru_cache(maxsize=None)
def level2_parking_functions(n: int) -> tuple:
    out = []
    for a in cc.parking_functions(n):
        for u in itertools.product((0, 1), repeat=n):
            if is_level2_pf(a, u):
                out.append((a, u))
    return tuple(out)


def typeb_closure_check(bound: int) -> dict:
    """Exhaustively verify that level-2 keys close under the F product and
    the G coproduct up to the bound.  Returns a report with counterexamples
    (empty lists when the check passes)."""
    bad_products = []
    bad_coproducts = []
    products = 0
    coproducts = 0
    for n1 in range(1, bound):
        for n2 in range(1, bound - n1 + 1):
            for k1 in level2_parking_functions(n1):
                for k2 in level2_parking_functions(n2):
                    products += 1
                    for key, _ in pf_product_keys(k1, k2):
                        if not is_level2_pf(*key):
                            bad_products.append((k1, k2, key))
    for n in range(1, bound + 1):
        for k in level2_parking_functions(n):
            coproducts += 1
            for (left, right), _ in pg_coproduct_key(k):
                if left[0] and not is_level2_pf(*left):
                    bad_coproducts.append((k, left))
                if right[0] and not is_level2_pf(*right):
                    bad_coproducts.append((k, right))
    return {
        "bound": bound,
        "products_checked": products,
        "coproducts_checked": coproducts,
        "bad_products": bad_products,
        "bad_coproducts": bad_coproducts,
        "closed": not bad_products and not bad_coproducts,
    }


# ---------------------------------------------------------------------------
# non-crossing partitions of type B: the P basis
#
# A key is (nondecreasing parking word, one color per prime factor); storing
# colors per factor makes the colors-constant-on-factors invariant
# structural.

def ncb_key(word, factor_colors, l: int):
    word = tuple(word)
    if not cc.is_parking(word) or list(word) != sorted(word):
        raise ValueError(f"{word} is not a nondecreasing parking function")
    factors = cc.connected_factorization(word)
    factor_colors = tuple(c % l for c in factor_colors)
    if len(factor_colors) != len(factors):
        raise ValueError(f"need one color per prime factor of {word}")
    return (word, factor_colors)


def Pb(word, factor_colors, l: int = 2) -> Element:
    return ncb_basis(l).monomial(ncb_key(word, factor_colors, l))


def ncb_enumerate(n: int, l: int) -> list:
    out = []
    for pi in cc.nondecreasing_parking_functions(n):
        r = len(cc.connected_factorization(pi)) if n else 0
        for colors in itertools.product(range(l), repeat=r):
            out.append((pi, colors))
    return sorted(out)


def _letter_colors(key):
    """Per-letter color word of a P key (factor colors spread out)."""
    word, factor_colors = key
    out = []
    for factor, color in zip(cc.connected_factorization(word), factor_colors):
        out.extend([color] * len(factor))
    return tuple(out)


@lru_cache(maxsize=None)
def p_orbit(key) -> tuple:
    """All colored parking functions whose biletter sort is the P key."""
    word, _ = key
    pairs = tuple(zip(word, _letter_colors(key)))
    out = []
    for perm in _distinct_perms(pairs):
        letters = tuple(a for a, _ in perm)
        colors = tuple(c for _, c in perm)
        out.append((letters, colors))
    return tuple(out)


def _distinct_perms(pairs):
    return sorted(set(itertools.permutations(pairs)))


def p_expand(x: Element) -> Element:
    """P -> F expansion."""
    _expect(x, "ncb.P")
    fb = pf_basis(x.basis.monoid)
    out = {}
    for key, c in x.terms.items():
        for fk in p_orbit(key):
            out[fk] = out.get(fk, 0) + c
    return Element(fb, out)


def _sorted_key(fkey, l):
    """Biletter sort of a colored parking function, as a P key; None when the
    colors are not constant on prime factors."""
    word, colors = fkey
    pairs = sorted(zip(word, colors))
    letters = tuple(a for a, _ in pairs)
    cols = tuple(c for _, c in pairs)
    factor_colors = []
    start = 0
    for factor in cc.connected_factorization(letters):
        block = set(cols[start:start + len(factor)])
        if len(block) > 1:
            return None
        factor_colors.append(block.pop())
        start += len(factor)
    return (letters, tuple(factor_colors))


def regroup_to_p(x: Element) -> Element:
    """Regroup an F expansion into the P basis; exact by the closure
    theorem, and an error here would reveal its failure."""
    _expect(x, "pqsym.F")
    l = x.basis.monoid.l
    groups = {}
    for fk, c in x.terms.items():
        pk = _sorted_key(fk, l)
        if pk is None:
            raise ValueError(f"colors not constant on prime factors: {fk}")
        groups.setdefault(pk, {})[fk] = c
    out = {}
    for pk, seen in groups.items():
        orbit = p_orbit(pk)
        coeffs = set(seen.values())
        if len(coeffs) != 1 or len(seen) != len(orbit):
            raise ValueError(f"uneven regrouping at {pk}")
        out[pk] = coeffs.pop()
    return Element(ncb_basis(l), out)


def p_product(x: Element, y: Element) -> Element:
    _expect(x, "ncb.P")
    return regroup_to_p(pf_product(p_expand(x), p_expand(y)))


def p_coproduct(x: Element) -> TensorElement:
    _expect(x, "ncb.P")
    l = x.basis.monoid.l
    d = pf_coproduct(p_expand(x))
    groups = {}
    for (k1, k2), c in d.terms.items():
        p1 = _sorted_key(k1, l)
        p2 = _sorted_key(k2, l)
        if p1 is None or p2 is None:
            raise ValueError(f"colors not constant on prime factors: {(k1, k2)}")
        groups.setdefault((p1, p2), {})[(k1, k2)] = c
    out = {}
    for (p1, p2), seen in groups.items():
        orbit_size = len(p_orbit(p1)) * len(p_orbit(p2))
        coeffs = set(seen.values())
        if len(coeffs) != 1 or len(seen) != orbit_size:
            raise ValueError(f"uneven tensor regrouping at {(p1, p2)}")
        out[(p1, p2)] = coeffs.pop()
    return TensorElement(x.basis, out)


def _expect(x, name):
    if x.basis.name != name:
        raise ValueError(f"expected a {name} element, got {x.basis.name}")
