"""Colored planar binary trees realized inside the colored free
quasi-symmetric functions.

P_{T,u} sums F_{sigma, u.sigma} over the permutations whose right-to-left
binary-search-tree insertion has shape T; the color word has one letter per
internal node and colors the node carrying each value (in-order reading),
so that position i of sigma carries u[sigma(i)].  Attaching colors to the
values rather than the positions is what makes products of P elements
regroup exactly; the regrouping doubles as a self-test of both conventions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import colorcore as cc
from . import fqsym
from .colorcore import ColorMonoid
from .linear import Basis, Element, TensorElement


def _pbt_size(key):
    return len(key[1])


@lru_cache(maxsize=None)
def pbt_basis(monoid: ColorMonoid) -> Basis:
    return Basis("pbt.P", monoid, size=_pbt_size, unit_key=(None, ()))


@lru_cache(maxsize=None)
def perms_of_shape(tree) -> tuple:
    """Permutations inserting to the given shape."""
    n = cc.tree_size(tree)
    return tuple(p for p in itertools.permutations(range(1, n + 1))
                 if cc.bst_insert(p) == tree)


def P(tree, colors, monoid: ColorMonoid) -> Element:
    colors = monoid.reduce_word(colors)
    if len(colors) != cc.tree_size(tree):
        raise ValueError("one color per internal node")
    return pbt_basis(monoid).monomial((tree, colors))


def p_element(tree, colors, monoid: ColorMonoid) -> Element:
    """The F-realization of a single P_{T,u}."""
    colors = monoid.reduce_word(colors)
    if len(colors) != cc.tree_size(tree):
        raise ValueError("one color per internal node")
    fb = fqsym.f_basis(monoid)
    return fb.element({(p, cc.word_right_action(colors, p)): 1
                       for p in perms_of_shape(tree)})


def p_expand(x: Element) -> Element:
    _expect(x, "pbt.P")
    fb = fqsym.f_basis(x.basis.monoid)
    out = {}
    for (tree, colors), c in x.terms.items():
        for p in perms_of_shape(tree):
            k = (p, cc.word_right_action(colors, p))
            out[k] = out.get(k, 0) + c
    return Element(fb, out)


def _p_key(perm, positional_colors):
    """(shape, value colors) of an F key."""
    inv = cc.inverse(perm)
    return (cc.bst_insert(perm), cc.word_right_action(positional_colors, inv))


def regroup_to_p(x: Element) -> Element:
    """Regroup an F element by (insertion shape, value colors); exactness is
    the interval property of the tree product and fails loudly if either
    convention (insertion orientation, color attachment) were wrong."""
    fqsym._expect(x, "fqsym.F")
    groups = {}
    for (perm, colors), c in x.terms.items():
        pk = _p_key(perm, colors)
        groups.setdefault(pk, {})[(perm, colors)] = c
    out = {}
    for pk, seen in groups.items():
        fiber = perms_of_shape(pk[0])
        coeffs = set(seen.values())
        if len(coeffs) != 1 or len(seen) != len(fiber):
            raise ValueError(f"F expansion does not regroup at {pk}")
        out[pk] = coeffs.pop()
    return Element(pbt_basis(x.basis.monoid), out)


def p_product(x: Element, y: Element) -> Element:
    _expect(x, "pbt.P")
    return regroup_to_p(fqsym.f_product(p_expand(x), p_expand(y)))


def p_coproduct(x: Element) -> TensorElement:
    _expect(x, "pbt.P")
    monoid = x.basis.monoid
    d = fqsym.f_coproduct(p_expand(x))
    groups = {}
    for (k1, k2), c in d.terms.items():
        pk = (_p_key(*k1), _p_key(*k2))
        groups.setdefault(pk, {})[(k1, k2)] = c
    out = {}
    for (p1, p2), seen in groups.items():
        size = len(perms_of_shape(p1[0])) * len(perms_of_shape(p2[0]))
        coeffs = set(seen.values())
        if len(coeffs) != 1 or len(seen) != size:
            raise ValueError(f"tensor regrouping fails at {(p1, p2)}")
        out[(p1, p2)] = coeffs.pop()
    return TensorElement(pbt_basis(monoid), out)


def orientation_self_test(max_size=3, l=1) -> bool:
    """Product closure for the chosen insertion orientation; run at import
    of the CLI so a wrong convention cannot go unnoticed."""
    monoid = cc.cyclic(l)
    for n1 in range(1, max_size):
        for n2 in range(1, max_size - n1 + 1):
            for t1 in cc.binary_trees(n1):
                for t2 in cc.binary_trees(n2):
                    x = P(t1, (0,) * n1, monoid)
                    y = P(t2, (0,) * n2, monoid)
                    p_product(x, y)
    return True


def _expect(x, name):
    if x.basis.name != name:
        raise ValueError(f"expected a {name} element, got {x.basis.name}")
