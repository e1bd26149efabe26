"""Special elements: Klyachko elements (one and many parameters), the
grouplike Theta series, and the colored noncommutative Lagrange inversion
with its Raney specialization.

Multiparameter objects realize q-exponent vectors as natural colors, so
they live in the same free module machinery as everything else; only the
coefficients move to polynomial rings.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import colorcore as cc
from . import fqsym, symql
from .colorcore import NAT, ColorMonoid
from .linear import Basis, Element, Poly, cyclotomic
from .series import TruncatedSeries


# ---------------------------------------------------------------------------
# major index machinery

def maj_exponents(comp) -> tuple:
    """Exponent vector of the multiparameter major-index monomial: the k-th
    block of letters carries exponent (number of later blocks)."""
    n = sum(comp)
    r = len(comp)
    alpha = [0] * n
    pos = 0
    for k, part in enumerate(comp, start=1):
        for j in range(pos, pos + part):
            alpha[j] = r - k
        pos += part
    return tuple(alpha)


def maj_monomial(comp) -> Poly:
    out = Poly.const(1)
    for j, e in enumerate(maj_exponents(comp), start=1):
        if e:
            out = out * Poly.var(f"q{j}", e)
    return out


# ---------------------------------------------------------------------------
# Klyachko elements

def klyachko_single(n: int) -> Element:
    """K_n(q) = sum over compositions of q^maj(I) R_I, in the level-1 S
    basis with coefficients in Z[q]."""
    q = Poly.var("q")
    out = symql.s_basis(cc.cyclic(1)).zero
    for comp in cc.compositions(n):
        out = out + q ** cc.maj(comp) * symql.ribbon_to_s(comp)
    return out


def klyachko_multi(n: int) -> Element:
    """The multiparameter lift in the level-1 S basis with coefficients in
    Z[q_1..q_n]."""
    out = symql.s_basis(cc.cyclic(1)).zero
    for comp in cc.compositions(n):
        out = out + maj_monomial(comp) * symql.ribbon_to_s(comp)
    return out


def klyachko_multi_colored(n: int) -> Element:
    """The same element realized inside FQSym over natural colors: the
    exponent vector of each ribbon's monomial becomes the color word."""
    gb = fqsym.g_basis(NAT)
    out = {}
    for comp in cc.compositions(n):
        des = cc.composition_descents(comp)
        alpha = maj_exponents(comp)
        for p in itertools.permutations(range(1, n + 1)):
            if cc.descents(p) == des:
                out[(p, alpha)] = 1
    return gb.element(out)


def specialize_q(x: Element, n: int) -> Element:
    """Send every q_i to the single variable q."""
    mapping = {f"q{i}": Poly.var("q") for i in range(1, n + 1)}
    return x.map_coeffs(lambda c: Poly.coerce(c).subs(mapping))


def colored_to_polynomial(x: Element) -> dict:
    """Flatten G_{sigma,alpha} into a permutation -> polynomial-in-q_i map."""
    out = {}
    for (perm, alpha), c in x.terms.items():
        mono = Poly.const(c)
        for j, e in enumerate(alpha, start=1):
            if e:
                mono = mono * Poly.var(f"q{j}", e)
        out[perm] = out.get(perm, Poly()) + mono
    return {k: v for k, v in out.items() if v}


def klyachko_g_expansion(n: int) -> dict:
    """Construction through the ribbon route: expand the multiparameter
    element into level-1 G's, keeping polynomial coefficients."""
    mono = cc.cyclic(1)
    out = {}
    for key, coeff in klyachko_multi(n).terms.items():
        emb = symql.s_embed_key(key, mono)
        for (perm, _), c in emb.terms.items():
            out[perm] = out.get(perm, Poly()) + Poly.coerce(coeff) * c
    return {k: v for k, v in out.items() if v}


def primitivity_check(n: int) -> bool:
    """Is K_n(q) primitive modulo the n-th cyclotomic polynomial?"""
    k = klyachko_single(n)
    mixed = {}
    for key, c in k.terms.items():
        for (a, b), m in symql.s_coproduct_key(key).items():
            if a and b:
                mixed[(a, b)] = mixed.get((a, b), Poly()) + Poly.coerce(c) * m
    modulus = cyclotomic(n)
    for poly in mixed.values():
        if poly.reduce_univariate("q", modulus) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# the Theta series

def theta_factor(level: int, degree_max: int, with_y=True) -> Element:
    """sigma_1 of the level's alphabet: sum of identity permutations in one
    color, weighted by y_n^level."""
    gb = fqsym.g_basis(NAT)
    out = {}
    for n in range(degree_max + 1):
        key = (tuple(range(1, n + 1)), (level,) * n)
        if with_y and n:
            out[key] = Poly.var(f"y{n}") ** level if level else Poly.const(1)
        else:
            out[key] = 1
    return gb.element(out)


def _truncate(x: Element, degree_max: int) -> Element:
    return Element(x.basis,
                   {k: c for k, c in x.terms.items() if len(k[0]) <= degree_max})


def theta(l_max: int, degree_max: int, with_y=True) -> Element:
    """Ordered product of the grouplike level factors, largest level first,
    truncated in degree and level."""
    gb = fqsym.g_basis(NAT)
    out = gb.one
    for level in range(l_max, -1, -1):
        out = _truncate(fqsym.g_product(out, theta_factor(level, degree_max,
                                                          with_y)), degree_max)
    return out


def theta_grouplike(l_max: int, degree_max: int) -> bool:
    """Check Delta Theta = Theta (x) Theta through the truncation degree,
    with both sides expanded independently."""
    t = theta(l_max, degree_max, with_y=False)
    lhs = fqsym.g_coproduct(t)
    rhs = {}
    for k1, c1 in t.terms.items():
        for k2, c2 in t.terms.items():
            if len(k1[0]) + len(k2[0]) <= degree_max:
                rhs[(k1, k2)] = rhs.get((k1, k2), 0) + c1 * c2
    return lhs.terms == rhs


# ---------------------------------------------------------------------------
# colored noncommutative Lagrange inversion
#
# Words are tuples of (arity, color) letters; the b-letter markers are fused
# into the colors.  A word is the Polish code of an ordered tree whose nodes
# are colored.

def ndpf_word(pi) -> tuple:
    """Evaluation word of a nondecreasing parking function, with the closing
    zero: the Polish code of the corresponding ordered tree."""
    n = len(pi)
    ev = [0] * n
    for a in pi:
        ev[a - 1] += 1
    return tuple(ev) + (0,)


def is_polish_code(word) -> bool:
    """Lukasiewicz criterion: partial sums of (letter - 1) stay nonnegative
    until the final -1."""
    total = 0
    for i, a in enumerate(word):
        total += a - 1
        if total < 0:
            return i == len(word) - 1
    return False


def word_to_tree(word):
    """Parse a Polish code into nested lists of children."""
    def parse(pos):
        arity = word[pos]
        pos += 1
        children = []
        for _ in range(arity):
            child, pos = parse(pos)
            children.append(child)
        return children, pos
    tree, end = parse(0)
    if end != len(word):
        raise ValueError(f"{word} is not a Polish code")
    return tree


def tree_to_word(tree) -> tuple:
    out = [len(tree)]
    for child in tree:
        out.extend(tree_to_word(child))
    return tuple(out)


def lagrange_solve(degree_max: int, l: int = 1) -> dict:
    """Per-degree components of the solution of g = sum_n S_n g^n: one word
    per nondecreasing parking function, colored in all l^(n+1) ways."""
    out = {}
    for n in range(degree_max + 1):
        comp = {}
        for pi in cc.nondecreasing_parking_functions(n):
            word = ndpf_word(pi)
            for colors in itertools.product(range(l), repeat=len(word)):
                comp[tuple(zip(word, colors))] = 1
        out[n] = comp
    return out


def _word_degree(word):
    return sum(arity for arity, _ in word)


def lagrange_fixed_point_check(degree_max: int, l: int = 1) -> bool:
    """g - sum_n S_n g^n = 0 degree by degree, as a word-level identity."""
    g = lagrange_solve(degree_max, l)
    for d in range(degree_max + 1):
        rhs = {}
        for head in range(d + 1):
            for color in range(l):
                # compositions of d - head into `head` ordered degrees
                for degs in _compositions_with_zeros(d - head, head):
                    for words in itertools.product(*[g[dd] for dd in degs]):
                        word = ((head, color),) + tuple(
                            letter for w in words for letter in w)
                        rhs[word] = rhs.get(word, 0) + 1
        if rhs != g[d]:
            return False
    return True


def _compositions_with_zeros(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_with_zeros(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Raney's formula

def raney_specialize(n: int, l: int) -> Poly:
    """Coefficient of t^(n+1) under S_i^(k) -> y_k z_k^i t / i!; this is
    g_n / n! as a polynomial in the y's and z's."""
    out = Poly()
    for word in lagrange_solve(n, l)[n]:
        term = Poly.const(1)
        denom = 1
        for arity, color in word:
            term = term * Poly.var(f"y{color + 1}")
            if arity:
                term = term * Poly.var(f"z{color + 1}", arity)
            denom *= cc.factorial(arity)
        out = out + Fraction(1, denom) * term
    return out


def raney_closed(n: int, l: int) -> Poly:
    """The closed multinomial form of g_n."""
    out = Poly()
    for nn in _compositions_with_zeros(n + 1, l):
        for qq in _compositions_with_zeros(n, l):
            coeff = Fraction(cc.multinomial(nn) * cc.multinomial(qq), n + 1)
            term = Poly.const(1)
            ok = True
            for k in range(l):
                if qq[k] and not nn[k]:
                    ok = False
                    break
                if nn[k]:
                    term = term * Poly.var(f"y{k + 1}") ** nn[k]
                if qq[k]:
                    term = term * (nn[k] ** qq[k]) * Poly.var(f"z{k + 1}", qq[k])
            if ok:
                out = out + coeff * term
    return out


def raney_identity_check(n: int, l: int) -> bool:
    lhs = raney_specialize(n, l)
    rhs = Fraction(1, cc.factorial(n)) * raney_closed(n, l)
    return lhs == rhs


def cayley_value(n: int) -> int:
    """g_n at l=1, y=z=1: the closed formula collapses to (n+1)^(n-1)."""
    value = raney_closed(n, 1).subs({"y1": 1, "z1": 1})
    return value.scalar()
