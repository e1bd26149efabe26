"""Colored noncommutative symmetric functions on vector compositions, their
quasi-symmetric dual, the Mantaci-Reutenauer subalgebra and the commutative
multi-symmetric image.

A vector composition is a tuple of columns; a column is a tuple of
nonnegative integers indexed by color (0-based rows).  Over cyclic colors a
column has length exactly l; over the naturals trailing zeros are trimmed.
The internal product is computed by the splitting formula on top of the
monomial-function base case, with mod-l results obtained by folding the
natural-color answer (multiplicity factors are multinomials), or through the
word realization inside the colored free quasi-symmetric functions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import colorcore as cc
from . import fqsym
from .colorcore import ColorMonoid, NAT
from .linear import (Basis, Element, TensorElement, _columns_size, _mr_size,
                     bilinear_extend, linear_extend)


@lru_cache(maxsize=None)
def s_basis(monoid: ColorMonoid) -> Basis:
    return Basis("sym.S", monoid, size=_columns_size, unit_key=())


@lru_cache(maxsize=None)
def m_basis(monoid: ColorMonoid) -> Basis:
    return Basis("qsym.M", monoid, size=_columns_size, unit_key=())


@lru_cache(maxsize=None)
def mr_s_basis(l: int) -> Basis:
    return Basis("mr.S", cc.cyclic(l), size=_mr_size, unit_key=())


@lru_cache(maxsize=None)
def mr_m_basis(l: int) -> Basis:
    return Basis("mr.M", cc.cyclic(l), size=_mr_size, unit_key=())


@lru_cache(maxsize=None)
def msym_basis(monoid: ColorMonoid) -> Basis:
    return Basis("msym.h", monoid, size=_columns_size, unit_key=())


# ---------------------------------------------------------------------------
# keys

def normalize_column(col, monoid: ColorMonoid):
    col = tuple(col)
    if any(c < 0 for c in col):
        raise ValueError(f"negative entry in column {col}")
    if monoid.kind == "mod":
        if len(col) > monoid.l:
            raise ValueError(f"column {col} too long for {monoid}")
        col = col + (0,) * (monoid.l - len(col))
    elif monoid.kind == "nat":
        while col and col[-1] == 0:
            col = col[:-1]
    else:
        raise ValueError("vector compositions need nat or cyclic colors")
    if not any(col):
        raise ValueError("zero column in a vector composition")
    return col


def composition_key(cols, monoid: ColorMonoid):
    return tuple(normalize_column(c, monoid) for c in cols)


def S(cols, monoid: ColorMonoid) -> Element:
    return s_basis(monoid).monomial(composition_key(cols, monoid))


def M(cols, monoid: ColorMonoid) -> Element:
    return m_basis(monoid).monomial(composition_key(cols, monoid))


def partite_columns(weight: int, l: int):
    """All nonzero vectors in N^l of the given weight (length exactly l)."""
    if weight == 0:
        return []
    out = []
    for cuts in itertools.combinations(range(weight + l - 1), l - 1):
        col = []
        prev = -1
        for c in cuts:
            col.append(c - prev - 1)
            prev = c
        col.append(weight + l - 2 - prev)
        out.append(tuple(col))
    return out


def vector_compositions(weight: int, l: int):
    """All vector compositions of total weight ``weight`` with l rows."""
    if weight == 0:
        return [()]
    out = []
    for comp in cc.compositions(weight):
        pools = [partite_columns(w, l) for w in comp]
        out.extend(itertools.product(*pools))
    return out


# ---------------------------------------------------------------------------
# embedding into FQSym (G basis)

def _column_colorings(col):
    """Distinct color words with the column as content."""
    letters = []
    for color, mult in enumerate(col):
        letters.extend([color] * mult)
    return _multiset_perms(tuple(letters))


@lru_cache(maxsize=None)
def _multiset_perms(letters):
    return sorted(set(itertools.permutations(letters)))


@lru_cache(maxsize=None)
def s_embed_key(key, monoid: ColorMonoid) -> Element:
    """Word realization of S^I: product of all colorings of identities."""
    out = fqsym.g_basis(monoid).one
    for col in key:
        n = sum(col)
        idn = tuple(range(1, n + 1))
        gb = fqsym.g_basis(monoid)
        piece = gb.element({(idn, u): 1 for u in _column_colorings(col)})
        out = fqsym.g_product(out, piece)
    return out


def s_embed(x: Element) -> Element:
    _expect(x, "sym.S")
    return linear_extend(x, lambda k: s_embed_key(k, x.basis.monoid))


# ---------------------------------------------------------------------------
# outer Hopf structure

def s_product(x: Element, y: Element) -> Element:
    _expect(x, "sym.S")
    return bilinear_extend(x, y, lambda k1, k2: [(k1 + k2, 1)])


def _column_splits(col):
    """All (a, b) with a + b = col componentwise."""
    ranges = [range(e + 1) for e in col]
    for a in itertools.product(*ranges):
        b = tuple(e - f for e, f in zip(col, a))
        yield a, b


def s_coproduct_key(key):
    parts = [((), ())]
    for col in key:
        new = []
        for left, right in parts:
            for a, b in _column_splits(col):
                la = left + ((a,) if any(a) else ())
                rb = right + ((b,) if any(b) else ())
                new.append((la, rb))
        parts = new
    counts = {}
    for pair in parts:
        counts[pair] = counts.get(pair, 0) + 1
    return counts


def s_coproduct(x: Element) -> TensorElement:
    _expect(x, "sym.S")
    return linear_extend(x, lambda k: x.basis.tensor(s_coproduct_key(k)))


def _add_columns(a, b, monoid):
    if monoid.kind == "mod":
        return tuple(x + y for x, y in zip(a, b))
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return tuple(x + y for x, y in zip(a, b))


def _quasi_shuffle(A, B, add):
    if not A:
        yield B
        return
    if not B:
        yield A
        return
    for rest in _quasi_shuffle(A[1:], B, add):
        yield (A[0],) + rest
    for rest in _quasi_shuffle(A, B[1:], add):
        yield (B[0],) + rest
    for rest in _quasi_shuffle(A[1:], B[1:], add):
        yield (add(A[0], B[0]),) + rest


def m_product(x: Element, y: Element) -> Element:
    """Quasi-shuffle of column sequences; overlapping columns add."""
    _expect(x, "qsym.M")
    monoid = x.basis.monoid
    add = lambda a, b: _add_columns(a, b, monoid)
    return bilinear_extend(
        x, y, lambda k1, k2: [(k, 1) for k in _quasi_shuffle(k1, k2, add)])


def m_coproduct(x: Element) -> TensorElement:
    """Deconcatenation of the column sequence (dual to s_product)."""
    _expect(x, "qsym.M")
    def rule(k):
        return x.basis.tensor({(k[:i], k[i:]): 1 for i in range(len(k) + 1)})
    return linear_extend(x, rule)


def pair_sm(m: Element, s: Element):
    names = {m.basis.name, s.basis.name}
    if names != {"qsym.M", "sym.S"}:
        raise ValueError(f"pairing needs dual M/S elements, got {names}")
    total = 0
    for k, c in m.terms.items():
        if k in s.terms:
            total = total + c * s.terms[k]
    return total


# ---------------------------------------------------------------------------
# commutative expansion of the M basis (oracle only)
#
# A commutative monomial in the colored variables x_j^(c), j <= letters, is a
# tuple of per-letter exponent columns, trailing zeros trimmed, () for unused
# letters.

def m_expand_key(key, letters: int) -> dict:
    m = len(key)
    trimmed = tuple(_lift_column(c) for c in key)
    out = {}
    for pos in itertools.combinations(range(letters), m):
        mono = [()] * letters
        for t, p in enumerate(pos):
            mono[p] = trimmed[t]
        mono = tuple(mono)
        out[mono] = out.get(mono, 0) + 1
    return out


def m_expand(x: Element, letters: int) -> dict:
    """Commutative polynomial of an M element over a finite letter prefix."""
    _expect(x, "qsym.M")
    out = {}
    for k, c in x.terms.items():
        for mono, mult in m_expand_key(k, letters).items():
            v = out.get(mono, 0) + c * mult
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def _add_exponent_columns(a, b):
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    out = tuple(x + y for x, y in zip(a, b))
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def poly_mul(p: dict, q: dict) -> dict:
    """Product of commutative colored-variable polynomials."""
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(_add_exponent_columns(a, b) for a, b in zip(m1, m2))
            v = out.get(mono, 0) + c1 * c2
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def word_commutative_monomial(letters, colors, nletters: int):
    """Image of a colored word under commuting the variables."""
    counts = [{} for _ in range(nletters)]
    for a, c in zip(letters, colors):
        counts[a - 1][c] = counts[a - 1].get(c, 0) + 1
    mono = []
    for d in counts:
        if not d:
            mono.append(())
            continue
        width = max(d) + 1
        col = [0] * width
        for c, m in d.items():
            col[c] = m
        mono.append(tuple(col))
    return tuple(mono)


# ---------------------------------------------------------------------------
# quasi-ribbon order via the (d, c) recoding

def recode(key):
    """Vector composition -> (descent set d, color word c).

    d collects the partial column weights (the total included); c reads the
    columns top to bottom, left to right, with 1-based letters.
    """
    d = []
    c = []
    total = 0
    for col in key:
        total += sum(col)
        d.append(total)
        for row, mult in enumerate(col):
            c.extend([row + 1] * mult)
    return frozenset(d), tuple(c)


def decode(d, c, monoid: ColorMonoid):
    """Inverse of ``recode``; requires Des(c) ⊆ d and n ∈ d."""
    n = len(c)
    d = sorted(d)
    if n and (not d or d[-1] != n):
        raise ValueError("the recoding descent set must contain the weight")
    if any(x < 1 or x > n for x in d):
        raise ValueError("descents out of range")
    if not cc.descents(c) <= frozenset(d):
        raise ValueError("descents of the color word must lie in d")
    cols = []
    start = 0
    for cut in d:
        block = c[start:cut]
        width = monoid.l if monoid.kind == "mod" else max(block)
        col = [0] * width
        for letter in block:
            col[letter - 1] += 1
        cols.append(normalize_column(col, monoid))
        start = cut
    return tuple(cols)


def quasi_ribbon(key, monoid: ColorMonoid) -> Element:
    """F_I = sum of M_J over the refinements of I: same color reading word,
    descent set containing d(I)."""
    d, c = recode(key)
    n = len(c)
    free = sorted(frozenset(range(1, n + 1)) - d)
    out = {}
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            dd = d | frozenset(extra)
            out[decode(dd, c, monoid)] = 1
    return m_basis(monoid).element(out)


# ---------------------------------------------------------------------------
# internal product: monomial base case, splitting formula, mod-l fold

def _exponent_vector(col, n):
    """Column -> padded, descending exponent vector on n letters."""
    exps = []
    for color, mult in enumerate(col):
        exps.extend([color] * mult)
    exps.extend([0] * (n - len(exps)))
    return tuple(sorted(exps, reverse=True))


def _column_of_exponents(exps):
    width = max(exps) + 1
    col = [0] * width
    for e in exps:
        col[e] += 1
    out = tuple(col)
    while out and out[-1] == 0:
        out = out[:-1]
    return out


@lru_cache(maxsize=None)
def monomial_product(alpha, beta, n):
    """Expansion of m_alpha * m_beta over exactly n commuting letters, as a
    map from exponent partitions (descending tuples of length n) to
    coefficients."""
    if len(alpha) > n or len(beta) > n:
        raise ValueError("more parts than letters")
    pa = tuple(sorted(alpha, reverse=True)) + (0,) * (n - len(alpha))
    pb = tuple(sorted(beta, reverse=True)) + (0,) * (n - len(beta))
    raw = {}
    for p in _multiset_perms(pa):
        for q in _multiset_perms(pb):
            e = tuple(sorted((a + b for a, b in zip(p, q)), reverse=True))
            raw[e] = raw.get(e, 0) + 1
    out = {}
    for e, count in raw.items():
        orbit = len(_multiset_perms(e))
        coeff, rem = divmod(count, orbit)
        if rem:
            raise ArithmeticError("monomial expansion must divide evenly")
        out[e] = coeff
    return out


@lru_cache(maxsize=None)
def _dij(col_i, col_j):
    """S_i * S_j over natural colors: the coefficient of S_n is the monomial
    coefficient of Lemma's base case.  Keys are single columns."""
    n = sum(col_i)
    if sum(col_j) != n:
        return ()
    out = []
    prod = monomial_product(_exponent_vector(col_i, n),
                            _exponent_vector(col_j, n), n)
    for exps, coeff in prod.items():
        out.append(((_column_of_exponents(exps),), coeff))
    return tuple(out)


def _two_splits(J, left_weight):
    """Coproduct terms of S^J grouped in two slots with the left slot of the
    given weight; multiplicities matter."""
    parts = {((), ()): 1}
    for col in J:
        new = {}
        for (left, right), mult in parts.items():
            if _columns_size(left) > left_weight:
                continue
            for a, b in _column_splits(col):
                la = left + ((a,) if any(a) else ())
                rb = right + ((b,) if any(b) else ())
                key = (la, rb)
                new[key] = new.get(key, 0) + mult
        parts = new
    return {k: m for k, m in parts.items() if _columns_size(k[0]) == left_weight}


_internal_nat_cache = {}


def s_internal_nat(I, J):
    """Internal product of S^I and S^J over C = N, as a key -> coeff map.

    Single columns hit the monomial base case; a one-column left factor
    commutes past the right factor; otherwise the splitting formula peels
    the first column.
    """
    if _columns_size(I) != _columns_size(J):
        return {}
    if len(I) <= 1 and len(J) <= 1:
        if not I:
            return {(): 1}
        return dict(_dij(I[0], J[0]))
    if len(I) == 1:
        I, J = J, I
    key = (I, J)
    cached = _internal_nat_cache.get(key)
    if cached is not None:
        return cached
    first, rest = (I[0],), I[1:]
    w1 = sum(I[0])
    out = {}
    for (JL, JR), mult in _two_splits(J, w1).items():
        left = s_internal_nat(first, JL)
        if not left:
            continue
        right = s_internal_nat(rest, JR)
        for kl, cl in left.items():
            for kr, cr in right.items():
                k = kl + kr
                out[k] = out.get(k, 0) + mult * cl * cr
    _internal_nat_cache[key] = out
    return out


def _lift_column(col):
    col = tuple(col)
    while col and col[-1] == 0:
        col = col[:-1]
    return col


def _fold_column(col, l):
    """Reduce a natural column mod l; the multiplicity is the product of
    multinomials merging color classes."""
    groups = {}
    for color, mult in enumerate(col):
        if mult:
            groups.setdefault(color % l, []).append(mult)
    folded = [0] * l
    factor = 1
    for c, ms in groups.items():
        folded[c] = sum(ms)
        factor *= cc.multinomial(ms)
    return tuple(folded), factor


def _fold_key(key, l):
    cols = []
    factor = 1
    for col in key:
        fc, f = _fold_column(col, l)
        cols.append(fc)
        factor *= f
    return tuple(cols), factor


def s_internal_keys(I, J, monoid: ColorMonoid) -> dict:
    """Key-level internal product in the S basis over nat or cyclic colors."""
    if monoid.kind == "nat":
        return s_internal_nat(I, J)
    if monoid.kind != "mod":
        raise ValueError("internal product needs nat or cyclic colors")
    l = monoid.l
    nat = s_internal_nat(tuple(_lift_column(c) for c in I),
                         tuple(_lift_column(c) for c in J))
    out = {}
    for key, coeff in nat.items():
        folded, factor = _fold_key(key, l)
        out[folded] = out.get(folded, 0) + coeff * factor
    return {k: c for k, c in out.items() if c}


def s_internal(x: Element, y: Element, strict=False) -> Element:
    _expect(x, "sym.S")
    _expect(y, "sym.S")
    if x.basis != y.basis:
        raise ValueError("internal product needs matching bases")
    monoid = x.basis.monoid
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            if _columns_size(k1) != _columns_size(k2):
                if strict:
                    raise ValueError("internal product of distinct degrees")
                continue
            for k, m in s_internal_keys(k1, k2, monoid).items():
                out[k] = out.get(k, 0) + c1 * c2 * m
    return Element(x.basis, out)


def s_internal_via_embedding(I, J, monoid: ColorMonoid) -> Element:
    """Normative route: realize both operands in the colored free
    quasi-symmetric functions, multiply in the wreath group algebra, and
    convert the expansion back to the S basis."""
    gx = s_embed_key(I, monoid)
    gy = s_embed_key(J, monoid)
    return to_sym(fqsym.internal_product(gx, gy))


# ---------------------------------------------------------------------------
# conversion of a G expansion back to the S basis

def _leading_candidate(key, monoid):
    """Composition whose embedding has ``key`` as its largest key, or None.

    The largest key of embed(S^I) is the block-reversed permutation of the
    descent composition of I with blockwise descending colors.
    """
    perm, colors = key
    n = len(perm)
    if n == 0:
        return ()
    cuts = sorted(cc.descents(perm)) + [n]
    cols = []
    start = 0
    for cut in cuts:
        block_colors = colors[start:cut]
        if tuple(sorted(block_colors, reverse=True)) != block_colors:
            return None
        width = monoid.l if monoid.kind == "mod" else (max(block_colors) + 1)
        col = [0] * width
        for c in block_colors:
            col[c] += 1
        cols.append(tuple(col))
        start = cut
    # the permutation must be the block reversal: values n, n-1, ... assigned
    # to blocks left to right, increasing inside each block
    check = []
    hi = n
    start = 0
    for cut in cuts:
        size = cut - start
        check.extend(range(hi - size + 1, hi + 1))
        hi -= size
        start = cut
    if tuple(check) != perm:
        return None
    return tuple(cols)


def to_sym(x: Element) -> Element:
    """Express a G-basis element in the S basis by triangular elimination;
    raises if the element does not lie in the colored Sym."""
    fqsym._expect(x, "fqsym.G")
    monoid = x.basis.monoid
    residual = dict(x.terms)
    out = {}
    while residual:
        key = max(residual, key=lambda k: (len(k[0]), k[0], k[1]))
        candidate = _leading_candidate(key, monoid)
        if candidate is None:
            raise ValueError(f"not in Sym: leading key {key}")
        coeff = residual[key]
        emb = s_embed_key(candidate, monoid)
        for k2, c2 in emb.terms.items():
            v = residual.get(k2, 0) - coeff * c2
            if v:
                residual[k2] = v
            else:
                residual.pop(k2, None)
        if key in residual:
            raise ValueError(f"not in Sym: no progress at {key}")
        out[candidate] = out.get(candidate, 0) + coeff
    return s_basis(monoid).element(out)


# ---------------------------------------------------------------------------
# ribbon basis (level 1)

def _level1_key(comp):
    return tuple((p,) for p in comp)


def _key_to_comp(key):
    return tuple(col[0] for col in key)


def ribbon_to_s(comp, monoid=None) -> Element:
    """R_I = sum over coarsenings J of I of (-1)^{l(I)-l(J)} S^J."""
    monoid = monoid or cc.cyclic(1)
    out = {}
    for j in cc.coarser(comp):
        out[_level1_key(j)] = (-1) ** (len(comp) - len(j))
    return s_basis(monoid).element(out)


def s_key_to_ribbons(comp) -> dict:
    """S^I = sum over coarsenings of R_J, returned as a comp -> coeff map."""
    return {j: 1 for j in cc.coarser(comp)}


def s_to_ribbon(x: Element) -> dict:
    """Express a level-1 S element in the ribbon basis (comp -> coeff)."""
    out = {}
    for key, c in x.terms.items():
        for j, m in s_key_to_ribbons(_key_to_comp(key)).items():
            out[j] = out.get(j, 0) + c * m
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Mantaci-Reutenauer algebra on colored compositions

def Smr(pairs, l: int) -> Element:
    key = tuple((int(p), int(u) % l) for p, u in pairs)
    if any(p < 1 for p, _ in key):
        raise ValueError("parts must be positive")
    return mr_s_basis(l).monomial(key)


def Mmr(pairs, l: int) -> Element:
    key = tuple((int(p), int(u) % l) for p, u in pairs)
    return mr_m_basis(l).monomial(key)


def mr_product(x: Element, y: Element) -> Element:
    _expect(x, "mr.S")
    return bilinear_extend(x, y, lambda k1, k2: [(k1 + k2, 1)])


def mr_coproduct_key(key):
    parts = [((), ())]
    for (p, u) in key:
        new = []
        for left, right in parts:
            for a in range(p + 1):
                la = left + (((a, u),) if a else ())
                rb = right + (((p - a, u),) if p - a else ())
                new.append((la, rb))
        parts = new
    counts = {}
    for pair in parts:
        counts[pair] = counts.get(pair, 0) + 1
    return counts


def mr_coproduct(x: Element) -> TensorElement:
    """Divided powers on each monochromatic generator, extended
    multiplicatively."""
    _expect(x, "mr.S")
    return linear_extend(x, lambda k: x.basis.tensor(mr_coproduct_key(k)))


def mr_to_sym_key(key, l: int):
    cols = []
    for (p, u) in key:
        col = [0] * l
        col[u] = p
        cols.append(tuple(col))
    return tuple(cols)


def sym_to_mr_key(key):
    """Inverse of ``mr_to_sym_key`` on monochromatic columns."""
    pairs = []
    for col in key:
        nz = [(u, p) for u, p in enumerate(col) if p]
        if len(nz) != 1:
            return None
        u, p = nz[0]
        pairs.append((p, u))
    return tuple(pairs)


def mr_embed(x: Element) -> Element:
    _expect(x, "mr.S")
    l = x.basis.monoid.l
    sb = s_basis(x.basis.monoid)
    return Element(sb, {mr_to_sym_key(k, l): c for k, c in x.terms.items()})


def mr_internal(x: Element, y: Element) -> Element:
    """Internal product inside Sym, pulled back to MR labels; the support
    staying monochromatic is the Mantaci-Reutenauer closure."""
    _expect(x, "mr.S")
    prod = s_internal(mr_embed(x), mr_embed(y))
    out = {}
    for key, c in prod.terms.items():
        mk = sym_to_mr_key(key)
        if mk is None:
            raise ValueError(f"internal product left MR: {key}")
        out[mk] = c
    return Element(x.basis, out)


def mr_dual_product(x: Element, y: Element) -> Element:
    """Quasi-shuffle of colored compositions; only equal colors overlap."""
    _expect(x, "mr.M")

    def add(a, b):
        if a[1] != b[1]:
            return None
        return (a[0] + b[0], a[1])

    def shuffles(A, B):
        if not A:
            yield B
            return
        if not B:
            yield A
            return
        for rest in shuffles(A[1:], B):
            yield (A[0],) + rest
        for rest in shuffles(A, B[1:]):
            yield (B[0],) + rest
        merged = add(A[0], B[0])
        if merged is not None:
            for rest in shuffles(A[1:], B[1:]):
                yield (merged,) + rest

    return bilinear_extend(x, y,
                           lambda k1, k2: [(k, 1) for k in shuffles(k1, k2)])


def mr_dual_coproduct(x: Element) -> TensorElement:
    _expect(x, "mr.M")
    def rule(k):
        return x.basis.tensor({(k[:i], k[i:]): 1 for i in range(len(k) + 1)})
    return linear_extend(x, rule)


def pair_mr(m: Element, s: Element):
    names = {m.basis.name, s.basis.name}
    if names != {"mr.M", "mr.S"}:
        raise ValueError(f"pairing needs dual MR elements, got {names}")
    total = 0
    for k, c in m.terms.items():
        if k in s.terms:
            total = total + c * s.terms[k]
    return total


# ---------------------------------------------------------------------------
# commutative multi-symmetric image

def commutative_image(x: Element) -> Element:
    """Image of an S element with columns sorted into a canonical multiset."""
    _expect(x, "sym.S")
    mb = msym_basis(x.basis.monoid)
    out = {}
    for key, c in x.terms.items():
        k = tuple(sorted(key))
        out[k] = out.get(k, 0) + c
    return Element(mb, out)


def multisym_internal(x: Element, y: Element) -> Element:
    """Internal product on multi-symmetric functions: lift, multiply inside
    the noncommutative algebra, project."""
    _expect(x, "msym.h")
    _expect(y, "msym.h")
    monoid = x.basis.monoid
    sb = s_basis(monoid)
    lift = lambda e: Element(sb, dict(e.terms))
    return commutative_image(s_internal(lift(x), lift(y)))


def _expect(x, name):
    if x.basis.name != name:
        raise ValueError(f"expected a {name} element, got {x.basis.name}")
