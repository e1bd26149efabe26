"""Combinatorial kernels: color monoids, colored words and permutations,
parking functions, binary trees.

Everything here works on plain tuples.  A colored object is a pair of
equal-length tuples ``(word, colors)``; letters are 1-based positive
integers, colors are machine integers interpreted through a ColorMonoid.
All functions are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# color monoids

@dataclass(frozen=True)
class ColorMonoid:
    """Additive monoid the colors live in: ``nat``, ``int`` or ``mod`` (Z/l)."""

    kind: str                 # "nat" | "int" | "mod"
    l: int | None = None      # modulus, only for kind == "mod"

    def __post_init__(self):
        if self.kind not in ("nat", "int", "mod"):
            raise ValueError(f"unknown color monoid kind {self.kind!r}")
        if self.kind == "mod":
            if self.l is None or self.l < 1:
                raise ValueError("cyclic color monoid needs a modulus >= 1")
        elif self.l is not None:
            raise ValueError(f"monoid {self.kind!r} takes no modulus")

    @staticmethod
    def parse(text: str) -> "ColorMonoid":
        """Parse the CLI grammar ``mod:l | nat | int``."""
        if text == "nat":
            return NAT
        if text == "int":
            return INT
        if text.startswith("mod:"):
            return ColorMonoid("mod", int(text[4:]))
        raise ValueError(f"bad color monoid spec {text!r}")

    def __str__(self):
        return self.kind if self.l is None else f"mod:{self.l}"

    @property
    def is_group(self):
        return self.kind in ("int", "mod")

    def reduce(self, c: int) -> int:
        if self.kind == "mod":
            return c % self.l
        if self.kind == "nat" and c < 0:
            raise ValueError(f"color {c} not in the naturals")
        return c

    def reduce_word(self, u) -> tuple:
        return tuple(self.reduce(c) for c in u)

    def add(self, a: int, b: int) -> int:
        return self.reduce(a + b)

    def add_words(self, u, v) -> tuple:
        if len(u) != len(v):
            raise ValueError("color word length mismatch")
        return tuple(self.add(a, b) for a, b in zip(u, v))

    def negate(self, c: int) -> int:
        if not self.is_group:
            raise ValueError(f"monoid {self} has no inverses")
        return self.reduce(-c)

    def colors(self, bound: int | None = None):
        """Iterate the colors; a finite ``bound`` is required unless cyclic."""
        if self.kind == "mod":
            return range(self.l)
        if bound is None:
            raise ValueError(f"need a bound to enumerate colors of {self}")
        if self.kind == "nat":
            return range(bound)
        return range(-bound, bound + 1)


NAT = ColorMonoid("nat")
INT = ColorMonoid("int")


def cyclic(l: int) -> ColorMonoid:
    return ColorMonoid("mod", l)


# ---------------------------------------------------------------------------
# words and standardization

def standardize(word) -> tuple:
    """Permutation with the same inversions as ``word``; equal letters are
    numbered left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    perm = [0] * len(word)
    for rank, pos in enumerate(order, start=1):
        perm[pos] = rank
    return tuple(perm)


def colored_standardize(letters, colors) -> tuple:
    """Standardize the letters, keep the colors in place."""
    if len(letters) != len(colors):
        raise ValueError("letters and colors must have the same length")
    return standardize(letters), tuple(colors)


def is_permutation(word) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def inverse(perm) -> tuple:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v - 1] = i + 1
    return tuple(inv)


def descents(word) -> frozenset:
    """Positions i (1-based) with word[i] > word[i+1]."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def shifted(word, k: int) -> tuple:
    return tuple(a + k for a in word)


def shifted_concat(cw1, cw2) -> tuple:
    """Shifted concatenation of colored words: letters of the second word are
    shifted by the length of the first, colors are concatenated as they are."""
    (v1, u1), (v2, u2) = cw1, cw2
    return v1 + shifted(v2, len(v1)), u1 + u2


def _shuffles(a, b):
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for rest in _shuffles(a[1:], b):
        yield (a[0],) + rest
    for rest in _shuffles(a, b[1:]):
        yield (b[0],) + rest


def shifted_shuffle(cw1, cw2) -> list:
    """All interleavings of cw1 with the shifted cw2, each color travelling
    with its letter.  Returns a sorted list of (letters, colors) pairs."""
    (v1, u1), (v2, u2) = cw1, cw2
    a = tuple(zip(v1, u1))
    b = tuple(zip(shifted(v2, len(v1)), u2))
    out = []
    for s in _shuffles(a, b):
        if s:
            letters, colors = zip(*s)
        else:
            letters, colors = (), ()
        out.append((tuple(letters), tuple(colors)))
    out.sort()
    return out


def convolution(p1, p2) -> list:
    """All permutations whose first block standardizes to p1 and last block
    to p2.  The block contents determine the arrangement, so there are
    binomial(n1+n2, n1) results."""
    n1, n2 = len(p1), len(p2)
    n = n1 + n2
    out = []
    for first in itertools.combinations(range(1, n + 1), n1):
        rest = sorted(set(range(1, n + 1)) - set(first))
        tau = tuple(first[p - 1] for p in p1) + tuple(rest[p - 1] for p in p2)
        out.append(tau)
    out.sort()
    return out


def word_right_action(u, perm) -> tuple:
    """Right action permuting positions: result_i = u[perm_i]."""
    if len(u) != len(perm):
        raise ValueError("word/permutation length mismatch")
    return tuple(u[p - 1] for p in perm)


def wreath_multiply(h1, h2, monoid: ColorMonoid) -> tuple:
    """Group law of C wr S_n:
    (sigma; c) (tau; d) = (sigma tau; c_{tau(1)}+d_1, ..., c_{tau(n)}+d_n)
    with (sigma tau)(i) = sigma(tau(i))."""
    (sigma, c), (tau, d) = h1, h2
    if len(sigma) != len(tau):
        raise ValueError("wreath product needs equal sizes")
    perm = tuple(sigma[t - 1] for t in tau)
    colors = monoid.add_words(word_right_action(c, tau), d)
    return perm, colors


def wreath_identity(n: int) -> tuple:
    return tuple(range(1, n + 1)), (0,) * n


# ---------------------------------------------------------------------------
# parking functions

def is_parking(word) -> bool:
    return all(a <= i for i, a in enumerate(sorted(word), start=1))


def parkize(word) -> tuple:
    """Project a word onto a parking function, decrementing every letter above
    the first failure point until none is left."""
    w = list(word)
    n = len(w)
    while True:
        d = n + 1
        for i in range(1, n + 1):
            if sum(1 for a in w if a <= i) < i:
                d = i
                break
        if d == n + 1:
            return tuple(w)
        w = [a - 1 if a > d else a for a in w]


def breakpoints(a) -> frozenset:
    """BP(a) = {b : #{a_i <= b} = b}; requires a parking function."""
    if not is_parking(a):
        raise ValueError(f"{a} is not a parking function")
    return frozenset(b for b in range(1, len(a) + 1)
                     if sum(1 for x in a if x <= b) == b)


def matches(a) -> frozenset:
    """Ma(a) = {b : #{a_i < b} = b-1 and #{a_i <= b} >= b}."""
    if not is_parking(a):
        raise ValueError(f"{a} is not a parking function")
    return frozenset(b for b in range(1, len(a) + 1)
                     if sum(1 for x in a if x < b) == b - 1
                     and sum(1 for x in a if x <= b) >= b)


def is_prime_pf(a) -> bool:
    return breakpoints(a) == frozenset({len(a)})


@lru_cache(maxsize=None)
def parking_functions(n: int) -> tuple:
    """All parking functions of size n, sorted."""
    if n == 0:
        return ((),)
    out = []
    for w in itertools.product(range(1, n + 1), repeat=n):
        if is_parking(w):
            out.append(w)
    return tuple(out)


@lru_cache(maxsize=None)
def nondecreasing_parking_functions(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []

    def rec(prefix, low):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        for a in range(low, i + 1):
            rec(prefix + [a], a)

    rec([], 1)
    return tuple(out)


def prime_parking_functions(n: int) -> tuple:
    return tuple(a for a in parking_functions(n) if is_prime_pf(a))


# ---------------------------------------------------------------------------
# connected factorization

def cut_points(word) -> list:
    """Positions i where word = prefix . suffix is a shifted concatenation,
    i.e. the first i letters are at most i and the rest exceed i."""
    n = len(word)
    cuts = []
    mx = 0
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 2
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(word[i], suffix_min[i + 1])
    for i in range(1, n):
        mx = max(mx, word[i - 1])
        if mx <= i and suffix_min[i] >= i + 1:
            cuts.append(i)
    return cuts


def is_connected(word) -> bool:
    return len(word) > 0 and not cut_points(word)


def connected_factorization(word, colors=None):
    """Unique maximal factorization under shifted concatenation.  Returns a
    list of words, or of (word, colors) pairs when colors are given."""
    n = len(word)
    if n == 0:
        return []
    cuts = cut_points(word) + [n]
    factors = []
    start = 0
    for c in cuts:
        chunk = tuple(a - start for a in word[start:c])
        if colors is None:
            factors.append(chunk)
        else:
            factors.append((chunk, tuple(colors[start:c])))
        start = c
    return factors


def connected_permutations(n: int) -> tuple:
    return tuple(p for p in itertools.permutations(range(1, n + 1))
                 if is_connected(p))


def connected_parking_functions(n: int) -> tuple:
    return tuple(a for a in parking_functions(n) if is_connected(a))


# ---------------------------------------------------------------------------
# binary trees
#
# A tree is either None (empty) or a pair (left, right); the size is the
# number of internal nodes.

def tree_size(tree) -> int:
    if tree is None:
        return 0
    return 1 + tree_size(tree[0]) + tree_size(tree[1])


def bst_insert(perm) -> tuple | None:
    """Shape of the binary search tree built by inserting the word from right
    to left (standard: smaller letters go left)."""
    root = None
    for v in reversed(perm):
        root = _bst_add(root, v)
    return _shape(root)


def _bst_add(node, v):
    if node is None:
        return [v, None, None]
    if v < node[0]:
        node[1] = _bst_add(node[1], v)
    else:
        node[2] = _bst_add(node[2], v)
    return node


def _shape(node):
    if node is None:
        return None
    return (_shape(node[1]), _shape(node[2]))


def binary_trees(n: int):
    """All tree shapes with n internal nodes."""
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def tree_to_text(tree) -> str:
    if tree is None:
        return "•"
    return "(" + tree_to_text(tree[0]) + "," + tree_to_text(tree[1]) + ")"


# ---------------------------------------------------------------------------
# compositions

def compositions(n: int):
    """All compositions of n, in lexicographic order of descent sets."""
    if n == 0:
        return ((),)
    out = []
    for cuts in range(1 << (n - 1)):
        parts = []
        last = 0
        for i in range(1, n):
            if cuts >> (i - 1) & 1:
                parts.append(i - last)
                last = i
        parts.append(n - last)
        out.append(tuple(parts))
    out.sort()
    return tuple(out)


def composition_descents(comp) -> frozenset:
    """Partial sums of a composition, without the total."""
    s, out = 0, []
    for p in comp[:-1]:
        s += p
        out.append(s)
    return frozenset(out)


def descents_to_composition(des, n: int) -> tuple:
    cuts = sorted(des) + [n]
    parts, last = [], 0
    for c in cuts:
        parts.append(c - last)
        last = c
    return tuple(p for p in parts if p)


def maj(comp) -> int:
    """Major index of a composition: the sum of its descents."""
    return sum(composition_descents(comp))


def coarser(comp):
    """All compositions obtained by summing adjacent parts of ``comp``."""
    des = sorted(composition_descents(comp))
    n = sum(comp)
    for r in range(len(des) + 1):
        for keep in itertools.combinations(des, r):
            yield descents_to_composition(keep, n)


# ---------------------------------------------------------------------------
# misc exact helpers

def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def multinomial(parts) -> int:
    """(sum parts)! / prod(parts!)."""
    out, total = 1, 0
    for p in parts:
        total += p
        out *= binomial(total, p)
    return out


def factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def mobius(n: int) -> int:
    if n == 1:
        return 1
    m, out = n, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def colored_words(n: int, colors) -> list:
    """All color words of length n over the given color range."""
    return [u for u in itertools.product(colors, repeat=n)]


def colored_permutations(n: int, monoid: ColorMonoid, bound: int | None = None):
    """All colored permutations of size n; cyclic monoids need no bound."""
    cols = list(monoid.colors(bound))
    for p in itertools.permutations(range(1, n + 1)):
        for u in itertools.product(cols, repeat=n):
            yield (p, u)
