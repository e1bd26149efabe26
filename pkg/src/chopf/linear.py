"""Exact sparse linear algebra over combinatorial bases.

An Element is a finitely supported map from basis keys to exact
coefficients (int, Fraction, or Poly).  Keys are plain tuples; the Basis
object carries the algebra tag and the color monoid so that mixed-algebra
arithmetic fails loudly.
"""

from __future__ import annotations

from fractions import Fraction

from .colorcore import ColorMonoid

# ---------------------------------------------------------------------------
# multivariate polynomials with exact coefficients
#
# A monomial is a sorted tuple of (variable, exponent) pairs; variables are
# strings.  Coefficients are int or Fraction; integer values are kept as int.


def _norm_scalar(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Immutable multivariate polynomial over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        for mono, c in (terms or {}).items():
            c = _norm_scalar(c)
            if c != 0:
                data[mono] = c
        self.terms = data

    @staticmethod
    def var(name, exp=1):
        return Poly({((name, exp),): 1}) if exp else Poly({(): 1})

    @staticmethod
    def const(c):
        return Poly({(): c})

    @staticmethod
    def coerce(x):
        return x if isinstance(x, Poly) else Poly.const(x)

    def is_scalar(self):
        return all(m == () for m in self.terms)

    def scalar(self):
        if not self.terms:
            return 0
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.terms[()]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = _norm_scalar(other)
            if other == 0:
                return not self.terms
            return self.terms == {(): other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        data = dict(self.terms)
        for m, c in other.terms.items():
            data[m] = data.get(m, 0) + c
        return Poly(data)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        data = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                data[m] = data.get(m, 0) + c1 * c2
        return Poly(data)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def subs(self, mapping):
        """Substitute variables by scalars or polynomials."""
        out = Poly()
        for mono, c in self.terms.items():
            term = Poly.const(c)
            for v, e in mono:
                base = mapping.get(v)
                base = Poly.var(v) if base is None else Poly.coerce(base)
                term = term * base ** e
            out = out + term
        return out

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    def univariate_coeffs(self, var):
        """Coefficient list (ascending degree) in ``var``; other variables
        must not occur."""
        coeffs = []
        for mono, c in self.terms.items():
            if mono == ():
                deg = 0
            elif len(mono) == 1 and mono[0][0] == var:
                deg = mono[0][1]
            else:
                raise ValueError(f"{self} is not univariate in {var}")
            while len(coeffs) <= deg:
                coeffs.append(0)
            coeffs[deg] += c
        return coeffs

    @staticmethod
    def from_univariate(var, coeffs):
        return Poly({((var, d),) if d else (): c
                     for d, c in enumerate(coeffs) if c != 0})

    def reduce_univariate(self, var, modulus):
        """Remainder modulo a monic univariate polynomial in ``var``
        (modulus given as an ascending coefficient list)."""
        coeffs = self.univariate_coeffs(var)
        d = len(modulus) - 1
        if modulus[d] != 1:
            raise ValueError("modulus must be monic")
        while len(coeffs) > d:
            lead = coeffs.pop()
            if lead == 0:
                continue
            shift = len(coeffs) - d
            for i in range(d):
                coeffs[shift + i] -= lead * modulus[i]
        return Poly.from_univariate(var, coeffs)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=_mono_sort_key):
            c = self.terms[mono]
            head = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not head:
                bits.append(str(c))
            elif c == 1:
                bits.append(head)
            elif c == -1:
                bits.append("-" + head)
            else:
                bits.append(f"{c}*{head}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _mono_sort_key(mono):
    return (sum(e for _, e in mono), mono)


def cyclotomic(n: int) -> list:
    """Ascending coefficient list of the n-th cyclotomic polynomial."""
    # (q^n - 1) divided by the product of the lower cyclotomic factors.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, cyclotomic(d))
    return num


def _polydiv_exact(num, den):
    num = list(num)
    d = len(den) - 1
    out = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        q, r = divmod(num[i], den[d])
        if r:
            raise ValueError("non-exact polynomial division")
        out[i - d] = q
        for j in range(d + 1):
            num[i - d + j] -= q * den[j]
    if any(num[:d]):
        raise ValueError("non-exact polynomial division")
    return out


# ---------------------------------------------------------------------------
# free modules

def _pair_size(key):
    return len(key[0])


def _columns_size(key):
    return sum(sum(col) for col in key)


def _mr_size(key):
    return sum(part for part, _ in key)


class Basis:
    """Algebra tag plus color monoid; owns element construction and grading."""

    __slots__ = ("name", "monoid", "size", "unit_key")

    def __init__(self, name: str, monoid: ColorMonoid, size=_pair_size,
                 unit_key=((), ())):
        self.name = name
        self.monoid = monoid
        self.size = size
        self.unit_key = unit_key

    def __eq__(self, other):
        return isinstance(other, Basis) and \
            (self.name, self.monoid) == (other.name, other.monoid)

    def __hash__(self):
        return hash((self.name, self.monoid))

    def __repr__(self):
        return f"{self.name}({self.monoid})"

    def element(self, terms=None) -> "Element":
        return Element(self, terms or {})

    def monomial(self, key, coeff=1) -> "Element":
        return Element(self, {key: coeff})

    @property
    def zero(self) -> "Element":
        return Element(self, {})

    @property
    def one(self) -> "Element":
        """The empty-key monomial; every graded algebra here is connected."""
        return self.monomial(self.unit_key)

    def tensor(self, terms=None) -> "TensorElement":
        return TensorElement(self, terms or {})


def _check_same_basis(a, b):
    if a.basis != b.basis:
        raise ValueError(f"basis mismatch: {a.basis} vs {b.basis}")


class _Linear:
    """Shared arithmetic for Element and TensorElement."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms):
        self.basis = basis
        data = {}
        for k, c in terms.items():
            if isinstance(c, Fraction):
                c = _norm_scalar(c)
            if c != 0:
                data[k] = c
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, _Linear) and self.basis == other.basis \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other):
        _check_same_basis(self, other)
        data = dict(self.terms)
        for k, c in other.terms.items():
            data[k] = data.get(k, 0) + c
        return type(self)(self.basis, data)

    def __neg__(self):
        return type(self)(self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return type(self)(self.basis, {})
        return type(self)(self.basis, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Poly)):
            return self.scale(c)
        return NotImplemented

    def coeff(self, key):
        return self.terms.get(key, 0)

    def support(self):
        return sorted(self.terms)

    def map_coeffs(self, f):
        return type(self)(self.basis, {k: f(c) for k, c in self.terms.items()})


class Element(_Linear):
    """Sparse linear combination of basis keys with exact coefficients."""

    def degrees(self):
        size = self.basis.size
        return sorted({size(k) for k in self.terms})

    def homogeneous_component(self, n):
        size = self.basis.size
        return Element(self.basis,
                       {k: c for k, c in self.terms.items() if size(k) == n})

    def __repr__(self):
        if not self.terms:
            return f"0 [{self.basis}]"
        bits = [f"{c}·{k}" for k, c in sorted(self.terms.items(), key=repr)]
        return " + ".join(bits) + f" [{self.basis}]"


class TensorElement(_Linear):
    """Linear combination of r-tuples of keys (r >= 2)."""

    def swap(self):
        return TensorElement(self.basis,
                             {k[::-1]: c for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"0 [{self.basis}⊗{self.basis}]"
        bits = [f"{c}·{'⊗'.join(map(str, k))}"
                for k, c in sorted(self.terms.items(), key=repr)]
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# bilinear machinery

def linear_extend(x: Element, rule):
    """Extend a key-level map ``rule(key) -> Element | TensorElement``
    linearly over x."""
    out_terms = {}
    result = None
    for k, c in x.terms.items():
        img = rule(k)
        if result is None:
            result = img
        for k2, c2 in img.terms.items():
            out_terms[k2] = out_terms.get(k2, 0) + c * c2
    if result is None:
        return x.basis.zero
    return type(result)(result.basis, out_terms)


def bilinear_extend(x: Element, y: Element, key_rule, basis=None):
    """Extend ``key_rule(k1, k2) -> iterable of (key, coeff)`` bilinearly."""
    _check_same_basis(x, y)
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            c = c1 * c2
            for k, m in key_rule(k1, k2):
                out[k] = out.get(k, 0) + c * m
    return Element(basis or x.basis, out)


def tensor_bilinear(x: TensorElement, y: TensorElement, key_rule):
    """Componentwise bilinear product of 2-tensors, used for compatibility
    checks: (a⊗b)(c⊗d) = key_rule on both slots."""
    _check_same_basis(x, y)
    out = {}
    for (a, b), c1 in x.terms.items():
        for (c, d), c2 in y.terms.items():
            coeff = c1 * c2
            for k1, m1 in key_rule(a, c):
                for k2, m2 in key_rule(b, d):
                    k = (k1, k2)
                    out[k] = out.get(k, 0) + coeff * m1 * m2
    return TensorElement(x.basis, out)


def outer(x: Element, y: Element) -> TensorElement:
    _check_same_basis(x, y)
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            out[(k1, k2)] = out.get((k1, k2), 0) + c1 * c2
    return TensorElement(x.basis, out)


def pairing(x: Element, y: Element, dual_pairs=None):
    """Diagonal duality pairing: sum of coefficient products over common keys.

    The two elements may live in dual bases; the caller is responsible for
    checking the algebra tags form a dual pair (see ``fqsym.pair`` etc.).
    """
    if x.basis.monoid != y.basis.monoid:
        raise ValueError("pairing across different color monoids")
    small, big = (x, y) if len(x.terms) <= len(y.terms) else (y, x)
    total = 0
    for k, c in small.terms.items():
        if k in big.terms:
            total = total + c * big.terms[k]
    return total


def tensor_pairing(dx: TensorElement, y1: Element, y2: Element):
    """<ΔU, V⊗W> computed termwise."""
    total = 0
    for (a, b), c in dx.terms.items():
        ca = y1.terms.get(a, 0)
        if ca == 0:
            continue
        cb = y2.terms.get(b, 0)
        if cb == 0:
            continue
        total = total + c * ca * cb
    return total
