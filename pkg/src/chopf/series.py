"""Truncated univariate power series with exact rational coefficients.

All arithmetic truncates at a fixed order N (inclusive); mixing orders takes
the minimum.  Coefficients are int or Fraction.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_ORDER = 8


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1 if coeffs else 0
        coeffs = coeffs[:order + 1] + [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(_norm(Fraction(c)) if not isinstance(c, (int, Fraction))
                            else _norm(c) for c in coeffs)
        self.order = order

    @staticmethod
    def zero(order=DEFAULT_ORDER):
        return TruncatedSeries([], order)

    @staticmethod
    def one(order=DEFAULT_ORDER):
        return TruncatedSeries([1], order)

    @staticmethod
    def t(order=DEFAULT_ORDER):
        return TruncatedSeries([0, 1], order)

    @staticmethod
    def geometric(order=DEFAULT_ORDER):
        """1/(1-t)."""
        return TruncatedSeries([1] * (order + 1), order)

    @staticmethod
    def from_terms(fn, order=DEFAULT_ORDER):
        return TruncatedSeries([fn(n) for n in range(order + 1)], order)

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        bits = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                bits.append(str(c))
            else:
                tn = "t" if n == 1 else f"t^{n}"
                bits.append(tn if c == 1 else f"{c}*{tn}")
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O(t^{self.order + 1})"

    def _with(self, coeffs, order):
        return TruncatedSeries(coeffs, order)

    def __add__(self, other):
        other = _coerce(other, self.order)
        order = min(self.order, other.order)
        return self._with([self[n] + other[n] for n in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return self._with([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._with([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[:order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other[j]
                if b:
                    out[i + j] += a * b
        return self._with(out, order)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def reciprocal(self):
        if self[0] == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = Fraction(1, 1) / self[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum(self[k] * out[n - k] for k in range(1, n + 1))
            out.append(-inv0 * s)
        return self._with(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) / other if other != 1 else self
        return self * other.reciprocal()

    def sqrt(self):
        c0 = Fraction(self[0])
        r0 = _fraction_sqrt(c0)
        out = [r0]
        for n in range(1, self.order + 1):
            s = sum(out[k] * out[n - k] for k in range(1, n))
            out.append((self[n] - s) / (2 * r0))
        return self._with(out, self.order)

    def compose(self, inner):
        """self(inner); the inner series must have zero constant term."""
        if inner[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        order = min(self.order, inner.order)
        out = TruncatedSeries([self[0]], order)
        power = TruncatedSeries.one(order)
        for n in range(1, order + 1):
            power = power * inner
            out = out + power * self[n]
        return out

    def scale_variable(self, a):
        """t -> a*t."""
        return self._with([c * a ** n for n, c in enumerate(self.coeffs)],
                          self.order)

    def derivative(self):
        return self._with([n * c for n, c in enumerate(self.coeffs)][1:] + [0],
                          self.order - 1)


def _coerce(x, order):
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries([x], order)


def _fraction_sqrt(c: Fraction) -> Fraction:
    if c < 0:
        raise ValueError("sqrt of a negative constant term")
    num = _isqrt_exact(c.numerator)
    den = _isqrt_exact(c.denominator)
    return Fraction(num, den)


def _isqrt_exact(n: int) -> int:
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    raise ValueError(f"{n} is not a perfect square")


def product_power(exponents, order=DEFAULT_ORDER):
    """prod_n (1 - t^n)^(e_n) for an exponent map {n: e_n} with e_n in Z."""
    out = TruncatedSeries.one(order)
    for n, e in sorted(exponents.items()):
        if n > order or e == 0:
            continue
        base = TruncatedSeries([1] + [0] * (n - 1) + [-1], order)
        out = out * (base ** e if e > 0 else base.reciprocal() ** (-e))
    return out


def free_generator_exponents(series: TruncatedSeries) -> dict:
    """Given H = prod_n (1 - t^n)^(-d_n) with H(0)=1, peel off the d_n.

    This is the inversion used to read graded free-Lie dimensions off a
    Hilbert series.
    """
    if series[0] != 1:
        raise ValueError("needs constant term 1")
    h = series
    out = {}
    for n in range(1, series.order + 1):
        d = h[n]
        out[n] = d
        if d:
            base = TruncatedSeries([1] + [0] * (n - 1) + [-1], series.order)
            h = h * (base ** d if d > 0 else base.reciprocal() ** (-d))
    return out
