"""Closed-form dimension and generating series, each paired with a direct
enumeration cross-check.

``series(name, order, l)`` returns exact rational coefficients;
``cross_check(name, n, l)`` recounts the underlying objects where feasible
and reports both numbers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import colorcore as cc
from . import pqsym, symql
from .series import (DEFAULT_ORDER, TruncatedSeries, free_generator_exponents,
                     product_power)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    return cc.binomial(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return stirling1_unsigned(n - 1, k - 1) + (n - 1) * stirling1_unsigned(n - 1, k)


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    if n == 0:
        return 1
    return sum(cc.binomial(n, k) * ordered_bell(n - k) for k in range(1, n + 1))


def witt(n: int, l: int) -> int:
    """Graded dimension of the free Lie algebra underlying the
    Mantaci-Reutenauer algebra: l in degree 1, the usual Witt formula on
    l+1 letters beyond."""
    if n == 1:
        return l
    total = sum(cc.mobius(d) * (l + 1) ** (n // d) for d in cc.divisors(n))
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError("Witt polynomial must be integral")
    return q


def ncs_value(n: int, l: int) -> int:
    """n! times the dimension of the colored Sym in degree n."""
    return sum(stirling1_unsigned(n, k) * ordered_bell(k) * l ** k
               for k in range(1, n + 1))


def connected_series(order: int) -> TruncatedSeries:
    return 1 - TruncatedSeries.from_terms(cc.factorial, order).reciprocal()


def connected_pf_series(order: int) -> TruncatedSeries:
    f = TruncatedSeries.from_terms(lambda n: (n + 1) ** (n - 1) if n else 1, order)
    return 1 - f.reciprocal()


def _tp(pq: TruncatedSeries) -> TruncatedSeries:
    return (pq - 1) * (pq * pq).reciprocal()


def _td(pq: TruncatedSeries) -> TruncatedSeries:
    return (pq - 1) * (2 * pq * pq - pq).reciprocal()


def _lie_series(dims_fn, l: int, order: int) -> TruncatedSeries:
    return 1 - product_power({n: dims_fn(n) * l ** n
                              for n in range(1, order + 1)}, order)


def _ue_series(dims_fn, l: int, order: int) -> TruncatedSeries:
    return product_power({n: -dims_fn(n) * l ** n
                          for n in range(1, order + 1)}, order)


def _exponent_series(hilbert: TruncatedSeries) -> TruncatedSeries:
    exps = free_generator_exponents(hilbert)
    return TruncatedSeries([1] + [exps.get(n, 0)
                                  for n in range(1, hilbert.order + 1)],
                           hilbert.order)


def _connected_count(n):
    return connected_series(max(n, 1))[n]


def _connected_pf_count(n):
    return connected_pf_series(max(n, 1))[n]


def sym_hilbert(order: int, l: int) -> TruncatedSeries:
    one_minus_t = TruncatedSeries([1, -1], order)
    p = one_minus_t ** l
    return p * (2 * p - 1).reciprocal()


def mr_hilbert(order: int, l: int) -> TruncatedSeries:
    """(1-t)/(1-(l+1)t) = 1 + l * sum (l+1)^(n-1) t^n."""
    return TruncatedSeries([1, -1], order) * \
        TruncatedSeries([1, -(l + 1)], order).reciprocal()


def ncb_series(order: int, l: int) -> TruncatedSeries:
    s = (1 - TruncatedSeries([1, -4], order).sqrt()) * Fraction(1, 2)
    return (1 - l * s).reciprocal()


_SERIES = {}


def _register(name):
    def deco(fn):
        _SERIES[name] = fn
        return fn
    return deco


@_register("connected")
def _(order, l):
    return connected_series(order).scale_variable(l)


@_register("fqsym_hilbert")
def _(order, l):
    return TruncatedSeries.from_terms(lambda n: l ** n * cc.factorial(n), order)


@_register("fqsym_lie")
def _(order, l):
    return _lie_series(_connected_count, l, order)


@_register("ue_fqsym")
def _(order, l):
    return _ue_series(_connected_count, l, order)


@_register("tp_fqsym")
def _(order, l):
    return _tp(_SERIES["fqsym_hilbert"](order, l))


@_register("sym_hilbert")
def _(order, l):
    return sym_hilbert(order, l)


@_register("sym_generators")
def _(order, l):
    return TruncatedSeries([1, -1], order).reciprocal() ** l - 1


@_register("sym_lie")
def _(order, l):
    return _exponent_series(sym_hilbert(order, l))


@_register("ncs")
def _(order, l):
    return TruncatedSeries([1] + [ncs_value(n, l) for n in range(1, order + 1)],
                           order)


@_register("mr_hilbert")
def _(order, l):
    return mr_hilbert(order, l)


@_register("mr_lie")
def _(order, l):
    return TruncatedSeries([1] + [witt(n, l) for n in range(1, order + 1)], order)


@_register("colored_pf")
def _(order, l):
    return TruncatedSeries.from_terms(
        lambda n: l ** n * (n + 1) ** (n - 1) if n else 1, order)


@_register("connected_pf")
def _(order, l):
    return connected_pf_series(order).scale_variable(l)


@_register("pqsym_lie")
def _(order, l):
    return _lie_series(_connected_pf_count, l, order)


@_register("ue_pqsym")
def _(order, l):
    return _ue_series(_connected_pf_count, l, order)


@_register("tp_pqsym")
def _(order, l):
    return _tp(_SERIES["colored_pf"](order, l))


@_register("td_pqsym")
def _(order, l):
    return _td(_SERIES["colored_pf"](order, l))


@_register("ncb")
def _(order, l):
    return ncb_series(order, l)


@_register("pbt_hilbert")
def _(order, l):
    return TruncatedSeries.from_terms(lambda n: l ** n * catalan(n), order)


@_register("pbt_generators")
def _(order, l):
    return TruncatedSeries.from_terms(
        lambda n: l ** n * catalan(n - 1) if n else 0, order)


@_register("pbt_lie")
def _(order, l):
    return _lie_series(lambda n: catalan(n - 1), l, order)


@_register("ue_pbt")
def _(order, l):
    return _ue_series(lambda n: catalan(n - 1), l, order)


def series_names():
    return sorted(_SERIES)


def series(name: str, order: int = DEFAULT_ORDER, l: int = 1) -> TruncatedSeries:
    if name not in _SERIES:
        raise ValueError(f"unknown series {name!r}; know {series_names()}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _SERIES[name](order, l)


# ---------------------------------------------------------------------------
# enumeration cross-checks

def _count_trees_no_right_branch(n):
    return sum(1 for t in cc.binary_trees(n) if t[1] is None)


_CHECKS = {
    "connected": lambda n, l: len(cc.connected_permutations(n)) * l ** n,
    "fqsym_hilbert": lambda n, l:
        sum(1 for _ in cc.colored_permutations(n, cc.cyclic(l))),
    "sym_hilbert": lambda n, l: len(symql.vector_compositions(n, l)),
    "sym_generators": lambda n, l: len(symql.partite_columns(n, l)),
    "mr_hilbert": lambda n, l:
        sum(l ** len(comp) for comp in cc.compositions(n)) if n else 1,
    "colored_pf": lambda n, l: len(cc.parking_functions(n)) * l ** n,
    "connected_pf": lambda n, l: pqsym.connected_pf_count(n, l),
    "level2_pf": lambda n, l: len(pqsym.level2_parking_functions(n)),
    "pf": lambda n, l: len(cc.parking_functions(n)),
    "prime_pf": lambda n, l: len(cc.prime_parking_functions(n)),
    "ncb": lambda n, l: len(pqsym.ncb_enumerate(n, l)),
    "pbt_hilbert": lambda n, l: len(cc.binary_trees(n)) * l ** n,
    "pbt_generators": lambda n, l:
        _count_trees_no_right_branch(n) * l ** n if n else 0,
    "ncs": lambda n, l:
        cc.factorial(n) * len(symql.vector_compositions(n, l)),
}

_CHECK_FORMULAS = {
    "level2_pf": lambda n, l: n ** n if n else 1,
    "pf": lambda n, l: (n + 1) ** (n - 1) if n else 1,
    "prime_pf": lambda n, l: (n - 1) ** (n - 1) if n > 1 else 1,
}


def check_names():
    return sorted(_CHECKS)


def cross_check(name: str, n: int, l: int = 1) -> dict:
    """Compare the formula coefficient with a direct object count."""
    if name not in _CHECKS:
        raise ValueError(f"unknown check {name!r}; know {check_names()}")
    counted = _CHECKS[name](n, l)
    if name in _CHECK_FORMULAS:
        expected = _CHECK_FORMULAS[name](n, l)
    else:
        expected = series(name, max(n, 1), l)[n]
    return {"name": name, "n": n, "l": l,
            "formula": expected, "enumerated": counted,
            "ok": expected == counted}
