"""Cyclotomic-expansion coefficients of the left-handed torus knots T(2,2t+1).

Two independent routes to the same Laurent polynomials C_n:

* c_product: the nested q-binomial product form, manifestly a Laurent
  polynomial with integer coefficients;
* c_multisum: the (2t-1)-fold alternating multisum, assembled over a single
  denominator (q)_{n+1} via Gaussian multinomials and divided exactly once.

Their agreement is one of the library's main verification targets.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import ExactnessError, XLaurent, poch_q, qbinomial

__all__ = ["CyclotomicCoeffs", "c_multisum", "c_product", "c_series"]


def _validate(t: int, m: int) -> None:
    if t < 1:
        raise ValueError("t must be a positive integer")
    if not 1 <= m <= t:
        raise ValueError(f"need 1 <= m <= t, got m={m}, t={t}")


def _c_sum(t: int, m: int, n: int, cutoff: int | None) -> XLaurent:
    """The inner sum of the product form (no q^{n+1-t} prefactor applied).

    Sums over n+1 = k_t >= k_{t-1} >= ... >= k_1 >= 0 with k_m >= 1 the
    product of q^{k_i^2} times the coupled Gaussian binomials.  cutoff, when
    given, bounds the *full* C_n exponent: branches whose minimal
    contribution (n+1-t) + sum k_j^2 reaches it are pruned, which is sound
    because every remaining factor has nonnegative valuation.
    """
    base = n + 1 - t
    kt = n + 1
    if t == 1:
        if cutoff is not None and base >= cutoff:
            return XLaurent()
        return XLaurent.const(1)
    total = XLaurent()

    def rec(i: int, k_i: int, prefix: int, sqsum: int, running: XLaurent) -> None:
        # k_i just chosen; running holds the factors of indices < i
        nonlocal total
        sq = sqsum + k_i * k_i
        if cutoff is not None and base + sq >= cutoff:
            return
        pref = prefix + 2 * k_i + (1 if m > i else 0)
        if i == t - 1:
            b = qbinomial(kt - k_i - i + pref, kt - k_i)
            if not b.is_zero():
                total = total + running * b.shift(k_i * k_i)
            return
        lo = max(k_i, 1) if i + 1 == m else k_i
        for k2 in range(lo, kt + 1):
            if cutoff is not None and base + sq + k2 * k2 >= cutoff:
                break
            b = qbinomial(k2 - k_i - i + pref, k2 - k_i)
            if b.is_zero():
                continue
            rec(i + 1, k2, pref, sq, running * b.shift(k_i * k_i))

    lo1 = 1 if m == 1 else 0
    for k1 in range(lo1, kt + 1):
        rec(1, k1, 0, 0, XLaurent.const(1))
    return total


@lru_cache(maxsize=None)
def c_product(t: int, m: int, n: int) -> XLaurent:
    """C_n as the nested product/binomial form: exact Laurent polynomial."""
    _validate(t, m)
    if n < 0:
        return XLaurent()
    inner = _c_sum(t, m, n, None)
    out = inner.shift(n + 1 - t)
    if not out.has_integer_coeffs():  # pragma: no cover - structurally integral
        raise ExactnessError("cyclotomic coefficient left rational coefficients")
    return out


def c_series(t: int, m: int, n: int, window: int) -> XLaurent:
    """C_n with terms guaranteed only strictly below the window exponent."""
    _validate(t, m)
    if n < 0:
        return XLaurent()
    return _c_sum(t, m, n, window).shift(n + 1 - t)


@lru_cache(maxsize=None)
def c_multisum(t: int, m: int, n: int) -> XLaurent:
    """C_n via the (2t-1)-fold alternating multisum.

    The chain v_1 <= ... <= v_{2t-1} <= n+1 is swept by a forward DP whose
    state carries the current value (and, between positions t-m and t, the
    remembered v_{t-m} needed by the center factor).  All inverse Pochhammer
    denominators combine into Gaussian multinomials times 1/(q)_{n+1}; the
    single division at the end must be exact and land in Z[q, 1/q].
    """
    _validate(t, m)
    if n < 0:
        return XLaurent()
    bound = n + 1
    length = 2 * t - 1
    store_pos = t - m if m < t else None

    def node(pos: int, v: int, w: int | None, poly: XLaurent) -> XLaurent:
        shift = 0
        if pos <= t - m - 1:
            shift -= v
        if pos > t:
            shift += v * v
        if pos == t:
            shift += v * (v - 1) // 2
            delta = v - (w if store_pos is not None else 0)
            factor = XLaurent.const(1) - XLaurent.term(delta)
            poly = poly * factor
            if v % 2:
                poly = -poly
        return poly.shift(shift) if shift else poly

    def carry(pos: int) -> bool:
        return store_pos is not None and store_pos <= pos <= t - 1

    states: dict[tuple[int, int | None], XLaurent] = {}
    for v in range(bound + 1):
        w = v if store_pos == 1 else None
        poly = node(1, v, w, XLaurent.const(1))
        key = (v, w if carry(1) else None)
        states[key] = states[key] + poly if key in states else poly

    for pos in range(2, length + 1):
        nxt: dict[tuple[int, int | None], XLaurent] = {}
        for (u, w), poly in states.items():
            for v in range(u, bound + 1):
                p = poly * qbinomial(v, u)
                if pos - 1 <= t - 1:
                    p = p.shift(-u * v)
                win = v if pos == store_pos else w
                p = node(pos, v, win, p)
                wkey = win if carry(pos) else None
                key = (v, wkey)
                nxt[key] = nxt[key] + p if key in nxt else p
        states = nxt

    total = XLaurent()
    for (v, _), poly in states.items():
        total = total + poly * qbinomial(bound, v)

    quot = total.divexact(poch_q(1, bound))
    out = (-quot).shift(bound - t)
    if not out.has_integer_coeffs():
        raise ExactnessError(
            f"multisum C_{n} for (t={t}, m={m}) is not an integer Laurent polynomial"
        )
    return out


class CyclotomicCoeffs:
    """Lazy family n -> C_n for fixed (t, m), backed by the product form."""

    def __init__(self, t: int, m: int):
        _validate(t, m)
        self.t = t
        self.m = m

    def __call__(self, n: int) -> XLaurent:
        return c_product(self.t, self.m, n)

    __getitem__ = __call__

    def __repr__(self) -> str:
        return f"CyclotomicCoeffs(t={self.t}, m={self.m})"
