"""Colored Jones polynomials of torus knots and the Habiro expansion.

Quarter- and half-integer exponents arising in the closed formulas are kept
as scaled integers; every final division (by q^{N/2} - q^{-N/2} or 1 - q^N)
must be exact and must leave integer exponents only, otherwise the routines
raise instead of returning silently wrong values.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .laurent import XLaurent, poch_q, qbinomial

__all__ = [
    "habiro_inverse",
    "habiro_reconstruct",
    "jones_hyper",
    "jones_left",
    "jones_morton",
    "mirror",
]


def mirror(p: XLaurent) -> XLaurent:
    """Mirror image on invariants: substitute q -> 1/q."""
    return p.mirror()


def jones_morton(s: int, t2: int, n_color: int) -> XLaurent:
    """Colored Jones polynomial of the right-handed torus knot T(s, t2).

    Evaluates the classical theta-quotient formula in quarter-exponent
    arithmetic and divides exactly by q^{N/2} - q^{-N/2}.
    """
    if s < 1 or t2 < 1 or math.gcd(s, t2) != 1:
        raise ValueError("torus knot needs coprime positive winding numbers")
    if n_color < 1:
        raise ValueError("color must be a positive integer")
    n = n_color
    # exponents scaled by 4; j runs over (half-)integers as j2/2
    terms: dict[int, int] = {}
    pre = s * t2 * (1 - n * n)
    for j2 in range(-(n - 1), n, 2):
        e_sq = pre + s * t2 * j2 * j2
        for e_lin, sign in ((-2 * (s + t2) * j2 + 2, 1), (-2 * (s - t2) * j2 - 2, -1)):
            e = e_sq + e_lin
            terms[e] = terms.get(e, 0) + sign
    numerator = XLaurent(terms)
    denominator = XLaurent({2 * n: 1, -2 * n: -1})
    quotient = numerator.divexact(denominator)
    return quotient.descale(4)


def jones_hyper(t: int, n_color: int) -> XLaurent:
    """Colored Jones of T(2, 2t+1) from the nested q-hypergeometric sum.

    The sum terminates because (q^{1-N})_k vanishes for k >= N.
    """
    if t < 1 or n_color < 1:
        raise ValueError("need t >= 1 and a positive color")
    n = n_color
    total = XLaurent()

    def rec(i: int, k_next: int, running: XLaurent) -> None:
        # choose k_i <= k_{i+1}; i counts down from t-1 to 1
        nonlocal total
        if i == 0:
            total = total + running
            return
        for k in range(0, k_next + 1):
            b = qbinomial(k_next, k)
            factor = b.shift(k * (k + 1 - 2 * n))
            rec(i - 1, k, running * factor)

    for kt in range(0, n):
        head = poch_q(1 - n, kt).shift(-n * kt)
        rec(t - 1, kt, head)
    return total.shift(t * (1 - n))


def jones_left(t: int, m: int, n_color: int) -> XLaurent:
    """The vector-labelled left-handed torus knot invariant J_N^{(t,m)}.

    For m=1 this is the colored Jones polynomial of the mirror of T(2,2t+1).
    Assembled in half-exponent arithmetic, then divided exactly by 1 - q^N.
    """
    if t < 1 or not 1 <= m <= t:
        raise ValueError("need 1 <= m <= t")
    if n_color < 1:
        raise ValueError("color must be a positive integer")
    n = n_color
    terms: dict[int, int] = {}
    pre = -2 * t + n + (2 * t + 1) * n * n  # scaled by 2
    sign_n = -1 if n % 2 else 1
    for k in range(-n, n):
        e = pre - (2 * t + 1) * k * (k + 1) + 2 * m * k
        sign = sign_n * (-1 if k % 2 else 1)
        terms[e] = terms.get(e, 0) + sign
    numerator = XLaurent(terms)
    denominator = XLaurent({0: 1, 2 * n: -1})  # 1 - q^N at scale 2
    quotient = numerator.divexact(denominator)
    return quotient.descale(2)


def habiro_reconstruct(coeffs: "Callable[[int], XLaurent] | Sequence[XLaurent]", n_color: int) -> XLaurent:
    """Rebuild J_N from cyclotomic coefficients: sum of C_n (q^{1+N})_n (q^{1-N})_n.

    Exactly N terms contribute since (q^{1-N})_n vanishes for n >= N.
    """
    if n_color < 1:
        raise ValueError("color must be a positive integer")
    get = coeffs.__getitem__ if not callable(coeffs) else coeffs
    n = n_color
    total = XLaurent()
    for i in range(n):
        total = total + get(i) * poch_q(1 + n, i) * poch_q(1 - n, i)
    return total


def habiro_inverse(jones: Callable[[int], XLaurent], n: int) -> XLaurent:
    """Invert the cyclotomic expansion: C_n from the colors 1..n+1.

    All Pochhammer denominators are combined over the single denominator
    (q)_{2n+2} using Gaussian binomials; the final division must be exact.
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    total = XLaurent()
    for ell in range(1, n + 2):
        e = ell * (ell - 3)
        assert e % 2 == 0
        piece = (XLaurent.const(1) - XLaurent.term(ell)) * (
            XLaurent.const(1) - XLaurent.term(2 * ell)
        )
        piece = piece * qbinomial(2 * n + 2, n + 1 - ell) * jones(ell)
        piece = piece.shift(e // 2)
        if ell % 2:
            piece = -piece
        total = total + piece
    quotient = total.divexact(poch_q(1, 2 * n + 2))
    return (-quotient).shift(n + 1)
