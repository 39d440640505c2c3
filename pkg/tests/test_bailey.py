"""Bailey machinery: named pairs, lemma steps, limiting and conjugate forms."""

import random

import pytest

from qknot.bailey import (
    bailey_limit_identity,
    bailey_step,
    bailey_verify,
    beta_chain_closed,
    conjugate_identity_check,
    lovejoy_alpha_parts,
    make_named_pair,
    perturbed_pair,
    _exact,
)
from qknot.cyclotomic_coeffs import c_multisum
from qknot.laurent import XLaurent, poch_q
from qknot.series import Mono, QSeries, first_difference, qpochhammer


def test_unit_pair_definition():
    pair = make_named_pair("unit")
    assert pair.alpha(0, 10) == QSeries.one()
    assert pair.alpha(3, 10) == QSeries.zero()
    b2 = pair.beta(2, 20)
    expect = _exact(poch_q(1, 2) * poch_q(1, 2)).invert(20)
    assert first_difference(b2, expect) is None


def test_unit_pair_verifies():
    assert bailey_verify(make_named_pair("unit"), 8, 40).passed


def test_jones_pair_trefoil_beta_is_one():
    pair = make_named_pair("jones", t=1)
    for n in range(5):
        assert pair.beta(n, 25) == QSeries.one()


def test_jones_pairs_verify():
    assert bailey_verify(make_named_pair("jones", t=1), 6, 40).passed
    assert bailey_verify(make_named_pair("jones", t=2), 5, 40).passed
    assert bailey_verify(make_named_pair("jones", t=2, m=2), 5, 40).passed


def test_lovejoy_alpha_zero_case_and_decomposition():
    for t in (1, 2, 3):
        ell = t - 1
        prime, second = lovejoy_alpha_parts(t, ell, 0)
        assert prime.is_zero() and second == XLaurent({0: 1})
        pair = make_named_pair("lovejoy", t=t)
        for n in range(5):
            prime, second = lovejoy_alpha_parts(t, ell, n)
            combo = _exact(second - prime)
            assert first_difference(pair.alpha(n, 30), combo) is None


def test_lovejoy_pairs_verify():
    for t in (1, 2, 3):
        report = bailey_verify(make_named_pair("lovejoy", t=t), 6, 40)
        assert report.passed, (t, report.witness)


def test_star_pairs_verify():
    for t in (1, 2, 3):
        report = bailey_verify(make_named_pair("star", t=t), 6, 40)
        assert report.passed, (t, report.witness)


def test_star_parameter_convention():
    assert make_named_pair("star", t=1).label == "star(k=1,ell=0)"
    assert make_named_pair("star", t=3).label == "star(k=3,ell=1)"


def test_unknown_pair_rejected():
    with pytest.raises(ValueError):
        make_named_pair("nonesuch")


def test_step_limit_on_unit_pair_closed_form():
    stepped = bailey_step(make_named_pair("unit"), None, None)
    for n in (2, 3, 4):
        expect = QSeries.zero(1, 30)
        for k in range(n + 1):
            den = _exact(poch_q(1, n - k) * poch_q(1, k) * poch_q(1, k))
            expect = expect + den.invert(30 - k * k).mul_mono(Mono(1, 0, k * k))
        assert first_difference(stepped.beta(n, 30), expect) is None


def test_step_preserves_pair_property():
    base = make_named_pair("unit")
    assert bailey_verify(bailey_step(base, None, None), 6, 35).passed
    # nonpositive q-exponents keep the denominator products unit-headed
    rng = random.Random(7)
    for _ in range(3):
        b = Mono(rng.choice([1, -1]), rng.randint(-1, 1), rng.randint(-2, 0))
        c = Mono(rng.choice([1, -1]), rng.randint(-1, 1), rng.randint(-2, 0))
        stepped = bailey_step(base, b, c)
        report = bailey_verify(stepped, 4, 25)
        assert report.passed, (b, c, report.witness)


def test_step_rejects_degenerate_quotient():
    # aq/b collapsing onto a non-monomial constant cannot be inverted
    base = make_named_pair("unit")
    stepped = bailey_step(base, Mono(1, 1, 1), Mono(1, 0, -1))
    with pytest.raises(Exception):
        stepped.beta(2, 20)


def test_mixed_step_preserves_pair_property():
    stepped = bailey_step(make_named_pair("unit"), Mono(1, 1, 0), None)
    assert bailey_verify(stepped, 4, 25).passed


def test_double_step_of_star_matches_closed_chain():
    pair = make_named_pair("star", t=2)
    twice = bailey_step(bailey_step(pair, None, None), None, None)
    for n in range(5):
        d = first_difference(twice.beta(n, 30), beta_chain_closed(2, 0, n, 30))
        assert d is None, (n, d)


def test_pipeline_identity():
    # t-fold stepped seed minus staircase beta = -q^{t-n} C_{n-1}
    for t in (1, 2, 3):
        lov = make_named_pair("lovejoy", t=t)
        cur = make_named_pair("star", t=t)
        for _ in range(t):
            cur = bailey_step(cur, None, None)
        for n in range(0, 7):
            got = cur.beta(n, 30) - lov.beta(n, 30)
            want = (
                QSeries.zero(1, 30)
                if n == 0
                else _exact(-c_multisum(t, 1, n - 1).shift(t - n))
            )
            assert first_difference(got, want, through=30) is None, (t, n)


def test_vector_label_pipeline():
    # the m >= 2 variants close the same way: staircase tail t-m, seed tail
    # one shorter, and the difference is the vector-label coefficient
    for t, m in [(2, 2), (3, 2), (3, 3)]:
        lov = make_named_pair("lovejoy", t=t, ell=t - m)
        cur = make_named_pair("star", k=t, ell=max(t - m - 1, 0))
        for _ in range(t):
            cur = bailey_step(cur, None, None)
        for n in range(0, 6):
            got = cur.beta(n, 25) - lov.beta(n, 25)
            want = (
                QSeries.zero(1, 25)
                if n == 0
                else _exact(-c_multisum(t, m, n - 1).shift(t - n))
            )
            assert first_difference(got, want, through=25) is None, (t, m, n)


def test_limit_identity_cases():
    assert bailey_limit_identity(make_named_pair("unit"), None, None, 25).passed
    assert bailey_limit_identity(
        make_named_pair("jones", t=1), Mono(1, 1, 0), Mono(1, -1, 0), 25
    ).passed
    assert bailey_limit_identity(make_named_pair("lovejoy", t=2), None, None, 25).passed
    assert bailey_limit_identity(make_named_pair("unit"), Mono(1, 1, 0), None, 20).passed


def test_limit_identity_rejects_degenerate_quotient():
    with pytest.raises(ValueError):
        bailey_limit_identity(make_named_pair("unit"), Mono(1, 0, 1), None, 20)


def test_conjugate_identity():
    assert conjugate_identity_check(make_named_pair("unit", a_exp=1), 20).passed
    assert conjugate_identity_check(make_named_pair("andrews"), 20).passed


def test_conjugate_identity_rejects_a_squared():
    with pytest.raises(ValueError):
        conjugate_identity_check(make_named_pair("jones", t=1), 20)


def test_two_variable_identity_bruteforce():
    # the identity produced by the conjugate transform of the two-term pair,
    # both sides built from scratch
    window = 21
    lhs = QSeries.zero(1, window)
    for n in range(window + 1):
        lhs = lhs + (
            qpochhammer(Mono(1, 1, 0), n + 1)
            * qpochhammer(Mono(1, -1, 1), n)
        ).mul_mono(Mono(1, 0, n))
    lhs = lhs.with_trunc(window)
    acc: dict[int, dict[int, int]] = {}
    for n in range(0, 10):
        for r in range(0, window + 2):
            e = n * (3 * n + 5) // 2 + 2 * n * r + r * (r + 3) // 2
            if e >= window:
                continue
            sign = -1 if (n + r) % 2 else 1
            for xpow, sgn in ((-r, sign), (r + 1, -sign)):
                acc.setdefault(e, {}).setdefault(xpow, 0)
                acc[e][xpow] += sgn
    core = QSeries({e: XLaurent(xs) for e, xs in acc.items()}, 1, window)
    rhs = qpochhammer(Mono(1, 0, 1), None, trunc=window).invert() * core
    assert first_difference(lhs, rhs, through=window) is None


def test_corrupted_beta_fails_at_target():
    bad = perturbed_pair(make_named_pair("unit"), "beta", 3, Mono(1, 0, 1))
    report = bailey_verify(bad, 8, 40)
    assert not report.passed
    assert report.witness["n"] == 3


def test_corrupted_alpha_fails_conjugate():
    bad = perturbed_pair(make_named_pair("andrews"), "alpha", 2, Mono(1, 0, 2))
    report = conjugate_identity_check(bad, 20)
    assert not report.passed and report.witness is not None
