"""Named identity checks, the acceptance suite, and the mutation harness.

Every check computes its two sides independently, compares them exactly,
and reports a witness at the first discrepancy.  The mutation harness
re-runs a check with one coefficient deliberately perturbed and demands
both a failure and a witness pointing at the injected spot: this guards
the whole suite against vacuous passes from mis-windowed truncation.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import bailey
from .cyclo import CycloNum, cyclo_eval
from .cyclotomic_coeffs import c_multisum, c_product
from .hecke import hecke_u1_double, hecke_u_series_x
from .jones import habiro_inverse, habiro_reconstruct, jones_hyper, jones_left, jones_morton, mirror
from .laurent import XLaurent
from .modular import bernoulli_lhs, bernoulli_rhs, theta_phi
from .report import CheckReport, diff_cyclo, diff_qseries, diff_xlaurent
from .series import Mono, QSeries
from .useries import eval_f_at_root, u_eval_at_root, u_series

__all__ = [
    "PROFILES",
    "Profile",
    "check_bailey_conjugate",
    "check_bailey_limit",
    "check_bailey_named",
    "check_bailey_pipeline",
    "check_bailey_step",
    "check_bernoulli_formula",
    "check_cyclotomic_coeffs",
    "check_duality",
    "check_golden_vectors",
    "check_habiro_roundtrip",
    "check_hecke_double",
    "check_hecke_match",
    "check_hecke_stability",
    "check_jones_consistency",
    "check_jones_f_agreement",
    "check_theta_product",
    "mutation_controls",
    "run_suite",
    "suite_tasks",
]

# Evidence item: (label, kind, lhs, rhs, through) with kind in
# {"cyclo", "xlaurent", "qseries"}; through bounds qseries comparisons.
Evidence = tuple[str, str, Any, Any, Any]


def _compare(item: Evidence) -> dict | None:
    label, kind, lhs, rhs, through = item
    if kind == "cyclo":
        return diff_cyclo(lhs, rhs, label)
    if kind == "xlaurent":
        return diff_xlaurent(lhs, rhs, label)
    return diff_qseries(lhs, rhs, through, label)


def _finish(
    check_id: str,
    params: dict,
    items: list[Evidence],
    started: float,
    value: str | None = None,
) -> CheckReport:
    witness = None
    for item in items:
        witness = _compare(item)
        if witness is not None:
            break
    return CheckReport(
        check_id,
        params,
        "pass" if witness is None else "fail",
        witness,
        (time.perf_counter() - started) * 1e3,
        value if witness is None else None,
    )


# ---------------------------------------------------------------------------
# evidence builders (shared by the checks and the mutation harness)
# ---------------------------------------------------------------------------


def _ev_duality(t: int, m: int, n_root: int) -> list[Evidence]:
    lhs = u_eval_at_root(t, m, n_root)
    rhs = eval_f_at_root(t, m, n_root, inverse=True)
    return [("U(-1; zeta_N) vs F(zeta_N^-1)", "cyclo", lhs, rhs, None)]


def _ev_jones_f_agreement(t: int, m: int, n_root: int) -> list[Evidence]:
    items: list[Evidence] = [
        (
            "J^(t,m) at zeta_N vs F at zeta_N^-1",
            "cyclo",
            cyclo_eval(jones_left(t, m, n_root), n_root, 1),
            eval_f_at_root(t, m, n_root, inverse=True),
            None,
        )
    ]
    if m == 1:
        items.append(
            (
                "right-handed J at zeta_N vs F at zeta_N",
                "cyclo",
                cyclo_eval(jones_hyper(t, n_root), n_root, 1),
                eval_f_at_root(t, 1, n_root, inverse=False),
                None,
            )
        )
    return items


def _ev_bernoulli(t: int, m: int, n_root: int) -> list[Evidence]:
    return [
        (
            "prefactored F value vs Bernoulli character sum",
            "cyclo",
            bernoulli_lhs(t, m, n_root),
            bernoulli_rhs(t, m, n_root),
            None,
        )
    ]


def _ev_hecke(t: int, m: int, order: int) -> list[Evidence]:
    w = order + 1
    return [
        (
            "indefinite-theta route vs nested-sum route",
            "qseries",
            hecke_u_series_x(t, m, w),
            u_series(t, m, w),
            w,
        )
    ]


def _ev_hecke_double(order: int) -> list[Evidence]:
    w = order + 1
    one_minus_x = QSeries({0: XLaurent({0: 1, 1: -1})})
    rhs = one_minus_x * u_series(1, 1, w).negate_x()
    return [("double sum vs (1-x) U_1(-x;q)", "qseries", hecke_u1_double(w), rhs, w)]


def _ev_cyclotomic(t: int, m: int, n_max: int) -> list[Evidence]:
    items: list[Evidence] = []
    for n in range(n_max + 1):
        items.append(
            (f"multisum vs product at n={n}", "xlaurent", c_multisum(t, m, n), c_product(t, m, n), None)
        )
    return items


def _ev_habiro(t: int, m: int, order: int) -> list[Evidence]:
    items: list[Evidence] = []
    family = lambda l: jones_left(t, m, l)
    coeffs = lambda i: c_product(t, m, i)
    for n in range(order + 1):
        items.append(
            (f"inverse transform at n={n}", "xlaurent", habiro_inverse(family, n), c_product(t, m, n), None)
        )
    for n_color in range(1, order + 1):
        items.append(
            (
                f"reconstruction at N={n_color}",
                "xlaurent",
                habiro_reconstruct(coeffs, n_color),
                jones_left(t, m, n_color),
                None,
            )
        )
    return items


def _ev_jones_consistency(t: int, n_color: int) -> list[Evidence]:
    morton = jones_morton(2, 2 * t + 1, n_color)
    return [
        ("nested sum vs theta quotient", "xlaurent", jones_hyper(t, n_color), morton, None),
        ("mirror of right vs left", "xlaurent", mirror(morton), jones_left(t, 1, n_color), None),
    ]


# Printed low-order expansions of the five U-series for t = 2, 3, frozen as
# golden vectors; window = one past the last displayed power.
GOLDEN_U: dict[tuple[int, int], tuple[int, dict[int, dict[int, int]]]] = {
    (2, 1): (5, {0: {0: 1}, 1: {0: 1}, 2: {1: 1, 0: 2, -1: 1}, 3: {1: 2, 0: 3, -1: 2}, 4: {1: 3, 0: 6, -1: 3}}),
    (2, 2): (4, {-1: {0: 1}, 0: {0: 2}, 1: {1: 1, 0: 2, -1: 1}, 2: {1: 2, 0: 4, -1: 2}, 3: {1: 4, 0: 6, -1: 4}}),
    (3, 1): (5, {0: {0: 1}, 1: {0: 1}, 2: {1: 1, 0: 2, -1: 1}, 3: {1: 2, 0: 4, -1: 2}, 4: {1: 4, 0: 7, -1: 4}}),
    (3, 2): (4, {-1: {0: 1}, 0: {0: 2}, 1: {1: 1, 0: 3, -1: 1}, 2: {1: 3, 0: 5, -1: 3}, 3: {1: 5, 0: 10, -1: 5}}),
    (3, 3): (3, {-2: {0: 1}, -1: {0: 2}, 0: {1: 1, 0: 3, -1: 1}, 1: {1: 2, 0: 5, -1: 2}, 2: {1: 5, 0: 8, -1: 5}}),
}


def _ev_golden(t: int, m: int) -> list[Evidence]:
    window, table = GOLDEN_U[(t, m)]
    expected = QSeries({e: XLaurent(xs) for e, xs in table.items()}, 1, window)
    return [("printed low-order expansion", "qseries", u_series(t, m, window), expected, window)]


def _ev_theta(t: int, m: int, trunc_scaled: int) -> list[Evidence]:
    scale = 8 * (2 * t + 1)
    through = Fraction(trunc_scaled, scale)
    return [
        (
            "character sum vs triple product",
            "qseries",
            theta_phi(t, m, trunc_scaled),
            theta_phi(t, m, trunc_scaled, product_side=True),
            through,
        )
    ]


_EVIDENCE: dict[str, Callable[..., list[Evidence]]] = {
    "duality": _ev_duality,
    "jones-agreement": _ev_jones_f_agreement,
    "bernoulli": _ev_bernoulli,
    "hecke": _ev_hecke,
    "hecke-double": _ev_hecke_double,
    "cyclotomic": _ev_cyclotomic,
    "habiro": _ev_habiro,
    "jones-consistency": _ev_jones_consistency,
    "golden": _ev_golden,
    "theta": _ev_theta,
}


# ---------------------------------------------------------------------------
# public checks
# ---------------------------------------------------------------------------


def check_duality(t: int, m: int, n_root: int) -> CheckReport:
    started = time.perf_counter()
    items = _ev_duality(t, m, n_root)
    return _finish(
        "duality", {"t": t, "m": m, "N": n_root}, items, started, items[0][2].value_str()
    )


def check_jones_f_agreement(t: int, m: int, n_root: int) -> CheckReport:
    started = time.perf_counter()
    items = _ev_jones_f_agreement(t, m, n_root)
    return _finish(
        "jones-agreement", {"t": t, "m": m, "N": n_root}, items, started,
        items[0][2].value_str(),
    )


def check_bernoulli_formula(t: int, m: int, n_root: int) -> CheckReport:
    started = time.perf_counter()
    items = _ev_bernoulli(t, m, n_root)
    return _finish(
        "bernoulli", {"t": t, "m": m, "N": n_root}, items, started, items[0][2].value_str()
    )


def check_hecke_match(t: int, m: int, order: int) -> CheckReport:
    started = time.perf_counter()
    return _finish("hecke", {"t": t, "m": m, "through": order}, _ev_hecke(t, m, order), started)


def check_hecke_double(order: int) -> CheckReport:
    started = time.perf_counter()
    return _finish("hecke-double", {"through": order}, _ev_hecke_double(order), started)


def check_hecke_stability(t: int, m: int, order: int, pad: int = 5) -> CheckReport:
    """Region enumeration is exhaustive: padding the caps changes nothing."""
    started = time.perf_counter()
    w = order + 1
    items: list[Evidence] = [
        (
            "enumeration radius stability",
            "qseries",
            hecke_u_series_x(t, m, w),
            hecke_u_series_x(t, m, w, pad=pad),
            w,
        )
    ]
    return _finish("hecke-stability", {"t": t, "m": m, "through": order, "pad": pad}, items, started)


def check_cyclotomic_coeffs(t: int, m: int, n_max: int) -> CheckReport:
    started = time.perf_counter()
    return _finish(
        "cyclotomic", {"t": t, "m": m, "n_max": n_max}, _ev_cyclotomic(t, m, n_max), started
    )


def check_habiro_roundtrip(t: int, m: int, order: int) -> CheckReport:
    started = time.perf_counter()
    return _finish("habiro", {"t": t, "m": m, "max": order}, _ev_habiro(t, m, order), started)


def check_jones_consistency(t: int, n_color: int) -> CheckReport:
    started = time.perf_counter()
    return _finish(
        "jones-consistency", {"t": t, "N": n_color}, _ev_jones_consistency(t, n_color), started
    )


def check_golden_vectors(t: int, m: int) -> CheckReport:
    started = time.perf_counter()
    return _finish("golden", {"t": t, "m": m}, _ev_golden(t, m), started)


def check_theta_product(t: int, m: int, trunc_scaled: int) -> CheckReport:
    started = time.perf_counter()
    return _finish(
        "theta", {"t": t, "m": m, "trunc_scaled": trunc_scaled},
        _ev_theta(t, m, trunc_scaled), started,
    )


def check_bailey_named(name: str, n_max: int, trunc: int, **params) -> CheckReport:
    return bailey.bailey_verify(bailey.make_named_pair(name, **params), n_max, trunc)


def check_bailey_step(name: str, n_max: int, trunc: int, steps: str = "inf", **params) -> CheckReport:
    pair = bailey.make_named_pair(name, **params)
    if steps == "inf":
        pair = bailey.bailey_step(pair, None, None)
    elif steps == "x":
        pair = bailey.bailey_step(pair, Mono(1, 1, 0), Mono(1, -1, 0))
    else:
        raise ValueError(f"unknown step recipe {steps!r}")
    return bailey.bailey_verify(pair, n_max, trunc)


def check_bailey_pipeline(t: int, n_max: int, trunc: int) -> CheckReport:
    """t-fold stepped seed minus staircase beta equals -q^{t-n} C_{n-1}."""
    started = time.perf_counter()
    lov = bailey.make_named_pair("lovejoy", t=t)
    cur = bailey.make_named_pair("star", t=t)
    for _ in range(t):
        cur = bailey.bailey_step(cur, None, None)
    items: list[Evidence] = []
    for n in range(n_max + 1):
        got = cur.beta(n, trunc) - lov.beta(n, trunc)
        if n == 0:
            want = QSeries.zero(1, trunc)
        else:
            want = QSeries.from_q_laurent(-c_multisum(t, 1, n - 1).shift(t - n), 1)
        items.append((f"beta''-beta at n={n}", "qseries", got, want, trunc))
    return _finish("bailey-pipeline", {"t": t, "n_max": n_max, "trunc": trunc}, items, started)


def check_bailey_limit(name: str, b_kind: str, trunc: int, **params) -> CheckReport:
    pair = bailey.make_named_pair(name, **params)
    kinds = {
        "inf-inf": (None, None),
        "x-invx": (Mono(1, 1, 0), Mono(1, -1, 0)),
    }
    b, c = kinds[b_kind]
    return bailey.bailey_limit_identity(pair, b, c, trunc)


def check_bailey_conjugate(name: str, trunc: int, **params) -> CheckReport:
    return bailey.conjugate_identity_check(bailey.make_named_pair(name, **params), trunc)


# ---------------------------------------------------------------------------
# mutation harness
# ---------------------------------------------------------------------------


def _perturb(value: Any, rng: random.Random) -> tuple[Any, dict]:
    """Add 1 to a single randomly chosen coefficient; return the locator."""
    if isinstance(value, CycloNum):
        idx = rng.randrange(len(value.coeffs))
        coeffs = list(value.coeffs)
        coeffs[idx] += 1
        return CycloNum(value.order, coeffs), {"basis_exp": idx}
    if isinstance(value, XLaurent):
        exps = sorted(value.coeffs) or [0]
        e = rng.choice(exps)
        return value + XLaurent.term(e), {"q_exp": e}
    if isinstance(value, QSeries):
        exps = sorted(value.terms)
        e = rng.choice(exps)
        x_exps = sorted(value.terms[e].coeffs) or [0]
        d = rng.choice(x_exps)
        bumped = value.terms[e] + XLaurent.term(d)
        terms = dict(value.terms)
        terms[e] = bumped
        return QSeries(terms, value.scale, value.trunc), {
            "q_exp": str(Fraction(e, value.scale)),
            "x_exp": d,
        }
    raise TypeError(f"cannot perturb {type(value)!r}")


# Representative parameters for each check family: small enough to be quick,
# large enough that a silent truncation bug would have room to hide.
_MUTATION_CATALOG: list[tuple[str, tuple]] = [
    ("duality", (2, 2, 5)),
    ("jones-agreement", (2, 1, 4)),
    ("bernoulli", (1, 1, 2)),
    ("hecke", (1, 1, 12)),
    ("hecke-double", (12,)),
    ("cyclotomic", (2, 2, 5)),
    ("habiro", (2, 1, 4)),
    ("jones-consistency", (2, 4)),
    ("golden", (2, 1)),
    ("theta", (1, 1, 240)),
]


def mutation_controls(seed: int = 0) -> list[CheckReport]:
    """Negative controls: every check family must fail under a single
    injected coefficient perturbation, with a witness at the injected spot."""
    reports: list[CheckReport] = []
    rng = random.Random(seed)
    for check_id, args in _MUTATION_CATALOG:
        started = time.perf_counter()
        items = _EVIDENCE[check_id](*args)
        label, kind, lhs, rhs, through = items[0]
        mutated, locator = _perturb(lhs, rng)
        witness = _compare((label, kind, mutated, rhs, through))
        ok = witness is not None and all(
            str(witness.get(k)) == str(v) for k, v in locator.items()
        )
        reports.append(
            CheckReport(
                f"mutation:{check_id}",
                {"args": list(args), "injected": locator},
                "pass" if ok else "fail",
                None if ok else {"expected_witness": locator, "got": witness},
                (time.perf_counter() - started) * 1e3,
            )
        )
    # Bailey negative controls run through the pair machinery itself.
    started = time.perf_counter()
    bad = bailey.perturbed_pair(bailey.make_named_pair("unit"), "beta", 3, Mono(1, 0, 1))
    rep = bailey.bailey_verify(bad, 8, 40)
    ok = rep.status == "fail" and rep.witness is not None and rep.witness.get("n") == 3
    reports.append(
        CheckReport(
            "mutation:bailey-verify",
            {"pair": "unit", "target": 3},
            "pass" if ok else "fail",
            None if ok else {"got": rep.witness},
            (time.perf_counter() - started) * 1e3,
        )
    )
    started = time.perf_counter()
    bad = bailey.perturbed_pair(bailey.make_named_pair("andrews"), "alpha", 2, Mono(1, 0, 2))
    rep = bailey.conjugate_identity_check(bad, 20)
    ok = rep.status == "fail" and rep.witness is not None
    reports.append(
        CheckReport(
            "mutation:bailey-conjugate",
            {"pair": "andrews", "target": 2},
            "pass" if ok else "fail",
            None if ok else {"got": rep.witness},
            (time.perf_counter() - started) * 1e3,
        )
    )
    return reports


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    name: str
    t_max: int = 3
    t_max_coeffs: int = 4
    n_duality: int = 10
    n_agreement: int = 10
    n_jones: int = 8
    n_coeffs: int = 10
    habiro_max: int = 8
    hecke_order: int = 20
    double_order: int = 25
    bernoulli_t: int = 2
    bernoulli_n: int = 4
    bailey_n: int = 8
    bailey_window: int = 40
    pipeline_n: int = 6
    conjugate_order: int = 20
    theta_scaled: int = 600
    time_budget_s: float = 420.0


PROFILES: dict[str, Profile] = {
    "desk": Profile("desk"),
    "quick": Profile(
        "quick", t_max=2, t_max_coeffs=2, n_duality=5, n_agreement=5, n_jones=4,
        n_coeffs=4, habiro_max=4, hecke_order=10, double_order=12, bernoulli_t=1,
        bernoulli_n=2, bailey_n=4, bailey_window=25, pipeline_n=4,
        conjugate_order=12, theta_scaled=240, time_budget_s=120.0,
    ),
}

_DISPATCH: dict[str, Callable[..., CheckReport]] = {
    "duality": check_duality,
    "jones-agreement": check_jones_f_agreement,
    "bernoulli": check_bernoulli_formula,
    "hecke": check_hecke_match,
    "hecke-double": check_hecke_double,
    "hecke-stability": check_hecke_stability,
    "cyclotomic": check_cyclotomic_coeffs,
    "habiro": check_habiro_roundtrip,
    "jones-consistency": check_jones_consistency,
    "golden": check_golden_vectors,
    "theta": check_theta_product,
    "bailey-verify": check_bailey_named,
    "bailey-step": check_bailey_step,
    "bailey-pipeline": check_bailey_pipeline,
    "bailey-limit": check_bailey_limit,
    "bailey-conjugate": check_bailey_conjugate,
}


def _run_task(task: tuple[str, dict]) -> CheckReport:
    name, kwargs = task
    return _DISPATCH[name](**kwargs)


def suite_tasks(profile: Profile) -> list[tuple[str, dict]]:
    """The full acceptance matrix for a profile, as (check, kwargs) pairs."""
    tasks: list[tuple[str, dict]] = []
    tm = [(t, m) for t in range(1, profile.t_max + 1) for m in range(1, t + 1)]
    for t, m in GOLDEN_U:
        if t <= profile.t_max:
            tasks.append(("golden", {"t": t, "m": m}))
    for t, m in tm:
        for n in range(1, profile.n_duality + 1):
            tasks.append(("duality", {"t": t, "m": m, "n_root": n}))
        for n in range(1, profile.n_agreement + 1):
            tasks.append(("jones-agreement", {"t": t, "m": m, "n_root": n}))
        tasks.append(("hecke", {"t": t, "m": m, "order": profile.hecke_order}))
        tasks.append(("habiro", {"t": t, "m": m, "order": profile.habiro_max}))
        tasks.append(("theta", {"t": t, "m": m, "trunc_scaled": profile.theta_scaled}))
    tasks.append(("hecke-double", {"order": profile.double_order}))
    tasks.append(("hecke-stability", {"t": 2, "m": 2, "order": min(profile.hecke_order, 15)}))
    for t in range(1, profile.t_max_coeffs + 1):
        for m in range(1, t + 1):
            tasks.append(("cyclotomic", {"t": t, "m": m, "n_max": profile.n_coeffs}))
        for n in range(1, profile.n_jones + 1):
            tasks.append(("jones-consistency", {"t": t, "n_color": n}))
    for t in range(1, profile.bernoulli_t + 1):
        for m in range(1, t + 1):
            for n in range(1, profile.bernoulli_n + 1):
                tasks.append(("bernoulli", {"t": t, "m": m, "n_root": n}))
    nb, wb = profile.bailey_n, profile.bailey_window
    tasks.append(("bailey-verify", {"name": "unit", "n_max": nb, "trunc": wb}))
    tasks.append(("bailey-verify", {"name": "andrews", "n_max": nb, "trunc": wb}))
    for t in range(1, profile.t_max + 1):
        tasks.append(("bailey-verify", {"name": "jones", "n_max": min(nb, 6), "trunc": wb, "t": t}))
        tasks.append(("bailey-verify", {"name": "lovejoy", "n_max": min(nb, 6), "trunc": wb, "t": t}))
        tasks.append(("bailey-verify", {"name": "star", "n_max": min(nb, 6), "trunc": wb, "t": t}))
        tasks.append(("bailey-pipeline", {"t": t, "n_max": profile.pipeline_n, "trunc": 30}))
    tasks.append(("bailey-step", {"name": "unit", "n_max": 6, "trunc": 35}))
    tasks.append(("bailey-step", {"name": "jones", "t": 1, "n_max": 5, "trunc": 30, "steps": "x"}))
    tasks.append(("bailey-limit", {"name": "unit", "b_kind": "inf-inf", "trunc": 25}))
    tasks.append(("bailey-limit", {"name": "jones", "t": 1, "b_kind": "x-invx", "trunc": 25}))
    tasks.append(("bailey-limit", {"name": "lovejoy", "t": 2, "b_kind": "inf-inf", "trunc": 25}))
    tasks.append(("bailey-conjugate", {"name": "unit", "a_exp": 1, "trunc": profile.conjugate_order}))
    tasks.append(("bailey-conjugate", {"name": "andrews", "trunc": profile.conjugate_order}))
    return tasks


def run_suite(profile: str = "desk", parallelism: int = 1, seed: int = 0) -> list[CheckReport]:
    """Run the whole verification matrix; reports sorted by check id/params."""
    prof = PROFILES.get(profile)
    if prof is None:
        raise ValueError(f"unknown profile {profile!r}; know {sorted(PROFILES)}")
    tasks = suite_tasks(prof)
    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(task) for task in tasks]
    reports.extend(mutation_controls(seed))
    reports.sort(key=lambda r: (r.check_id, sorted(map(str, r.params.items()))))
    return reports
