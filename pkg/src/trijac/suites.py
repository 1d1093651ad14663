"""Named verification suites behind the command line harness.

Each runner executes one acceptance gate at its pinned defaults, drawing any
free parameters deterministically from the configured seed.  Runners return
the verification report plus an echo of the fully resolved configuration, so
identical configurations reproduce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .askey_wilson import (
    DEFAULT_LIMIT_PARAMS,
    LimitSchedule,
    QPoint,
    aw_poly,
    aw_value,
    check_q_limits,
    connection_matrices_inverse,
    verify_connection,
    verify_limit_identities,
)
from .biforms import run_biform_suite, run_weighted_legendre_suite
from .flows import (
    build_PH,
    build_QH,
    exp_nilpotent,
    generator_matrices,
    p00_inverse_closed_form,
    verify_conjugation,
)
from .jacobi import ParameterPoint, classify_degenerate, degenerate_transform, even_odd_form, gegenbauer, jacobi
from .poly import Poly
from .reporting import VerificationReport, poly_counterexample
from .sampling import Sampler, seeded_rng
from .series import Series, gegenbauer_generating, jacobi_generating
from .triangles import (
    IdentitySpec,
    SingularParameterError,
    build_L,
    build_M,
    build_P,
    identity_admissible,
    identity_window,
    is_identity,
    run_convolution_suite,
    tri_add,
    tri_inverse,
    tri_mul,
    tri_scale,
)

SUITE_NAMES = (
    "theorem18",
    "convolution",
    "generating",
    "degeneracy",
    "groups",
    "biform",
    "koekoek",
    "aw_connection",
    "aw_limit",
    "all",
)


@dataclass(frozen=True)
class SuiteConfig:
    """Harness configuration; None fields resolve to per-suite defaults."""

    suite: str = "all"
    n_max: int | None = None
    window: int | None = None
    base_index: int | None = None
    samples: int | None = None
    seed: int = 42
    series_order: int = 12
    format: str = "text"
    limit_ratio: Fraction = Fraction(3, 4)
    limit_tol: Fraction = Fraction(1, 10000)
    rational_bound: int = 9


def _sampler(cfg: SuiteConfig, label: str, samples: int) -> Sampler:
    sampler = Sampler(seeded_rng(cfg.seed, label), bound=cfg.rational_bound)
    sampler.set_budget(samples)
    return sampler


def run_theorem18(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 25
    size = cfg.window if cfg.window is not None else 12
    bases = [cfg.base_index] if cfg.base_index is not None else [-6, 0, 3]
    sampler = _sampler(cfg, "theorem18", samples)
    report = VerificationReport("theorem18")

    # integer alpha values that put n + alpha = 0 inside every base window
    lo, hi = max(bases), min(b + size - 1 for b in bases)
    singular_values = list(range(lo, hi + 1)) or list(range(bases[0], bases[0] + size))
    singular_draws = 0

    for idx in range(samples):
        if idx < 5:
            alpha = Fraction(-sampler.rng.choice(singular_values))
            beta = sampler.rational()
        else:
            alpha, beta = sampler.rational(), sampler.rational()
        point = ParameterPoint(alpha, beta)
        if alpha.denominator == 1 and any(
            b <= -alpha <= b + size - 1 for b in bases
        ):
            singular_draws += 1
        params = {"alpha": alpha, "beta": beta}
        for n0 in bases:
            l = build_L(point, n0, size)
            m = build_M(point, n0, size)
            report.check(
                f"sample {idx}, base {n0}: L*M = I",
                is_identity(tri_mul(l, m)),
                {**params, "n0": n0},
            )
            report.check(
                f"sample {idx}, base {n0}: M*L = I",
                is_identity(tri_mul(m, l)),
                {**params, "n0": n0},
            )
    report.check(
        "singular-branch coverage (>= 5 draws)",
        singular_draws >= 5,
        {"count": singular_draws},
    )
    echo = {
        "samples": samples,
        "window": size,
        "bases": bases,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


CONVOLUTION_IDENTITIES = (
    "EQ12",
    "EQ14",
    "EQ40",
    "EQ41",
    "EQ42",
    "EQ5",
    "EQ33",
    "EQ45",
    "EQ30",
    "EQ31",
    "EQ32",
    "EQ34",
    "EQ43",
    "EQ44",
)


def _draw_identity_params(
    sampler: Sampler, identity: str, n_max: int, mu: Fraction | None = None
) -> dict[str, Fraction]:
    def draw() -> dict[str, Fraction]:
        if identity in ("EQ12", "EQ14", "EQ45"):
            return {
                "alpha1": sampler.rational(),
                "beta1": sampler.rational(),
                "alpha2": sampler.rational(),
                "beta2": sampler.rational(),
            }
        if identity in ("EQ40", "EQ41", "EQ42", "EQ31", "EQ32", "EQ33"):
            return {"alpha": sampler.rational(), "beta": sampler.rational()}
        if identity in ("EQ5", "EQ30"):
            return {"alpha": sampler.rational()}
        if identity == "EQ34":
            assert mu is not None
            if mu == -1:
                # the coupled case that collapses onto the equal-parameter pair
                alpha = sampler.rational()
                return {"mu": mu, "nu": -alpha - Fraction(1, 2)}
            return {"mu": mu, "nu": sampler.rational(nonzero=True)}
        if identity == "EQ43":
            return {"nu": sampler.rational(nonzero=True)}
        if identity == "EQ44":
            return {"nu": sampler.rational(), "lam": sampler.rational()}
        raise ValueError(identity)

    return sampler.admissible(
        draw, lambda p: identity_admissible(identity, p, n_max)
    )


def run_convolution(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 10
    n_max = cfg.n_max if cfg.n_max is not None else 10
    sampler = _sampler(cfg, "convolution", samples)
    report = VerificationReport("convolution")
    for identity in CONVOLUTION_IDENTITIES:
        mu_values = (Fraction(-1), Fraction(0), Fraction(1, 2)) if identity == "EQ34" else (None,)
        for mu in mu_values:
            for idx in range(samples):
                params = _draw_identity_params(sampler, identity, n_max, mu)
                result = run_convolution_suite(IdentitySpec(identity, params, n_max))
                label = identity if mu is None else f"{identity}(mu={mu})"
                for case in result.cases:
                    case.case_id = f"{label}, sample {idx}"
                report.extend(result)
    echo = {
        "samples": samples,
        "n_max": n_max,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


def run_generating(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 10
    order = cfg.series_order
    sampler = _sampler(cfg, "generating", samples)
    report = VerificationReport("generating")

    def check_jacobi(idx: int, alpha: Fraction, beta: Fraction) -> None:
        series = jacobi_generating(alpha, beta, order)
        params = {"alpha": alpha, "beta": beta, "W": order}
        for n in range(order + 1):
            expected = jacobi(n, alpha, beta)
            if series.coefficient(n) != expected:
                report.add_fail(
                    f"two-parameter generating series, sample {idx}",
                    params,
                    poly_counterexample(n, series.coefficient(n), expected),
                )
                return
        report.add_pass(f"two-parameter generating series, sample {idx}", params)

    def check_gegenbauer(label: str, lam: Fraction) -> None:
        series = gegenbauer_generating(lam, order)
        params = {"lambda": lam, "W": order}
        for n in range(order + 1):
            expected = gegenbauer(n, lam)
            if series.coefficient(n) != expected:
                report.add_fail(
                    f"symmetric generating series, {label}",
                    params,
                    poly_counterexample(n, series.coefficient(n), expected),
                )
                return
        report.add_pass(f"symmetric generating series, {label}", params)

    for idx in range(samples):
        check_jacobi(idx, sampler.rational(), sampler.rational())
    for label, lam in (
        ("lambda=0", Fraction(0)),
        ("lambda=1/2", Fraction(1, 2)),
        ("lambda=-1/2", Fraction(-1, 2)),
    ):
        check_gegenbauer(label, lam)
    for idx in range(samples):
        check_gegenbauer(f"sample {idx}", sampler.rational())

    for idx in range(samples):
        nu, lam = sampler.rational(), sampler.rational()
        prod = gegenbauer_generating(nu, order) * gegenbauer_generating(lam, order)
        report.check(
            f"series convolution, sample {idx}",
            prod == gegenbauer_generating(nu + lam, order),
            {"nu": nu, "lambda": lam},
        )
        nu = sampler.rational(nonzero=True)
        prod = gegenbauer_generating(nu, order) * gegenbauer_generating(-nu, order)
        report.check(
            f"series cancellation, sample {idx}",
            prod == Series.one(order),
            {"nu": nu},
        )
    echo = {
        "samples": samples,
        "series_order": order,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


def run_degeneracy(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    n_hi = cfg.n_max if cfg.n_max is not None else 12
    report = VerificationReport("degeneracy")
    grid = range(-6, 7)
    for a in grid:
        for b in grid:
            point = ParameterPoint(a, b)
            params = {"alpha": a, "beta": b}
            witness = None
            for n in range(1, n_hi + 1):
                verdict = classify_degenerate(n, point)
                poly = jacobi(n, Fraction(a), Fraction(b))
                if verdict.identically_zero != poly.is_zero:
                    witness = {"n": n, "field": "identically_zero"}
                    break
                if not poly.is_zero:
                    if verdict.true_degree != poly.degree:
                        witness = {"n": n, "field": "true_degree"}
                        break
                    if verdict.zero_mult_at_plus1 != poly.root_multiplicity(1):
                        witness = {"n": n, "field": "zero_mult_at_plus1"}
                        break
                    if verdict.zero_mult_at_minus1 != poly.root_multiplicity(-1):
                        witness = {"n": n, "field": "zero_mult_at_minus1"}
                        break
                bad_case = None
                for case in sorted(verdict.applicable_cases):
                    if case == "65":
                        continue
                    if degenerate_transform(n, point, case) != poly:
                        bad_case = case
                        break
                if bad_case is not None:
                    witness = {"n": n, "field": f"transform {bad_case}"}
                    break
            report.check(f"grid alpha={a}, beta={b}", witness is None, params, witness)

    for a in grid:
        witness = None
        for n in range(1, n_hi + 1):
            poly = even_odd_form(n, Fraction(a))
            if poly != jacobi(n, Fraction(a), Fraction(a)):
                witness = {"n": n, "field": "parity-split sum"}
                break
            if not poly.is_zero:
                if n % 2 == 0 and poly(0) == 0:
                    witness = {"n": n, "field": "nonzero constant term"}
                    break
                if n % 2 == 1 and poly.root_multiplicity(0) != 1:
                    witness = {"n": n, "field": "simple zero at the origin"}
                    break
        report.check(f"parity split, alpha={a}", witness is None, {"alpha": a}, witness)

    echo = {"grid": "[-6,6]^2", "n_max": n_hi, "seed": cfg.seed, "rejected_draws": 0}
    return report, echo


def run_groups(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 10
    size = cfg.window if cfg.window is not None else 10
    n0 = cfg.base_index if cfg.base_index is not None else 0
    sampler = _sampler(cfg, "groups", samples)
    report = VerificationReport("groups")

    inv = tri_inverse(build_P(ParameterPoint(0, 0), n0, size))
    report.check(
        "Toeplitz inverse closed form", inv == p00_inverse_closed_form(n0, size), {}
    )
    report.check(
        "Toeplitz inverse offsets are the lambda=-1/2 family",
        all(
            inv.rows[d][0] == gegenbauer(d, Fraction(-1, 2)) for d in range(size)
        ),
        {},
    )
    gens = generator_matrices(n0, size)
    for left, right, label in (
        (gens.a_p, gens.b_p, "P-flow generators"),
        (gens.a_q, gens.b_q, "Q-flow generators"),
    ):
        report.check(
            f"{label} commute", tri_mul(left, right) == tri_mul(right, left), {}
        )

    for idx in range(samples):
        p1 = ParameterPoint(sampler.rational(), sampler.rational())
        p2 = ParameterPoint(sampler.rational(), sampler.rational())
        total = ParameterPoint(p1.alpha + p2.alpha, p1.beta + p2.beta)
        params = {
            "alpha1": p1.alpha,
            "beta1": p1.beta,
            "alpha2": p2.alpha,
            "beta2": p2.beta,
        }
        report.check(
            f"sample {idx}: P-flow group law",
            tri_mul(build_PH(p1, n0, size), build_PH(p2, n0, size))
            == build_PH(total, n0, size),
            params,
        )
        report.check(
            f"sample {idx}: Q-flow group law",
            tri_mul(build_QH(p1, n0, size), build_QH(p2, n0, size))
            == build_QH(total, n0, size),
            params,
        )
        report.check(
            f"sample {idx}: Q-flow inverse element",
            is_identity(
                tri_mul(build_QH(p1, n0, size), build_QH(p1.negated(), n0, size))
            ),
            params,
        )
        exp_q = exp_nilpotent(
            tri_add(tri_scale(gens.a_q, p1.alpha), tri_scale(gens.b_q, p1.beta))
        )
        report.check(
            f"sample {idx}: Q-flow exponential",
            exp_q == build_QH(p1, n0, size),
            params,
        )
        exp_p = exp_nilpotent(
            tri_add(tri_scale(gens.a_p, p1.alpha), tri_scale(gens.b_p, p1.beta))
        )
        report.check(
            f"sample {idx}: P-flow exponential",
            exp_p == build_PH(p1, n0, size),
            params,
        )
        conj = verify_conjugation(p1, n0, size)
        for case in conj.cases:
            case.case_id = f"sample {idx}: {case.case_id}"
        report.extend(conj)
    echo = {
        "samples": samples,
        "window": size,
        "base_index": n0,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


def run_biform(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 10
    size = cfg.window if cfg.window is not None else 11
    if size % 2 == 0:
        raise ValueError("biform windows must be odd so the flip is total")
    n0 = -(size - 1) // 2
    sampler = _sampler(cfg, "biform", samples)
    report = VerificationReport("biform")
    for idx in range(samples):
        point = ParameterPoint(sampler.rational(), sampler.rational())
        result = run_biform_suite(point, n0, size)
        for case in result.cases:
            case.case_id = f"sample {idx}: {case.case_id}"
        report.extend(result)
    legendre_result = run_weighted_legendre_suite(n0, size)
    report.extend(legendre_result)
    echo = {
        "samples": samples,
        "window": size,
        "base_index": n0,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


def run_koekoek(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 10
    n_max = cfg.n_max if cfg.n_max is not None else 10
    size = cfg.window if cfg.window is not None else 10
    sampler = _sampler(cfg, "koekoek", samples)
    report = VerificationReport("koekoek")
    for idx in range(samples):

        def build() -> VerificationReport:
            alpha, beta = sampler.rational(), sampler.rational()
            y = sampler.rational()
            return verify_limit_identities(alpha, beta, y, n_max, window=size)

        result = sampler.attempt(build, SingularParameterError)
        for case in result.cases:
            case.case_id = f"sample {idx}: {case.case_id}"
        report.extend(result)
    echo = {
        "samples": samples,
        "n_max": n_max,
        "window": size,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


def run_aw_connection(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    samples = cfg.samples if cfg.samples is not None else 5
    n_max = cfg.n_max if cfg.n_max is not None else 5
    sampler = _sampler(cfg, "aw_connection", samples)
    report = VerificationReport("aw_connection")
    for idx in range(samples):

        def build() -> QPoint:
            q = sampler.positive_unit()
            a = tuple(sampler.rational(nonzero=True) for _ in range(4))
            b = tuple(sampler.rational(nonzero=True) for _ in range(3))
            return QPoint(q, a, b, Fraction(1), n_max=n_max)

        base_point = sampler.attempt(build, SingularParameterError)
        z_values: list[Fraction] = []
        while len(z_values) < 6:
            z = sampler.rational(nonzero=True)
            if z not in z_values:
                z_values.append(z)
        params = {"q": base_point.q, "a": base_point.a, "b": base_point.b}
        for z in z_values:
            pt = QPoint(base_point.q, base_point.a, base_point.b, z, n_max=n_max)
            result = verify_connection(n_max, pt)
            ok = result.ok
            failure = result.first_failure()
            report.check(
                f"sample {idx}: connection pair at z={z}",
                ok,
                {**params, "z": z},
                failure.counterexample if failure else None,
            )
        pt = QPoint(base_point.q, base_point.a, base_point.b, z_values[0], n_max=n_max)
        values = [aw_poly(n, pt, "a") for n in range(n_max + 1)]
        ok = True
        for _ in range(5):
            perm = list(pt.a)
            sampler.rng.shuffle(perm)
            # the validated pairwise products are permutation invariant, so
            # every permutation is evaluable without revalidation
            if any(
                aw_value(n, tuple(perm), pt.q, pt.z) != values[n]
                for n in range(n_max + 1)
            ):
                ok = False
                break
        report.check(f"sample {idx}: parameter permutation invariance", ok, params)
        report.check(
            f"sample {idx}: coefficient triangles mutually inverse",
            connection_matrices_inverse(n_max, pt),
            params,
        )
    echo = {
        "samples": samples,
        "n_max": n_max,
        "seed": cfg.seed,
        "rejected_draws": sampler.rejections,
    }
    return report, echo


AW_LIMIT_CASES = (
    (Fraction(0), Fraction(0), 1),
    (Fraction(1), Fraction(2), 1),
    (Fraction(1, 2), Fraction(0), 2),
)


def run_aw_limit(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    n_max = cfg.n_max if cfg.n_max is not None else 3
    report = VerificationReport("aw_limit")
    for alpha, beta, scale in AW_LIMIT_CASES:
        schedule = LimitSchedule(alpha, beta, scale)
        result = check_q_limits(
            schedule,
            DEFAULT_LIMIT_PARAMS,
            n_max=n_max,
            ratio=cfg.limit_ratio,
            tol=cfg.limit_tol,
        )
        label = f"alpha={alpha}, beta={beta}, D={scale}"
        for case in result.cases:
            params = {
                "schedule": label,
                "steps": ",".join(str(t) for t in schedule.steps),
                "final_error": case.error_strings()[-1],
            }
            if case.status == "PASS":
                report.add_pass(f"{label}: {case.case_id}", params)
            else:
                report.add_fail(
                    f"{label}: {case.case_id}",
                    params,
                    {
                        "errors": case.error_strings(),
                        "ratio_bound": str(cfg.limit_ratio),
                        "tolerance": str(cfg.limit_tol),
                    },
                )
    control_schedule = LimitSchedule(Fraction(0), Fraction(0), 1)
    control = check_q_limits(
        control_schedule,
        DEFAULT_LIMIT_PARAMS,
        n_max=min(n_max, 2),
        ratio=cfg.limit_ratio,
        tol=Fraction(1),
        corrupt_targets=True,
    )
    report.check(
        "negative control rejects corrupted targets",
        not control.ok,
        {"offset": "1"},
    )
    echo = {
        "n_max": n_max,
        "steps": "3,4,5,6,7,8",
        "limit_ratio": str(cfg.limit_ratio),
        "limit_tol": str(cfg.limit_tol),
        "seed": cfg.seed,
        "rejected_draws": 0,
    }
    return report, echo


RUNNERS: dict[str, Callable[[SuiteConfig], tuple[VerificationReport, dict]]] = {
    "theorem18": run_theorem18,
    "convolution": run_convolution,
    "generating": run_generating,
    "degeneracy": run_degeneracy,
    "groups": run_groups,
    "biform": run_biform,
    "koekoek": run_koekoek,
    "aw_connection": run_aw_connection,
    "aw_limit": run_aw_limit,
}


def run_suite(cfg: SuiteConfig) -> tuple[VerificationReport, dict]:
    if cfg.suite == "all":
        report = VerificationReport("all")
        echo: dict = {}
        for name in SUITE_NAMES[:-1]:
            sub_report, sub_echo = RUNNERS[name](cfg)
            for case in sub_report.cases:
                case.case_id = f"{name}/{case.case_id}"
            report.extend(sub_report)
            echo[name] = sub_echo
        return report, echo
    if cfg.suite not in RUNNERS:
        raise ValueError(f"unknown suite {cfg.suite!r}")
    return RUNNERS[cfg.suite](cfg)
