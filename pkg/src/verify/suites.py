"""검증 스위트

각 검사 함수는 (seed, scale) 을 받아 CheckResult 를 돌려준다. scale 은
표본 수 배율이며 테스트에서는 작게 준다.
"""

import logging
import time
from functools import lru_cache
from typing import Callable

import numpy as np

from config import DEFAULT_N_DIRS, DIMENSIONS, ORACLE_MARGIN, TAU_ALG, TAU_SING
from ..algebra.ambient import AlgebraElement, AdSPoint, mat_exp, q_form, random_point, validate_element
from ..algebra.lie import (
    RootLabel,
    algebra_basis,
    all_labels,
    cone_generator,
    eigen_residual,
    generator,
    involution,
    iwasawa_basis,
    root_vector,
    stabilizer_basis,
    z_multiplicity,
)
from ..causal.classifier import CausalClass, classify, classify_representative
from ..causal.escape import CapKind, EscapeSet, branch_data, branch_roots
from ..causal.sampler import SampledClass, classify_sampled, comparison_band, oracle_agrees, tags_agree
from ..errors import InvalidRootLabelError
from ..horizon.conjecture import run_conjecture
from ..horizon.lateral import (
    BRANCHES,
    h3_parametrize,
    h4_generate,
    horizon_residual,
    lateral_action,
    lateral_from_matrix,
    lateral_inverse,
    orbit_two_param,
)
from ..models.schema import CausalTag, CheckResult, SuiteReport
from ..spacetime.ads import (
    SL2Matrix,
    iota,
    lemma_representative,
    project,
    psi,
    psi_inv,
    reduce_y,
    representative,
    reproject,
    special_representative,
)

logger = logging.getLogger(__name__)

# 기준 표본 수 (scale = 1)
SUITE_COUNTS = {
    "cone": 100,
    "singular_points": 100,
    "singular_elements": 50,
    "h3": 1000,
    "exclusion3": 1000,
    "oracle": 500,
    "rep_points": 100,
    "rep_seeds": 10,
    "psi": 1000,
    "orbit": 200,
    "openness_points": 20,
    "openness_perturbations": 50,
    "horizon_free": 200,
    "h4": 1000,
    "exclusion4": 10_000,
    "scan4": 100_000,
    "a_invariance": 200,
    "inclusion": 500,
    "special": 200,
    "lemma_points": 200,
    "lemma_roots": 100,
    "roundtrip": 500,
    "lateral_matrix": 200,
    "quadratic": 1000,
    "conjecture": 10_000,
}

GAP_TOLERANCE = 1e-6
EXCLUSION_MARGIN = 1e-3
SCAN_HORIZON_TOLERANCE = 1e-6
ROUNDTRIP_TOLERANCE = 1e-9
ROOT_TOLERANCE = 1e-12
QUADRATIC_TOLERANCE = 1e-9
MATRIX_TOLERANCE = 1e-11
OPENNESS_MARGIN = 1e-2
PERTURBATION_SIZE = 1e-4

CheckFn = Callable[[int, float], CheckResult]


def _count(key: str, scale: float) -> int:
    return max(1, int(round(SUITE_COUNTS[key] * scale)))


def _rng(seed: int, salt: int) -> np.random.Generator:
    return np.random.default_rng([seed, salt])


def _point_seeds(rng: np.random.Generator, count: int) -> list[int]:
    return [int(s) for s in rng.integers(0, 2 ** 31, size=count)]


def _result(name: str, samples: int, residual: float | None = None, tolerance: float | None = None,
            violations: int = 0, detail: str = "", informational: bool = False) -> CheckResult:
    passed = violations == 0 and (residual is None or tolerance is None or residual <= tolerance)
    logger.debug("%s: samples=%d residual=%s violations=%d", name, samples, residual, violations)
    return CheckResult(
        name=name,
        passed=passed,
        samples=samples,
        residual=residual,
        tolerance=tolerance,
        violations=violations,
        detail=detail,
        informational=informational,
    )


def _scaled(value: float, coords: np.ndarray) -> float:
    return value / max(1.0, float(np.max(np.abs(coords))) ** 2)


def _unit(rng: np.random.Generator, m: int) -> np.ndarray:
    w = rng.normal(size=m)
    return w / np.linalg.norm(w)


def _proper_pair(escape: EscapeSet) -> bool:
    return escape.cap_plus.kind == CapKind.PROPER and escape.cap_minus.kind == CapKind.PROPER


# ---------------------------------------------------------------- algebra


def check_generators_compatible(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 1)
    residual, samples = 0.0, 0
    for l in DIMENSIONS:
        elements = [generator("J1", l), generator("J2", l)] + algebra_basis(l)
        for label in all_labels(l):
            copies = z_multiplicity(l) if 0 in (label.alpha, label.beta) else 1
            elements += [root_vector(label, l, k) for k in range(copies)]
        elements += [cone_generator(_unit(rng, l - 1)) for _ in range(_count("cone", scale))]
        for x in elements:
            residual = max(residual, validate_element(x.matrix, "algebra").residual)
        samples += len(elements)
    return _result("generators_compatible", samples, residual, TAU_ALG)


def check_cartan_commute(seed: int, scale: float) -> CheckResult:
    residual = 0.0
    for l in DIMENSIONS:
        bracket = generator("J1", l).bracket(generator("J2", l))
        residual = max(residual, float(np.max(np.abs(bracket.matrix))))
    return _result("cartan_commute", len(DIMENSIONS), residual, TAU_ALG)


def check_root_eigenvalues(seed: int, scale: float) -> CheckResult:
    residual, samples, violations = 0.0, 0, 0
    for l in DIMENSIONS:
        for label in all_labels(l):
            copies = z_multiplicity(l) if 0 in (label.alpha, label.beta) else 1
            for k in range(copies):
                residual = max(residual, eigen_residual(label, root_vector(label, l, k), l))
                samples += 1
    for label in (RootLabel(0, 1), RootLabel(1, 0), RootLabel(0, -1), RootLabel(-1, 0)):
        try:
            root_vector(label, 3)
            violations += 1
        except InvalidRootLabelError:
            pass
    return _result("root_eigenvalues", samples, residual, TAU_ALG, violations,
                   "zero-entry labels rejected for l=3")


def check_cone_nilpotent(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 2)
    count = _count("cone", scale)
    residual = 0.0
    for _ in range(count):
        l = int(rng.choice(DIMENSIONS))
        e = cone_generator(_unit(rng, l - 1)).matrix
        residual = max(residual, float(np.max(np.abs(e @ e @ e))))
    return _result("cone_nilpotent", count, residual, TAU_ALG)


def check_theta_n_to_nbar(seed: int, scale: float) -> CheckResult:
    residual, samples, violations = 0.0, 0, 0
    expected_sizes = {3: 2, 4: 4, 5: 6}
    for l in DIMENSIONS:
        basis = iwasawa_basis(l)
        for x in basis.n:
            residual = max(residual, basis.span_residual(involution("theta", x), "nbar"))
            samples += 1
        if len(basis.n) != expected_sizes[l]:
            violations += 1
        if l >= 4 and (RootLabel(0, 1) not in basis.n_labels or RootLabel(0, -1) not in basis.nbar_labels):
            violations += 1
    return _result("theta_n_to_nbar", samples, residual, 1e-10, violations)


def check_involutions(seed: int, scale: float) -> CheckResult:
    residual, samples = 0.0, 0
    for l in DIMENSIONS:
        for x in stabilizer_basis(l) + [generator("J1", l)]:
            residual = max(residual, float(np.max(np.abs(involution("sigma", x).matrix - x.matrix))))
            samples += 1
        for x in algebra_basis(l):
            for kind in ("sigma", "theta"):
                twice = involution(kind, involution(kind, x))
                residual = max(residual, float(np.max(np.abs(twice.matrix - x.matrix))))
            samples += 1
    return _result("involutions", samples, residual, TAU_ALG, detail="σ fixes H; σ∘σ = θ∘θ = id")


def _singular_point(rng: np.random.Generator, l: int, sign: int) -> AdSPoint:
    """t = sign·y 인 특이점"""
    spatial = rng.normal(size=l - 1)
    t = sign * spatial[1]
    u = np.sqrt(1.0 + spatial[1] ** 2 - t ** 2 + spatial[0] ** 2 + float(np.dot(spatial[2:], spatial[2:])))
    u = u if rng.random() < 0.5 else -u
    return AdSPoint(np.concatenate(([u, t], spatial)))


def check_singular_an_invariance(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 3)
    n_points = _count("singular_points", scale)
    n_elements = _count("singular_elements", scale)
    residual = 0.0
    for i in range(n_points):
        l = DIMENSIONS[i % len(DIMENSIONS)]
        basis = iwasawa_basis(l)
        # AN 은 {t = y}, AN̄ 은 {t = -y} 를 보존
        part, sign = ("n", 1) if i % 2 == 0 else ("nbar", -1)
        nilpotent = basis.n if part == "n" else basis.nbar
        p = _singular_point(rng, l, sign)
        for _ in range(n_elements):
            a1, a2 = rng.normal(0.0, 0.5, size=2)
            coeffs = rng.normal(0.0, 0.5, size=len(nilpotent))
            n_part = AlgebraElement(sum(c * x.matrix for c, x in zip(coeffs, nilpotent)))
            g = mat_exp(basis.a[0] * a1) @ mat_exp(basis.a[1] * a2) @ mat_exp(n_part)
            image = g.act(p.coords)
            residual = max(residual, _scaled(abs(image[1] ** 2 - image[3] ** 2), image))
    return _result("singular_an_invariance", n_points * n_elements, residual, TAU_SING)


# ---------------------------------------------------------------- ads3


def _h3_points(rng: np.random.Generator, count: int) -> list[AdSPoint]:
    points = []
    for _ in range(count):
        points.append(h3_parametrize(
            int(rng.choice([1, -1])),
            int(rng.choice([1, -1])),
            float(rng.normal()),
            float(rng.normal()),
        ))
    return points


def check_h3_horizon(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 10)
    points = _h3_points(rng, _count("h3", scale))
    residual, violations, tangent = 0.0, 0, 0
    for p in points:
        result = classify(p)
        if result.tag != CausalTag.HORIZON:
            violations += 1
            continue
        if _proper_pair(result.decisive):
            residual = max(residual, abs(result.gap))
            tangent += 1
    return _result("h3_horizon", len(points), residual, GAP_TOLERANCE, violations,
                   f"{tangent} tangent cap pairs")


def _random_off_horizon(rng: np.random.Generator, l: int, count: int) -> list[AdSPoint]:
    points = []
    for s in _point_seeds(rng, count):
        p = random_point(l, s)
        if abs(horizon_residual(p).value) > EXCLUSION_MARGIN:
            points.append(p)
    return points


def check_h3_exclusion(seed: int, scale: float) -> CheckResult:
    points = _random_off_horizon(_rng(seed, 11), 3, _count("exclusion3", scale))
    violations = sum(classify(p).tag == CausalTag.HORIZON for p in points)
    return _result("h3_exclusion", len(points), violations=violations)


@lru_cache(maxsize=8)
def _oracle_runs(l: int, seed: int, scale: float) -> tuple[tuple[CausalClass, SampledClass], ...]:
    """정확 분류와 표본 분류의 쌍 (두 oracle 검사가 공유)"""
    rng = _rng(seed, 12 + l)
    runs = []
    for s in _point_seeds(rng, _count("oracle", scale)):
        p = random_point(l, s)
        exact = classify(p, seed=s)
        if exact.tag == CausalTag.SINGULAR:
            continue
        runs.append((exact, classify_sampled(p, DEFAULT_N_DIRS, s)))
    return tuple(runs)


def _check_oracle(l: int, seed: int, scale: float) -> CheckResult:
    band = comparison_band(l - 1, DEFAULT_N_DIRS)
    runs = _oracle_runs(l, seed, scale)
    compared, violations = 0, 0
    for exact, sampled in runs:
        verdict = oracle_agrees(exact.tag, exact.gap, exact.width, sampled, band)
        if verdict is None:
            continue
        compared += 1
        violations += not verdict
    return _result(f"oracle_ads{l}", len(runs), violations=violations,
                   detail=f"compared {compared} outside band {band:.3g}")


def _check_oracle_tags(l: int, seed: int, scale: float) -> CheckResult:
    runs = _oracle_runs(l, seed, scale)
    verdicts = [tags_agree(exact.tag, exact.gap, sampled) for exact, sampled in runs]
    compared = [v for v in verdicts if v is not None]
    mismatches = compared.count(False)
    rate = 1.0 - mismatches / len(compared) if compared else 1.0
    return _result(f"oracle_tags_ads{l}", len(compared), violations=mismatches,
                   detail=f"literal tag agreement {rate:.4f} (|gap| > {ORACLE_MARGIN:g})", informational=True)


def check_oracle_ads3(seed: int, scale: float) -> CheckResult:
    return _check_oracle(3, seed, scale)


def check_oracle_ads4(seed: int, scale: float) -> CheckResult:
    return _check_oracle(4, seed, scale)


def check_oracle_tags_ads3(seed: int, scale: float) -> CheckResult:
    return _check_oracle_tags(3, seed, scale)


def check_oracle_tags_ads4(seed: int, scale: float) -> CheckResult:
    return _check_oracle_tags(4, seed, scale)


def _check_representative_invariance(l: int, seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 20 + l)
    n_points = _count("rep_points", scale)
    n_seeds = _count("rep_seeds", scale)
    violations = 0
    for s in _point_seeds(rng, n_points):
        p = random_point(l, s)
        tags = {classify(p, seed=k).tag for k in _point_seeds(rng, n_seeds)}
        tags.add(classify(p).tag)
        violations += len(tags) != 1
    return _result(f"representative_invariance_ads{l}", n_points * (n_seeds + 1), violations=violations)


def check_representative_invariance_ads3(seed: int, scale: float) -> CheckResult:
    return _check_representative_invariance(3, seed, scale)


def check_representative_invariance_ads4(seed: int, scale: float) -> CheckResult:
    return _check_representative_invariance(4, seed, scale)


def check_psi_chart(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 30)
    count = _count("psi", scale)
    residual = 0.0
    for _ in range(count):
        m = SL2Matrix.random(rng)
        p = psi(m)
        size = max(1.0, float(np.max(np.abs(m.entries))) ** 2)
        q_residual = abs(q_form(p.coords, p.coords) - float(np.linalg.det(m.entries))) / size
        round_trip = float(np.max(np.abs(psi_inv(p).entries - m.entries))) / size
        residual = max(residual, q_residual, round_trip)
    return _result("psi_chart", count, residual, 1e-12)


def check_orbit_modes(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 31)
    count = _count("orbit", scale)
    j1, xpp = generator("J1", 3), root_vector(RootLabel(1, 1), 3)
    b = AdSPoint([0.0, 1.0, 0.0, 0.0])
    residual = 0.0
    for _ in range(count):
        a, alpha = rng.normal(0.0, 1.0, size=2)
        product = orbit_two_param(j1, xpp, a, alpha, b)
        expected = np.array([alpha, np.cosh(a), alpha, np.sinh(a)])
        residual = max(residual, _scaled(float(np.max(np.abs(product.coords - expected))), expected))
        single = orbit_two_param(j1, xpp, a, alpha, b, mode="single_exp")
        for p in (product, single):
            residual = max(residual, _scaled(abs(p.u - p.x), p.coords),
                           _scaled(abs(horizon_residual(p).value), p.coords))
    return _result("orbit_modes", count, residual, 1e-9)


def _bh_margin(escape: EscapeSet) -> float:
    if np.isfinite(escape.gap):
        return escape.gap
    margins = []
    for cap in (escape.cap_plus, escape.cap_minus):
        if cap.kind == CapKind.EMPTY:
            margins.append(np.inf if cap.radius == 0.0 else cap.offset / cap.radius - 1.0)
    return float(max(margins))


def check_black_hole_openness(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 32)
    n_points = _count("openness_points", scale)
    n_perturb = _count("openness_perturbations", scale)
    violations, found, draws = 0, 0, 0
    while found < n_points and draws < 200 * n_points:
        draws += 1
        p = random_point(3, int(rng.integers(0, 2 ** 31)))
        result = classify(p)
        if result.tag != CausalTag.BLACK_HOLE or _bh_margin(result.escape) <= OPENNESS_MARGIN:
            continue
        found += 1
        for _ in range(n_perturb):
            moved = reproject(p.coords + rng.normal(0.0, PERTURBATION_SIZE, size=p.coords.shape))
            violations += classify(moved).tag != CausalTag.BLACK_HOLE
    return _result("black_hole_openness", found * n_perturb, violations=violations,
                   detail=f"{found} black hole points")


def check_horizon_in_free(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 33)
    points = _h3_points(rng, _count("horizon_free", scale))
    points += h4_generate(_count("horizon_free", scale), seed)
    violations = 0
    for p in points:
        result = classify(p)
        escape = result.decisive
        if result.tag != CausalTag.HORIZON or escape.witness is None:
            violations += 1
            continue
        inside = escape.cap_plus.contains(escape.witness, 1e-9) and escape.cap_minus.contains(escape.witness, 1e-9)
        violations += not inside
    return _result("horizon_in_free", len(points), violations=violations)


# ---------------------------------------------------------------- ads4


def check_h4_horizon(seed: int, scale: float) -> CheckResult:
    points = h4_generate(_count("h4", scale), seed)
    residual, violations = 0.0, 0
    for p in points:
        residual = max(residual, _scaled(abs(horizon_residual(p).value), p.coords))
        violations += classify(p).tag != CausalTag.HORIZON
    return _result("h4_horizon", len(points), residual, 1e-9, violations)


def check_h4_exclusion(seed: int, scale: float) -> CheckResult:
    points = _random_off_horizon(_rng(seed, 40), 4, _count("exclusion4", scale))
    violations = sum(classify(p).tag == CausalTag.HORIZON for p in points)
    return _result("h4_exclusion", len(points), violations=violations)


def check_h4_scan(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 41)
    count = _count("scan4", scale)
    residual, horizon_tags = 0.0, 0
    for s in _point_seeds(rng, count):
        p = random_point(4, s)
        if classify(p).tag == CausalTag.HORIZON:
            horizon_tags += 1
            residual = max(residual, abs(horizon_residual(p).value))
    return _result("h4_scan", count, residual, SCAN_HORIZON_TOLERANCE,
                   detail=f"{horizon_tags} horizon tags")


def check_a_invariance(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 42)
    points = h4_generate(_count("a_invariance", scale), seed + 1)
    j1, j2 = generator("J1", 4), generator("J2", 4)
    residual = 0.0
    for p in points:
        a1, a2 = rng.normal(0.0, 1.0, size=2)
        image = (mat_exp(j1 * a1) @ mat_exp(j2 * a2)).act(p.coords)
        residual = max(residual, _scaled(abs(horizon_residual(AdSPoint(image)).value), image))
    return _result("a_invariance", len(points), residual, 1e-9)


# ---------------------------------------------------------------- inclusion


def check_iota_equivalence(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 50)
    count = _count("inclusion", scale)
    points = [random_point(3, s) for s in _point_seeds(rng, count)]
    points += _h3_points(rng, max(1, count // 5))
    violations = sum(classify(p).tag != classify(iota(p)).tag for p in points)
    return _result("iota_equivalence", len(points), violations=violations)


def check_iota_commutes(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 51)
    count = _count("inclusion", scale)
    residual = 0.0
    for s in _point_seeds(rng, count):
        rep = representative(random_point(3, s), seed=s)
        lifted = project(iota(rep.g)).coords
        residual = max(residual, float(np.max(np.abs(lifted - iota(rep.point).coords))))
    return _result("iota_commutes", count, residual, 1e-12)


def check_special_representatives(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 52)
    count = _count("special", scale)
    residual, violations, tested = 0.0, 0, 0
    for s in _point_seeds(rng, count):
        p = random_point(3, s)
        if abs(abs(p.u) - abs(p.x)) < EXCLUSION_MARGIN or abs(p.t) < EXCLUSION_MARGIN:
            continue
        mode, column = ("a_zero", 1) if abs(p.u) < abs(p.x) else ("c_zero", 2)
        rep = special_representative(p, mode)
        residual = max(residual, abs(rep.t_row[column]), abs(rep.y_row[column]))
        violations += classify_representative(rep).tag != classify(p).tag
        tested += 1
    return _result("special_representatives", tested, residual, 1e-12, violations)


def check_conjecture_survey(seed: int, scale: float) -> CheckResult:
    """AdS_5 추측 탐색 (판정 없이 보고만 함)"""
    report = run_conjecture(_count("conjecture", scale), seed)
    return _result(
        "ads5_conjecture",
        report.samples,
        informational=True,
        detail=(f"agreement {report.agreement_rate:.4f}, horizon tags {report.horizon_tags}, "
                f"candidate horizon fraction {report.candidate_horizon_fraction:.3f}"),
    )


# ---------------------------------------------------------------- lemmas


def check_exclusion_lemma(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 60)
    count = _count("lemma_points", scale)
    violations = 0
    for _ in range(count):
        y, z = rng.normal(0.0, 1.0, size=2)
        # z = 0 이면 u^2 - x^2 - z^2 = 0 이 되어 지평선 위에 놓인다
        z = np.copysign(max(abs(z), np.sqrt(EXCLUSION_MARGIN) * 2.0), z)
        t = np.sqrt(1.0 + y ** 2 + z ** 2) * rng.choice([1.0, -1.0])
        p = AdSPoint([0.0, t, 0.0, y, z])
        tag = classify(p).tag
        _, reduced = reduce_y(p)
        violations += tag == CausalTag.HORIZON
        violations += classify(reduced).tag != tag
    return _result("exclusion_lemma", count, violations=violations,
                   detail="no horizon tags; y-reduction keeps the tag")


def check_lemma_roots(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 61)
    count = _count("lemma_roots", scale)
    residual, tested = 0.0, 0
    while tested < count:
        z = float(rng.normal())
        t = float(np.sqrt(1.0 + z ** 2) * rng.choice([1.0, -1.0]))
        w = _unit(rng, 3)
        denominators = (w[2] * z + w[1], w[2] * z - w[1])
        if min(abs(d) for d in denominators) < EXCLUSION_MARGIN:
            continue
        bd = branch_data(lemma_representative(t, z))
        roots = sorted(r for r in branch_roots(bd, w) if r is not None)
        expected = sorted(t / d for d in denominators)
        if len(roots) != 2:
            residual = np.inf
            break
        for r, e in zip(roots, expected):
            residual = max(residual, abs(r - e) / max(1.0, abs(e)))
        tested += 1
    return _result("lemma_roots", tested, residual, ROOT_TOLERANCE)


def check_lateral_roundtrip(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 62)
    count = _count("roundtrip", scale)
    residual, ty_residual, tested = 0.0, 0.0, 0
    for s in _point_seeds(rng, count):
        base = random_point(3, s)
        alpha = float(rng.normal())
        branch = BRANCHES[int(rng.integers(2))]
        moved = lateral_action(base, alpha, branch)
        drive = moved.u - moved.x if branch == "plus" else moved.u + moved.x
        if abs(drive) < EXCLUSION_MARGIN:
            continue
        alpha_back, base_back = lateral_inverse(moved, branch)
        residual = max(
            residual,
            abs(alpha_back - alpha) / max(1.0, abs(alpha)),
            _scaled(float(np.max(np.abs(base_back.coords - base.coords))), moved.coords),
        )
        ty_residual = max(ty_residual, abs(moved.t - base.t), abs(moved.y - base.y))
        tested += 1
    violations = int(ty_residual > 1e-12)
    return _result("lateral_roundtrip", tested, residual, ROUNDTRIP_TOLERANCE, violations,
                   f"(t, y) residual {ty_residual:.3e}")


def check_lateral_matrix(seed: int, scale: float) -> CheckResult:
    rng = _rng(seed, 63)
    count = _count("lateral_matrix", scale)
    residual = 0.0
    for s in _point_seeds(rng, count):
        base = random_point(3, s)
        alpha = float(rng.normal())
        branch = BRANCHES[int(rng.integers(2))]
        closed = lateral_action(base, alpha, branch).coords
        via_matrix = lateral_from_matrix(base, alpha, branch).coords
        residual = max(residual, _scaled(float(np.max(np.abs(closed - via_matrix))), closed))
    return _result("lateral_matrix", count, residual, MATRIX_TOLERANCE)


def check_quadratic_factorization(seed: int, scale: float) -> CheckResult:
    """t(s)^2 - y(s)^2 의 두 근이 분기 근의 합집합과 같은지"""
    rng = _rng(seed, 64)
    count = _count("quadratic", scale)
    residual, tested = 0.0, 0
    for s in _point_seeds(rng, count):
        l = int(rng.choice((3, 4)))
        p = random_point(l, s)
        rep = representative(p, seed=s)
        try:
            bd = branch_data(rep)
        except ValueError:
            continue
        w = _unit(rng, l - 1)
        a_plus, a_minus = bd.affine(w)
        roots = branch_roots(bd, w)
        if min(abs(a_plus), abs(a_minus)) < EXCLUSION_MARGIN or None in roots:
            continue
        if abs(roots[0] - roots[1]) < EXCLUSION_MARGIN * max(1.0, abs(roots[0])):
            continue
        t_row, y_row = rep.t_row, rep.y_row
        t_slope = float(t_row[2:] @ w - t_row[1])
        y_slope = float(y_row[2:] @ w - y_row[1])
        coefficients = [t_slope ** 2 - y_slope ** 2, 2.0 * (p.t * t_slope - p.y * y_slope), p.t ** 2 - p.y ** 2]
        quadratic = np.sort(np.real(np.roots(coefficients)))
        for r, e in zip(quadratic, sorted(roots)):
            residual = max(residual, abs(r - e) / max(1.0, abs(e)))
        tested += 1
    return _result("quadratic_factorization", tested, residual, QUADRATIC_TOLERANCE)


SUITE_CHECKS: dict[str, list[CheckFn]] = {
    "algebra": [
        check_generators_compatible,
        check_cartan_commute,
        check_root_eigenvalues,
        check_cone_nilpotent,
        check_theta_n_to_nbar,
        check_involutions,
        check_singular_an_invariance,
    ],
    "ads3": [
        check_h3_horizon,
        check_h3_exclusion,
        check_oracle_ads3,
        check_oracle_tags_ads3,
        check_representative_invariance_ads3,
        check_psi_chart,
        check_orbit_modes,
        check_black_hole_openness,
        check_horizon_in_free,
    ],
    "ads4": [
        check_h4_horizon,
        check_h4_exclusion,
        check_h4_scan,
        check_oracle_ads4,
        check_oracle_tags_ads4,
        check_representative_invariance_ads4,
        check_a_invariance,
    ],
    "inclusion": [
        check_iota_equivalence,
        check_iota_commutes,
        check_special_representatives,
        check_conjecture_survey,
    ],
    "lemmas": [
        check_exclusion_lemma,
        check_lemma_roots,
        check_lateral_roundtrip,
        check_lateral_matrix,
        check_quadratic_factorization,
    ],
}


def suite_names() -> list[str]:
    return list(SUITE_CHECKS) + ["all"]


def run_suite(name: str, seed: int, scale: float = 1.0) -> SuiteReport:
    """이름으로 스위트 실행 ("all" 은 전체)"""
    if name == "all":
        checks = [fn for fns in SUITE_CHECKS.values() for fn in fns]
    elif name in SUITE_CHECKS:
        checks = SUITE_CHECKS[name]
    else:
        raise ValueError(f"알 수 없는 스위트입니다: {name} (지원: {', '.join(suite_names())})")
    if scale <= 0:
        raise ValueError(f"scale 은 양수여야 합니다: {scale}")

    start = time.perf_counter()
    results = [fn(seed, scale) for fn in checks]
    return SuiteReport(
        suite=name,
        seed=seed,
        scale=scale,
        checks=results,
        elapsed_seconds=time.perf_counter() - start,
    )
