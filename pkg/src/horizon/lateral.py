"""지평선 잔차, ℋ3 매개화, 측면 작용 e^{αX0±} 과 역변환, ℋ4 생성"""

import logging
from dataclasses import dataclass

import numpy as np

from config import TAU_HORIZON, TAU_INV
from ..algebra.ambient import AlgebraElement, GroupElement, mat_exp
from ..algebra.lie import RootLabel, root_vector
from ..errors import DegenerateInversionError, DimensionError, NotOnQuadricError
from ..spacetime.ads import AdSPoint, iota, project, representative

logger = logging.getLogger(__name__)

BRANCHES = ("plus", "minus")
ORBIT_MODES = ("product", "single_exp")


@dataclass(frozen=True)
class HorizonResidual:
    """u^2 - x^2 - Σz^2 (l=5 는 추측 단계)"""
    dim: int
    value: float

    @property
    def conjectural(self) -> bool:
        return self.dim > 4

    def on_horizon(self, tolerance: float = TAU_HORIZON) -> bool:
        return abs(self.value) <= tolerance


def horizon_residual(p: AdSPoint) -> HorizonResidual:
    value = p.u ** 2 - p.x ** 2 - float(np.dot(p.z, p.z))
    return HorizonResidual(dim=p.dim, value=value)


def h3_parametrize(x_sign: int, overall: int, a: float, alpha: float) -> AdSPoint:
    """ℋ3 의 점 overall·(α, cosh a, x_sign·α, sinh a)"""
    if x_sign not in (1, -1) or overall not in (1, -1):
        raise ValueError(f"부호는 ±1 이어야 합니다: x_sign={x_sign}, overall={overall}")
    return AdSPoint(overall * np.array([alpha, np.cosh(a), x_sign * alpha, np.sinh(a)]))


def orbit_two_param(
    x: AlgebraElement,
    y: AlgebraElement,
    a: float,
    b: float,
    base: AdSPoint,
    mode: str = "product",
) -> AdSPoint:
    """두 매개변수 궤도 점

    product: exp(aX)·exp(bY)·rep(base), single_exp: exp(aX + bY)·rep(base)
    """
    rep = representative(base)
    if mode == "product":
        g = mat_exp(x * a) @ mat_exp(y * b) @ rep.g
    elif mode == "single_exp":
        g = mat_exp(x * a + y * b) @ rep.g
    else:
        raise ValueError(f"알 수 없는 모드입니다: {mode} (지원: {ORBIT_MODES})")
    return project(g)


def _check_branch(branch: str) -> int:
    if branch not in BRANCHES:
        raise ValueError(f"알 수 없는 분기입니다: {branch} (지원: {BRANCHES})")
    return 1 if branch == "plus" else -1


def lateral_matrix(branch: str, alpha: float, l: int = 4, z_index: int = 0) -> GroupElement:
    """exp(α X_{0±})"""
    sign = _check_branch(branch)
    return mat_exp(root_vector(RootLabel(0, sign), l, z_index) * alpha)


def lateral_action(base: AdSPoint, alpha: float, branch: str) -> AdSPoint:
    """AdS_3 점에 대한 e^{αX0±}·ι 의 닫힌 형태

    plus: (u + α²(u-x)/2, t, x + α²(u-x)/2, y, α(u-x))
    minus: (u + α²(u+x)/2, t, x - α²(u+x)/2, y, α(u+x))
    """
    sign = _check_branch(branch)
    if base.dim != 3:
        raise DimensionError(f"AdS_3 점이 필요합니다: l={base.dim}")
    u, t, x, y = base.coords
    drive = u - sign * x
    shift = alpha ** 2 * drive / 2.0
    return AdSPoint([u + shift, t, x + sign * shift, y, alpha * drive])


def lateral_inverse(p: AdSPoint, branch: str) -> tuple[float, AdSPoint]:
    """측면 작용의 역변환 (α, base)"""
    sign = _check_branch(branch)
    if p.dim != 4:
        raise DimensionError(f"AdS_4 점이 필요합니다: l={p.dim}")
    u, t, x, y, z = p.coords
    drive = u - sign * x
    if abs(drive) < TAU_INV:
        other = "minus" if branch == "plus" else "plus"
        raise DegenerateInversionError(
            f"u' {'-' if sign > 0 else '+'} x' = {drive:.3e}; use other branch ({other})"
        )
    alpha = z / drive
    shift = z ** 2 / (2.0 * drive)
    return float(alpha), AdSPoint([u - shift, t, x - sign * shift, y])


@dataclass(frozen=True, eq=False)
class LateralParams:
    """ℋ3 의 점에 적용할 측면 작용"""
    branch: str
    alpha: float
    base: AdSPoint

    def __post_init__(self):
        _check_branch(self.branch)
        if self.base.dim != 3:
            raise DimensionError(f"AdS_3 점이 필요합니다: l={self.base.dim}")
        residual = horizon_residual(self.base)
        if not residual.on_horizon():
            raise NotOnQuadricError(f"ℋ3 위의 점이 아닙니다: u^2 - x^2 = {residual.value:.3e}")

    def apply(self) -> AdSPoint:
        return lateral_action(self.base, self.alpha, self.branch)


@dataclass(frozen=True, eq=False)
class HorizonSample:
    """생성된 ℋ4 점과 그 생성 매개변수"""
    point: AdSPoint
    params: LateralParams
    x_sign: int
    overall: int
    a: float
    alpha_base: float


def h4_samples(count: int, seed: int, spread: float = 1.0) -> list[HorizonSample]:
    """측면 클래스 G_{X0±}·ι(ℋ3) 에서 표본 생성 (seed 에 대해 결정적)"""
    if count < 1:
        raise ValueError(f"count 는 1 이상이어야 합니다: {count}")
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(count):
        x_sign = int(rng.choice([1, -1]))
        overall = int(rng.choice([1, -1]))
        a, alpha_base, alpha_lat = rng.normal(0.0, spread, size=3)
        branch = BRANCHES[int(rng.integers(2))]
        base = h3_parametrize(x_sign, overall, float(a), float(alpha_base))
        params = LateralParams(branch=branch, alpha=float(alpha_lat), base=base)
        samples.append(HorizonSample(
            point=params.apply(),
            params=params,
            x_sign=x_sign,
            overall=overall,
            a=float(a),
            alpha_base=float(alpha_base),
        ))
    logger.debug("generated %d horizon samples (seed=%d)", count, seed)
    return samples


def h4_generate(count: int, seed: int) -> list[AdSPoint]:
    return [s.point for s in h4_samples(count, seed)]


def lateral_from_matrix(base: AdSPoint, alpha: float, branch: str) -> AdSPoint:
    """project(exp(αX0±)·ι(rep(base))) (닫힌 형태와의 비교용)"""
    g = lateral_matrix(branch, alpha) @ iota(representative(base).g)
    return project(g)
