"""AdS_l 의 점, 대표원, 포함사상, SL(2,R) 차트, 특이점, 광선 측지선"""

import logging
from dataclasses import dataclass

import numpy as np

from config import MAX_REPRESENTATIVE_RETRIES, TAU_GROUP, TAU_SING, TAU_TANGENT
from ..algebra.ambient import (
    AdSPoint,
    GroupElement,
    check_dim,
    complete_frame,
    eta_complete,
    mat_exp,
    q_form,
)
from ..algebra.lie import T, Y, generator, stabilizer_basis
from ..errors import (
    DimensionError,
    HorizonCaseError,
    InvalidElementError,
    NotOnQuadricError,
    RepresentativeError,
)

logger = logging.getLogger(__name__)

__all__ = [
    "AdSPoint",
    "Representative",
    "SL2Matrix",
    "project",
    "representative",
    "special_representative",
    "lemma_representative",
    "iota",
    "psi",
    "psi_inv",
    "singular_residual",
    "is_singular",
    "null_direction",
    "geodesic_point",
    "tangent_class",
    "reduce_y",
    "random_stabilizer",
    "reproject",
]


@dataclass(frozen=True, eq=False)
class Representative:
    """점 p 의 대표원 g (g·e_u = p)"""
    g: GroupElement
    point: AdSPoint

    def __post_init__(self):
        if self.g.dim != self.point.dim:
            raise DimensionError("대표원과 점의 차원이 다릅니다")
        diff = np.max(np.abs(self.g.matrix[:, 0] - self.point.coords))
        if diff > TAU_GROUP * max(1.0, float(np.max(np.abs(self.point.coords)))):
            raise RepresentativeError(f"g·e_u 가 점과 다릅니다: {diff:.3e}")

    @property
    def t_row(self) -> np.ndarray:
        return self.g.matrix[T]

    @property
    def y_row(self) -> np.ndarray:
        return self.g.matrix[Y]

    @property
    def time_oriented(self) -> bool:
        """SO_0(2,l-1) 에 속하는지 ((u,t) 블록 행렬식 > 0)"""
        return bool(np.linalg.det(self.g.matrix[:2, :2]) > 0)


@dataclass(frozen=True, eq=False)
class SL2Matrix:
    """행렬식 1 인 2x2 실행렬"""
    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=float).reshape(2, 2)
        det = float(np.linalg.det(m))
        if abs(det - 1.0) > 1e-12 * max(1.0, float(np.max(np.abs(m)))) ** 2:
            raise InvalidElementError(f"SL(2,R) 원소가 아닙니다: det = {det:.15g}")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @classmethod
    def random(cls, rng: np.random.Generator, scale: float = 1.0) -> "SL2Matrix":
        m = rng.normal(0.0, scale, size=(2, 2))
        det = np.linalg.det(m)
        if det < 0:
            m[0] *= -1.0
            det = -det
        return cls(m / np.sqrt(det))


def reproject(coords: np.ndarray, band: float | None = None) -> AdSPoint:
    """(u,t) 반지름을 맞춰 이차곡면 위로 옮긴 점

    band 가 주어지면 |Q(v,v) - 1| 이 band 를 넘을 때 거부한다.
    """
    v = np.array(coords, dtype=float)
    check_dim(v.shape[0] - 1)
    if band is not None and abs(q_form(v, v) - 1.0) > band:
        raise NotOnQuadricError(f"이차곡면에서 너무 멉니다: |Q(v,v)-1| = {abs(q_form(v, v) - 1.0):.3e}")
    radius = float(np.hypot(v[0], v[1]))
    if radius == 0.0:
        raise NotOnQuadricError("u = t = 0 인 벡터는 재투영할 수 없습니다")
    v[:2] *= np.sqrt(1.0 + float(np.dot(v[2:], v[2:]))) / radius
    return AdSPoint(v)


def project(g: GroupElement) -> AdSPoint:
    """[g] = g·e_u"""
    return AdSPoint(g.matrix[:, 0])


def random_stabilizer(l: int, rng: np.random.Generator, scale: float = 0.5) -> GroupElement:
    """SO_0(1,l-1) 의 임의 원소 (평면별 부스트/회전의 곱)"""
    h = np.eye(l + 1)
    for x in stabilizer_basis(l):
        h = h @ mat_exp(x * rng.normal(0.0, scale)).matrix
    return GroupElement(h)


def representative(
    p: AdSPoint,
    constraint: str = "none",
    seed: int | None = None,
) -> Representative:
    """점 p 의 대표원

    seed 가 주어지면 안정자군의 임의 원소를 오른쪽에 곱한다. constraint 가
    "b_neq_pm_bprime" 이면 t 행과 y 행의 x 열 성분 b, b' 가 |b ∓ b'| >= 1e-6 을
    만족할 때까지 다시 뽑는다.
    """
    if constraint not in ("none", "b_neq_pm_bprime"):
        raise ValueError(f"알 수 없는 제약입니다: {constraint}")
    g = eta_complete(p.coords)

    def satisfied(matrix: np.ndarray) -> bool:
        if constraint == "none":
            return True
        b, b_prime = matrix[T, 2], matrix[Y, 2]
        return abs(b - b_prime) >= 1e-6 and abs(b + b_prime) >= 1e-6

    if seed is None:
        if satisfied(g.matrix):
            return Representative(g=g, point=p)
        seed = 0

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_REPRESENTATIVE_RETRIES):
        candidate = g @ random_stabilizer(p.dim, rng)
        if satisfied(candidate.matrix):
            return Representative(g=candidate, point=p)
        logger.debug("representative retry %d for %r", attempt + 1, p)
    raise RepresentativeError(f"{MAX_REPRESENTATIVE_RETRIES}회 시도 후에도 제약을 만족하는 대표원이 없습니다")


def special_representative(p: AdSPoint, mode: str) -> Representative:
    """AdS_3 점의 특수 대표원

    a_zero: 1열의 t, y 성분이 0 (|u| < |x| 필요)
    c_zero: 3열(x 열)의 t, y 성분이 0 (|u| > |x| 필요)
    """
    if p.dim != 3:
        raise DimensionError(f"AdS_3 점이 필요합니다: l={p.dim}")
    u, t, x = p.u, p.t, p.x
    if abs(abs(u) - abs(x)) <= TAU_SING:
        raise HorizonCaseError("horizon case; special representative not defined (|u| = |x|)")

    if mode == "a_zero":
        if abs(u) > abs(x):
            raise HorizonCaseError("a_zero 는 |u| < |x| 일 때만 가능합니다")
        alpha = abs(x) / np.sqrt(x * x - u * u)
        # (u,t) 블록 행렬식 -αt 가 양수가 되도록 부호 선택
        alpha = -alpha if t > 0 else alpha
        beta = u * alpha / x
        column = np.array([alpha, 0.0, beta, 0.0])
        g = complete_frame({0: p.coords, 1: column}, 3)
    elif mode == "c_zero":
        if abs(u) < abs(x):
            raise HorizonCaseError("c_zero 는 |u| > |x| 일 때만 가능합니다")
        beta = abs(u) / np.sqrt(u * u - x * x)
        alpha = x * beta / u
        column = np.array([alpha, 0.0, beta, 0.0])
        g = complete_frame({0: p.coords, 2: column}, 3)
    else:
        raise ValueError(f"알 수 없는 모드입니다: {mode}")
    return Representative(g=GroupElement(g), point=p)


def lemma_representative(t: float, z: float) -> Representative:
    """(0,t,0,0,z) 의 명시적 대표원

    t > 0 이면 시간 방향이 뒤집힌 원소이므로 근의 집합 비교에만 쓴다.
    """
    g = np.eye(5)
    g[0] = [0.0, 1.0, 0.0, 0.0, 0.0]
    g[1] = [t, 0.0, 0.0, 0.0, -z]
    g[4] = [z, 0.0, 0.0, 0.0, -t]
    return Representative(g=GroupElement(g), point=AdSPoint([0.0, t, 0.0, 0.0, z]))


def iota(obj: AdSPoint | GroupElement) -> AdSPoint | GroupElement:
    """포함사상 AdS_l -> AdS_{l+1} (0 좌표 / 0 행·열 추가)"""
    if isinstance(obj, AdSPoint):
        if obj.dim not in (3, 4):
            raise DimensionError(f"포함사상은 l=3, 4 에서만 정의됩니다: l={obj.dim}")
        return AdSPoint(np.append(obj.coords, 0.0))
    if isinstance(obj, GroupElement):
        if obj.dim not in (3, 4):
            raise DimensionError(f"포함사상은 l=3, 4 에서만 정의됩니다: l={obj.dim}")
        n = obj.dim + 1
        padded = np.eye(n + 1)
        padded[:n, :n] = obj.matrix
        return GroupElement(padded)
    raise TypeError(f"지원하지 않는 타입입니다: {type(obj).__name__}")


def psi(m: SL2Matrix) -> AdSPoint:
    """SL(2,R) -> AdS_3, [[u+x, y+t], [y-t, u-x]] ↦ (u, t, x, y)"""
    (a, b), (c, d) = m.entries
    return AdSPoint([(a + d) / 2.0, (b - c) / 2.0, (a - d) / 2.0, (b + c) / 2.0])


def psi_inv(p: AdSPoint | np.ndarray) -> SL2Matrix:
    """AdS_3 -> SL(2,R)"""
    if not isinstance(p, AdSPoint):
        p = AdSPoint(p)
    if p.dim != 3:
        raise DimensionError(f"AdS_3 점이 필요합니다: l={p.dim}")
    u, t, x, y = p.coords
    return SL2Matrix(np.array([[u + x, y + t], [y - t, u - x]]))


def singular_residual(p: AdSPoint) -> float:
    """t^2 - y^2"""
    return p.t ** 2 - p.y ** 2


def is_singular(p: AdSPoint) -> bool:
    return abs(singular_residual(p)) <= TAU_SING


def null_direction(w: np.ndarray) -> np.ndarray:
    """기준점에서의 광선 접벡터 (0, -1, w)"""
    w = np.asarray(w, dtype=float)
    if abs(np.linalg.norm(w) - 1.0) > 1e-12:
        raise ValueError(f"단위 벡터가 아닙니다: |w| = {np.linalg.norm(w):.15g}")
    return np.concatenate(([0.0, -1.0], w))


def geodesic_point(rep: Representative, w: np.ndarray, s: float) -> AdSPoint:
    """광선 g·(1, -s, s w) (s > 0 이 미래)"""
    direction = null_direction(w)
    if direction.shape[0] != rep.point.dim + 1:
        raise DimensionError("방향 벡터 차원이 맞지 않습니다")
    base = np.zeros_like(direction)
    base[0] = 1.0
    return AdSPoint(rep.g.act(base + s * direction))


def tangent_class(p: AdSPoint, vector: np.ndarray) -> str:
    """접벡터 분류: time / space / light"""
    vector = np.asarray(vector, dtype=float)
    scale = max(1.0, float(np.max(np.abs(vector))), float(np.max(np.abs(p.coords))))
    if abs(q_form(p.coords, vector)) > TAU_TANGENT * scale ** 2:
        raise ValueError("점에서의 접벡터가 아닙니다 (Q(p, X) != 0)")
    norm = q_form(vector, vector)
    if norm > TAU_TANGENT * scale ** 2:
        return "time"
    if norm < -TAU_TANGENT * scale ** 2:
        return "space"
    return "light"


def reduce_y(p: AdSPoint) -> tuple[float, AdSPoint]:
    """exp(ηJ1) 로 y 성분 제거, tanh η = -y/t"""
    check_dim(p.dim)
    if singular_residual(p) <= 0:
        raise NotOnQuadricError("t^2 - y^2 > 0 인 점에서만 y 를 없앨 수 있습니다")
    boost = 0.5 * np.log((p.t - p.y) / (p.t + p.y))
    moved = mat_exp(generator("J1", p.dim) * boost).act(p.coords)
    moved[3] = 0.0
    return boost, AdSPoint(moved)
