"""광선-특이점 교차 근과 탈출 집합(두 구면 캡의 교집합)"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from config import TAU_ANGLE, TAU_DEN
from ..errors import SingularPointError
from ..spacetime.ads import Representative, is_singular


@dataclass(frozen=True, eq=False)
class BranchData:
    """점 하나에 대한 두 분기(T+Y, T-Y)의 데이터

    광선 방향 w 에 대해 T(s) ± Y(s) = offset± + s·A±(w),
    A±(w) = normal± · w - const± 이다.
    """
    sigma_plus: float
    sigma_minus: float
    offset_plus: float
    offset_minus: float
    normal_plus: np.ndarray
    const_plus: float
    normal_minus: np.ndarray
    const_minus: float

    @property
    def sphere_dim(self) -> int:
        """방향 구면 S^{l-2} 의 주변 공간 차원 (l-1)"""
        return self.normal_plus.shape[0]

    def affine(self, w: np.ndarray) -> tuple[float, float]:
        """(A+(w), A-(w))"""
        w = np.asarray(w, dtype=float)
        return (
            float(self.normal_plus @ w - self.const_plus),
            float(self.normal_minus @ w - self.const_minus),
        )

    def affine_many(self, directions: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        directions = np.asarray(directions, dtype=float)
        return (
            directions @ self.normal_plus - self.const_plus,
            directions @ self.normal_minus - self.const_minus,
        )

    def time_reversed(self) -> "BranchData":
        """s ↦ -s 로 본 분기 데이터 (과거 방향 광선)"""
        return BranchData(
            sigma_plus=self.sigma_plus,
            sigma_minus=self.sigma_minus,
            offset_plus=self.offset_plus,
            offset_minus=self.offset_minus,
            normal_plus=-self.normal_plus,
            const_plus=-self.const_plus,
            normal_minus=-self.normal_minus,
            const_minus=-self.const_minus,
        )


def branch_data(rep: Representative) -> BranchData:
    """대표원의 t 행 (t, a, b, c, ...) 과 y 행 (y, a', b', c', ...) 에서 분기 데이터 추출"""
    if is_singular(rep.point):
        raise SingularPointError(f"특이점에서는 분기 데이터가 정의되지 않습니다: {rep.point!r}")
    t_row, y_row = rep.t_row, rep.y_row
    t, y = t_row[0], y_row[0]
    return BranchData(
        sigma_plus=float(np.sign(t + y)),
        sigma_minus=float(np.sign(t - y)),
        offset_plus=float(t + y),
        offset_minus=float(t - y),
        normal_plus=t_row[2:] + y_row[2:],
        const_plus=float(t_row[1] + y_row[1]),
        normal_minus=t_row[2:] - y_row[2:],
        const_minus=float(t_row[1] - y_row[1]),
    )


def _root(offset: float, affine: float) -> float | None:
    if abs(affine) <= TAU_DEN:
        return None
    return -offset / affine


def branch_roots(bd: BranchData, w: np.ndarray) -> tuple[float | None, float | None]:
    """T+Y=0, T-Y=0 이 되는 s (교차가 없으면 None)"""
    w = np.asarray(w, dtype=float)
    if abs(np.linalg.norm(w) - 1.0) > 1e-12:
        raise ValueError(f"단위 벡터가 아닙니다: |w| = {np.linalg.norm(w):.15g}")
    a_plus, a_minus = bd.affine(w)
    return _root(bd.offset_plus, a_plus), _root(bd.offset_minus, a_minus)


def escaping_mask(bd: BranchData, directions: np.ndarray) -> np.ndarray:
    """미래(s > 0)에 특이점과 만나지 않는 방향이면 True"""
    a_plus, a_minus = bd.affine_many(directions)
    masks = []
    for offset, affine in ((bd.offset_plus, a_plus), (bd.offset_minus, a_minus)):
        missing = np.abs(affine) <= TAU_DEN
        with np.errstate(divide="ignore", invalid="ignore"):
            roots = -offset / affine
        masks.append(missing | (roots <= 0))
    return masks[0] & masks[1]


class CapKind(str, Enum):
    EMPTY = "empty"
    POINT = "point"
    PROPER = "proper"
    FULL = "full"


class IntersectionClass(str, Enum):
    EMPTY = "Empty"
    MEASURE_ZERO = "MeasureZero"
    HAS_INTERIOR = "HasInterior"


@dataclass(frozen=True, eq=False)
class SphericalCap:
    """구면 캡 {w ∈ S^{l-2} : normal·w >= offset}"""
    normal: np.ndarray
    offset: float

    @cached_property
    def radius(self) -> float:
        return float(np.linalg.norm(self.normal))

    @cached_property
    def signed_angle(self) -> float:
        """부호 있는 각반지름: c <= r 이면 arccos(c/r), c > r 이면 -arccosh(c/r)"""
        r, c = self.radius, self.offset
        if r <= TAU_DEN:
            return float("-inf") if c > TAU_DEN else float(np.pi)
        if c > r:
            return -float(np.arccosh(c / r))
        return float(np.arctan2(np.sqrt(max(r * r - c * c, 0.0)), c))

    @cached_property
    def kind(self) -> CapKind:
        angle = self.signed_angle
        if angle < -TAU_ANGLE:
            return CapKind.EMPTY
        if angle <= TAU_ANGLE:
            return CapKind.POINT
        if angle >= np.pi - TAU_ANGLE or self.offset <= -self.radius:
            return CapKind.FULL
        return CapKind.PROPER

    @cached_property
    def center(self) -> np.ndarray | None:
        r = self.radius
        return self.normal / r if r > TAU_DEN else None

    @cached_property
    def angular_radius(self) -> float:
        """중심에서 경계까지의 각도 (점 캡 0, 전체 구면 π)"""
        kind = self.kind
        if kind == CapKind.POINT:
            return 0.0
        if kind == CapKind.FULL:
            return float(np.pi)
        if kind == CapKind.EMPTY:
            return float("nan")
        return self.signed_angle

    def contains(self, w: np.ndarray, slack: float = 0.0) -> bool:
        return float(self.normal @ np.asarray(w, dtype=float)) >= self.offset - slack


def angle_between(a: np.ndarray, b: np.ndarray) -> float:
    """단위 벡터 사이의 각도 (전 구간에서 안정적인 형태)"""
    return float(2.0 * np.arctan2(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def _orthogonal_unit(c: np.ndarray) -> np.ndarray:
    index = int(np.argmin(np.abs(c)))
    e = np.zeros_like(c)
    e[index] = 1.0
    v = e - (e @ c) * c
    return v / np.linalg.norm(v)


def _along(c1: np.ndarray, c2: np.ndarray, angle: float) -> np.ndarray:
    """c1 에서 c2 쪽 대원을 따라 angle 만큼 이동한 점"""
    v = c2 - (c2 @ c1) * c1
    norm = np.linalg.norm(v)
    v = v / norm if norm > 1e-12 else _orthogonal_unit(c1)
    return np.cos(angle) * c1 + np.sin(angle) * v


@dataclass(frozen=True, eq=False)
class EscapeSet:
    """탈출 방향 집합 cap+ ∩ cap- 와 진단값"""
    cap_plus: SphericalCap
    cap_minus: SphericalCap
    intersection_class: IntersectionClass
    theta_plus: float
    theta_minus: float
    separation: float
    gap: float
    width: float
    witness: np.ndarray | None


def _any_direction(m: int) -> np.ndarray:
    w = np.zeros(m)
    w[0] = 1.0
    return w


def intersect_caps(cap_plus: SphericalCap, cap_minus: SphericalCap) -> EscapeSet:
    """두 닫힌 캡의 교집합 분류"""
    kinds = (cap_plus.kind, cap_minus.kind)
    theta_p, theta_m = cap_plus.angular_radius, cap_minus.angular_radius
    c_p, c_m = cap_plus.center, cap_minus.center
    m = cap_plus.normal.shape[0]
    separation = angle_between(c_p, c_m) if c_p is not None and c_m is not None else 0.0

    def result(cls, gap, width, witness):
        return EscapeSet(
            cap_plus=cap_plus,
            cap_minus=cap_minus,
            intersection_class=cls,
            theta_plus=theta_p,
            theta_minus=theta_m,
            separation=separation,
            gap=float(gap),
            width=float(width),
            witness=witness,
        )

    if CapKind.EMPTY in kinds:
        return result(IntersectionClass.EMPTY, np.inf, np.inf, None)

    if kinds == (CapKind.FULL, CapKind.FULL):
        return result(IntersectionClass.HAS_INTERIOR, -2.0 * np.pi, 2.0 * np.pi, _any_direction(m))

    if CapKind.FULL in kinds:
        other, theta = (cap_minus, theta_m) if kinds[0] == CapKind.FULL else (cap_plus, theta_p)
        gap = separation - (theta_p + theta_m)
        if other.kind == CapKind.POINT:
            return result(IntersectionClass.MEASURE_ZERO, gap, 0.0, other.center)
        return result(IntersectionClass.HAS_INTERIOR, gap, 2.0 * theta, other.center)

    gap = separation - (theta_p + theta_m)

    if CapKind.POINT in kinds:
        if kinds == (CapKind.POINT, CapKind.POINT):
            if separation <= TAU_ANGLE:
                return result(IntersectionClass.MEASURE_ZERO, gap, 0.0, c_p)
            return result(IntersectionClass.EMPTY, gap, gap, None)
        point = c_p if kinds[0] == CapKind.POINT else c_m
        if gap <= TAU_ANGLE:
            return result(IntersectionClass.MEASURE_ZERO, gap, 0.0, point)
        return result(IntersectionClass.EMPTY, gap, gap, None)

    if gap > TAU_ANGLE:
        return result(IntersectionClass.EMPTY, gap, gap, None)
    if gap >= -TAU_ANGLE:
        return result(IntersectionClass.MEASURE_ZERO, gap, 0.0, _along(c_p, c_m, theta_p))
    lower = max(0.0, separation - theta_m)
    upper = min(theta_p, separation) if separation > 0 else 0.0
    width = min(-gap, 2.0 * theta_p, 2.0 * theta_m)
    return result(IntersectionClass.HAS_INTERIOR, gap, width, _along(c_p, c_m, 0.5 * (lower + max(lower, upper))))


def escape_caps(bd: BranchData) -> EscapeSet:
    """cap± = {w : σ±(normal±·w - const±) >= 0}"""
    cap_plus = SphericalCap(normal=bd.sigma_plus * bd.normal_plus, offset=bd.sigma_plus * bd.const_plus)
    cap_minus = SphericalCap(normal=bd.sigma_minus * bd.normal_minus, offset=bd.sigma_minus * bd.const_minus)
    return intersect_caps(cap_plus, cap_minus)
