"""ℝ^{2,l-1} 선형대수 모듈

좌표 순서는 (u, t, x, y, z_1, ..., z_{l-3}) 이고, 이차형식은
Q = u^2 + t^2 - x^2 - y^2 - Σ z_i^2 이다.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from config import DIMENSIONS, TAU_ALG, TAU_GROUP, TAU_QUADRIC
from ..errors import DimensionError, InvalidElementError, NotOnQuadricError

logger = logging.getLogger(__name__)


def check_dim(l: int) -> int:
    """지원 차원 확인"""
    if l not in DIMENSIONS:
        raise DimensionError(f"지원하지 않는 차원입니다: l={l} (지원: {DIMENSIONS})")
    return l


def dim_of(v: np.ndarray) -> int:
    """성분 수(l+1)로부터 차원 l 계산"""
    v = np.asarray(v)
    return check_dim(v.shape[0] - 1)


@lru_cache(maxsize=None)
def form_signs(l: int) -> np.ndarray:
    """이차형식 부호 (+1, +1, -1, ..., -1), 읽기 전용"""
    check_dim(l)
    signs = -np.ones(l + 1)
    signs[:2] = 1.0
    signs.setflags(write=False)
    return signs


@lru_cache(maxsize=None)
def eta(l: int) -> np.ndarray:
    """η = diag(form_signs), 읽기 전용"""
    h = np.diag(form_signs(l))
    h.setflags(write=False)
    return h


def basis_vector(l: int, index: int) -> np.ndarray:
    """표준 기저 e_index (e_0 = e_u)"""
    e = np.zeros(l + 1)
    e[index] = 1.0
    return e


def q_form(v: np.ndarray, w: np.ndarray) -> float:
    """대칭 쌍선형형식 Q(v, w)"""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape or v.ndim != 1:
        raise DimensionError(f"벡터 차원이 일치하지 않습니다: {v.shape} vs {w.shape}")
    return float(np.dot(form_signs(v.shape[0] - 1) * v, w))


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class AdSPoint:
    """AdS_l 의 점 (이차곡면 Q(p,p)=1 위의 벡터)"""
    coords: np.ndarray

    def __post_init__(self):
        coords = _frozen(self.coords)
        if coords.ndim != 1:
            raise DimensionError(f"점은 1차원 배열이어야 합니다: shape={coords.shape}")
        dim_of(coords)
        residual = abs(q_form(coords, coords) - 1.0)
        # |coord| <= 1 이면 절대 오차 τ_quadric, 그 밖에는 max|coord|^2 배
        scale = max(1.0, float(np.max(np.abs(coords))) ** 2)
        if residual > TAU_QUADRIC * scale:
            raise NotOnQuadricError(f"이차곡면 위의 점이 아닙니다: |Q(p,p)-1| = {residual:.3e}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return self.coords.shape[0] - 1

    @property
    def u(self) -> float:
        return float(self.coords[0])

    @property
    def t(self) -> float:
        return float(self.coords[1])

    @property
    def x(self) -> float:
        return float(self.coords[2])

    @property
    def y(self) -> float:
        return float(self.coords[3])

    @property
    def z(self) -> np.ndarray:
        return self.coords[4:]

    def __repr__(self) -> str:
        return f"AdSPoint(l={self.dim}, coords={np.array2string(self.coords, precision=6)})"


@dataclass
class ValidationReport:
    """군 / 대수 원소 검증 결과"""
    ok: bool
    residual: float
    tolerance: float
    kind: str


def validate_element(matrix: np.ndarray, kind: str) -> ValidationReport:
    """군(group) 또는 대수(algebra) 조건 검증"""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"정사각 행렬이 아닙니다: shape={m.shape}")
    l = check_dim(m.shape[0] - 1)
    h = eta(l)
    scale = max(1.0, float(np.max(np.abs(m))))

    if kind == "group":
        tolerance = TAU_GROUP * scale ** 2
        residual = float(np.max(np.abs(m.T @ h @ m - h)))
        det_residual = abs(float(np.linalg.det(m)) - 1.0)
        ok = residual <= tolerance and det_residual <= tolerance
        return ValidationReport(ok=ok, residual=max(residual, det_residual),
                                tolerance=tolerance, kind=kind)

    if kind == "algebra":
        tolerance = TAU_ALG * scale
        residual = float(np.max(np.abs(m.T @ h + h @ m)))
        return ValidationReport(ok=residual <= tolerance, residual=residual,
                                tolerance=tolerance, kind=kind)

    raise ValueError(f"알 수 없는 검증 종류입니다: {kind}")


@dataclass(frozen=True, eq=False)
class GroupElement:
    """SO(2,l-1) 원소"""
    matrix: np.ndarray

    def __post_init__(self):
        matrix = _frozen(self.matrix)
        report = validate_element(matrix, "group")
        if not report.ok:
            raise InvalidElementError(f"SO(2,l-1) 원소가 아닙니다: residual={report.residual:.3e}")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0] - 1

    def act(self, v: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=float)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        # g^{-1} = η g^T η
        h = eta(self.dim)
        return GroupElement(h @ self.matrix.T @ h)

    @classmethod
    def identity(cls, l: int) -> "GroupElement":
        return cls(np.eye(check_dim(l) + 1))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """so(2,l-1) 원소"""
    matrix: np.ndarray

    def __post_init__(self):
        matrix = _frozen(self.matrix)
        report = validate_element(matrix, "algebra")
        if not report.ok:
            raise InvalidElementError(f"so(2,l-1) 원소가 아닙니다: residual={report.residual:.3e}")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0] - 1

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.matrix + other.matrix)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.matrix)

    def __mul__(self, scalar: float) -> "AlgebraElement":
        return AlgebraElement(float(scalar) * self.matrix)

    __rmul__ = __mul__

    def bracket(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.matrix @ other.matrix - other.matrix @ self.matrix)


def random_point(l: int, seed: int, sigma: float = 1.0) -> AdSPoint:
    """이차곡면 위 임의의 점 (seed 에 대해 결정적)"""
    check_dim(l)
    if sigma < 0:
        raise ValueError(f"sigma 는 0 이상이어야 합니다: {sigma}")
    rng = np.random.default_rng(seed)
    spatial = rng.normal(0.0, sigma, size=l - 1)
    phi = rng.uniform(0.0, 2.0 * np.pi)
    r = np.sqrt(1.0 + np.dot(spatial, spatial))
    return AdSPoint(np.concatenate(([r * np.cos(phi), r * np.sin(phi)], spatial)))


def _project_out(candidates: np.ndarray, frame: np.ndarray, norms: np.ndarray, signs: np.ndarray) -> np.ndarray:
    """후보 열들에서 틀 방향의 η-성분 제거"""
    coeffs = ((frame.T * signs) @ candidates) / norms[:, None]
    return candidates - frame @ coeffs


def complete_frame(fixed: dict[int, np.ndarray], l: int) -> np.ndarray:
    """고정된 열을 포함하는 η-정규직교 틀 완성

    남은 열은 표준 기저에 피벗 그람-슈미트를 적용해 채운다. 각 단계에서
    |Q(r, r)| 이 가장 큰 후보를 고르고, 동률이면 인덱스가 작은 쪽을 고른다.
    양의 노름 벡터는 비어 있는 양의 슬롯(u, t)에, 음의 노름 벡터는
    나머지 슬롯에 선택 순서대로 들어간다. 마지막으로 (u,t) 블록 행렬식과
    전체 행렬식이 양수가 되도록 자유 열의 부호를 바꾼다 (항등 성분 SO_0).
    """
    if not fixed:
        raise ValueError("고정 열이 하나 이상 필요합니다")
    n = l + 1
    signs = form_signs(l)
    columns: list[np.ndarray] = []
    norms: list[float] = []
    for slot in sorted(fixed):
        vec = np.asarray(fixed[slot], dtype=float)
        norm = q_form(vec, vec)
        if abs(norm - signs[slot]) > TAU_QUADRIC * max(1.0, float(np.max(np.abs(vec)))) ** 2:
            raise NotOnQuadricError(f"슬롯 {slot} 의 벡터 노름이 {signs[slot]:+.0f} 이 아닙니다: {norm:.6g}")
        columns.append(vec)
        norms.append(float(signs[slot]))

    identity = np.eye(n)
    candidates = list(range(n))
    found: list[tuple[np.ndarray, float]] = []
    for _ in range(n - len(fixed)):
        frame = np.column_stack(columns)
        frame_norms = np.array(norms)
        residuals = _project_out(identity[:, candidates], frame, frame_norms, signs)
        q = signs @ (residuals * residuals)
        pick = int(np.argmax(np.abs(q)))
        best_vec, best_norm = residuals[:, pick], float(q[pick])

        if abs(best_norm) < 1e-12:
            # 남은 잔차가 모두 영벡터(null)이면 두 후보의 합을 쓴다
            best_norm = 0.0
            for i in range(len(candidates)):
                for k in range(i + 1, len(candidates)):
                    r = residuals[:, i] + residuals[:, k]
                    norm = q_form(r, r)
                    if abs(norm) > abs(best_norm):
                        best_vec, best_norm = r, norm
            logger.debug("null residuals, pair fallback |Q|=%.3e", abs(best_norm))
            if abs(best_norm) < 1e-12:
                raise NotOnQuadricError("직교 여공간이 퇴화되었습니다")
        else:
            candidates.pop(pick)

        c = best_vec / np.sqrt(abs(best_norm))
        # 재직교화 한 번
        c = _project_out(c[:, None], frame, frame_norms, signs)[:, 0]
        c = c / np.sqrt(abs(q_form(c, c)))
        sign = 1.0 if best_norm > 0 else -1.0
        columns.append(c)
        norms.append(sign)
        found.append((c, sign))

    free_slots = [k for k in range(n) if k not in fixed]
    pos_slots = [k for k in free_slots if signs[k] > 0]
    neg_slots = [k for k in free_slots if signs[k] < 0]
    pos_vecs = [c for c, s in found if s > 0]
    neg_vecs = [c for c, s in found if s < 0]
    if len(pos_vecs) != len(pos_slots) or len(neg_vecs) != len(neg_slots):
        raise NotOnQuadricError("고정 열의 부호 구조가 이차형식과 맞지 않습니다")

    g = np.zeros((n, n))
    for slot, vec in fixed.items():
        g[:, slot] = vec
    for slot, vec in zip(pos_slots, pos_vecs):
        g[:, slot] = vec
    for slot, vec in zip(neg_slots, neg_vecs):
        g[:, slot] = vec

    if np.linalg.det(g[:2, :2]) < 0:
        if not pos_slots:
            raise InvalidElementError("(u,t) 블록의 방향을 고정할 자유 열이 없습니다")
        g[:, pos_slots[0]] *= -1.0
    if np.linalg.det(g) < 0:
        if not neg_slots:
            raise InvalidElementError("행렬식 부호를 고정할 자유 열이 없습니다")
        g[:, neg_slots[-1]] *= -1.0
    return g


def eta_complete(v: np.ndarray) -> GroupElement:
    """첫 열이 v 인 SO_0(2,l-1) 원소"""
    v = np.asarray(v, dtype=float)
    l = dim_of(v)
    norm = q_form(v, v)
    if norm <= 0 or abs(norm - 1.0) > TAU_QUADRIC * max(1.0, float(np.max(np.abs(v)))) ** 2:
        raise NotOnQuadricError(f"이차곡면 위의 점이 아닙니다: Q(v,v) = {norm:.6g}")
    return GroupElement(complete_frame({0: v}, l))


def _single_plane(m: np.ndarray) -> tuple[int, int] | None:
    """두 좌표 평면 하나에만 값이 있는 생성원이면 (i, j) 반환"""
    rows, cols = np.nonzero(m)
    pairs = {tuple(sorted((int(i), int(j)))) for i, j in zip(rows, cols)}
    if len(pairs) != 1:
        return None
    i, j = next(iter(pairs))
    return (i, j) if i != j else None


def _nilpotent_degree(m: np.ndarray) -> int | None:
    n = m.shape[0]
    scale = max(1.0, float(np.max(np.abs(m))))
    power = np.eye(n)
    for k in range(1, n + 1):
        power = power @ m
        if np.max(np.abs(power)) <= 1e-14 * scale ** k:
            return k
    return None


def mat_exp(x: AlgebraElement) -> GroupElement:
    """행렬 지수함수

    멱영이면 유한 다항식, 한 평면의 부스트/회전이면 닫힌 형태,
    그 밖에는 scipy 의 스케일링-제곱 Padé 근사를 쓴다.
    """
    m = np.array(x.matrix)
    n = m.shape[0]
    if not m.any():
        return GroupElement(np.eye(n))

    plane = _single_plane(m)
    if plane is not None:
        i, j = plane
        b, c = m[i, j], m[j, i]
        result = np.eye(n)
        if b * c > 0:
            angle = np.sign(b) * np.sqrt(b * c)
            ch, sh = np.cosh(angle), np.sinh(angle)
            result[i, i] = result[j, j] = ch
            result[i, j] = b / angle * sh
            result[j, i] = c / angle * sh
        else:
            angle = np.sqrt(-b * c)
            result[i, i] = result[j, j] = np.cos(angle)
            result[i, j] = b / angle * np.sin(angle)
            result[j, i] = c / angle * np.sin(angle)
        return GroupElement(result)

    degree = _nilpotent_degree(m)
    if degree is not None:
        result = np.eye(n)
        term = np.eye(n)
        for k in range(1, degree):
            term = term @ m / k
            result = result + term
        return GroupElement(result)

    return GroupElement(expm(m))
