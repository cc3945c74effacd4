"""방향 표본 기반 분류 (정확 분류기의 교차 검증용)"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import F_MIN, ORACLE_MARGIN
from .escape import branch_data, escaping_mask
from ..models.schema import CausalTag
from ..spacetime.ads import AdSPoint, is_singular, representative

MIN_DIRECTIONS = 16


def _random_rotation(rng: np.random.Generator, m: int) -> np.ndarray:
    """SO(m) 의 균등 임의 원소 (정규 행렬의 QR)"""
    q, r = np.linalg.qr(rng.normal(size=(m, m)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def sphere_directions(m: int, n: int, seed: int) -> np.ndarray:
    """S^{m-1} 위의 준균등 방향 n 개 (행 벡터)

    S^1 은 등간격(임의 위상), S^2 는 임의 회전을 준 피보나치 격자,
    S^3 은 정규분포 표본을 정규화해서 쓴다.
    """
    if n < MIN_DIRECTIONS:
        raise ValueError(f"방향 수는 {MIN_DIRECTIONS} 이상이어야 합니다: {n}")
    rng = np.random.default_rng(seed)
    if m == 2:
        phase = rng.uniform(0.0, 2.0 * np.pi / n)
        angles = phase + 2.0 * np.pi * np.arange(n) / n
        return np.column_stack((np.cos(angles), np.sin(angles)))
    if m == 3:
        k = np.arange(n) + 0.5
        polar = np.arccos(1.0 - 2.0 * k / n)
        azimuth = np.pi * (1.0 + np.sqrt(5.0)) * k
        lattice = np.column_stack((
            np.cos(azimuth) * np.sin(polar),
            np.sin(azimuth) * np.sin(polar),
            np.cos(polar),
        ))
        return lattice @ _random_rotation(rng, 3).T
    if m == 4:
        g = rng.normal(size=(n, 4))
        return g / np.linalg.norm(g, axis=1, keepdims=True)
    raise ValueError(f"지원하지 않는 방향 구면입니다: S^{m - 1}")


def resolution(m: int, n: int) -> float:
    """표본 간 대표 각 간격"""
    if m == 2:
        return 2.0 * np.pi / n
    if m == 3:
        return float(np.sqrt(4.0 * np.pi / n))
    return float((2.0 * np.pi ** 2 / n) ** (1.0 / 3.0))


def comparison_band(m: int, n: int) -> float:
    """정확/표본 판정을 비교할 때 제외하는 폭"""
    return max(ORACLE_MARGIN, 3.0 * resolution(m, n))


@dataclass(frozen=True)
class SampledClass:
    """표본 분류 결과"""
    tag: CausalTag
    escaping: int
    n_dirs: int
    past_escaping: int = 0

    @property
    def fraction(self) -> float:
        return self.escaping / self.n_dirs

    @property
    def past_fraction(self) -> float:
        return self.past_escaping / self.n_dirs


def classify_sampled(p: AdSPoint, n_dirs: int, seed: int, f_min: float = F_MIN) -> SampledClass:
    """방향 표본으로 분류

    미래로 탈출하는 방향이 없으면 BlackHole, 비율이 f_min 미만이면 Horizon(의심)이다.
    미래 비율이 f_min 이상이어도 과거 비율이 (0, f_min) 이면 Horizon, 그 밖에는 FreeInterior.
    """
    if n_dirs < MIN_DIRECTIONS:
        raise ValueError(f"방향 수는 {MIN_DIRECTIONS} 이상이어야 합니다: {n_dirs}")
    if is_singular(p):
        return SampledClass(tag=CausalTag.SINGULAR, escaping=0, n_dirs=n_dirs)

    bd = branch_data(representative(p, seed=seed))
    directions = sphere_directions(bd.sphere_dim, n_dirs, seed)
    escaping = int(np.count_nonzero(escaping_mask(bd, directions)))
    past = int(np.count_nonzero(escaping_mask(bd.time_reversed(), directions)))
    if escaping == 0:
        tag = CausalTag.BLACK_HOLE
    elif escaping / n_dirs < f_min:
        tag = CausalTag.HORIZON
    elif 0 < past / n_dirs < f_min:
        tag = CausalTag.HORIZON
    else:
        tag = CausalTag.FREE_INTERIOR
    return SampledClass(tag=tag, escaping=escaping, n_dirs=n_dirs, past_escaping=past)


def oracle_agrees(exact_tag: CausalTag, gap: Optional[float], width: Optional[float],
                  sampled: SampledClass, band: float) -> Optional[bool]:
    """정확 판정과 표본 판정 비교 (비교 대상이 아니면 None)

    비교는 "탈출 집합이 비었다" 와 "탈출하는 표본이 없다" 의 일치로 본다.
    """
    if exact_tag == CausalTag.BLACK_HOLE:
        if gap is None or gap <= band:
            return None
        return sampled.escaping == 0
    if exact_tag == CausalTag.FREE_INTERIOR:
        if width is None or width <= band or abs(gap) <= band:
            return None
        return sampled.escaping > 0
    return None


def tags_agree(exact_tag: CausalTag, gap: Optional[float], sampled: SampledClass,
               margin: float = ORACLE_MARGIN) -> Optional[bool]:
    """태그 그대로의 일치 (|gap| <= margin 이거나 특이점이면 None)"""
    if exact_tag == CausalTag.SINGULAR or gap is None or abs(gap) <= margin:
        return None
    return sampled.tag == exact_tag
