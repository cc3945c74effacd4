"""정확한 인과 분류기 (Singular / BlackHole / Horizon / FreeInterior)"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .escape import EscapeSet, IntersectionClass, branch_data, escape_caps
from ..errors import RepresentativeError
from ..horizon.lateral import horizon_residual
from ..models.schema import CausalTag, ClassifyReport, HorizonSide
from ..spacetime.ads import (
    AdSPoint,
    Representative,
    is_singular,
    representative,
    singular_residual,
)

logger = logging.getLogger(__name__)

_TAG_BY_CLASS = {
    IntersectionClass.EMPTY: CausalTag.BLACK_HOLE,
    IntersectionClass.MEASURE_ZERO: CausalTag.HORIZON,
    IntersectionClass.HAS_INTERIOR: CausalTag.FREE_INTERIOR,
}


@dataclass(frozen=True, eq=False)
class CausalClass:
    """분류 결과와 진단값

    escape 는 미래(s > 0), past_escape 는 과거(s < 0) 탈출 집합이다.
    과거 쪽은 미래 탈출 집합에 내부가 있을 때만 계산한다.
    """
    tag: CausalTag
    point: AdSPoint
    singular_residual: float
    escape: Optional[EscapeSet] = None
    past_escape: Optional[EscapeSet] = None
    horizon_side: Optional[HorizonSide] = None

    @property
    def decisive(self) -> Optional[EscapeSet]:
        """판정을 결정한 탈출 집합"""
        if self.horizon_side == HorizonSide.PAST:
            return self.past_escape
        return self.escape

    @property
    def gap(self) -> Optional[float]:
        escape = self.decisive
        return escape.gap if escape is not None else None

    @property
    def width(self) -> Optional[float]:
        escape = self.decisive
        return escape.width if escape is not None else None

    def to_report(self) -> ClassifyReport:
        residual = horizon_residual(self.point)
        escape = self.decisive
        return ClassifyReport(
            dim=self.point.dim,
            coordinates=[float(c) for c in self.point.coords],
            tag=self.tag,
            singular_residual=self.singular_residual,
            horizon_residual=residual.value,
            horizon_conjectural=residual.conjectural,
            horizon_side=self.horizon_side,
            intersection_class=self.escape.intersection_class.value if self.escape else None,
            past_intersection_class=self.past_escape.intersection_class.value if self.past_escape else None,
            cap_gap=escape.gap if escape else None,
            width=escape.width if escape else None,
            witness=[float(w) for w in escape.witness] if escape and escape.witness is not None else None,
        )


def classify(p: AdSPoint, seed: Optional[int] = None) -> CausalClass:
    """점의 인과 분류

    특이점 띠 안이면 Singular, 아니면 대표원의 미래 탈출 집합이
    비었으면 BlackHole, 측도 0 이면 Horizon 이다. 미래 탈출 집합에
    내부가 있어도 과거 탈출 집합이 측도 0 이면 Horizon(과거 쪽),
    그 밖에는 FreeInterior.
    """
    if is_singular(p):
        return CausalClass(tag=CausalTag.SINGULAR, point=p, singular_residual=singular_residual(p))
    return classify_representative(representative(p, seed=seed))


def classify_representative(rep: Representative) -> CausalClass:
    """주어진 대표원으로 분류"""
    p = rep.point
    residual = singular_residual(p)
    if is_singular(p):
        return CausalClass(tag=CausalTag.SINGULAR, point=p, singular_residual=residual)
    if not rep.time_oriented:
        raise RepresentativeError("시간 방향이 뒤집힌 대표원으로는 분류할 수 없습니다")
    bd = branch_data(rep)
    escape = escape_caps(bd)
    tag = _TAG_BY_CLASS[escape.intersection_class]
    side = HorizonSide.FUTURE if tag == CausalTag.HORIZON else None
    past = None
    if tag == CausalTag.FREE_INTERIOR:
        past = escape_caps(bd.time_reversed())
        if past.intersection_class == IntersectionClass.MEASURE_ZERO:
            tag, side = CausalTag.HORIZON, HorizonSide.PAST
    result = CausalClass(tag=tag, point=p, singular_residual=residual, escape=escape,
                         past_escape=past, horizon_side=side)
    logger.debug("classify %r -> %s (gap=%.3e)", p, tag.value, result.gap)
    return result


def point_seed(seed: int, index: int) -> int:
    """배치 내 점별 시드 (스케줄링과 무관)"""
    return seed ^ index


def classify_batch(
    points: Sequence[AdSPoint],
    seed: Optional[int] = None,
    workers: int = 1,
) -> list[CausalClass]:
    """여러 점 분류 (입력 순서 유지)"""
    seeds = [None if seed is None else point_seed(seed, i) for i in range(len(points))]
    if workers <= 1:
        return [classify(p, s) for p, s in zip(points, seeds)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(classify, points, seeds))
