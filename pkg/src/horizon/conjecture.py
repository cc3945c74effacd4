"""AdS_5 지평선 추측 탐색 (판정 없이 보고만 함)"""

import logging

import numpy as np

from ..algebra.ambient import random_point
from ..causal.classifier import classify, point_seed
from ..models.schema import CausalTag, ConjectureReport
from ..spacetime.ads import AdSPoint, iota
from .lateral import BRANCHES, h3_parametrize, horizon_residual, lateral_matrix

logger = logging.getLogger(__name__)

CONJECTURE_TOLERANCE = 1e-6


def candidate_points(count: int, seed: int) -> list[AdSPoint]:
    """exp(α1 X0±(z1))·exp(α2 X0±(z2))·ι(ι(ℋ3)) 형태의 후보 점"""
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        base = h3_parametrize(
            int(rng.choice([1, -1])),
            int(rng.choice([1, -1])),
            float(rng.normal()),
            float(rng.normal()),
        )
        g = (
            lateral_matrix(BRANCHES[int(rng.integers(2))], float(rng.normal()), l=5, z_index=0)
            @ lateral_matrix(BRANCHES[int(rng.integers(2))], float(rng.normal()), l=5, z_index=1)
        )
        points.append(AdSPoint(g.act(iota(iota(base)).coords)))
    return points


def run_conjecture(samples: int, seed: int, tolerance: float = CONJECTURE_TOLERANCE) -> ConjectureReport:
    """임의 점에서 Horizon 판정과 u^2-x^2-z1^2-z2^2 ≈ 0 의 일치율, 후보 점의 Horizon 비율"""
    if samples < 1:
        raise ValueError(f"samples 는 1 이상이어야 합니다: {samples}")
    horizon_tags = residual_matches = both = agree = 0
    for i in range(samples):
        p = random_point(5, point_seed(seed, i))
        is_horizon = classify(p, seed=point_seed(seed, i)).tag == CausalTag.HORIZON
        on_surface = abs(horizon_residual(p).value) <= tolerance
        horizon_tags += is_horizon
        residual_matches += on_surface
        both += is_horizon and on_surface
        agree += is_horizon == on_surface

    n_candidates = max(1, samples // 10)
    candidates = candidate_points(n_candidates, seed)
    tags = [classify(p).tag for p in candidates]
    residuals = [abs(horizon_residual(p).value) for p in candidates]
    logger.debug("conjecture survey: %d random, %d candidates", samples, n_candidates)
    return ConjectureReport(
        samples=samples,
        seed=seed,
        tolerance=tolerance,
        horizon_tags=horizon_tags,
        residual_matches=residual_matches,
        both=both,
        agreement_rate=agree / samples,
        candidates=n_candidates,
        candidate_horizon_fraction=sum(t == CausalTag.HORIZON for t in tags) / n_candidates,
        candidate_max_residual=float(max(residuals)),
    )
