"""Pydantic 모델 정의 - 출력 레코드 / 레포트 스키마"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, computed_field


class CausalTag(str, Enum):
    """인과 구조 분류"""
    SINGULAR = "Singular"
    BLACK_HOLE = "BlackHole"
    HORIZON = "Horizon"
    FREE_INTERIOR = "FreeInterior"


class HorizonSide(str, Enum):
    """지평선 판정에 쓰인 시간 방향"""
    FUTURE = "future"
    PAST = "past"


class ScanRecord(BaseModel):
    """scan 결과 행"""
    index: int = Field(..., ge=0, description="샘플 번호")
    dim: int = Field(..., description="AdS 차원 l")
    coordinates: list[float] = Field(..., description="(u, t, x, y, z...)")
    tag: CausalTag
    horizon_residual: float = Field(..., description="u^2 - x^2 - Σz^2")
    singular_residual: float = Field(..., description="t^2 - y^2")
    cap_gap: Optional[float] = Field(None, description="Δ - (θ+ + θ-), 특이점이면 없음")
    seed: int = Field(..., description="점별 시드")


class OrbitRecord(BaseModel):
    """orbit 결과 행 (ℋ4 측면 클래스 점)"""
    index: int = Field(..., ge=0)
    coordinates: list[float]
    branch: str = Field(..., description="plus (X0+) / minus (X0-)")
    alpha_lateral: float = Field(..., description="측면 작용 매개변수")
    horizon_residual: float


class ClassifyReport(BaseModel):
    """단일 점 분류 결과"""
    dim: int
    coordinates: list[float]
    tag: CausalTag
    singular_residual: float
    horizon_residual: float
    horizon_conjectural: bool = Field(False, description="l=5 잔차는 추측 단계")
    horizon_side: Optional[HorizonSide] = Field(None, description="Horizon 일 때 측도 0 인 쪽 (미래 / 과거)")
    intersection_class: Optional[str] = Field(None, description="미래 탈출 집합")
    past_intersection_class: Optional[str] = Field(None, description="과거 탈출 집합 (미래 쪽에 내부가 있을 때만)")
    cap_gap: Optional[float] = Field(None, description="판정을 결정한 탈출 집합의 gap")
    width: Optional[float] = None
    witness: Optional[list[float]] = Field(None, description="탈출 방향 예시")
    sampled_tag: Optional[CausalTag] = None
    escaping_fraction: Optional[float] = None


class CheckResult(BaseModel):
    """검증 항목 하나의 결과"""
    name: str
    passed: bool
    samples: int = 0
    residual: Optional[float] = Field(None, description="최대 잔차")
    tolerance: Optional[float] = None
    violations: int = 0
    detail: str = ""
    informational: bool = Field(False, description="통과/실패 판정에서 제외")


class SuiteReport(BaseModel):
    """검증 스위트 결과"""
    suite: str
    seed: int
    scale: float = Field(1.0, description="표본 수 배율")
    checks: list[CheckResult] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.informational and not c.passed]


class ConjectureReport(BaseModel):
    """AdS_5 지평선 추측 탐색 결과 (판정 없음)"""
    samples: int
    seed: int
    tolerance: float
    horizon_tags: int = 0
    residual_matches: int = 0
    both: int = 0
    agreement_rate: float = 0.0
    candidates: int = 0
    candidate_horizon_fraction: float = 0.0
    candidate_max_residual: float = 0.0
