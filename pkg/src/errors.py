"""예외 정의

모두 ValueError 하위 클래스라서 호출 측에서는 ValueError 하나로도 잡을 수 있다.
"""


class DimensionError(ValueError):
    """차원 불일치 / 지원하지 않는 차원"""


class NotOnQuadricError(ValueError):
    """Q(p,p) = 1 을 만족하지 않는 점"""


class InvalidElementError(ValueError):
    """군 / 대수 원소 조건 위반"""


class InvalidRootLabelError(ValueError):
    """해당 차원에 없는 제한근 라벨"""


class SingularPointError(ValueError):
    """특이점(t^2 - y^2 = 0)에서는 정의되지 않는 연산"""


class HorizonCaseError(ValueError):
    """|u| = |x| 인 경우 (특수 대표원 없음)"""


class DegenerateInversionError(ValueError):
    """측면 작용 역변환의 분모가 0"""


class RepresentativeError(ValueError):
    """대표원 조건을 만족시키지 못함"""
