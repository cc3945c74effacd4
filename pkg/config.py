"""설정 상수"""

from pathlib import Path

# 프로젝트 루트
PROJECT_ROOT = Path(__file__).parent

# 출력 디렉토리
OUTPUT_DIR = PROJECT_ROOT / "output"

# 지원 차원 (AdS_l)
DIMENSIONS = (3, 4, 5)

# 허용 오차
TOLERANCES = {
    "group": 1e-9,       # g^T η g = η, det g = 1
    "algebra": 1e-12,    # X^T η + η X = 0
    "quadric": 1e-9,     # |Q(p,p) - 1|
    "singular": 1e-9,    # |t^2 - y^2|
    "denominator": 1e-12,  # |A±(w)| 이하이면 교차 없음
    "angle": 1e-9,       # 캡 접촉 판정
    "inversion": 1e-9,   # |u' ∓ x'|
    "tangent": 1e-9,     # 접벡터 분류
    "horizon": 1e-9,     # 지평선 잔차
    "cli_quadric_band": 1e-6,  # CLI 입력 재투영 허용 범위
}

TAU_GROUP = TOLERANCES["group"]
TAU_ALG = TOLERANCES["algebra"]
TAU_QUADRIC = TOLERANCES["quadric"]
TAU_SING = TOLERANCES["singular"]
TAU_DEN = TOLERANCES["denominator"]
TAU_ANGLE = TOLERANCES["angle"]
TAU_INV = TOLERANCES["inversion"]
TAU_TANGENT = TOLERANCES["tangent"]
TAU_HORIZON = TOLERANCES["horizon"]
CLI_QUADRIC_BAND = TOLERANCES["cli_quadric_band"]

# 샘플링 기본값
DEFAULT_SEED = 0
DEFAULT_SIGMA = 1.0
DEFAULT_N_DIRS = 4096
F_MIN = 1e-3          # 탈출 방향 비율 하한 (샘플링 판정)
ORACLE_MARGIN = 1e-3  # 정확 판정 / 샘플링 판정 비교 시 제외 구간
MAX_REPRESENTATIVE_RETRIES = 64

# 검증 스위트
SUITES = ["algebra", "ads3", "ads4", "inclusion", "lemmas", "all"]

# 출력 형식
FLOAT_FORMAT = ".17g"
SCAN_COLUMNS = [
    "index",
    "dim",
    "coordinates",
    "tag",
    "horizon_residual",
    "singular_residual",
    "cap_gap",
    "seed",
]
ORBIT_COLUMNS = [
    "index",
    "coordinates",
    "branch",
    "alpha_lateral",
    "horizon_residual",
]
OUTPUT_FORMATS = ["csv", "jsonl"]

# 마크다운 레포트 설정
MARKDOWN_CONFIG = {
    "max_table_rows": 50,
    "residual_format": ".3e",
}
