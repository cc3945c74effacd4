from .schema import (
    CausalTag,
    HorizonSide,
    ScanRecord,
    OrbitRecord,
    ClassifyReport,
    CheckResult,
    SuiteReport,
    ConjectureReport,
)

__all__ = [
    "CausalTag",
    "HorizonSide",
    "ScanRecord",
    "OrbitRecord",
    "ClassifyReport",
    "CheckResult",
    "SuiteReport",
    "ConjectureReport",
]
