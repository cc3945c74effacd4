"""마크다운 레포트 생성 모듈"""

from config import MARKDOWN_CONFIG
from ..models.schema import CheckResult, ConjectureReport, SuiteReport


class MarkdownGenerator:
    """검증 스위트 / 추측 탐색 마크다운 레포트 생성기"""

    NOT_AVAILABLE = "-"

    def generate(self, report: SuiteReport) -> str:
        """전체 레포트 생성"""
        sections = [
            self._generate_header(report),
            self._generate_checks_section(report),
            self._generate_failures_section(report),
        ]
        return "\n\n---\n\n".join(filter(None, sections))

    def generate_conjecture(self, report: ConjectureReport) -> str:
        lines = [
            "# AdS_5 지평선 추측 탐색",
            "",
            "판정 없이 참고용으로만 보고한다.",
            "",
            f"- **표본 수**: {report.samples} (seed {report.seed})",
            f"- **Horizon 판정**: {report.horizon_tags}",
            f"- **|u²-x²-z₁²-z₂²| ≤ {report.tolerance:g}**: {report.residual_matches}",
            f"- **일치율**: {report.agreement_rate:.4f}",
            f"- **후보 점 Horizon 비율**: {report.candidate_horizon_fraction:.4f} "
            f"({report.candidates}개, 최대 잔차 {self._fmt(report.candidate_max_residual)})",
        ]
        return "\n".join(lines)

    def _fmt(self, value: float | None) -> str:
        if value is None:
            return self.NOT_AVAILABLE
        return format(value, MARKDOWN_CONFIG["residual_format"])

    def _status(self, check: CheckResult) -> str:
        if check.informational:
            return "INFO"
        return "PASS" if check.passed else "FAIL"

    def _generate_header(self, report: SuiteReport) -> str:
        """헤더 생성"""
        total = len(report.checks)
        failed = len(report.failures)
        lines = [
            f"# 검증 결과: {report.suite}",
            "",
            f"- **결과**: {'PASS' if report.passed else 'FAIL'} ({total - failed}/{total})",
            f"- **seed**: {report.seed}",
            f"- **표본 배율**: {report.scale:g}",
            f"- **소요 시간**: {report.elapsed_seconds:.1f}s",
        ]
        return "\n".join(lines)

    def _generate_checks_section(self, report: SuiteReport) -> str:
        lines = [
            "## 검사 항목",
            "",
            "| 항목 | 결과 | 표본 | 최대 잔차 | 허용 오차 | 위반 | 비고 |",
            "|------|------|------|-----------|-----------|------|------|",
        ]
        for check in report.checks[:MARKDOWN_CONFIG["max_table_rows"]]:
            lines.append(
                f"| {check.name} | {self._status(check)} | {check.samples} | "
                f"{self._fmt(check.residual)} | {self._fmt(check.tolerance)} | "
                f"{check.violations} | {check.detail or self.NOT_AVAILABLE} |"
            )
        return "\n".join(lines)

    def _generate_failures_section(self, report: SuiteReport) -> str:
        if report.passed:
            return ""
        lines = ["## 실패 항목"]
        for check in report.failures:
            lines.append(
                f"- **{check.name}**: 잔차 {self._fmt(check.residual)} "
                f"(허용 {self._fmt(check.tolerance)}), 위반 {check.violations}건"
            )
        return "\n".join(lines)
