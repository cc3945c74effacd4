"""검증 스위트 / 레포트 테스트"""

import pytest

from src.models.schema import CheckResult, SuiteReport
from src.reporter.markdown_generator import MarkdownGenerator
from src.verify.suites import SUITE_CHECKS, run_suite, suite_names

SMALL_SCALE = 0.02


class TestRunSuite:
    """스위트 실행 테스트"""

    @pytest.mark.parametrize("name", list(SUITE_CHECKS))
    def test_suite_passes(self, name):
        report = run_suite(name, seed=0, scale=SMALL_SCALE)
        assert len(report.checks) == len(SUITE_CHECKS[name])
        failed = [(c.name, c.residual, c.violations, c.detail) for c in report.failures]
        assert report.passed, failed

    def test_all_runs_every_check(self):
        report = run_suite("all", seed=1, scale=0.01)
        assert len(report.checks) == sum(len(fns) for fns in SUITE_CHECKS.values())

    @pytest.mark.parametrize("suite, names", [
        ("ads3", {"oracle_tags_ads3"}),
        ("ads4", {"oracle_tags_ads4"}),
        ("inclusion", {"ads5_conjecture"}),
    ])
    def test_informational_checks(self, suite, names):
        report = run_suite(suite, seed=0, scale=SMALL_SCALE)
        informational = {c.name for c in report.checks if c.informational}
        assert informational == names
        assert all(c.name not in names for c in report.failures)
        tags = [c for c in report.checks if c.name.startswith("oracle_tags")]
        for check in tags:
            assert "literal tag agreement" in check.detail

    def test_names(self):
        assert suite_names() == ["algebra", "ads3", "ads4", "inclusion", "lemmas", "all"]

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nope", seed=0)

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            run_suite("algebra", seed=0, scale=0.0)


class TestSuiteReport:
    """레포트 모델 / 마크다운 테스트"""

    def _report(self) -> SuiteReport:
        return SuiteReport(
            suite="algebra",
            seed=0,
            checks=[
                CheckResult(name="ok_check", passed=True, samples=10, residual=1e-14, tolerance=1e-12),
                CheckResult(name="bad_check", passed=False, samples=10, residual=1e-3, tolerance=1e-12, violations=2),
                CheckResult(name="survey", passed=False, informational=True),
            ],
        )

    def test_failures_skip_informational(self):
        report = self._report()
        assert not report.passed
        assert [c.name for c in report.failures] == ["bad_check"]

    def test_passed_serialized(self):
        assert '"passed":false' in self._report().model_dump_json()

    def test_markdown(self):
        markdown = MarkdownGenerator().generate(self._report())
        assert "# 검증 결과: algebra" in markdown
        assert "| bad_check | FAIL |" in markdown
        assert "| survey | INFO |" in markdown
        assert "## 실패 항목" in markdown

    def test_markdown_passing(self):
        report = SuiteReport(suite="lemmas", seed=3, checks=[CheckResult(name="ok", passed=True)])
        markdown = MarkdownGenerator().generate(report)
        assert "## 실패 항목" not in markdown
        assert "PASS (1/1)" in markdown


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
