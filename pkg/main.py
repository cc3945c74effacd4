"""BTZ 인과 구조 계산기 - CLI 진입점"""

import logging
from collections import Counter
from pathlib import Path
from typing import Optional

import numpy as np
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from config import (
    CLI_QUADRIC_BAND,
    DEFAULT_N_DIRS,
    DEFAULT_SEED,
    DEFAULT_SIGMA,
    ORBIT_COLUMNS,
    OUTPUT_DIR,
    SCAN_COLUMNS,
    TAU_QUADRIC,
)
from src.algebra.ambient import AdSPoint, check_dim, q_form, random_point
from src.causal.classifier import classify, classify_batch, point_seed
from src.causal.escape import branch_data, branch_roots
from src.causal.sampler import classify_sampled
from src.horizon.conjecture import run_conjecture
from src.horizon.lateral import h4_samples, horizon_residual
from src.models.schema import OrbitRecord, ScanRecord
from src.reporter.markdown_generator import MarkdownGenerator
from src.reporter.record_writer import RecordWriter, format_float
from src.spacetime.ads import geodesic_point, representative, reproject
from src.verify.suites import run_suite, suite_names

app = typer.Typer(help="AdS 이차곡면 모형의 BTZ 인과 구조 계산 및 검증")
console = Console()


def _fail(message: str) -> None:
    """사용법 / 데이터 오류 (exit 2)"""
    console.print(f"[bold red]오류:[/] {escape(message)}")
    raise typer.Exit(code=2)


def _parse_vector(text: str, name: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError:
        _fail(f"{name} 를 읽을 수 없습니다: {text!r} (예: 0,1,0,0)")


def _load_point(dim: int, text: str) -> AdSPoint:
    """--point 를 AdS_dim 의 점으로 (띠 안이면 (u,t) 반지름으로 재투영)"""
    try:
        check_dim(dim)
    except ValueError as e:
        _fail(str(e))
    coords = _parse_vector(text, "--point")
    if coords.shape[0] != dim + 1:
        _fail(f"AdS_{dim} 의 점은 성분이 {dim + 1}개여야 합니다: {coords.shape[0]}개")
    residual = abs(q_form(coords, coords) - 1.0)
    if residual <= TAU_QUADRIC:
        return AdSPoint(coords)
    try:
        point = reproject(coords, band=CLI_QUADRIC_BAND)
    except ValueError as e:
        _fail(str(e))
    console.print(f"[yellow](u,t) 반지름 재투영: |Q-1| = {residual:.3e}[/]")
    return point


def _fmt_coords(coords: np.ndarray) -> str:
    return ", ".join(format(float(c), ".6g") for c in coords)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="상세 로그 출력"),
):
    """AdS_l (l = 3, 4, 5) 의 점 분류, 표본 스캔, 지평선 궤도 생성, 검증 스위트"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


@app.command("classify")
def cmd_classify(
    dim: int = typer.Option(..., "--dim", "-d", help="AdS 차원 l (3, 4, 5)"),
    point: str = typer.Option(..., "--point", "-p", help="쉼표로 구분한 좌표 (u,t,x,y,z...)"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED", help="대표원 시드"),
    n_dirs: int = typer.Option(0, "--n-dirs", help=f"0 보다 크면 방향 표본 판정도 함께 출력 (권장 {DEFAULT_N_DIRS})"),
    fmt: str = typer.Option("text", "--format", "-f", help="text | json"),
):
    """점 하나의 인과 분류"""
    if fmt not in ("text", "json"):
        _fail(f"지원하지 않는 형식입니다: {fmt}")
    p = _load_point(dim, point)
    try:
        result = classify(p, seed=seed)
    except ValueError as e:
        _fail(str(e))
    report = result.to_report()
    if n_dirs > 0:
        try:
            sampled = classify_sampled(p, n_dirs, seed)
        except ValueError as e:
            _fail(str(e))
        report.sampled_tag = sampled.tag
        report.escaping_fraction = sampled.fraction

    if fmt == "json":
        typer.echo(report.model_dump_json(indent=2))
        return

    console.print(f"\n[bold]tag={report.tag.value}[/]")
    if report.horizon_side is not None:
        console.print(f"  지평선 쪽: {report.horizon_side.value}")
    console.print(f"  점: ({_fmt_coords(p.coords)})")
    console.print(f"  t²-y²: {format_float(report.singular_residual)}")
    label = "u²-x²-Σz² (추측)" if report.horizon_conjectural else "u²-x²-Σz²"
    console.print(f"  {label}: {format_float(report.horizon_residual)}")
    if report.intersection_class is not None:
        console.print(f"  탈출 집합: {report.intersection_class}")
        console.print(f"  cap gap: {format_float(report.cap_gap)}")
        console.print(f"  width: {format_float(report.width)}")
    if report.witness is not None:
        console.print(f"  탈출 방향 예: ({_fmt_coords(np.array(report.witness))})")
    if report.sampled_tag is not None:
        console.print(f"  표본 판정: {report.sampled_tag.value} (탈출 비율 {report.escaping_fraction:.4g})")


@app.command("scan")
def cmd_scan(
    dim: int = typer.Option(..., "--dim", "-d", help="AdS 차원 l (3, 4, 5)"),
    samples: int = typer.Option(1000, "--samples", "-n", help="표본 수"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED"),
    sigma: float = typer.Option(DEFAULT_SIGMA, "--sigma", help="공간 성분 표준편차"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="출력 파일"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv | jsonl"),
    workers: int = typer.Option(1, "--workers", help="병렬 스레드 수"),
):
    """임의 점 표본을 분류해 파일로 저장"""
    if samples < 1:
        _fail("--samples 는 1 이상이어야 합니다")
    try:
        check_dim(dim)
        writer = RecordWriter(SCAN_COLUMNS, fmt)
        seeds = [point_seed(seed, i) for i in range(samples)]
        points = [random_point(dim, s, sigma) for s in seeds]
    except ValueError as e:
        _fail(str(e))
    out = out or OUTPUT_DIR / f"scan_ads{dim}.{fmt}"

    results = classify_batch(points, seed=seed, workers=workers)
    records = [
        ScanRecord(
            index=i,
            dim=dim,
            coordinates=[float(c) for c in r.point.coords],
            tag=r.tag,
            horizon_residual=horizon_residual(r.point).value,
            singular_residual=r.singular_residual,
            cap_gap=r.gap,
            seed=seeds[i],
        )
        for i, r in enumerate(results)
    ]
    try:
        writer.write(records, out)
    except OSError as e:
        _fail(f"파일을 쓸 수 없습니다: {e}")

    counts = Counter(r.tag.value for r in results)
    summary = ", ".join(f"{tag}={count}" for tag, count in sorted(counts.items()))
    console.print(f"[green]✓[/] {out} ({samples}개) {summary}")


@app.command("orbit")
def cmd_orbit(
    dim: int = typer.Option(4, "--dim", "-d", help="4 만 지원"),
    samples: int = typer.Option(1000, "--samples", "-n", help="생성할 점 수"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="출력 파일"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv | jsonl"),
):
    """ℋ4 측면 클래스 G_{X0±}·ι(ℋ3) 의 점 생성"""
    if dim != 4:
        _fail("orbit 은 --dim 4 만 지원합니다")
    if samples < 1:
        _fail("--samples 는 1 이상이어야 합니다")
    try:
        writer = RecordWriter(ORBIT_COLUMNS, fmt)
    except ValueError as e:
        _fail(str(e))
    out = out or OUTPUT_DIR / f"orbit_ads4.{fmt}"

    records = [
        OrbitRecord(
            index=i,
            coordinates=[float(c) for c in s.point.coords],
            branch=s.params.branch,
            alpha_lateral=s.params.alpha,
            horizon_residual=horizon_residual(s.point).value,
        )
        for i, s in enumerate(h4_samples(samples, seed))
    ]
    try:
        writer.write(records, out)
    except OSError as e:
        _fail(f"파일을 쓸 수 없습니다: {e}")

    worst = max(abs(r.horizon_residual) for r in records)
    console.print(f"[green]✓[/] {out} ({samples}개) 최대 |u²-x²-z²| = {worst:.3e}")


@app.command("verify")
def cmd_verify(
    suite: str = typer.Option("all", "--suite", "-s", help=" | ".join(suite_names())),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED"),
    scale: float = typer.Option(1.0, "--scale", help="표본 수 배율"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="마크다운 레포트 경로"),
):
    """검증 스위트 실행 (모두 통과하면 exit 0, 실패하면 exit 1)"""
    if suite not in suite_names():
        _fail(f"알 수 없는 스위트입니다: {suite} (지원: {', '.join(suite_names())})")
    try:
        report = run_suite(suite, seed, scale)
    except ValueError as e:
        _fail(str(e))

    console.print(f"\n[bold]검증: {suite}[/] (seed={seed}, scale={scale:g})")
    for check in report.checks:
        mark = "[green]PASS[/]" if check.passed else "[red]FAIL[/]"
        residual = f"{check.residual:.3e}" if check.residual is not None else "-"
        console.print(f"  {mark} {check.name}: n={check.samples} residual={residual} "
                      f"violations={check.violations} {check.detail}")

    if out is not None:
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(MarkdownGenerator().generate(report), encoding="utf-8")
        except OSError as e:
            _fail(f"파일을 쓸 수 없습니다: {e}")
        console.print(f"  레포트: {out}")

    if not report.passed:
        console.print(f"[red]실패 {len(report.failures)}건[/]")
        raise typer.Exit(code=1)
    console.print(f"[green]✓ 전체 통과[/] ({report.elapsed_seconds:.1f}s)")


@app.command("geodesic")
def cmd_geodesic(
    dim: int = typer.Option(..., "--dim", "-d"),
    point: str = typer.Option(..., "--point", "-p"),
    direction: str = typer.Option(..., "--direction", "-w", help="방향 (정규화됨)"),
    s: float = typer.Option(1.0, "--s", help="광선 매개변수 (s > 0 이 미래)"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED"),
):
    """광선 위의 점과 특이점 교차 근"""
    p = _load_point(dim, point)
    w = _parse_vector(direction, "--direction")
    if w.shape[0] != dim - 1:
        _fail(f"방향은 성분이 {dim - 1}개여야 합니다: {w.shape[0]}개")
    norm = float(np.linalg.norm(w))
    if norm == 0.0:
        _fail("영벡터는 방향이 될 수 없습니다")
    w = w / norm

    rep = representative(p, seed=seed)
    console.print(f"\n  s={s:g}: ({_fmt_coords(geodesic_point(rep, w, s).coords)})")
    try:
        roots = branch_roots(branch_data(rep), w)
    except ValueError as e:
        _fail(str(e))
    for name, root in zip(("T+Y", "T-Y"), roots):
        if root is None:
            console.print(f"  {name}: 교차 없음")
        else:
            when = "future" if root > 0 else "past"
            console.print(f"  {name}: s={format_float(root)} ({when})")


@app.command("conjecture")
def cmd_conjecture(
    samples: int = typer.Option(10_000, "--samples", "-n"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", envvar="BTZ_SEED"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="마크다운 레포트 경로"),
):
    """AdS_5 지평선 추측 탐색 (참고용, 항상 exit 0)"""
    if samples < 1:
        _fail("--samples 는 1 이상이어야 합니다")
    report = run_conjecture(samples, seed)
    text = MarkdownGenerator().generate_conjecture(report)
    if out is not None:
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
        except OSError as e:
            _fail(f"파일을 쓸 수 없습니다: {e}")
    console.print(text)


if __name__ == "__main__":
    app()
