"""scan / orbit 레코드 파일 저장 (CSV, JSON-lines)"""

import csv
from pathlib import Path
from typing import Iterable, Sequence

from pydantic import BaseModel

from config import FLOAT_FORMAT, OUTPUT_FORMATS

COORDINATE_SEPARATOR = ";"


def format_float(value: float | None) -> str:
    """17 유효숫자, '.' 소수점"""
    if value is None:
        return ""
    return format(float(value), FLOAT_FORMAT)


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (list, tuple)):
        return COORDINATE_SEPARATOR.join(format_float(v) for v in value)
    if value is None:
        return ""
    return str(getattr(value, "value", value))


class RecordWriter:
    """고정 열 순서로 레코드를 기록"""

    def __init__(self, columns: Sequence[str], fmt: str = "csv"):
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"지원하지 않는 형식입니다: {fmt} (지원: {OUTPUT_FORMATS})")
        self.columns = list(columns)
        self.fmt = fmt

    def write(self, records: Iterable[BaseModel], path: Path) -> int:
        """파일에 기록하고 행 수를 반환"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        count = 0
        with open(path, "w", encoding="utf-8", newline="") as f:
            if self.fmt == "csv":
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(self.columns)
                for record in records:
                    row = record.model_dump()
                    writer.writerow([_csv_cell(row[c]) for c in self.columns])
                    count += 1
            else:
                for record in records:
                    f.write(record.model_dump_json(include=set(self.columns)))
                    f.write("\n")
                    count += 1
        return count
