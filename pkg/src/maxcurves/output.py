"""CSV / JSON-lines emitters with a fixed field order."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .exact import MaximalTriple, Source

FIELDS = ("q", "a1", "n", "source")


@dataclass(frozen=True)
class OutputRecord:
    q: int
    a1: int
    n: int
    source: str

    @classmethod
    def from_triple(cls, t: MaximalTriple) -> "OutputRecord":
        return cls(t.q, t.a1, t.n, t.source.value)

    def to_triple(self) -> MaximalTriple:
        return MaximalTriple(self.q, self.a1, self.n, Source(self.source))

    def as_dict(self) -> dict:
        return {"q": self.q, "a1": self.a1, "n": self.n, "source": self.source}


def write_csv(rows: Iterable[dict], fields: tuple[str, ...], out: IO[str]) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([_cell(row[f]) for f in fields])


def write_jsonl(rows: Iterable[dict], out: IO[str]) -> None:
    for row in rows:
        out.write(json.dumps(row, separators=(",", ":")) + "\n")


def write_rows(rows: Iterable[dict], fields: tuple[str, ...], fmt: str, out: IO[str]) -> None:
    if fmt == "csv":
        write_csv(rows, fields, out)
    elif fmt == "jsonl":
        write_jsonl(rows, out)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def write_records(records: Iterable[OutputRecord], fmt: str, out: IO[str]) -> None:
    write_rows((r.as_dict() for r in records), FIELDS, fmt, out)


def read_jsonl(lines: Iterable[str]) -> Iterator[OutputRecord]:
    for line in lines:
        if line.strip():
            yield OutputRecord(**json.loads(line))


def read_csv(lines: Iterable[str]) -> Iterator[OutputRecord]:
    reader = csv.reader(lines)
    header = next(reader)
    if tuple(header) != FIELDS:
        raise ValueError(f"unexpected header {header}")
    for row in reader:
        if row:
            q, a1, n, source = row
            yield OutputRecord(int(q), int(a1), int(n), source)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
