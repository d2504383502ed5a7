"""JSON run reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import __version__

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class Record:
    name: str
    anchor: str
    status: str
    witness: str = ""
    elapsed_ms: float = 0.0


@dataclass
class Report:
    config: dict
    records: list = field(default_factory=list)
    version: str = __version__

    def add(self, rec: Record):
        self.records.append(rec)

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.records:
            counts[r.status] += 1
        return {"total": len(self.records), "pass": counts[PASS], "fail": counts[FAIL], "skipped": counts[SKIP]}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "summary": self.summary,
            "records": [asdict(r) for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Report":
        data = json.loads(text)
        rep = Report(data["config"], [Record(**r) for r in data["records"]], data["version"])
        if rep.summary != data["summary"]:
            raise ValueError("summary does not match records")
        return rep
