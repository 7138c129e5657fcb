"""Command reports, rendered as text or as line-delimited JSON records."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

SCHEMA = "fiberlogic.report/1"


@dataclass
class Verdict:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def verdict(self, name, ok, detail=""):
        self.verdicts.append(Verdict(name, bool(ok), detail))
        return ok

    def witness(self, w):
        self.witnesses.append(w)

    def say(self, *lines):
        self.lines.extend(lines)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_record(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "ok": self.ok,
            "verdicts": [asdict(v) for v in self.verdicts],
            "witnesses": self.witnesses,
            "data": self.data,
            "lines": self.lines,
            "timing": self.timing,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Report":
        if rec.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {rec.get('schema')!r}")
        return cls(rec["command"], rec["inputs"], [Verdict(**v) for v in rec["verdicts"]], rec["witnesses"],
                   rec["data"], rec["lines"], rec["timing"])

    def to_json(self) -> str:
        return json.dumps(self.to_record(), ensure_ascii=False, sort_keys=True, default=str)

    def to_text(self) -> str:
        out = list(self.lines)
        for v in self.verdicts:
            mark = "ok" if v.ok else "FAIL"
            out.append(f"[{mark}] {v.name}" + (f": {v.detail}" if v.detail else ""))
        for w in self.witnesses:
            out.append(f"  witness: {json.dumps(w, ensure_ascii=False, sort_keys=True, default=str)}")
        if self.verdicts:
            out.append("result: " + ("ok" if self.ok else "VIOLATION"))
        return "\n".join(out)
