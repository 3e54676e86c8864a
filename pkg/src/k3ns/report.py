"""Report documents: canonical JSON and an aligned text table."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .engine import CaseReport, Check, arithmetic_suites, classify_all


@dataclass
class ReportDocument:
    tool_version: str
    primes_used: list[int]
    cases: list[CaseReport]
    suites: list[Check] = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return (all(c.passed and c.matches_expected() for c in self.cases)
                and all(s.passed for s in self.suites))

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "primes_used": list(self.primes_used),
            "cases": [c.to_dict() for c in sorted(self.cases, key=lambda c: c.m)],
            "suites": [s.to_dict() for s in self.suites],
            "overall_pass": self.overall_pass,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        doc = cls(d["tool_version"], list(d["primes_used"]),
                  [CaseReport.from_dict(c) for c in d["cases"]],
                  [Check.from_dict(s) for s in d.get("suites", [])])
        if doc.overall_pass != d["overall_pass"]:
            raise ValueError("overall_pass disagrees with the case data")
        return doc

    def __eq__(self, other) -> bool:
        return isinstance(other, ReportDocument) and self.to_dict() == other.to_dict()


def build_report(primes) -> ReportDocument:
    return ReportDocument(__version__, list(primes), classify_all(tuple(primes)),
                          arithmetic_suites())


def render_json(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_json(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))


def _quotient_summary(case: CaseReport) -> str:
    qm = case.quotient_model
    if not qm:
        return "-"
    idx = ",".join(str(b["index"]) for b in qm["branch"])
    return f"{qm['base']} [{idx}]"


def render_case_text(case: CaseReport) -> str:
    lines = [f"m = {case.m}: exists={case.exists} surfaces={case.num_surfaces} "
             f"actions={case.num_actions} quotient={_quotient_summary(case)}"]
    width = max((len(c.name) for c in case.checks), default=0)
    for c in case.checks:
        lines.append(f"  {'ok  ' if c.passed else 'FAIL'} {c.name:<{width}}  {c.detail}")
    for a in case.annotations:
        lines.append(f"  note: {a}")
    return "\n".join(lines) + "\n"


def render_text(doc: ReportDocument) -> str:
    rows = [("m", "exists", "surfaces", "actions", "checks", "quotient")]
    for c in sorted(doc.cases, key=lambda c: c.m):
        npass = sum(ch.passed for ch in c.checks)
        rows.append((str(c.m), "yes" if c.exists else "no", str(c.num_surfaces),
                     str(c.num_actions), f"{npass}/{len(c.checks)}", _quotient_summary(c)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = [f"k3ns {doc.tool_version}  primes {','.join(map(str, doc.primes_used))}"]
    for r in rows:
        out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    out.append("")
    for s in doc.suites:
        out.append(f"{'ok  ' if s.passed else 'FAIL'} {s.name}: {s.detail}")
    out.append(f"overall: {'PASS' if doc.overall_pass else 'FAIL'}")
    return "\n".join(out) + "\n"
