"""Verification reports and their JSON/CSV/plain renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    """Outcome of one machine-checked claim.

    ``counterexamples`` holds (n, value) pairs where the claim fails; the
    status is "violated" exactly when that list is non-empty. A report with
    ``expect_violation`` set is a negative control: it passes when violated.
    """

    label: str
    description: str = ""
    params: dict = field(default_factory=dict)
    progression: tuple | None = None
    modulus: int | None = None
    n_checked: int = 0
    n_range: tuple | None = None
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    expect_violation: bool = False
    informational: bool = False
    notes: str = ""

    def __post_init__(self):
        self.counterexamples = [tuple(c) for c in self.counterexamples]
        if self.progression is not None:
            self.progression = tuple(self.progression)
        if self.n_range is not None:
            self.n_range = tuple(self.n_range)

    @property
    def status(self) -> str:
        return "violated" if self.counterexamples else "verified"

    @property
    def as_expected(self) -> bool:
        if self.informational:
            return True
        return (self.status == "violated") == self.expect_violation

    def sort_key(self):
        return (self.label, json.dumps(self.params, sort_keys=True),
                self.progression or (), self.modulus or 0)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        d["progression"] = list(self.progression) if self.progression else None
        d["n_range"] = list(self.n_range) if self.n_range else None
        d["counterexamples"] = [{"n": n, "value": v} for n, v in self.counterexamples]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        d = dict(d)
        d.pop("status", None)
        d["counterexamples"] = [(c["n"], c["value"]) for c in d.get("counterexamples", [])]
        return cls(**d)

    def summary(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        prog = ""
        if self.progression:
            m, a = self.progression
            prog = f" at {m}n+{a}"
        mod = f" mod {self.modulus}" if self.modulus else ""
        tag = self.status + (" (expected)" if self.expect_violation and self.as_expected else "")
        if self.informational:
            tag += ", informational"
        bad = f", {len(self.counterexamples)} counterexamples" if self.counterexamples else ""
        return f"[{tag}] {self.label}{prog}{mod} ({params}; {self.n_checked} checked{bad})"


def suite_document(suite: str, reports, *, order=None, grid=None, timestamp: str = "") -> dict:
    ordered = sorted(reports, key=VerificationReport.sort_key)
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": suite,
        "timestamp": timestamp,
        "order": order,
        "grid": grid or {},
        "claims": [r.to_dict() for r in ordered],
    }


def reports_from_document(doc: dict) -> list[VerificationReport]:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return [VerificationReport.from_dict(c) for c in doc["claims"]]


CSV_FIELDS = ("label", "params", "progression", "modulus", "n_checked", "status",
              "expect_violation", "counterexamples")


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(CSV_FIELDS)
    for r in sorted(reports, key=VerificationReport.sort_key):
        w.writerow([
            r.label,
            json.dumps(r.params, sort_keys=True),
            "" if r.progression is None else f"{r.progression[0]}n+{r.progression[1]}",
            "" if r.modulus is None else r.modulus,
            r.n_checked,
            r.status,
            int(r.expect_violation),
            ";".join(f"{n}:{v}" for n, v in r.counterexamples),
        ])
    return buf.getvalue()


def to_plain(reports) -> str:
    return "\n".join(r.summary() for r in sorted(reports, key=VerificationReport.sort_key))
