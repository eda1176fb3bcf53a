"""Verification reports and their on-disk form.

Reports are JSON documents with a fixed key order.  Every integer that can
grow large is written as a decimal string, so big counts survive the round
trip without any precision loss.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

SCHEMA_VERSION = 1

UNIQUE = "unique"
EXTREMAL_FAMILY = "extremal_family"
ALL_GRAPHS_TRIVIAL = "all_graphs_trivial"
VIOLATED = "violated"
UNIQUENESS_CLASSES = (UNIQUE, EXTREMAL_FAMILY, ALL_GRAPHS_TRIVIAL, VIOLATED)


class SchemaMismatch(ValueError):
    """The report on disk was written with a different schema version."""


@dataclass
class VerificationReport:
    mode: str                      # "theorem", "prop", "open"
    parameters: dict[str, int]
    predicted_value: int
    observed_max: int
    witnesses: list[str]           # graph6, capped at witness_limit
    witness_count: int             # exact number of extremal classes
    prediction_holds: bool
    uniqueness_class: str
    graphs_examined: int
    elapsed: float = 0.0
    scope_warning: str | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.uniqueness_class not in UNIQUENESS_CLASSES:
            raise ValueError(f"unknown uniqueness class {self.uniqueness_class!r}")

    @property
    def claim_holds(self) -> bool | None:
        """None for runs outside any claim's scope or for open searches."""
        if self.scope_warning is not None or self.mode == "open":
            return None
        return self.prediction_holds and self.uniqueness_class != VIOLATED

    def comparable(self) -> dict:
        """Every field except wall-clock time."""
        d = asdict(self)
        d.pop("elapsed")
        return d


_BIG_INT_FIELDS = ("predicted_value", "observed_max", "witness_count", "graphs_examined")


def report_to_dict(report: VerificationReport) -> dict:
    out: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    for f in fields(report):
        value = getattr(report, f.name)
        if f.name in _BIG_INT_FIELDS:
            value = str(value)
        elif f.name == "parameters":
            value = {k: str(v) for k, v in value.items()}
        out[f.name] = value
    return out


def report_from_dict(data: dict) -> VerificationReport:
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaMismatch(f"report schema {version!r} does not match expected {SCHEMA_VERSION}")
    kwargs = {}
    for f in fields(VerificationReport):
        if f.name not in data:
            if f.name in ("scope_warning", "details", "elapsed"):
                continue
            raise SchemaMismatch(f"report lacks field {f.name!r}")
        value = data[f.name]
        if f.name in _BIG_INT_FIELDS:
            value = int(value)
        elif f.name == "parameters":
            value = {k: int(v) for k, v in value.items()}
        kwargs[f.name] = value
    return VerificationReport(**kwargs)


def report_write(report: VerificationReport | list[VerificationReport], path) -> None:
    """Write one report, or a list of reports, to ``path``."""
    if isinstance(report, list):
        doc: Any = {"schema_version": SCHEMA_VERSION, "reports": [report_to_dict(r) for r in report]}
    else:
        doc = report_to_dict(report)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def report_read(path) -> VerificationReport | list[VerificationReport]:
    data = json.loads(Path(path).read_text())
    if "reports" in data:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise SchemaMismatch(f"report schema {data.get('schema_version')!r} does not match {SCHEMA_VERSION}")
        return [report_from_dict(r) for r in data["reports"]]
    return report_from_dict(data)
