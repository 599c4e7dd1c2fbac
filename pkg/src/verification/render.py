"""
Text and JSON rendering of reports.

JSON output uses sorted keys and model field order so identical inputs give
byte-identical output.
"""

import json
from typing import Any, Dict, List, Literal, Union

from pydantic import BaseModel
from tabulate import tabulate

from src.atlas.enumerate import WitnessResult
from src.atlas.persistence import AtlasManifest
from src.core.exceptions import ConfigurationError
from src.core.reports import FunctorReport, ValidationReport, Verdict

Format = Literal["text", "json"]

Renderable = Union[ValidationReport, FunctorReport, AtlasManifest, WitnessResult, BaseModel, Dict[str, Any]]


def _verdict_word(verdict: Verdict) -> str:
    return verdict.value.upper()


def _validation_text(report: ValidationReport) -> List[str]:
    count = len(report.violations)
    lines = [f"{_verdict_word(report.verdict)} ({count} violation{'' if count == 1 else 's'})"]
    lines.append(f"subject: {report.subject}")
    for violation in report.violations:
        lines.append(f"  - {violation.describe()}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return lines


def _functor_text(report: FunctorReport) -> List[str]:
    failed = sum(1 for check in report.checks if check.verdict == Verdict.FAIL)
    lines = [f"{_verdict_word(report.verdict)} {report.construction} ({len(report.checks)} checks, {failed} failed)"]
    if report.instances:
        lines.append(f"instances: {', '.join(report.instances)}")
    rows = [
        [check.claim, check.verdict.value, check.witness or "", check.detail or ""]
        for check in report.checks
    ]
    if rows:
        lines.append(tabulate(rows, headers=["Claim", "Verdict", "Witness", "Detail"], tablefmt="simple"))
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def _manifest_text(manifest: AtlasManifest) -> List[str]:
    rows = [
        [
            record.size,
            record.count,
            record.provenance.candidates,
            record.provenance.with_dagger,
        ]
        for record in manifest.sizes
    ]
    lines = [f"atlas ({manifest.generator} {manifest.version})"]
    lines.append(tabulate(rows, headers=["Size", "Count", "Candidates", "With dagger"], tablefmt="simple"))
    return lines


def _witness_text(result: WitnessResult) -> List[str]:
    sizes = ", ".join(str(k) for k in result.searched_sizes)
    if not result.found:
        return [f"no witness for {result.predicate}", f"searched sizes {sizes} ({result.examined} examined)"]
    lines = [f"witness for {result.predicate}: {result.label}"]
    if result.detail:
        lines.append(f"  {result.detail}")
    if result.structure:
        lines.append(json.dumps(result.structure, sort_keys=True, ensure_ascii=False))
    return lines


def _text(report: Renderable) -> str:
    if isinstance(report, ValidationReport):
        lines = _validation_text(report)
    elif isinstance(report, FunctorReport):
        lines = _functor_text(report)
    elif isinstance(report, AtlasManifest):
        lines = _manifest_text(report)
    elif isinstance(report, WitnessResult):
        lines = _witness_text(report)
    else:
        return _json(report)
    return "\n".join(lines) + "\n"


def _json(report: Renderable) -> str:
    data = report.model_dump(mode="json") if isinstance(report, BaseModel) else report
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def report_render(report: Renderable, fmt: Format = "text") -> bytes:
    """Render a report as UTF-8 text or JSON"""
    if fmt == "json":
        return _json(report).encode("utf-8")
    if fmt == "text":
        return _text(report).encode("utf-8")
    raise ConfigurationError(f"Unknown format {fmt!r}")
