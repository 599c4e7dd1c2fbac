"""
Report schemas shared by validators, theorem checks and the CLI.
"""

from enum import Enum
from typing import List, Optional
from pydantic import BaseModel, Field, computed_field


class Verdict(str, Enum):
    """Outcome of a validation or claim check"""
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "pass-vacuous"  # hypothesis of an implication did not hold


class Violation(BaseModel):
    """A single axiom failure with its witness elements"""

    axiom: str = Field(..., description="Axiom or invariant identifier")
    witness: List[str] = Field(default_factory=list, description="Witness display names")
    expected: Optional[str] = None
    found: Optional[str] = None

    def describe(self) -> str:
        text = f"{self.axiom}: ({', '.join(self.witness)})"
        if self.expected is not None or self.found is not None:
            text += f" expected {self.expected}, found {self.found}"
        return text


class ValidationReport(BaseModel):
    """
    Collected result of checking one structure against a set of axioms.

    All violations are gathered rather than stopping at the first one.
    """

    subject: str = Field(..., description="What was checked")
    violations: List[Violation] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    vacuous: bool = False

    @computed_field
    @property
    def verdict(self) -> Verdict:
        if self.violations:
            return Verdict.FAIL
        return Verdict.VACUOUS if self.vacuous else Verdict.PASS

    @property
    def passed(self) -> bool:
        """True for pass and pass-vacuous"""
        return not self.violations

    def add(
        self,
        axiom: str,
        witness: List[str],
        expected: Optional[str] = None,
        found: Optional[str] = None,
    ) -> None:
        self.violations.append(
            Violation(axiom=axiom, witness=list(witness), expected=expected, found=found)
        )

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        """Fold another report's violations and notes into this one"""
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        return self


class Check(BaseModel):
    """One claim verified on one instance"""

    claim: str
    verdict: Verdict
    witness: Optional[str] = None
    detail: Optional[str] = None


class FunctorReport(BaseModel):
    """Result of a construction-level or theorem-level check"""

    construction: str
    instances: List[str] = Field(default_factory=list)
    checks: List[Check] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @computed_field
    @property
    def verdict(self) -> Verdict:
        if any(check.verdict == Verdict.FAIL for check in self.checks):
            return Verdict.FAIL
        return Verdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def record(
        self,
        claim: str,
        ok: bool,
        witness: Optional[str] = None,
        detail: Optional[str] = None,
    ) -> None:
        self.checks.append(Check(
            claim=claim,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            witness=None if ok else witness,
            detail=detail,
        ))

    def absorb(self, claim: str, report: ValidationReport) -> None:
        """Record a ValidationReport as a single check"""
        witness = report.violations[0].describe() if report.violations else None
        verdict = report.verdict
        detail = f"{len(report.violations)} violations" if report.violations else None
        self.checks.append(Check(claim=claim, verdict=verdict, witness=witness, detail=detail))
        self.notes.extend(report.notes)

    @classmethod
    def from_validation(cls, claim: str, report: ValidationReport) -> "FunctorReport":
        functor_report = cls(construction=claim, instances=[report.subject])
        functor_report.absorb(claim, report)
        return functor_report
