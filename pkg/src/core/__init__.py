"""Configuration, errors, reports and sweep fan-out shared by every package"""

from src.core.config import Settings, get_settings, override_settings, reload_settings
from src.core.exceptions import (
    ClosureViolationError,
    ConfigurationError,
    DocumentError,
    IntegrityError,
    NotABinaryPartialGroupError,
    PartialGroupError,
    PreconditionError,
    ResourceGuardError,
    StructuralError,
    UnknownClaimError,
    UnknownPredicateError,
)
from src.core.reports import Check, FunctorReport, ValidationReport, Verdict, Violation
from src.core.sweep import run_sweep

__all__ = [
    "Settings",
    "get_settings",
    "override_settings",
    "reload_settings",
    "ClosureViolationError",
    "ConfigurationError",
    "DocumentError",
    "IntegrityError",
    "NotABinaryPartialGroupError",
    "PartialGroupError",
    "PreconditionError",
    "ResourceGuardError",
    "StructuralError",
    "UnknownClaimError",
    "UnknownPredicateError",
    "Check",
    "FunctorReport",
    "ValidationReport",
    "Verdict",
    "Violation",
    "run_sweep",
]
