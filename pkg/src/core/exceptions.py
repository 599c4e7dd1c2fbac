"""
Custom exceptions for the partial group lab.

Axiom failures are reported, never raised; these types cover inputs and
states an operation cannot work with.
"""


class PartialGroupError(Exception):
    """Base exception for all partial group lab errors"""
    pass


# ===== Input Errors =====

class StructuralError(PartialGroupError):
    """Raised when a table, word, tree or level set is malformed"""
    pass


class DocumentError(StructuralError):
    """Raised when a JSON document cannot be read or parsed"""
    pass


# ===== Bounds =====

class ResourceGuardError(PartialGroupError):
    """Raised when a configured size bound would be exceeded"""
    pass


# ===== Invariant Errors =====

class IntegrityError(PartialGroupError):
    """Raised when level data breaks an invariant an operation relies on"""
    pass


class ClosureViolationError(IntegrityError):
    """Raised when a strict pullback leaves the level set"""
    pass


# ===== Precondition Errors =====

class PreconditionError(PartialGroupError):
    """Raised when an operation's precondition does not hold"""
    pass


class NotABinaryPartialGroupError(PreconditionError):
    """Raised when a partial magma admits no dagger"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


# ===== Menu Errors =====

class UnknownClaimError(PartialGroupError):
    """Raised when a claim id is not in the claim menu"""
    pass


class UnknownPredicateError(PartialGroupError):
    """Raised when a witness predicate id is not in the predicate menu"""
    pass


# ===== Configuration Errors =====

class ConfigurationError(PartialGroupError):
    """Raised when configuration is invalid"""
    pass
