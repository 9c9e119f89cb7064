"""Custom exceptions for mission compilation and execution."""
from typing import Optional


class MissionError(Exception):
    """Base exception for mission-related errors."""
    pass


class LtlSyntaxError(MissionError):
    """Raised when formula text cannot be parsed."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NextOperatorError(LtlSyntaxError):
    """Raised when a formula uses the excluded next operator."""
    pass


class UnknownPredicateError(LtlSyntaxError):
    """Raised when a formula names a predicate that is not declared."""
    pass


class TemporalGuardError(MissionError):
    """Raised when a propositional operation receives a temporal formula."""
    pass


class HoaFormatError(MissionError):
    """Raised when HOA automaton text is malformed."""
    pass


class UnsupportedAcceptanceError(HoaFormatError):
    """Raised when an HOA automaton uses anything but state-based Buchi acceptance."""
    pass


class UnmappedAtomError(HoaFormatError):
    """Raised when an HOA atomic proposition has no predicate mapping."""
    pass


class SymbolBudgetError(MissionError):
    """Raised when feasible symbol enumeration exceeds its resource bound."""
    pass


class PlanningError(MissionError):
    """Raised when a local planning problem is malformed."""
    pass


class ScenarioError(MissionError):
    """Raised when a scenario file fails validation."""

    def __init__(self, message: str, field_path: str = ""):
        self.field_path = field_path
        if field_path:
            message = f"{field_path}: {message}"
        super().__init__(message)


class CompileInfeasibleError(MissionError):
    """Raised when the decomposition graph cannot reach an accepting edge from aux."""
    pass


class NoCandidateError(MissionError):
    """Raised when no next automaton state can be selected."""
    pass


class NoSymbolError(MissionError):
    """Raised when no decomposable symbol of an edge is currently reachable."""
    pass


class InvariantViolation(MissionError):
    """Raised in checking mode when the sustained self-loop guard stops holding."""
    pass
