"""Exception types shared across the package."""

from __future__ import annotations


class EulerGraphError(Exception):
    """Base class for all package-specific errors."""


class FormatError(EulerGraphError):
    """Malformed input text: hypergraph file or tour certificate."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class CertificateViolation(EulerGraphError):
    """An object that should be a valid certificate failed an internal consistency check."""


class InfeasibleDegreeError(EulerGraphError):
    """An edge-node of the incidence graph has degree below 2, so it can never be traversed."""


class InadmissibleOrderError(EulerGraphError, ValueError):
    """Requested a Steiner triple system of an order for which none exists."""


class MergeExhaustedError(EulerGraphError):
    """Tour merging gave up: step budget spent or no productive move found.

    Carries the stuck certificate (the selected incidence set) for diagnosis.
    """

    def __init__(self, reason: str, steps: int, selected=None):
        self.reason = reason
        self.steps = steps
        self.selected = selected
        super().__init__(f"merge exhausted ({reason}) after {steps} interchange steps")
