"""Configuration, shared models and exceptions."""

from .config import Settings, get_settings
from .exceptions import (
    AlphabetMismatch,
    ExtractionError,
    FormulaSyntaxError,
    ResourceLimitExceeded,
    SolverError,
    SynthesisError,
    UnknownProposition,
    UnsupportedFragment,
)

__all__ = [
    "AlphabetMismatch",
    "ExtractionError",
    "FormulaSyntaxError",
    "ResourceLimitExceeded",
    "Settings",
    "SolverError",
    "SynthesisError",
    "UnknownProposition",
    "UnsupportedFragment",
    "get_settings",
]
