"""Exception hierarchy shared by all synthesis stages."""


class SynthesisError(Exception):
    """Base class for every error raised by the synthesis pipeline."""


class FormulaSyntaxError(SynthesisError, ValueError):
    """Raised when formula text does not follow the grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownProposition(FormulaSyntaxError):
    """Raised when a formula mentions a proposition missing from the alphabet."""

    def __init__(self, name: str, position: int) -> None:
        super().__init__(f"Unknown proposition '{name}'", position)
        self.name = name


class UnsupportedFragment(SynthesisError):
    """Raised when the annotated formula contains a leaf of parity type."""

    def __init__(self, formula: str) -> None:
        super().__init__(f"Unsupported leaf formula (needs a parity translation): {formula}")
        self.formula = formula


class ResourceLimitExceeded(SynthesisError):
    """Raised when the explored arena grows beyond the configured limit."""

    def __init__(self, limit: int) -> None:
        super().__init__(f"Explored more than {limit} environment nodes")
        self.limit = limit


class SolverError(SynthesisError):
    """Raised when the solver detects a violated contract, e.g. an invalid strategy."""


class ExtractionError(SynthesisError):
    """Raised when a controller cannot be extracted or encoded."""


class AlphabetMismatch(SynthesisError, ValueError):
    """Raised when two artefacts disagree on their input/output propositions."""
