"""
Global Exception Handling

Error classes shared by every app. Each carries the process exit code the
management commands use when the error escapes to the command line.
"""


class ExitCode:
    """Process exit codes."""
    OK = 0
    FAILURE = 1
    PARSE_ERROR = 2
    BUDGET_EXHAUSTED = 3
    FALSIFICATION = 4


class CwsLabError(Exception):
    """Base class for all library errors."""

    exit_code = ExitCode.FAILURE


class DimensionError(CwsLabError):
    """Raised when vector or matrix dimensions do not agree."""

    def __init__(self, operation: str, expected, actual):
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(f"{operation}: expected dimension {expected}, got {actual}")


class ContractError(CwsLabError):
    """Raised when an operation is called outside its precondition."""

    def __init__(self, message: str):
        super().__init__(message)


class UndefinedDistanceError(ContractError):
    """Raised when a classical code has fewer than two words."""

    def __init__(self, word_count: int):
        self.word_count = word_count
        super().__init__(f"Distance is undefined for a code with {word_count} word(s)")


class InconsistentReportError(ContractError):
    """Raised when a degeneracy report disagrees with a fresh recomputation."""

    def __init__(self, claimed: str, recomputed: str):
        self.claimed = claimed
        self.recomputed = recomputed
        super().__init__(
            f"Report claims verdict '{claimed}' but recomputation gives '{recomputed}'"
        )


class DomainError(CwsLabError):
    """Raised when a mathematical precondition of an operation does not hold."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        message = f"Precondition violated: {condition}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class UnsupportedParameterError(CwsLabError):
    """Raised when a generator is asked for a parameter it cannot realise."""

    def __init__(self, parameter: str, value, reason: str):
        self.parameter = parameter
        self.value = value
        super().__init__(f"Unsupported {parameter}={value!r}: {reason}")


class ParseError(CwsLabError):
    """Raised when graph or code input text is malformed."""

    exit_code = ExitCode.PARSE_ERROR

    def __init__(self, source: str, reason: str):
        self.source = source
        self.reason = reason
        super().__init__(f"Cannot parse {source}: {reason}")


class BudgetExceededError(CwsLabError):
    """Raised when a computation would exceed a configured budget."""

    exit_code = ExitCode.BUDGET_EXHAUSTED

    def __init__(self, budget: str, limit, requested=None):
        self.budget = budget
        self.limit = limit
        self.requested = requested
        message = f"Budget '{budget}' exceeded (limit {limit}"
        if requested is not None:
            message = f"{message}, requested {requested}"
        super().__init__(f"{message})")


class FalsificationError(CwsLabError):
    """Raised when a verified property fails on a concrete instance."""

    exit_code = ExitCode.FALSIFICATION

    def __init__(self, property_name: str, counterexample: dict):
        self.property_name = property_name
        self.counterexample = counterexample
        super().__init__(f"Property '{property_name}' falsified: {counterexample}")
