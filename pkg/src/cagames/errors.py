"""Exception types shared across the engine.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP service can map failures without string-matching messages. Domain
errors map to exit code 1 / HTTP 422, resource-guard refusals to exit
code 2 / HTTP 422, malformed input to exit code 1 / HTTP 400.
"""


class DomainError(Exception):
    """A well-formed request that violates the rules of the domain."""

    code = "domain-error"

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.message = message
        self.detail = detail


class SpecValidationError(DomainError):
    code = "malformed-spec"


class IllegalMoveError(DomainError):
    code = "illegal-move"

    def __init__(self, message: str, clause: str, **detail):
        super().__init__(message, clause=clause, **detail)
        self.clause = clause


class IllegalPlacementError(DomainError):
    code = "illegal-placement"

    def __init__(self, message: str, clause: str, **detail):
        super().__init__(message, clause=clause, **detail)
        self.clause = clause


class OutOfVerifiedDomainError(DomainError):
    code = "out-of-verified-domain"


class ParamsMismatchError(DomainError):
    code = "params-mismatch"


class InsufficientWindowError(DomainError):
    code = "insufficient-window"


class ResourceLimitError(Exception):
    """A request refused by a configurable resource guard, not by the rules."""

    code = "resource-limit"

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.message = message
        self.detail = detail


class WindowTooLargeError(ResourceLimitError):
    code = "window-too-large"


class TableTooLargeError(ResourceLimitError):
    code = "table-too-large"
