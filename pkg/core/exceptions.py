class GqdHamiltonError(Exception):
    """Base class for every error raised by the library."""


class InvalidInput(GqdHamiltonError):
    """Malformed group, element, word, generating set or parameters."""


class BudgetExceeded(GqdHamiltonError):
    """A configured bound (enumeration, window, search, coverage) was exceeded."""

    def __init__(self, name, limit, message=''):
        self.name = name
        self.limit = limit
        super().__init__(message or f'{name} exceeded (limit {limit})')


class ConstructionError(GqdHamiltonError):
    """A construction step could not be completed."""


class VerificationFailed(GqdHamiltonError):
    def __init__(self, report, message='verification failed'):
        self.report = report
        super().__init__(message)
