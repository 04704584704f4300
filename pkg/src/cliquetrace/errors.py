"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or an out-of-range vertex."""


class ParseError(ValueError):
    """Malformed input file; message carries line/cell coordinates."""


class GuardError(ValueError):
    """A size guard refused to run (e.g. the oracle's subset-scan limit)."""


class DatasetError(RuntimeError):
    """A bundled dataset is missing or failed to load."""


class DisagreementError(RuntimeError):
    """Enumerators disagreed during a benchmark; carries the diff dump."""

    def __init__(self, message: str, dump: str = ""):
        super().__init__(message)
        self.dump = dump
