"""Exception hierarchy shared by the library and the CLI."""


class HWWeightsError(Exception):
    """Base class for all library errors."""


class InvalidInput(HWWeightsError, ValueError):
    """Malformed or mathematically inadmissible user input."""


class CapExceeded(HWWeightsError):
    """An enumeration or depth cap would be exceeded."""

    def __init__(self, what: str, cap: int, needed: int | None = None):
        self.what = what
        self.cap = cap
        self.needed = needed
        msg = f"{what} exceeds the configured cap of {cap}"
        if needed is not None:
            msg += f" (needs at least {needed})"
        super().__init__(msg)


class HypothesisFailure(HWWeightsError):
    """A formula was requested outside the hypothesis under which it holds."""


class InternalInconsistency(HWWeightsError, AssertionError):
    """A runtime self-check failed. This indicates a bug, not bad input."""
