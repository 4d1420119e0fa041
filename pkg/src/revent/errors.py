"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ReventError(Exception):
    """Base class for all errors raised by revent."""


class BoundExceeded(ReventError):
    """A structure is too large to materialize within the configured bound."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: {size} events exceeds the bound of {bound}")
        self.size = size
        self.bound = bound


class StructureMismatch(ReventError):
    """Two maps or structures do not fit together (e.g. composing f and g with f.target != g.source)."""


class NotCommuting(ReventError):
    """No valid mediating morphism exists for a universal-property check."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ReconstructionViolation(ReventError):
    """A reconstructed construction produced an output that fails its validator."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class FunctorialityViolation(ReventError):
    """A functor mapped a valid morphism to an invalid one."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class HypothesisUnmet(ReventError):
    """A theorem-shaped check was called on input that does not meet its hypotheses."""

    def __init__(self, failed: list[str]):
        super().__init__("hypotheses not met: " + ", ".join(failed))
        self.failed = list(failed)


class NoEmptyConfig(ReventError):
    """Reachability needs the empty configuration as its starting point."""


class UnknownFixture(ReventError, KeyError):
    pass
