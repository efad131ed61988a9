"""Exception hierarchy shared by every module of the package."""


class AnnCatError(Exception):
    """Base class for all errors raised by anncat."""


class AxiomError(AnnCatError, ValueError):
    """A table fails one of the axioms its type promises.

    ``axiom`` names the violated law and ``witness`` is the element tuple at
    which it fails; re-evaluating the law at ``witness`` reproduces the failure.
    """

    def __init__(self, axiom: str, witness: tuple = (), detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"{axiom} fails at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class StructureError(AnnCatError, ValueError):
    """Malformed input: wrong sizes, out-of-range indices, mismatched bases."""


class CompositionError(AnnCatError, ValueError):
    """Two morphisms whose endpoints do not match were composed."""


class ResourceRefusal(AnnCatError):
    """A computation would exceed a configured size cap.

    ``estimate`` holds the size that was refused (candidate count, table size).
    """

    def __init__(self, message: str, estimate: int | None = None):
        self.estimate = estimate
        super().__init__(message)


class NotCertified(AnnCatError):
    """An operation needs a presentation that passes its axiom checks."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class InternalInconsistency(AnnCatError):
    """A construction produced data outside the structure it should close over."""


class FixtureError(AnnCatError):
    """A fixture document cannot be parsed or references something undefined."""
