"""Exception hierarchy. Each class maps to one CLI exit code."""


class SpeclabError(Exception):
    exit_code = 2


class UsageError(SpeclabError):
    """Bad arguments, unknown names, violated preconditions."""

    exit_code = 1


class ModelError(SpeclabError):
    """A model or catalog violates an invariant."""

    exit_code = 2


class ParseError(ModelError):
    """A model document does not validate; ``path`` locates the offending field."""

    def __init__(self, message, path=()):
        self.path = tuple(path)
        where = "/".join(str(p) for p in self.path) or "<root>"
        super().__init__(f"{where}: {message}")


class ModeError(ModelError):
    """Operation not available in the model's mode."""


class InconsistencyError(ModelError):
    """Internal cross-check failed, e.g. a negative Ext dimension."""


class AxiomViolation(ModelError):
    """A candidate rank function does not behave like one on this model."""


class GuardError(SpeclabError):
    """An enumeration exceeded its size guard."""

    exit_code = 3


class VerificationFailure(SpeclabError):
    exit_code = 4
