"""Error taxonomy shared by the library, the CLI, and the HTTP service.

Every error carries a short machine-readable ``code`` so the CLI can print
``error[<code>]: message`` and the service can echo the same code in JSON
error bodies.
"""

from __future__ import annotations


class DepraError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class DomainError(DepraError):
    """An operation was called with values outside its domain."""

    code = "domain"


class UnitMismatchError(DomainError):
    """Two quantities with different unit kinds were compared."""

    code = "unit-mismatch"


class MissingEvaluationsError(DomainError):
    """An alternative lacks evaluations for some project properties."""

    code = "missing-evaluation"

    def __init__(self, alternative_id: str, missing: tuple[str, ...]):
        self.alternative_id = alternative_id
        self.missing = tuple(missing)
        super().__init__(
            f"alternative '{alternative_id}' has no evaluation for: "
            + ", ".join(self.missing)
        )


class DecompositionUnsupportedError(DomainError):
    """The weight system does not admit a unique total decomposition."""

    code = "decomposition-unsupported"


class InconsistentTotalError(DomainError):
    """No quantized acceptance vector reproduces the given total."""

    code = "inconsistent-total"


class StructuralError(DepraError):
    """A fault tree or project is structurally unusable."""

    code = "structure"


class InvalidModelError(StructuralError):
    """Flattening or evaluation was attempted on a model with violations."""

    code = "validation"

    def __init__(self, report):
        self.report = report
        lines = "; ".join(v.message for v in report.violations)
        super().__init__(f"model has {len(report.violations)} violation(s): {lines}")


class DanglingReferenceError(DepraError):
    """A stored reference does not resolve to any known id."""

    code = "reference"


class ProjectParseError(DepraError):
    """The project file is not syntactically valid JSON."""

    code = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class SchemaVersionError(DepraError):
    """The project file declares a schema version this build cannot read."""

    code = "version"


class NotFoundError(DepraError):
    """A requested entity does not exist."""

    code = "not-found"


class RevisionConflictError(DepraError):
    """A mutation carried a stale revision token."""

    code = "conflict"

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"stale revision {got}, current is {expected}")
