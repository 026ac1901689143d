"""Public exception hierarchy for polyconn.

Every failure a caller can trigger is raised as a PolyconnError subclass so the
CLI can map it to an exit code without inspecting messages.

Exit-code mapping guide:
    ConstructionError           -> 2 (malformed input object)
    DomainError                 -> 2 (argument outside an operation's domain)
    PreconditionError           -> 2 (input outside a theorem's hypothesis)
    ParseError                  -> 2 (setfn / graph / subset syntax)
    DependencyNotInstalledError -> 2 (optional extra missing)
    PolyconnError (base)        -> 2
A checked property that is false is not an exception; it is a failing CheckReport (exit 1).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from polyconn.core.checks import CheckReport


class PolyconnError(Exception):
    """Base class for all polyconn public exceptions."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class ConstructionError(PolyconnError):
    """A set function, ground set, graph or subset family could not be built.

    Attributes:
        offender: The label, subset or value responsible, rendered as text.
        reason: Short cause, e.g. "missing subset".
    """

    def __init__(self, offender: str, reason: str) -> None:
        self.offender = offender
        self.reason = reason
        super().__init__(f"{reason}: {offender}")


class DomainError(PolyconnError):
    """An argument lies outside the domain of the called operation.

    Examples: a label not in the ground set, A not a subset of E, a non-positive
    scale factor, two set functions on different ground sets.
    """


class PreconditionError(PolyconnError):
    """The input does not satisfy the hypothesis under which a transform is defined.

    Attributes:
        operation: Name of the refused transform.
        report: The failing CheckReport explaining why.
    """

    def __init__(self, operation: str, report: CheckReport) -> None:
        self.operation = operation
        self.report = report
        super().__init__(f"{operation}: precondition failed, {report.describe()}")


class ParseError(PolyconnError):
    """A text document or argument could not be parsed.

    Attributes:
        line: 1-based line number, or None when the problem is detected at end of input.
        cause: Short diagnostic, e.g. "zero denominator".
    """

    def __init__(self, cause: str, line: int | None = None) -> None:
        self.cause = cause
        self.line = line
        where = "end of file" if line is None else f"line {line}"
        super().__init__(f"{where}: {cause}")


class DependencyNotInstalledError(PolyconnError):
    """An optional dependency required for the called method is absent.

    Attributes:
        package: The missing import, e.g. "pandas".
        install_extra: The polyconn extra that provides it.
    """

    def __init__(self, package: str, install_extra: str) -> None:
        self.package = package
        self.install_extra = install_extra
        super().__init__(
            f"'{package}' is required for this operation. "
            f"Install it with: pip install polyconn[{install_extra}]"
        )
