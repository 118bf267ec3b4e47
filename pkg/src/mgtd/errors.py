"""Shared exception types for the toolkit.

Every module raises subclasses of MgtdError so the CLI can map any
library failure to exit code 1 with a single diagnostic line.
"""


class MgtdError(Exception):
    """Base class for all toolkit errors."""


class ParseError(MgtdError):
    """A file could not be parsed (malformed JSON, bad line)."""


class SchemaError(MgtdError):
    """A record was parseable but violates the expected schema."""


class EmptyInputError(MgtdError):
    """An operation that requires data received none."""


class CountError(MgtdError):
    """A sampling request exceeds what a class of documents can supply."""


class JoinError(MgtdError):
    """Records could not be joined on their ids."""


class LabelError(MgtdError):
    """A document carries a label the operation does not accept."""


class ShapeError(MgtdError):
    """Mismatched lengths or dimensions between paired inputs."""


class ClassError(MgtdError):
    """A required class of examples is absent from the data."""


class LookupError_(MgtdError):
    """A per-document dependency (series entry, probability) is missing."""


class AssemblyError(MgtdError):
    """A stacking requested a channel that was not computed."""


class FormatError(MgtdError):
    """A serialized artifact violates its file format contract."""


class DomainError(MgtdError):
    """A numeric argument is outside the operation's domain."""


class KeyMismatchError(MgtdError):
    """Two keyed tables that must align do not share the same keys."""
