"""Exception hierarchy shared across the engine.

Every error the engine can raise lives here so the HTTP layer can map each
one to a single (status, code) pair.
"""

from __future__ import annotations


class OntoformsError(Exception):
    """Base class for all engine errors."""


class ParseError(OntoformsError):
    """Malformed Turtle input."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownPrefixError(ParseError):
    """A prefixed name used a prefix that was never declared."""

    def __init__(self, line: int, column: int, prefix: str):
        self.prefix = prefix
        super().__init__(line, column, f"undeclared prefix '{prefix}:'")


class ModelError(OntoformsError):
    """The graph cannot be interpreted as a coherent ontology."""


class UnknownClassError(OntoformsError):
    """A class IRI that is not part of the ontology model."""

    def __init__(self, iri: str):
        self.iri = iri
        super().__init__(f"unknown class: {iri}")


class UnknownIndividualError(OntoformsError):
    """An individual IRI that the model does not know about."""

    def __init__(self, iri: str):
        self.iri = iri
        super().__init__(f"unknown individual: {iri}")


class TypeMismatchError(OntoformsError):
    """An individual's asserted type does not fit the form being used."""


class MismatchedClassError(OntoformsError):
    """Two form structures with different main classes cannot be diffed."""


class ValidationError(OntoformsError):
    """A submission value that the form does not admit."""

    def __init__(self, property: str | None, reason: str):
        self.property = property
        self.reason = reason
        where = f" (property {property})" if property else ""
        super().__init__(f"{reason}{where}")


class OrphanRetractionConflict(OntoformsError):
    """An intermediate individual slated for retraction is still referenced
    by a subject outside the individual being updated."""

    def __init__(self, iri: str, referrer: str):
        self.iri = iri
        self.referrer = referrer
        super().__init__(f"{iri} is still referenced by {referrer}")


class NotFoundError(OntoformsError):
    """No stored ontology under the given id."""


class StorageError(OntoformsError):
    """The backing filesystem failed."""
