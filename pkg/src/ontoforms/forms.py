"""Recursive form-structure generation.

Walks the properties applicable to a main class depth-first: data properties
become input fields, object properties become selectors over existing
individuals, and configured (class, range) pairs become nested sections that
create a new linked individual in place. Recursion carries the set of
(class, property) pairs already inlined so a revisit degrades to a selector
instead of looping.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional, Union

from .errors import MismatchedClassError, UnknownClassError
from .model import (
    OntologyModel,
    PropertyKind,
    applicable_properties,
    individuals_of,
    label_of,
    subclasses_of,
)
from .rdf import Iri
from . import vocab


class Widget(str, enum.Enum):
    TEXT = "text"
    NUMBER = "number"
    CHECKBOX = "checkbox"
    DATE = "date"


_WIDGETS = {
    vocab.XSD_STRING: Widget.TEXT,
    vocab.XSD_INTEGER: Widget.NUMBER,
    vocab.XSD_INT: Widget.NUMBER,
    vocab.XSD_DECIMAL: Widget.NUMBER,
    vocab.XSD_FLOAT: Widget.NUMBER,
    vocab.XSD_DOUBLE: Widget.NUMBER,
    vocab.XSD_NON_NEGATIVE_INTEGER: Widget.NUMBER,
    vocab.XSD_POSITIVE_INTEGER: Widget.NUMBER,
    vocab.XSD_BOOLEAN: Widget.CHECKBOX,
    vocab.XSD_DATE: Widget.DATE,
    vocab.XSD_DATETIME: Widget.DATE,
    vocab.XSD_GYEAR: Widget.DATE,
}


def widget_for(datatype: Optional[Iri]) -> Widget:
    if datatype is None:
        return Widget.TEXT
    return _WIDGETS.get(datatype.value, Widget.TEXT)


@dataclass
class FormConfig:
    """Administrator declarations applied during generation."""

    hidden_properties: frozenset[Iri] = frozenset()
    inline_pairs: frozenset[tuple[Iri, Iri]] = frozenset()
    label_overrides: dict[Iri, str] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.label_overrides is None:
            self.label_overrides = {}
        self.hidden_properties = frozenset(self.hidden_properties)
        self.inline_pairs = frozenset(self.inline_pairs)

    @classmethod
    def empty(cls) -> "FormConfig":
        return cls()


@dataclass(frozen=True)
class Field:
    property: Iri
    label: str
    datatype: Iri
    widget: Widget
    functional: bool


@dataclass(frozen=True)
class Selector:
    property: Iri
    label: str
    range_class: Iri
    multiple: bool
    options: tuple[tuple[Iri, str], ...]


@dataclass(frozen=True)
class Section:
    property: Iri
    label: str
    range_class: Iri
    form: "FormStructure"


FormElement = Union[Field, Selector, Section]


@dataclass(frozen=True)
class FormStructure:
    main_class: Iri
    label: str
    subclass_options: tuple[tuple[Iri, str], ...]
    elements: tuple[FormElement, ...]
    warnings: tuple[str, ...] = ()

    def element_properties(self) -> set[Iri]:
        return {e.property for e in self.elements}


_OWL_THING = Iri(vocab.OWL_THING)


def generate_form(
    model: OntologyModel,
    main_class: Iri,
    config: Optional[FormConfig] = None,
) -> FormStructure:
    """Build the recursive form structure for creating (or editing) an
    individual of main_class under the given configuration.

    Cycle degradations are reported as warnings on the returned root form,
    one entry per degraded path.
    """
    cfg = config or FormConfig.empty()
    if main_class not in model.classes:
        raise UnknownClassError(main_class.value)
    warnings: list[str] = []

    def name(entity: Iri) -> str:
        override = cfg.label_overrides.get(entity)
        return override if override is not None else label_of(model, entity)

    def options_for(range_class: Iri) -> tuple[tuple[Iri, str], ...]:
        return tuple((iri, name(iri)) for iri, _ in individuals_of(model, range_class))

    def breadcrumb(path: tuple[tuple[Iri, Iri], ...], key: tuple[Iri, Iri]) -> str:
        steps = [f"{c.local_name()}.{p.local_name()}" for c, p in path + (key,)]
        return " > ".join(steps)

    def build(cls: Iri, path: tuple[tuple[Iri, Iri], ...]) -> FormStructure:
        elements: list[FormElement] = []
        for applicable in applicable_properties(model, cls):
            prop = model.properties[applicable.property]
            if prop.iri in cfg.hidden_properties:
                continue
            if prop.kind is PropertyKind.DATA:
                datatype = prop.range if prop.range is not None else Iri(vocab.XSD_STRING)
                elements.append(Field(
                    property=prop.iri,
                    label=name(prop.iri),
                    datatype=datatype,
                    widget=widget_for(datatype),
                    functional=prop.functional,
                ))
                continue
            range_class = prop.range if prop.range in model.classes else None
            inline = range_class is not None and (cls, range_class) in cfg.inline_pairs
            if inline:
                key = (cls, prop.iri)
                if key in path:
                    warnings.append(
                        f"inline section degraded to a selector to break a "
                        f"cycle at {breadcrumb(path, key)}")
                else:
                    elements.append(Section(
                        property=prop.iri,
                        label=name(prop.iri),
                        range_class=range_class,
                        form=build(range_class, path + (key,)),
                    ))
                    continue
            target = range_class if range_class is not None else _OWL_THING
            elements.append(Selector(
                property=prop.iri,
                label=name(prop.iri),
                range_class=target,
                multiple=not prop.functional,
                options=options_for(target),
            ))
        subclass_options = tuple(
            (sub, name(sub)) for sub in subclasses_of(model, cls))
        return FormStructure(
            main_class=cls,
            label=name(cls),
            subclass_options=subclass_options,
            elements=tuple(elements),
        )

    root = build(main_class, ())
    return replace(root, warnings=tuple(warnings))


def diff_forms(a: FormStructure, b: FormStructure) -> set[Iri]:
    """Symmetric difference of the top-level element property sets."""
    if a.main_class != b.main_class:
        raise MismatchedClassError(
            f"{a.main_class.value} != {b.main_class.value}")
    return a.element_properties() ^ b.element_properties()
