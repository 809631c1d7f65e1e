"""Turning filled submissions into A-box triples, and back.

populate mints the root individual plus one intermediate individual per
nested section creation; intermediates carry a marker triple in the tool's
own namespace so prefill can expand them back into creations. update applies
property-scoped replacement: only properties present in the submission are
touched, and intermediates orphaned by a replacement are retracted together
with their triples. All three operations are pure; callers apply the
returned triple deltas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import date, datetime
from typing import Optional, Union

from .errors import (
    OrphanRetractionConflict,
    TypeMismatchError,
    UnknownClassError,
    UnknownIndividualError,
    ValidationError,
)
from .forms import Field, FormStructure, Section, Selector, Widget
from .model import OntologyModel, _pick_label, individuals_of, subsumers
from .rdf import Graph, Iri, Literal, Triple
from . import vocab


@dataclass(frozen=True)
class Submission:
    chosen_class: Iri
    display_label: Optional[str] = None
    values: tuple["ValueEntry", ...] = ()


@dataclass(frozen=True)
class ValueEntry:
    property: Iri
    literals: tuple[Literal, ...] = ()
    individuals: tuple[Iri, ...] = ()
    creations: tuple[Submission, ...] = ()

    def value_count(self) -> int:
        return len(self.literals) + len(self.individuals) + len(self.creations)


@dataclass(frozen=True)
class PopulationResult:
    root_iri: Iri
    minted: tuple[tuple[Iri, Iri], ...]
    added_triples: frozenset[Triple]
    removed_triples: frozenset[Triple] = frozenset()


_RDF_TYPE = Iri(vocab.RDF_TYPE)
_RDFS_LABEL = Iri(vocab.RDFS_LABEL)
_MARKER = Iri(vocab.CREATED_AS_INTERMEDIATE)
_MARKER_TRUE = Literal("true", datatype=Iri(vocab.XSD_BOOLEAN))
_XSD_STRING = Iri(vocab.XSD_STRING)
_OWL_THING = Iri(vocab.OWL_THING)


# ---------------------------------------------------------------------------
# IRI minting
# ---------------------------------------------------------------------------


def _sanitize(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_]", "_", text)


class _Minter:
    """Hands out fresh individual IRIs inside one population session."""

    def __init__(self, model: OntologyModel):
        self.namespace = model.iri.value.rstrip("#/") + "#"
        self.used: set[str] = set()
        for t in model.source.triple_set():
            for term in (t.subject, t.predicate, t.object):
                if isinstance(term, Iri):
                    self.used.add(term.value)

    def mint(self, cls: Iri, display_label: Optional[str]) -> Iri:
        stem = _sanitize(display_label) if display_label else cls.local_name()
        n = 1
        while f"{self.namespace}{stem}_{n}" in self.used:
            n += 1
        value = f"{self.namespace}{stem}_{n}"
        self.used.add(value)
        return Iri(value)


def mint_iri(model: OntologyModel, cls: Iri, display_label: Optional[str] = None) -> Iri:
    """Next unused IRI of the form <namespace>#<stem>_<n> for an individual
    of cls; the stem is the sanitized display label, else the class name."""
    if cls != _OWL_THING and cls not in model.classes:
        raise UnknownClassError(cls.value)
    return _Minter(model).mint(cls, display_label)


# ---------------------------------------------------------------------------
# Literal validation
# ---------------------------------------------------------------------------

_INTEGER_RE = re.compile(r"^[+-]?[0-9]+$")
_DECIMAL_RE = re.compile(r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)$")
_FLOAT_RE = re.compile(r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$")
_GYEAR_RE = re.compile(r"^-?[0-9]{4,}$")

_NON_NEGATIVE = {vocab.XSD_NON_NEGATIVE_INTEGER, vocab.XSD_POSITIVE_INTEGER}


def _check_lexical(prop: Iri, datatype: Iri, widget: Widget, lexical: str) -> None:
    dt = datatype.value
    if widget is Widget.NUMBER:
        if dt in (vocab.XSD_INTEGER, vocab.XSD_INT) or dt in _NON_NEGATIVE:
            if not _INTEGER_RE.match(lexical):
                raise ValidationError(prop.value, f"not an integer: {lexical!r}")
            if dt in _NON_NEGATIVE and int(lexical) < 0:
                raise ValidationError(prop.value, f"negative value: {lexical!r}")
            if dt == vocab.XSD_POSITIVE_INTEGER and int(lexical) == 0:
                raise ValidationError(prop.value, "zero is not positive")
        elif dt == vocab.XSD_DECIMAL:
            if not _DECIMAL_RE.match(lexical):
                raise ValidationError(prop.value, f"not a decimal: {lexical!r}")
        else:
            if not _FLOAT_RE.match(lexical):
                raise ValidationError(prop.value, f"not a number: {lexical!r}")
    elif widget is Widget.CHECKBOX:
        if lexical not in ("true", "false"):
            raise ValidationError(prop.value, f"not a boolean: {lexical!r}")
    elif widget is Widget.DATE:
        if dt == vocab.XSD_GYEAR:
            if not _GYEAR_RE.match(lexical):
                raise ValidationError(prop.value, f"not a year: {lexical!r}")
        elif dt == vocab.XSD_DATETIME:
            try:
                datetime.fromisoformat(lexical)
            except ValueError:
                raise ValidationError(prop.value, f"not a datetime: {lexical!r}")
        else:
            try:
                date.fromisoformat(lexical)
            except ValueError:
                raise ValidationError(prop.value, f"not a date: {lexical!r}")


def _field_literal(element: Field, submitted: Literal) -> Literal:
    """Normalize a submitted literal to the field's declared datatype;
    plain strings stay untyped."""
    _check_lexical(element.property, element.datatype, element.widget, submitted.lexical)
    if element.datatype == _XSD_STRING:
        return Literal(submitted.lexical)
    return Literal(submitted.lexical, datatype=element.datatype)


# ---------------------------------------------------------------------------
# populate
# ---------------------------------------------------------------------------

FormElement = Union[Field, Selector, Section]


@dataclass
class _Session:
    model: OntologyModel
    minter: _Minter
    minted: list[tuple[Iri, Iri]] = field(default_factory=list)
    added: set[Triple] = field(default_factory=set)


def _legal_classes(form: FormStructure) -> set[Iri]:
    return {form.main_class} | {iri for iri, _ in form.subclass_options}


def _elements_by_property(form: FormStructure) -> dict[Iri, FormElement]:
    return {e.property: e for e in form.elements}


def _is_functional(model: OntologyModel, element: FormElement) -> bool:
    if isinstance(element, Field):
        return element.functional
    if isinstance(element, Selector):
        return not element.multiple
    return model.properties[element.property].functional


def _check_entry_shape(model: OntologyModel, entry: ValueEntry,
                       element: FormElement) -> None:
    prop = entry.property.value
    if isinstance(element, Field):
        if entry.individuals or entry.creations:
            raise ValidationError(prop, "data field takes literal values only")
    else:
        if entry.literals:
            raise ValidationError(prop, "object property takes individuals, not literals")
        if isinstance(element, Selector) and entry.creations:
            raise ValidationError(
                prop, "selector cannot create new individuals; configure an inline section")
    if _is_functional(model, element) and entry.value_count() > 1:
        raise ValidationError(prop, "functional property admits at most one value")


def _check_selected(model: OntologyModel, prop: Iri, range_class: Iri,
                    selected: tuple[Iri, ...]) -> None:
    if not selected:
        return
    allowed = {iri for iri, _ in individuals_of(model, range_class)}
    for iri in selected:
        if iri not in allowed:
            raise ValidationError(
                prop.value, f"{iri.value} is not an individual of {range_class.value}")


def _check_entries(form: FormStructure, submission: Submission) -> dict[Iri, FormElement]:
    if submission.chosen_class not in _legal_classes(form):
        raise ValidationError(
            None, f"{submission.chosen_class.value} is not the form's class "
                  f"or one of its subclasses")
    elements = _elements_by_property(form)
    seen: set[Iri] = set()
    for entry in submission.values:
        if entry.property in seen:
            raise ValidationError(entry.property.value, "property appears twice")
        seen.add(entry.property)
        if entry.property not in elements:
            raise ValidationError(entry.property.value, "property is not part of the form")
    return elements


def _apply_creation(session: _Session, form: FormStructure,
                    submission: Submission, intermediate: bool) -> Iri:
    elements = _check_entries(form, submission)
    root = session.minter.mint(submission.chosen_class, submission.display_label)
    session.minted.append((root, submission.chosen_class))
    session.added.add(Triple(root, _RDF_TYPE, submission.chosen_class))
    if intermediate:
        session.added.add(Triple(root, _MARKER, _MARKER_TRUE))
    if submission.display_label is not None:
        session.added.add(Triple(root, _RDFS_LABEL, Literal(submission.display_label)))

    for entry in submission.values:
        element = elements[entry.property]
        _check_entry_shape(session.model, entry, element)
        if isinstance(element, Field):
            for lit in entry.literals:
                session.added.add(Triple(root, entry.property, _field_literal(element, lit)))
        else:
            _check_selected(session.model, entry.property, element.range_class,
                            entry.individuals)
            for iri in entry.individuals:
                session.added.add(Triple(root, entry.property, iri))
            if isinstance(element, Section):
                for creation in entry.creations:
                    child = _apply_creation(session, element.form, creation,
                                            intermediate=True)
                    session.added.add(Triple(root, entry.property, child))
    return root


def populate(model: OntologyModel, form: FormStructure,
             submission: Submission) -> PopulationResult:
    """Convert a submission into the triples to insert. Nothing is written
    on error; the caller merges added_triples into the A-box."""
    session = _Session(model=model, minter=_Minter(model))
    root = _apply_creation(session, form, submission, intermediate=False)
    return PopulationResult(
        root_iri=root,
        minted=tuple(session.minted),
        added_triples=frozenset(session.added),
    )


# ---------------------------------------------------------------------------
# prefill
# ---------------------------------------------------------------------------


def is_intermediate(graph: Graph, iri: Iri) -> bool:
    return Triple(iri, _MARKER, _MARKER_TRUE) in graph


def _chosen_type(model: OntologyModel, form: FormStructure, individual: Iri) -> Iri:
    ind = model.individuals.get(individual)
    if ind is None:
        raise UnknownIndividualError(individual.value)
    matching = [t for t in ind.types if form.main_class in subsumers(model, t)]
    if not matching:
        raise TypeMismatchError(
            f"{individual.value} is not an individual of {form.main_class.value}")
    # most specific type first; ties resolved lexicographically
    matching.sort(key=lambda t: (-len(subsumers(model, t)), t.value))
    return matching[0]


def _raw_label(model: OntologyModel, individual: Iri) -> Optional[str]:
    return _pick_label(model.labels.get(individual, ()))


def prefill(model: OntologyModel, form: FormStructure, individual: Iri) -> Submission:
    """Reconstruct a submission mirroring the individual's assertions,
    restricted to the form's elements. Intermediate-marked neighbours under
    a section expand back into creations."""
    chosen = _chosen_type(model, form, individual)
    graph = model.source
    entries: list[ValueEntry] = []
    for element in form.elements:
        objects = graph.objects(individual, element.property)
        if isinstance(element, Field):
            literals = tuple(o for o in objects if isinstance(o, Literal))
            if literals:
                entries.append(ValueEntry(element.property, literals=literals))
        elif isinstance(element, Selector):
            iris = tuple(o for o in objects if isinstance(o, Iri))
            if iris:
                entries.append(ValueEntry(element.property, individuals=iris))
        else:  # Section
            iris = [o for o in objects if isinstance(o, Iri)]
            selected = tuple(o for o in iris if not is_intermediate(graph, o))
            creations = tuple(
                prefill(model, element.form, o)
                for o in iris if is_intermediate(graph, o))
            if selected or creations:
                entries.append(ValueEntry(
                    element.property, individuals=selected, creations=creations))
    return Submission(
        chosen_class=chosen,
        display_label=_raw_label(model, individual),
        values=tuple(entries),
    )


# ---------------------------------------------------------------------------
# update
# ---------------------------------------------------------------------------


def _canonical(model: OntologyModel, form: FormStructure, submission: Submission):
    """Order-insensitive comparable shape of a submission, with literals
    normalized the way populate would assert them."""
    elements = _elements_by_property(form)
    entries = []
    for entry in submission.values:
        element = elements.get(entry.property)
        if element is None:
            raise ValidationError(entry.property.value, "property is not part of the form")
        if entry.value_count() == 0:
            continue
        lits: tuple = ()
        if isinstance(element, Field):
            lits = tuple(sorted(
                str(_field_literal(element, lit)) for lit in entry.literals))
        inds = tuple(sorted(i.value for i in entry.individuals))
        subs: tuple = ()
        if isinstance(element, Section):
            subs = tuple(sorted(
                _canonical(model, element.form, c) for c in entry.creations))
        entries.append((entry.property.value, lits, inds, subs))
    return (
        submission.chosen_class.value,
        submission.display_label,
        tuple(sorted(entries)),
    )


def _maybe_retract_orphan(graph: Graph, owner: Iri, target: Iri,
                          removed: set[Triple]) -> None:
    """Retract every triple about target once nothing points at it anymore.

    A surviving reference from the owner (via a property outside this
    update) keeps the intermediate alive; a surviving reference from any
    other subject is a conflict.
    """
    survivors = [t for t in graph.triples(object=target)
                 if t not in removed and t.subject != target]
    for t in survivors:
        if t.subject != owner:
            raise OrphanRetractionConflict(target.value, str(t.subject))
    if survivors:
        return
    for t in graph.triples(subject=target):
        if t in removed:
            continue
        removed.add(t)
        if isinstance(t.object, Iri) and t.object != target \
                and is_intermediate(graph, t.object):
            _maybe_retract_orphan(graph, target, t.object, removed)


def update(model: OntologyModel, form: FormStructure, individual: Iri,
           submission: Submission) -> PopulationResult:
    """Property-scoped replacement of the individual's values.

    Properties present in the submission have their triples replaced;
    absent properties stay untouched. Section creations are matched against
    existing intermediates by content, so an unchanged creation is a no-op
    while a changed one retracts the old intermediate and mints a new one.
    """
    chosen = _chosen_type(model, form, individual)
    if submission.chosen_class != chosen:
        raise TypeMismatchError(
            f"cannot retype {individual.value} from {chosen.value} "
            f"to {submission.chosen_class.value}")

    graph = model.source
    elements = _check_entries(form, submission)
    session = _Session(model=model, minter=_Minter(model))
    added = session.added
    removed: set[Triple] = set()

    for entry in submission.values:
        element = elements[entry.property]
        _check_entry_shape(model, entry, element)
        old = list(graph.triples(individual, entry.property))

        if isinstance(element, Field):
            new_literals = {_field_literal(element, lit) for lit in entry.literals}
            for t in old:
                if t.object not in new_literals:
                    removed.add(t)
            for lit in new_literals:
                t = Triple(individual, entry.property, lit)
                if t not in graph:
                    added.add(t)
            continue

        _check_selected(model, entry.property, element.range_class, entry.individuals)
        new_direct = set(entry.individuals)

        if isinstance(element, Selector):
            keep = new_direct
        else:  # Section: match unchanged creations to existing intermediates
            old_intermediates = [
                t.object for t in old
                if isinstance(t.object, Iri) and is_intermediate(graph, t.object)]
            remaining = {
                o: _canonical(model, element.form, prefill(model, element.form, o))
                for o in old_intermediates if o not in new_direct}
            for creation in entry.creations:
                shape = _canonical(model, element.form, creation)
                match = next((o for o, c in remaining.items() if c == shape), None)
                if match is not None:
                    del remaining[match]
                    continue
                child = _apply_creation(session, element.form, creation,
                                        intermediate=True)
                added.add(Triple(individual, entry.property, child))
            matched = set(old_intermediates) - set(remaining)
            keep = new_direct | matched

        for t in old:
            if not (isinstance(t.object, Iri) and t.object in keep):
                removed.add(t)
        for t in old:
            if isinstance(t.object, Iri) and t.object not in keep \
                    and is_intermediate(graph, t.object):
                _maybe_retract_orphan(graph, individual, t.object, removed)
        for iri in new_direct:
            t = Triple(individual, entry.property, iri)
            if t not in graph:
                added.add(t)

    if submission.display_label is not None:
        new_label = Literal(submission.display_label)
        for t in graph.triples(individual, _RDFS_LABEL):
            if t.object != new_label:
                removed.add(t)
        t = Triple(individual, _RDFS_LABEL, new_label)
        if t not in graph:
            added.add(t)

    return PopulationResult(
        root_iri=individual,
        minted=tuple(session.minted),
        added_triples=frozenset(added),
        removed_triples=frozenset(removed),
    )


def apply_result(graph: Graph, result: PopulationResult) -> Graph:
    """New graph with the result's removals and additions applied."""
    out = graph.copy()
    for t in result.removed_triples:
        out.discard(t)
    for t in result.added_triples:
        out.add(t)
    return out
