"""Typed ontology view over a triple graph.

Extracts classes, properties (with decoded domain expressions), individuals
and labels, and answers the question the form generator needs: which
properties apply to individuals of a given class, counting properties with
no declared domain, properties inherited through the superclass closure,
and rejecting conjunction domains the class only partially satisfies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .errors import ModelError, UnknownClassError
from .rdf import BlankNode, Graph, Iri, Literal, Term
from . import vocab


# ---------------------------------------------------------------------------
# Domain expressions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Unspecified:
    """No rdfs:domain declared; the property applies everywhere."""


@dataclass(frozen=True)
class Thing:
    """Domain is owl:Thing; equivalent to unspecified for admission."""


@dataclass(frozen=True)
class Named:
    cls: Iri


@dataclass(frozen=True)
class UnionOf:
    members: tuple["DomainExpr", ...]


@dataclass(frozen=True)
class IntersectionOf:
    members: tuple["DomainExpr", ...]


DomainExpr = Union[Unspecified, Thing, Named, UnionOf, IntersectionOf]

UNSPECIFIED = Unspecified()
THING = Thing()


class PropertyKind(str, enum.Enum):
    OBJECT = "object"
    DATA = "data"


class PropertySource(str, enum.Enum):
    DECLARED = "declared"
    INHERITED = "inherited"
    GLOBAL = "global"


@dataclass(frozen=True)
class PropertyDecl:
    iri: Iri
    kind: PropertyKind
    domain: DomainExpr = UNSPECIFIED
    range: Optional[Iri] = None
    functional: bool = False
    label: Optional[str] = None


@dataclass(frozen=True)
class ClassDecl:
    iri: Iri
    label: Optional[str] = None
    direct_supers: tuple[Iri, ...] = ()
    equivalents: tuple[Iri, ...] = ()


@dataclass(frozen=True)
class Individual:
    types: tuple[Iri, ...]
    label: Optional[str] = None


@dataclass(frozen=True)
class ApplicableProperty:
    property: Iri
    source: PropertySource


@dataclass
class OntologyModel:
    iri: Iri
    classes: dict[Iri, ClassDecl]
    properties: dict[Iri, PropertyDecl]
    individuals: dict[Iri, Individual]
    labels: dict[Iri, tuple[tuple[str, Optional[str]], ...]]
    source: Graph
    warnings: list[str] = field(default_factory=list)
    _subsumer_cache: dict[Iri, frozenset[Iri]] = field(
        default_factory=dict, repr=False, compare=False
    )


_OWL_THING = Iri(vocab.OWL_THING)


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------


def _decode_list(graph: Graph, head: Term, warnings: list[str]) -> Optional[list[Term]]:
    items: list[Term] = []
    node = head
    seen: set[Term] = set()
    while True:
        if isinstance(node, Iri) and node.value == vocab.RDF_NIL:
            return items
        if not isinstance(node, (BlankNode, Iri)) or node in seen:
            warnings.append(f"malformed RDF collection at {node}")
            return None
        seen.add(node)
        firsts = graph.objects(node, Iri(vocab.RDF_FIRST))
        rests = graph.objects(node, Iri(vocab.RDF_REST))
        if len(firsts) != 1 or len(rests) != 1:
            warnings.append(f"malformed RDF collection at {node}")
            return None
        items.append(firsts[0])
        node = rests[0]


def _decode_class_expr(graph: Graph, term: Term, warnings: list[str]) -> Optional[DomainExpr]:
    if isinstance(term, Iri):
        if term == _OWL_THING:
            return THING
        return Named(term)
    if isinstance(term, BlankNode):
        for pred, ctor in ((vocab.OWL_UNION_OF, UnionOf),
                           (vocab.OWL_INTERSECTION_OF, IntersectionOf)):
            heads = graph.objects(term, Iri(pred))
            if heads:
                items = _decode_list(graph, heads[0], warnings)
                if items is None:
                    return None
                members = [_decode_class_expr(graph, m, warnings) for m in items]
                members = [m for m in members if m is not None]
                if not members:
                    warnings.append("empty class expression ignored")
                    return None
                if len(members) == 1:
                    warnings.append("single-member class expression collapsed")
                    return members[0]
                return ctor(tuple(members))
        warnings.append(f"unsupported anonymous class expression at {term}")
        return None
    warnings.append(f"literal used as a class expression: {term}")
    return None


def extract_model(graph: Graph) -> OntologyModel:
    """Build the typed ontology view of a graph.

    Raises ModelError when a property is typed as both an object and a data
    property. Non-fatal oddities are collected in model.warnings.
    """
    warnings: list[str] = []
    rdf_type = Iri(vocab.RDF_TYPE)

    # labels first; everything else reads them
    labels: dict[Iri, list[tuple[str, Optional[str]]]] = {}
    for t in graph.triples(predicate=Iri(vocab.RDFS_LABEL)):
        if not isinstance(t.subject, Iri):
            continue
        if isinstance(t.object, Literal):
            labels.setdefault(t.subject, []).append((t.object.lexical, t.object.language))
        else:
            warnings.append(f"non-literal rdfs:label on {t.subject} ignored")

    def preferred_label(iri: Iri) -> Optional[str]:
        return _pick_label(labels.get(iri, ()))

    # classes: explicit typing plus appearance as a subClassOf endpoint
    class_iris: set[Iri] = set()
    for t in graph.triples(predicate=rdf_type):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri) and \
                t.object.value in (vocab.OWL_CLASS, vocab.RDFS_CLASS):
            class_iris.add(t.subject)
    subclass_triples = list(graph.triples(predicate=Iri(vocab.RDFS_SUBCLASSOF)))
    for t in subclass_triples:
        for end in (t.subject, t.object):
            if isinstance(end, Iri):
                if end != _OWL_THING:
                    class_iris.add(end)
            else:
                warnings.append(f"anonymous class in subClassOf statement ignored: {end}")

    supers: dict[Iri, set[Iri]] = {c: set() for c in class_iris}
    for t in subclass_triples:
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            if t.subject == t.object:
                continue
            supers[t.subject].add(t.object)

    equivalents: dict[Iri, set[Iri]] = {c: set() for c in class_iris}
    for t in graph.triples(predicate=Iri(vocab.OWL_EQUIVALENT_CLASS)):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            if t.subject in class_iris and t.object in class_iris:
                equivalents[t.subject].add(t.object)
                equivalents[t.object].add(t.subject)
            else:
                warnings.append(
                    f"equivalentClass with undeclared class ignored: "
                    f"{t.subject} = {t.object}")
        else:
            warnings.append("complex equivalentClass expression ignored")

    classes = {
        c: ClassDecl(
            iri=c,
            label=preferred_label(c),
            direct_supers=tuple(sorted(supers[c])),
            equivalents=tuple(sorted(equivalents[c])),
        )
        for c in class_iris
    }

    # properties
    object_ids: set[Iri] = set()
    data_ids: set[Iri] = set()
    functional_ids: set[Iri] = set()
    for t in graph.triples(predicate=rdf_type):
        if not (isinstance(t.subject, Iri) and isinstance(t.object, Iri)):
            continue
        if t.object.value == vocab.OWL_OBJECT_PROPERTY:
            object_ids.add(t.subject)
        elif t.object.value == vocab.OWL_DATATYPE_PROPERTY:
            data_ids.add(t.subject)
        elif t.object.value == vocab.OWL_FUNCTIONAL_PROPERTY:
            functional_ids.add(t.subject)

    both = object_ids & data_ids
    if both:
        raise ModelError(
            "property typed as both object and data property: "
            + ", ".join(sorted(i.value for i in both)))
    for orphan in sorted(functional_ids - object_ids - data_ids):
        warnings.append(
            f"functional property {orphan} has no object/data typing; ignored")

    properties: dict[Iri, PropertyDecl] = {}
    for prop in sorted(object_ids | data_ids):
        kind = PropertyKind.OBJECT if prop in object_ids else PropertyKind.DATA
        exprs: list[DomainExpr] = []
        for dom in graph.objects(prop, Iri(vocab.RDFS_DOMAIN)):
            expr = _decode_class_expr(graph, dom, warnings)
            if expr is None:
                continue
            if isinstance(expr, Named) and expr.cls not in classes:
                warnings.append(
                    f"domain of {prop} references undeclared class {expr.cls}")
            exprs.append(expr)
        if not exprs:
            domain: DomainExpr = UNSPECIFIED
        elif len(exprs) == 1:
            domain = exprs[0]
        else:
            domain = IntersectionOf(tuple(exprs))

        named_ranges = []
        for rng in graph.objects(prop, Iri(vocab.RDFS_RANGE)):
            if isinstance(rng, Iri):
                named_ranges.append(rng)
            else:
                warnings.append(f"anonymous range on {prop} ignored")
        range_iri = named_ranges[0] if named_ranges else None
        for extra in named_ranges[1:]:
            warnings.append(f"extra range {extra} on {prop} ignored")
        if range_iri is not None and kind is PropertyKind.OBJECT and \
                range_iri not in classes and range_iri != _OWL_THING:
            warnings.append(
                f"range of {prop} references undeclared class {range_iri}")

        properties[prop] = PropertyDecl(
            iri=prop,
            kind=kind,
            domain=domain,
            range=range_iri,
            functional=prop in functional_ids,
            label=preferred_label(prop),
        )

    # individuals: explicit rdf:type to a declared class
    typed: dict[Iri, set[Iri]] = {}
    for t in graph.triples(predicate=rdf_type):
        if isinstance(t.object, Iri) and t.object in classes:
            if isinstance(t.subject, Iri):
                typed.setdefault(t.subject, set()).add(t.object)
            else:
                warnings.append(f"blank-node individual {t.subject} ignored")
    individuals = {
        iri: Individual(types=tuple(sorted(types)), label=preferred_label(iri))
        for iri, types in typed.items()
    }

    # ontology IRI, falling back to document base, then to the first class
    ontology_iris = sorted(
        t.subject for t in graph.triples(predicate=rdf_type, object=Iri(vocab.OWL_ONTOLOGY))
        if isinstance(t.subject, Iri))
    if ontology_iris:
        onto_iri = ontology_iris[0]
        for extra in ontology_iris[1:]:
            warnings.append(f"additional ontology declaration {extra} ignored")
    elif graph.base:
        onto_iri = Iri(graph.base)
    elif classes:
        first = sorted(classes)[0].value
        for sep in ("#", "/"):
            if sep in first:
                first = first.rsplit(sep, 1)[0]
                break
        onto_iri = Iri(first)
    else:
        onto_iri = Iri("urn:ontoforms:ontology")

    return OntologyModel(
        iri=onto_iri,
        classes=classes,
        properties=properties,
        individuals=individuals,
        labels={k: tuple(v) for k, v in labels.items()},
        source=graph,
        warnings=warnings,
    )


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def _pick_label(candidates: Iterable[tuple[str, Optional[str]]]) -> Optional[str]:
    def priority(entry: tuple[str, Optional[str]]):
        text, lang = entry
        if lang is None:
            rank = 0
        elif lang.lower() == "en":
            rank = 1
        elif lang.lower().startswith("en-"):
            rank = 2
        else:
            rank = 3
        return (rank, text)

    ordered = sorted(candidates, key=priority)
    return ordered[0][0] if ordered else None


def label_of(model: OntologyModel, entity: Iri) -> str:
    """Preferred rdfs:label (no-language or English first), falling back to
    the IRI local name."""
    picked = _pick_label(model.labels.get(entity, ()))
    return picked if picked is not None else entity.local_name()


def subsumers(model: OntologyModel, cls: Iri) -> frozenset[Iri]:
    """Reflexive-transitive superclass closure of cls, with equivalence
    treated as mutual subsumption. Always contains cls and owl:Thing."""
    if cls == _OWL_THING:
        return frozenset({_OWL_THING})
    if cls not in model.classes:
        raise UnknownClassError(cls.value)
    cached = model._subsumer_cache.get(cls)
    if cached is not None:
        return cached
    seen: set[Iri] = {cls}
    frontier = [cls]
    while frontier:
        current = frontier.pop()
        decl = model.classes.get(current)
        if decl is None:
            continue  # Thing or an undeclared super: terminal
        for nxt in decl.direct_supers + decl.equivalents:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    seen.add(_OWL_THING)
    result = frozenset(seen)
    model._subsumer_cache[cls] = result
    return result


def _admits(expr: DomainExpr, members: frozenset[Iri]) -> bool:
    if isinstance(expr, (Unspecified, Thing)):
        return True
    if isinstance(expr, Named):
        return expr.cls in members
    if isinstance(expr, UnionOf):
        return any(_admits(m, members) for m in expr.members)
    if isinstance(expr, IntersectionOf):
        return all(_admits(m, members) for m in expr.members)
    raise TypeError(f"not a domain expression: {expr!r}")


def domain_admits(model: OntologyModel, domain: DomainExpr, cls: Iri) -> bool:
    """Whether individuals of cls fall inside the property domain.

    A conjunction admits cls only when every conjunct subsumes it, so a
    class equal to just one conjunct is rejected while a common subclass of
    all conjuncts passes.
    """
    return _admits(domain, subsumers(model, cls))


def applicable_properties(model: OntologyModel, cls: Iri) -> list[ApplicableProperty]:
    """All properties whose domain admits cls, ordered by property IRI.

    Tagged Global when no domain constrains the property, Declared when the
    class (or an equivalent) satisfies the domain by itself, Inherited when
    the match needed a strict superclass.
    """
    subs = subsumers(model, cls)
    cluster = frozenset(
        d for d in subs
        if d == cls or (d in model.classes and cls in subsumers(model, d))
    )
    out: list[ApplicableProperty] = []
    for prop_iri in sorted(model.properties):
        decl = model.properties[prop_iri]
        if not _admits(decl.domain, subs):
            continue
        if isinstance(decl.domain, (Unspecified, Thing)):
            source = PropertySource.GLOBAL
        elif _admits(decl.domain, cluster):
            source = PropertySource.DECLARED
        else:
            source = PropertySource.INHERITED
        out.append(ApplicableProperty(property=prop_iri, source=source))
    return out


def individuals_of(model: OntologyModel, cls: Iri) -> list[tuple[Iri, str]]:
    """Individuals whose asserted type is cls or a descendant of it, as
    (iri, label) pairs sorted by label then IRI. owl:Thing matches all."""
    if cls != _OWL_THING and cls not in model.classes:
        raise UnknownClassError(cls.value)
    matches = []
    for iri, ind in model.individuals.items():
        if cls == _OWL_THING or any(cls in subsumers(model, t) for t in ind.types):
            matches.append((iri, label_of(model, iri)))
    return sorted(matches, key=lambda pair: (pair[1], pair[0]))


def subclasses_of(model: OntologyModel, cls: Iri) -> list[Iri]:
    """Strict descendants of cls (everything it subsumes except itself),
    sorted lexicographically."""
    if cls != _OWL_THING and cls not in model.classes:
        raise UnknownClassError(cls.value)
    return sorted(
        d for d in model.classes
        if d != cls and cls in subsumers(model, d)
    )
