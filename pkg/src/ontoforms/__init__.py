"""Ontoforms: form structures from ontologies, and population back into them."""

from .errors import (
    MismatchedClassError,
    ModelError,
    NotFoundError,
    OntoformsError,
    OrphanRetractionConflict,
    ParseError,
    StorageError,
    TypeMismatchError,
    UnknownClassError,
    UnknownIndividualError,
    UnknownPrefixError,
    ValidationError,
)
from .forms import (
    Field,
    FormConfig,
    FormStructure,
    Section,
    Selector,
    Widget,
    diff_forms,
    generate_form,
)
from .model import (
    ApplicableProperty,
    ClassDecl,
    IntersectionOf,
    Named,
    OntologyModel,
    PropertyDecl,
    PropertyKind,
    PropertySource,
    Thing,
    UnionOf,
    Unspecified,
    applicable_properties,
    domain_admits,
    extract_model,
    individuals_of,
    label_of,
    subclasses_of,
    subsumers,
)
from .population import (
    PopulationResult,
    Submission,
    ValueEntry,
    apply_result,
    mint_iri,
    populate,
    prefill,
    update,
)
from .rdf import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Triple,
    graph_union,
    parse_turtle,
    serialize_turtle,
)
from .store import OntologyRecord, OntologyStore

__version__ = "0.1.0"
