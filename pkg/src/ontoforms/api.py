"""HTTP surface: the Core API consumed by the admin UI and by domain apps."""

from __future__ import annotations

import os
from typing import Any, Optional

from fastapi import Body, FastAPI, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from . import wire
from .errors import (
    ModelError,
    NotFoundError,
    OntoformsError,
    OrphanRetractionConflict,
    ParseError,
    StorageError,
    TypeMismatchError,
    UnknownClassError,
    UnknownIndividualError,
    ValidationError,
)
from .forms import generate_form
from .model import (
    IntersectionOf,
    Named,
    OntologyModel,
    Thing,
    UnionOf,
    Unspecified,
    PropertyKind,
    label_of,
    subsumers,
)
from .population import populate, prefill, update
from .rdf import Iri
from .store import OntologyStore
from . import vocab

CORS_ENV = "ONTOFORMS_CORS"


def _error_payload(exc: OntoformsError) -> tuple[int, str, Optional[dict]]:
    if isinstance(exc, ParseError):
        return 400, "parse-error", {"line": exc.line, "column": exc.column}
    if isinstance(exc, UnknownClassError):
        return 404, "unknown-class", {"iri": exc.iri}
    if isinstance(exc, UnknownIndividualError):
        return 404, "not-found", {"iri": exc.iri}
    if isinstance(exc, (ValidationError, TypeMismatchError, ModelError)):
        detail = None
        if isinstance(exc, ValidationError):
            detail = {"property": exc.property, "reason": exc.reason}
        return 422, "validation", detail
    if isinstance(exc, OrphanRetractionConflict):
        return 409, "conflict", {"iri": exc.iri, "referencedBy": exc.referrer}
    if isinstance(exc, NotFoundError):
        return 404, "not-found", None
    if isinstance(exc, StorageError):
        return 500, "storage", None
    return 500, "storage", None


def _render_domain(model: OntologyModel, expr) -> str:
    if isinstance(expr, Unspecified):
        return "<undefined>"
    if isinstance(expr, Thing):
        return "Thing"
    if isinstance(expr, Named):
        return label_of(model, expr.cls)
    if isinstance(expr, UnionOf):
        return "(" + " or ".join(_render_domain(model, m) for m in expr.members) + ")"
    if isinstance(expr, IntersectionOf):
        return "(" + " and ".join(_render_domain(model, m) for m in expr.members) + ")"
    return "<undefined>"


def _class_tree(model: OntologyModel) -> dict[str, Any]:
    children: dict[Optional[Iri], list[Iri]] = {}
    for iri, decl in model.classes.items():
        parents = [s for s in decl.direct_supers if s in model.classes]
        if parents:
            for parent in parents:
                children.setdefault(parent, []).append(iri)
        else:
            children.setdefault(None, []).append(iri)

    def node(iri: Iri, path: frozenset[Iri]) -> dict[str, Any]:
        kids = [] if iri in path else sorted(
            children.get(iri, []), key=lambda c: (label_of(model, c), c.value))
        return {
            "iri": iri.value,
            "label": label_of(model, iri),
            "children": [node(k, path | {iri}) for k in kids],
        }

    roots = sorted(children.get(None, []),
                   key=lambda c: (label_of(model, c), c.value))
    return {
        "iri": vocab.OWL_THING,
        "label": "Thing",
        "children": [node(r, frozenset()) for r in roots],
    }


def _detail(model: OntologyModel) -> dict[str, Any]:
    properties = []
    for iri in sorted(model.properties):
        decl = model.properties[iri]
        properties.append({
            "iri": iri.value,
            "domain": _render_domain(model, decl.domain),
            "label": label_of(model, iri),
            "range": label_of(model, decl.range) if decl.range else "<undefined>",
            "type": "Object Prop" if decl.kind is PropertyKind.OBJECT else "Data Prop",
        })
    individuals = [
        {"label": label_of(model, iri), "uri": iri.value}
        for iri in sorted(model.individuals)
    ]
    individuals.sort(key=lambda entry: (entry["label"], entry["uri"]))
    return {
        "classes": _class_tree(model),
        "properties": properties,
        "individuals": individuals,
    }


def _check_config_iris(model: OntologyModel, config) -> None:
    for prop in sorted(config.hidden_properties):
        if prop not in model.properties:
            raise NotFoundError(f"no property {prop.value} in the ontology")
    for ctx, rng in sorted(config.inline_pairs):
        for cls in (ctx, rng):
            if cls not in model.classes:
                raise UnknownClassError(cls.value)
    known = set(model.classes) | set(model.properties) | set(model.individuals)
    for entity in sorted(config.label_overrides):
        if entity not in known:
            raise NotFoundError(f"no entity {entity.value} in the ontology")


def create_app(store: Optional[OntologyStore] = None) -> FastAPI:
    app = FastAPI(title="Ontoforms Core API", version="0.1.0")
    app.state.store = store or OntologyStore()

    if os.environ.get(CORS_ENV, "").lower() != "off":
        from fastapi.middleware.cors import CORSMiddleware
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(OntoformsError)
    def handle_engine_error(request: Request, exc: OntoformsError):
        status, code, detail = _error_payload(exc)
        body: dict[str, Any] = {"code": code, "message": str(exc)}
        if detail is not None:
            body["detail"] = detail
        return JSONResponse(status_code=status, content=body)

    def _store() -> OntologyStore:
        return app.state.store

    @app.post("/ontologies", status_code=201)
    def upload_ontology(payload: dict = Body(...)):
        name = payload.get("name")
        turtle = payload.get("turtle")
        if not isinstance(name, str) or not name:
            raise ValidationError(None, "name is required")
        if not isinstance(turtle, str):
            raise ValidationError(None, "turtle document is required")
        record = _store().upload(name, turtle)
        return {"id": record.id, "iri": record.iri, "name": record.name}

    @app.get("/ontologies")
    def list_ontologies():
        return [
            {"id": r.id, "iri": r.iri, "name": r.name}
            for r in _store().records()
        ]

    @app.get("/ontologies/{ontology_id}")
    def ontology_detail(ontology_id: str):
        return _detail(_store().load_model(ontology_id))

    @app.get("/ontologies/{ontology_id}/form")
    def form_for_class(ontology_id: str, cls: str = Query(..., alias="class")):
        store = _store()
        model = store.load_model(ontology_id)
        config = store.get_config(ontology_id)
        return wire.encode_form(generate_form(model, Iri(cls), config))

    @app.get("/ontologies/{ontology_id}/config")
    def get_config(ontology_id: str):
        return wire.encode_config(_store().get_config(ontology_id))

    @app.put("/ontologies/{ontology_id}/config")
    def put_config(ontology_id: str, payload: dict = Body(...)):
        store = _store()
        config = wire.decode_config(payload)
        _check_config_iris(store.load_model(ontology_id), config)
        lock = store.writer_lock(ontology_id)
        with lock:
            store.put_config(ontology_id, config)
        return wire.encode_config(store.get_config(ontology_id))

    @app.post("/ontologies/{ontology_id}/individuals", status_code=201)
    def create_individual(ontology_id: str, payload: dict = Body(...)):
        store = _store()
        submission = wire.decode_submission(payload)
        lock = store.writer_lock(ontology_id)
        with lock:
            model = store.load_model(ontology_id)
            config = store.get_config(ontology_id)
            form = generate_form(model, submission.chosen_class, config) \
                if submission.chosen_class in model.classes else None
            if form is None:
                raise UnknownClassError(submission.chosen_class.value)
            result = populate(model, form, submission)
            store.apply_population(ontology_id, result)
        return wire.encode_population_result(result)

    @app.get("/ontologies/{ontology_id}/individuals/{iri:path}")
    def read_individual(ontology_id: str, iri: str,
                        cls: Optional[str] = Query(None, alias="class")):
        store = _store()
        model = store.load_model(ontology_id)
        config = store.get_config(ontology_id)
        individual = Iri(iri)
        main_class = Iri(cls) if cls else _primary_type(model, individual)
        form = generate_form(model, main_class, config)
        return wire.encode_submission(prefill(model, form, individual))

    @app.put("/ontologies/{ontology_id}/individuals/{iri:path}")
    def update_individual(ontology_id: str, iri: str,
                          payload: dict = Body(...),
                          cls: Optional[str] = Query(None, alias="class")):
        store = _store()
        submission = wire.decode_submission(payload)
        individual = Iri(iri)
        lock = store.writer_lock(ontology_id)
        with lock:
            model = store.load_model(ontology_id)
            config = store.get_config(ontology_id)
            main_class = Iri(cls) if cls else _primary_type(model, individual)
            form = generate_form(model, main_class, config)
            result = update(model, form, individual, submission)
            store.apply_population(ontology_id, result)
        return wire.encode_population_result(result)

    @app.get("/ontologies/{ontology_id}/export")
    def export_ontology(ontology_id: str):
        return PlainTextResponse(_store().export(ontology_id),
                                 media_type="text/turtle")

    return app


def _primary_type(model: OntologyModel, individual: Iri) -> Iri:
    """Most specific asserted type, used when no form context is given."""
    ind = model.individuals.get(individual)
    if ind is None:
        raise UnknownIndividualError(individual.value)
    ordered = sorted(ind.types,
                     key=lambda t: (-len(subsumers(model, t)), t.value))
    return ordered[0]
