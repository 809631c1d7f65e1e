"""Offline command-line mirror of the HTTP endpoints.

Exit codes: 0 success, 1 validation/engine error, 2 parse error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import wire
from .errors import OntoformsError, ParseError
from .forms import FormConfig, generate_form
from .model import extract_model, label_of
from .population import populate
from .rdf import Graph, Iri, parse_turtle, serialize_turtle
from .store import OntologyStore


def _load_model(path: str):
    graph = parse_turtle(Path(path).read_text(encoding="utf-8"))
    return graph, extract_model(graph)


def _load_config(path: str | None) -> FormConfig:
    if path is None:
        return FormConfig.empty()
    return wire.decode_config(json.loads(Path(path).read_text(encoding="utf-8")))


def _fail(exc: OntoformsError) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2 if isinstance(exc, ParseError) else 1)


@click.group()
def main():
    """Generate form structures from ontologies and populate them."""


@main.command()
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data-dir", default=None, help="Storage directory (default ./data).")
def serve(port: int, host: str, data_dir: str | None):
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(OntologyStore(data_dir)), host=host, port=port)


@main.command()
@click.option("--onto", required=True, help="Ontology document (Turtle).")
@click.option("--class", "class_iri", required=True, help="Main class IRI.")
@click.option("--config", "config_path", default=None, help="Form config JSON.")
@click.option("--out", "out_path", default="-", help="Output file (default stdout).")
def form(onto: str, class_iri: str, config_path: str | None, out_path: str):
    """Generate the form structure for a class."""
    try:
        _, model = _load_model(onto)
        structure = generate_form(model, Iri(class_iri), _load_config(config_path))
    except OntoformsError as exc:
        _fail(exc)
    rendered = json.dumps(wire.encode_form(structure), indent=2) + "\n"
    if out_path == "-":
        click.echo(rendered, nl=False)
    else:
        Path(out_path).write_text(rendered, encoding="utf-8")


@main.command("populate")
@click.option("--onto", required=True, help="Ontology document (Turtle).")
@click.option("--class", "class_iri", required=True, help="Main class IRI.")
@click.option("--submission", "submission_path", required=True,
              help="Submission JSON file.")
@click.option("--config", "config_path", default=None, help="Form config JSON.")
@click.option("--out", "out_path", default="-",
              help="Output Turtle with the created triples (default stdout).")
def populate_cmd(onto: str, class_iri: str, submission_path: str,
                 config_path: str | None, out_path: str):
    """Populate the ontology from a submission; writes the new A-box triples."""
    try:
        graph, model = _load_model(onto)
        structure = generate_form(model, Iri(class_iri), _load_config(config_path))
        submission = wire.decode_submission(
            json.loads(Path(submission_path).read_text(encoding="utf-8")))
        result = populate(model, structure, submission)
    except OntoformsError as exc:
        _fail(exc)
    abox = Graph(result.added_triples, prefixes=graph.prefixes)
    rendered = serialize_turtle(abox)
    if out_path == "-":
        click.echo(rendered, nl=False)
    else:
        Path(out_path).write_text(rendered, encoding="utf-8")
    click.echo(f"created {result.root_iri.value} "
               f"({len(result.minted)} minted, {len(result.added_triples)} triples)",
               err=True)


@main.command()
@click.option("--onto", required=True, help="Ontology document (Turtle).")
def inspect(onto: str):
    """Print a summary of an ontology document."""
    try:
        _, model = _load_model(onto)
    except OntoformsError as exc:
        _fail(exc)
    click.echo(f"ontology: {model.iri.value}")
    click.echo(f"classes: {len(model.classes)}")
    for iri in sorted(model.classes):
        decl = model.classes[iri]
        supers = ", ".join(s.local_name() for s in decl.direct_supers) or "Thing"
        click.echo(f"  {label_of(model, iri)} <{iri.value}> -> {supers}")
    click.echo(f"properties: {len(model.properties)}")
    for iri in sorted(model.properties):
        decl = model.properties[iri]
        rng = decl.range.local_name() if decl.range else "<undefined>"
        flags = " functional" if decl.functional else ""
        click.echo(f"  {label_of(model, iri)} [{decl.kind.value}] -> {rng}{flags}")
    click.echo(f"individuals: {len(model.individuals)}")
    for iri in sorted(model.individuals):
        types = ", ".join(t.local_name() for t in model.individuals[iri].types)
        click.echo(f"  {label_of(model, iri)} : {types}")
    if model.warnings:
        click.echo("warnings:")
        for warning in model.warnings:
            click.echo(f"  {warning}")


if __name__ == "__main__":
    main()
