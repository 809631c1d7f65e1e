"""File-backed store for uploaded ontologies, their A-boxes and configs.

Layout: <data-dir>/index.json plus one directory per ontology under
<data-dir>/ontologies/<id>/ holding ontology.ttl (immutable after upload),
abox.ttl (all mutations) and config.json. Writes go through a
write-temp-then-rename step so a crash leaves either the old or the new
file, never a torn one.
"""

from __future__ import annotations

import json
import logging
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .errors import NotFoundError, StorageError, ValidationError
from .forms import FormConfig
from .model import OntologyModel, extract_model
from .population import PopulationResult
from .rdf import Graph, graph_union, parse_turtle, serialize_turtle
from . import wire

DATA_DIR_ENV = "ONTOFORMS_DATA_DIR"
DEFAULT_DATA_DIR = "data"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OntologyRecord:
    id: str
    iri: str
    name: str
    tbox_path: Path
    abox_path: Path
    config_path: Path
    created_at: str


def _slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]", "-", name.lower())
    return slug.strip("-") or "ontology"


def _atomic_write(path: Path, content: str) -> None:
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(content)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise StorageError(f"cannot write {path}: {exc}") from exc


class OntologyStore:
    """Desk-scale triplestore over the local filesystem.

    One writer lock per ontology id serializes read-modify-write cycles of
    the A-box; reads never block reads.
    """

    def __init__(self, data_dir: Optional[str | Path] = None):
        root = data_dir or os.environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR
        self.data_dir = Path(root)
        self.ontologies_dir = self.data_dir / "ontologies"
        self.index_path = self.data_dir / "index.json"
        try:
            self.ontologies_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot create data dir {self.data_dir}: {exc}") from exc
        self._mutex = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}
        self._records: dict[str, OntologyRecord] = {}
        self._load_index()

    # -- index ------------------------------------------------------------

    def _load_index(self) -> None:
        if not self.index_path.exists():
            return
        try:
            raw = json.loads(self.index_path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise StorageError(f"corrupt index {self.index_path}: {exc}") from exc
        for entry in raw.get("records", []):
            record = OntologyRecord(
                id=entry["id"],
                iri=entry["iri"],
                name=entry["name"],
                tbox_path=self.data_dir / entry["tboxPath"],
                abox_path=self.data_dir / entry["aboxPath"],
                config_path=self.data_dir / entry["configPath"],
                created_at=entry["createdAt"],
            )
            self._records[record.id] = record

    def _save_index(self) -> None:
        payload = {"records": [
            {
                "id": r.id,
                "iri": r.iri,
                "name": r.name,
                "tboxPath": str(r.tbox_path.relative_to(self.data_dir)),
                "aboxPath": str(r.abox_path.relative_to(self.data_dir)),
                "configPath": str(r.config_path.relative_to(self.data_dir)),
                "createdAt": r.created_at,
            }
            for r in sorted(self._records.values(), key=lambda r: r.created_at)
        ]}
        _atomic_write(self.index_path, json.dumps(payload, indent=2) + "\n")

    # -- public surface ----------------------------------------------------

    def records(self) -> list[OntologyRecord]:
        return sorted(self._records.values(), key=lambda r: r.created_at)

    def get_record(self, ontology_id: str) -> OntologyRecord:
        record = self._records.get(ontology_id)
        if record is None:
            raise NotFoundError(f"no ontology with id {ontology_id!r}")
        return record

    def upload(self, name: str, document: str) -> OntologyRecord:
        """Persist a new ontology document. The document must parse; its
        bytes are stored verbatim and never touched again."""
        graph = parse_turtle(document)
        model = extract_model(graph)
        with self._mutex:
            base = _slugify(name)
            slug = base
            n = 1
            while slug in self._records:
                n += 1
                slug = f"{base}-{n}"
            if slug != base:
                logger.warning("duplicate ontology name %r; stored as %r", name, slug)
            directory = self.ontologies_dir / slug
            try:
                directory.mkdir(parents=True)
            except OSError as exc:
                raise StorageError(f"cannot create {directory}: {exc}") from exc
            record = OntologyRecord(
                id=slug,
                iri=model.iri.value,
                name=name,
                tbox_path=directory / "ontology.ttl",
                abox_path=directory / "abox.ttl",
                config_path=directory / "config.json",
                created_at=datetime.now(timezone.utc).isoformat(),
            )
            _atomic_write(record.tbox_path, document)
            _atomic_write(record.abox_path, "")
            _atomic_write(record.config_path, wire.encode_config_json(FormConfig.empty()))
            self._records[slug] = record
            self._save_index()
        return record

    def _read(self, path: Path) -> str:
        try:
            return path.read_text(encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot read {path}: {exc}") from exc

    def load_tbox(self, ontology_id: str) -> Graph:
        return parse_turtle(self._read(self.get_record(ontology_id).tbox_path))

    def load_abox(self, ontology_id: str) -> Graph:
        return parse_turtle(self._read(self.get_record(ontology_id).abox_path))

    def load_graph(self, ontology_id: str) -> Graph:
        return graph_union(self.load_tbox(ontology_id), self.load_abox(ontology_id))

    def load_model(self, ontology_id: str) -> OntologyModel:
        return extract_model(self.load_graph(ontology_id))

    def save_abox(self, ontology_id: str, graph: Graph) -> None:
        record = self.get_record(ontology_id)
        _atomic_write(record.abox_path, serialize_turtle(graph))

    def get_config(self, ontology_id: str) -> FormConfig:
        record = self.get_record(ontology_id)
        return wire.decode_config(json.loads(self._read(record.config_path)))

    def put_config(self, ontology_id: str, config: FormConfig) -> None:
        record = self.get_record(ontology_id)
        _atomic_write(record.config_path, wire.encode_config_json(config))

    def export(self, ontology_id: str) -> str:
        return serialize_turtle(self.load_graph(ontology_id))

    def writer_lock(self, ontology_id: str) -> threading.Lock:
        self.get_record(ontology_id)
        with self._mutex:
            return self._locks.setdefault(ontology_id, threading.Lock())

    def apply_population(self, ontology_id: str, result: PopulationResult) -> None:
        """Merge a population delta into the A-box. Call under writer_lock.

        Assertions living in the uploaded document are immutable; trying to
        retract one is rejected before anything is written.
        """
        abox = self.load_abox(ontology_id)
        if result.removed_triples:
            tbox = self.load_tbox(ontology_id)
            immutable = [t for t in result.removed_triples
                         if t not in abox and t in tbox]
            if immutable:
                t = sorted(immutable, key=str)[0]
                raise ValidationError(
                    t.predicate.value,
                    "value is asserted in the uploaded ontology document "
                    "and cannot be retracted")
        prefixes = dict(abox.prefixes)
        for t in result.removed_triples:
            abox.discard(t)
        for t in result.added_triples:
            abox.add(t)
        abox.prefixes = prefixes
        self.save_abox(ontology_id, abox)
