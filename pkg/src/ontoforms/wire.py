"""JSON wire formats: form structures, submissions, configs, results.

Field names are lowerCamelCase and IRIs travel as absolute strings. The
config codec doubles as the on-disk config.json format.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ValidationError
from .forms import Field, FormConfig, FormStructure, Section, Selector, Widget
from .population import PopulationResult, Submission, ValueEntry
from .rdf import Iri, Literal


# ---------------------------------------------------------------------------
# FormStructure (encode only; the engine is the single producer)
# ---------------------------------------------------------------------------


def encode_form(form: FormStructure, top: bool = True) -> dict[str, Any]:
    elements: list[dict[str, Any]] = []
    for element in form.elements:
        if isinstance(element, Field):
            elements.append({
                "kind": "field",
                "property": element.property.value,
                "label": element.label,
                "datatype": element.datatype.value,
                "widget": element.widget.value,
                "functional": element.functional,
            })
        elif isinstance(element, Selector):
            elements.append({
                "kind": "selector",
                "property": element.property.value,
                "label": element.label,
                "rangeClass": element.range_class.value,
                "multiple": element.multiple,
                "options": [
                    {"iri": iri.value, "label": label}
                    for iri, label in element.options
                ],
            })
        else:
            elements.append({
                "kind": "section",
                "property": element.property.value,
                "label": element.label,
                "rangeClass": element.range_class.value,
                "form": encode_form(element.form, top=False),
            })
    payload: dict[str, Any] = {
        "mainClass": form.main_class.value,
        "label": form.label,
        "subclassOptions": [
            {"iri": iri.value, "label": label}
            for iri, label in form.subclass_options
        ],
        "elements": elements,
    }
    if top:
        payload["warnings"] = list(form.warnings)
    return payload


# ---------------------------------------------------------------------------
# Submission
# ---------------------------------------------------------------------------


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(None, message)


def decode_submission(payload: Any) -> Submission:
    _expect(isinstance(payload, dict), "submission must be a JSON object")
    chosen = payload.get("chosenClass")
    _expect(isinstance(chosen, str) and chosen != "", "chosenClass is required")
    display = payload.get("displayLabel")
    _expect(display is None or isinstance(display, str), "displayLabel must be a string")
    raw_values = payload.get("values", [])
    _expect(isinstance(raw_values, list), "values must be a list")

    entries = []
    for raw in raw_values:
        _expect(isinstance(raw, dict), "each value entry must be a JSON object")
        prop = raw.get("property")
        _expect(isinstance(prop, str) and prop != "", "value entry needs a property")
        literals = []
        for lit in raw.get("literals", []) or []:
            _expect(isinstance(lit, dict) and isinstance(lit.get("value"), str),
                    f"malformed literal for {prop}")
            datatype = lit.get("datatype")
            _expect(datatype is None or isinstance(datatype, str),
                    f"malformed literal datatype for {prop}")
            literals.append(Literal(lit["value"],
                                    datatype=Iri(datatype) if datatype else None))
        individuals = []
        for iri in raw.get("individuals", []) or []:
            _expect(isinstance(iri, str) and iri != "",
                    f"malformed individual IRI for {prop}")
            individuals.append(Iri(iri))
        creations = [decode_submission(c) for c in raw.get("creations", []) or []]
        entries.append(ValueEntry(
            property=Iri(prop),
            literals=tuple(literals),
            individuals=tuple(individuals),
            creations=tuple(creations),
        ))
    return Submission(
        chosen_class=Iri(chosen),
        display_label=display,
        values=tuple(entries),
    )


def encode_submission(submission: Submission) -> dict[str, Any]:
    payload: dict[str, Any] = {"chosenClass": submission.chosen_class.value}
    if submission.display_label is not None:
        payload["displayLabel"] = submission.display_label
    values = []
    for entry in submission.values:
        raw: dict[str, Any] = {"property": entry.property.value}
        if entry.literals:
            raw["literals"] = [
                {"value": lit.lexical, **(
                    {"datatype": lit.datatype.value} if lit.datatype else {})}
                for lit in entry.literals
            ]
        if entry.individuals:
            raw["individuals"] = [iri.value for iri in entry.individuals]
        if entry.creations:
            raw["creations"] = [encode_submission(c) for c in entry.creations]
        values.append(raw)
    payload["values"] = values
    return payload


# ---------------------------------------------------------------------------
# FormConfig
# ---------------------------------------------------------------------------


def decode_config(payload: Any) -> FormConfig:
    _expect(isinstance(payload, dict), "config must be a JSON object")
    hidden = payload.get("hiddenProperties", [])
    pairs = payload.get("inlinePairs", [])
    overrides = payload.get("labelOverrides", {})
    _expect(isinstance(hidden, list), "hiddenProperties must be a list")
    _expect(isinstance(pairs, list), "inlinePairs must be a list")
    _expect(isinstance(overrides, dict), "labelOverrides must be an object")
    inline = []
    for pair in pairs:
        _expect(isinstance(pair, dict)
                and isinstance(pair.get("contextClass"), str)
                and isinstance(pair.get("rangeClass"), str),
                "inline pair needs contextClass and rangeClass")
        inline.append((Iri(pair["contextClass"]), Iri(pair["rangeClass"])))
    for iri in hidden:
        _expect(isinstance(iri, str) and iri != "", "hidden property must be an IRI")
    for key, value in overrides.items():
        _expect(isinstance(value, str), f"label override for {key} must be a string")
    return FormConfig(
        hidden_properties=frozenset(Iri(i) for i in hidden),
        inline_pairs=frozenset(inline),
        label_overrides={Iri(k): v for k, v in overrides.items()},
    )


def encode_config(config: FormConfig) -> dict[str, Any]:
    return {
        "hiddenProperties": sorted(i.value for i in config.hidden_properties),
        "inlinePairs": [
            {"contextClass": ctx.value, "rangeClass": rng.value}
            for ctx, rng in sorted(config.inline_pairs)
        ],
        "labelOverrides": {
            k.value: v for k, v in sorted(config.label_overrides.items())
        },
    }


def encode_config_json(config: FormConfig) -> str:
    return json.dumps(encode_config(config), indent=2) + "\n"


# ---------------------------------------------------------------------------
# PopulationResult
# ---------------------------------------------------------------------------


def encode_population_result(result: PopulationResult) -> dict[str, Any]:
    return {
        "rootIri": result.root_iri.value,
        "minted": [
            {"iri": iri.value, "class": cls.value}
            for iri, cls in result.minted
        ],
    }
