"""Bundled demonstration ontology: the wine/food domain."""

import json
from pathlib import Path

_HERE = Path(__file__).parent

WINE_NS = "http://www.w3.org/TR/2003/PR-owl-guide-20031209/wine#"
FOOD_NS = "http://www.w3.org/TR/2003/PR-owl-guide-20031209/food#"


def wine_food_path() -> Path:
    return _HERE / "wine_food.ttl"


def wine_food_text() -> str:
    return wine_food_path().read_text(encoding="utf-8")


def manifest() -> dict:
    return json.loads((_HERE / "manifest.json").read_text(encoding="utf-8"))
