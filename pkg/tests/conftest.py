from pathlib import Path

import pytest

from ontoforms import extract_model, parse_turtle
from ontoforms.fixtures import wine_food_text

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def wine_graph():
    return parse_turtle(wine_food_text())


@pytest.fixture(scope="session")
def wine_model(wine_graph):
    return extract_model(wine_graph)


@pytest.fixture(scope="session")
def cyclic_text():
    return (DATA_DIR / "cyclic.ttl").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def cyclic_model(cyclic_text):
    return extract_model(parse_turtle(cyclic_text))
