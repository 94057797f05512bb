import json
import os
import pathlib
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pubgames.corpus import load_corpus

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def fixture_bytes(name: str) -> bytes:
    return (DATA / name).read_bytes()


def golden_json(name: str):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def colon_corpus():
    return load_corpus(fixture_bytes("colon20.csv"))


@pytest.fixture(scope="session")
def authored_corpus():
    return load_corpus(fixture_bytes("authored120.csv"))


@pytest.fixture(scope="session")
def fairness_corpus():
    return load_corpus(fixture_bytes("fairness10.csv"))
