import os
import random

import pytest

from src.codefile import parse
from src.codes import GenMatrix

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def load_code(name: str) -> GenMatrix:
    with open(os.path.join(DATA_DIR, f"{name}.code"), "r") as f:
        return parse(f.read())


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, f"{name}.code")


@pytest.fixture(autouse=True)
def no_log_files(monkeypatch):
    """Keep violation records out of the working tree."""
    monkeypatch.setattr("src.config.LOG_DIR", "")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sd_2_1():
    """(1 1 | 0), (0 0 | u): the smallest separable self-dual code."""
    return load_code("sd_2_1")


@pytest.fixture
def type2_4_2():
    return load_code("type2_4_2")


@pytest.fixture
def sd_4_3_nonseparable():
    return load_code("sd_4_3_nonseparable")


@pytest.fixture
def type2_4_2_nonseparable():
    return load_code("type2_4_2_nonseparable")


@pytest.fixture
def hamming8():
    return load_code("hamming8")


@pytest.fixture
def ring4():
    return load_code("ring4")


@pytest.fixture
def two_weight_2_1():
    return load_code("two_weight_2_1")


@pytest.fixture
def two_weight_n8():
    return load_code("two_weight_n8")
