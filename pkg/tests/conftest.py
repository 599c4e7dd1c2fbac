"""
Shared fixtures: the named small structures and a clean settings singleton.
"""

import json

import pytest

from src.algebra.catalog import (
    cyclic_group,
    klein_four_group,
    p3,
    trivial_group,
    z2_square_idempotent,
    z2_square_undefined,
)
from src.core.config import reload_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """CLI options override the process-wide settings; start every test clean"""
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def trivial():
    return trivial_group()


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def v4():
    return klein_four_group()


@pytest.fixture
def P3():
    return p3()


@pytest.fixture
def aa_undefined():
    return z2_square_undefined()


@pytest.fixture
def aa_idempotent():
    return z2_square_idempotent()


@pytest.fixture
def write_document(tmp_path):
    """Write a JSON document under tmp_path and return its path"""

    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write
