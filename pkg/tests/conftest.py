import json
import os
import sys

import numpy as np
import pytest

# add the root directory to the path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from mixvol.schemas.bodies import body_to_schema  # noqa: E402
from mixvol.services.bodies import (  # noqa: E402
    Ball,
    Polytope,
    Segment,
    Zonotope,
    box_polytope,
    unit_cube,
)
from mixvol.services.matrix_core import SymMatrix  # noqa: E402

ENV_VARS = [
    "MIXVOL_SEED",
    "MIXVOL_TRIALS",
    "MIXVOL_QUAD",
    "MIXVOL_WORKERS",
    "LOG_LEVEL",
]


@pytest.fixture
def test_environment():
    """Test environment configuration"""
    saved = {k: os.environ.pop(k) for k in ENV_VARS if k in os.environ}
    os.environ["LOG_LEVEL"] = "error"

    yield

    # clean up after tests
    for var in ENV_VARS:
        os.environ.pop(var, None)
    os.environ.update(saved)


@pytest.fixture(autouse=True)
def setup_test_environment(test_environment):
    """Automatic test environment configuration"""
    pass


@pytest.fixture
def rng():
    """Seeded generator for property checks"""
    return np.random.default_rng(12345)


@pytest.fixture
def square():
    """Unit square [0,1]^2"""
    return box_polytope([1.0, 1.0])


@pytest.fixture
def rectangle():
    """Rectangle [0,2]x[0,1]"""
    return box_polytope([2.0, 1.0])


@pytest.fixture
def triangle():
    """Right triangle conv{0, e1, e2}"""
    return Polytope(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))


@pytest.fixture
def cube():
    """Unit cube as a zonotope"""
    return unit_cube(3)


@pytest.fixture
def ball3():
    return Ball.unit(3)


@pytest.fixture
def segment_e3():
    """Segment [-e3, e3]"""
    return Segment(np.array([0.0, 0.0, -1.0]), np.array([0.0, 0.0, 1.0]))


@pytest.fixture
def planar_zonotope():
    return Zonotope(np.zeros(2), np.array([[1.0, 0.0], [0.5, 1.0]]))


@pytest.fixture
def identity3():
    return SymMatrix.identity(3)


@pytest.fixture
def write_body(tmp_path):
    """Write a body as JSON and return the path"""

    def _write(K, name="body.json"):
        path = tmp_path / name
        path.write_text(body_to_schema(K).model_dump_json())
        return str(path)

    return _write


@pytest.fixture
def write_json(tmp_path):
    def _write(payload, name="payload.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write
