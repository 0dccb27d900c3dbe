import pathlib
import sys

import pytest
from loguru import logger

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

import param  # noqa: E402


@pytest.fixture(autouse=True)
def fixed_parameters():
    """Every test starts from the shipped defaults: seed 42, one thread."""
    seed, threads = param.seed, param.threads
    param.seed, param.threads = 42, 1
    yield
    param.seed, param.threads = seed, threads
    # main() reroutes loguru to the stream captured for that test
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
