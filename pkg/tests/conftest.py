import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lyalg import io  # noqa: E402

import gen  # noqa: E402


@pytest.fixture(scope="session")
def dim2():
    return io.load("dim2")


@pytest.fixture(scope="session")
def dim4():
    return io.load("dim4")


@pytest.fixture(scope="session")
def bases():
    return gen.BASES


@pytest.fixture
def say(capsys):
    """Print one line straight to the terminal, bypassing capture."""
    def emit(line: str) -> None:
        with capsys.disabled():
            print("\n" + line)
    return emit
