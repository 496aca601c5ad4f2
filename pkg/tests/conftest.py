from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA
