from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ovals import STABILITY_EXAMPLE_TERMS  # noqa: E402

from ovalkit import FourierSupport  # noqa: E402

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def m3() -> FourierSupport:
    return FourierSupport(11.0, ((3, 1.0, 0.0),))


@pytest.fixture
def m7() -> FourierSupport:
    return FourierSupport(51.0, ((7, 1.0, 0.0),))


@pytest.fixture
def stability_example() -> FourierSupport:
    return FourierSupport(10.0, STABILITY_EXAMPLE_TERMS)


@pytest.fixture
def ellipse_like() -> FourierSupport:
    return FourierSupport(5.0, ((2, 1.0, 0.0),))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240501)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
