import random
from functools import lru_cache
from typing import List

import pytest

from src.catalogue import CATALOGUE_NAMES, CatalogueEntry, named
from src.geometry import ProjArrangement
from src.services.spectrum_service import SpectrumService


# entries whose exhaustive checks take seconds each; deselect with -m "not slow"
HEAVY_ENTRIES = frozenset(
    {"GridDiagonal", "Gru244a", "Gru244b", "Gru44", "A(12,1)", "A(18,1)", "B(12)", "B(15)"}
)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks on the larger catalogue entries")


@lru_cache(maxsize=None)
def catalogue_entry(name: str) -> CatalogueEntry:
    """Catalogue entries are immutable; build each once per session."""
    return named(name)


@lru_cache(maxsize=None)
def catalogue_spectrum(name: str):
    return SpectrumService().analyze(catalogue_entry(name).arrangement)


def random_arrangement(rng: random.Random, n: int, name: str = "random") -> ProjArrangement:
    """n affine lines with small integer coefficients, lines 0 and 1 parallel,
    coned with the line at infinity as the last line."""
    a, b = 0, 0
    while a == 0 and b == 0:
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    c = rng.randint(-4, 4)
    lines = [(a, b, c), (a, b, c + rng.randint(1, 4))]
    while len(lines) < n:
        candidate = (rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-4, 4))
        if candidate[0] == 0 and candidate[1] == 0:
            continue
        if any(
            _proportional(candidate, line) for line in lines
        ):
            continue
        lines.append(candidate)
    lines.append((0, 0, 1))
    return ProjArrangement(lines, name=name, default_infinity=n)


def _proportional(u, v) -> bool:
    return (
        u[0] * v[1] - u[1] * v[0] == 0
        and u[0] * v[2] - u[2] * v[0] == 0
        and u[1] * v[2] - u[2] * v[1] == 0
    )


def random_arrangements(count: int, seed: int = 20241) -> List[ProjArrangement]:
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        n = rng.randint(4, 7)
        arrangement = random_arrangement(rng, n, name=f"random-{len(found)}")
        # the affine lines must not all be parallel
        slopes = {(l.a * arrangement[0].b - l.b * arrangement[0].a).sign() for l in arrangement.lines[:n]}
        if slopes == {0}:
            continue
        found.append(arrangement)
    return found


def catalogue_params(names=CATALOGUE_NAMES) -> list:
    """Catalogue names as pytest params, the heavy ones marked slow."""
    return [
        pytest.param(name, id=name, marks=pytest.mark.slow) if name in HEAVY_ENTRIES else name
        for name in names
    ]


def arrangement_params(random_count: int = 6, seed: int = 20241) -> list:
    """Every catalogue arrangement followed by random arrangements."""
    params = [
        pytest.param(
            catalogue_entry(name).arrangement,
            id=name,
            marks=[pytest.mark.slow] if name in HEAVY_ENTRIES else [],
        )
        for name in CATALOGUE_NAMES
    ]
    params += [pytest.param(a, id=a.name) for a in random_arrangements(random_count, seed)]
    return params


@pytest.fixture
def service():
    """A fresh spectrum service."""
    return SpectrumService()


@pytest.fixture
def a3():
    return catalogue_entry("A3").arrangement


@pytest.fixture
def pappus():
    return catalogue_entry("Pappus").arrangement


@pytest.fixture
def a12_2():
    return catalogue_entry("A(12,2)").arrangement


@pytest.fixture
def sample_arr(tmp_path):
    """The A3 arrangement as an .arr file."""
    path = tmp_path / "a3.arr"
    path.write_text(
        "# unit square with a diagonal\n"
        "name A3\n"
        "line 1 0 0\n"
        "line 1 0 -1\n"
        "line 0 1 0\n"
        "line 0 1 -1\n"
        "line 1 -1 0\n"
        "infinity\n",
        encoding="utf-8",
    )
    return path
