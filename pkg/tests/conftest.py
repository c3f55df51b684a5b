import random
from pathlib import Path

import pytest

from heartrules.schema import AttributeSchema
from heartrules.table import DecisionTable

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def cohort_path() -> Path:
    return DATA_DIR / "synth_cad_661.csv"


@pytest.fixture(scope="session")
def heldout_path() -> Path:
    return DATA_DIR / "synth_cleveland_303.csv"


def make_t0() -> DecisionTable:
    """Four objects over two binary conditions; the worked example table."""
    schema = (
        AttributeSchema("a", "binary"),
        AttributeSchema("b", "binary"),
        AttributeSchema("d", "binary", role="decision"),
    )
    rows = (("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "1"))
    return DecisionTable(schema=schema, rows=rows)


@pytest.fixture
def t0() -> DecisionTable:
    return make_t0()


def random_discrete_table(rng: random.Random, max_objects: int = 7,
                          max_attrs: int = 5, max_values: int = 3) -> DecisionTable:
    """Small random nominal table; may be inconsistent on purpose."""
    n_attrs = rng.randint(1, max_attrs)
    n_objects = rng.randint(1, max_objects)
    schema = tuple(
        [AttributeSchema(f"c{i}", "nominal",
                         labels=tuple(str(v) for v in range(max_values)))
         for i in range(n_attrs)]
        + [AttributeSchema("d", "nominal", labels=("0", "1", "2"), role="decision")])
    rows = tuple(
        tuple(str(rng.randrange(max_values)) for _ in range(n_attrs))
        + (str(rng.randrange(2)),)
        for _ in range(n_objects))
    return DecisionTable(schema=schema, rows=rows)


def random_numeric_table(rng: random.Random, max_objects: int = 30,
                         max_attrs: int = 3) -> DecisionTable:
    """Small random numeric table with deliberate value ties."""
    n_attrs = rng.randint(1, max_attrs)
    n_objects = rng.randint(2, max_objects)
    schema = tuple(
        [AttributeSchema(f"x{i}", "numeric") for i in range(n_attrs)]
        + [AttributeSchema("d", "binary", role="decision")])
    pool = [round(rng.uniform(0, 10) * 2) / 2 for _ in range(max(3, n_objects // 2))]
    rows = tuple(
        tuple(float(rng.choice(pool)) for _ in range(n_attrs)) + (str(rng.randrange(2)),)
        for _ in range(n_objects))
    return DecisionTable(schema=schema, rows=rows)
