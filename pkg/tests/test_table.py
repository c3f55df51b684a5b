import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from heartrules.errors import DataError
from heartrules.schema import UCI_HEART_14, AttributeSchema, load_schema
from heartrules.table import (MISSING, DecisionTable, complete_cases, impute,
                              load_table, split, to_delimited)

ROW_63 = "63,1,1,145,233,1,2,150,0,2.3,3,0,6,0"


def test_load_single_row_parses_by_column_order():
    table = load_table(ROW_63, UCI_HEART_14)
    assert table.n_objects == 1
    assert table.cell(0, "age") == 63.0
    assert table.cell(0, "cp") == "1"
    assert table.cell(0, "oldpeak") == 2.3
    assert table.cell(0, "thal") == "6"
    assert table.cell(0, "num") == "0"


def test_load_empty_stream_gives_empty_valid_table():
    table = load_table("", UCI_HEART_14)
    assert table.n_objects == 0
    assert [a.name for a in table.schema] == [a.name for a in UCI_HEART_14]


def test_load_collapses_graded_decision_to_binary():
    graded = ROW_63.rsplit(",", 1)[0]
    for raw, expected in (("0", "0"), ("1", "1"), ("2", "1"), ("3", "1"), ("4", "1")):
        table = load_table(f"{graded},{raw}", UCI_HEART_14)
        assert table.cell(0, "num") == expected


def test_load_normalizes_float_style_nominal_labels():
    row = "63.0,1.0,1.0,145.0,233.0,1.0,2.0,150.0,0.0,2.3,3.0,0.0,6.0,0.0"
    table = load_table(row, UCI_HEART_14)
    assert table.cell(0, "thal") == "6"
    assert table.cell(0, "restecg") == "2"


def test_load_question_mark_is_missing():
    row = ROW_63.split(",")
    row[12] = "?"
    table = load_table(",".join(row), UCI_HEART_14)
    assert table.cell(0, "thal") is MISSING


def test_load_rejects_bad_row_width():
    with pytest.raises(DataError, match="row 0"):
        load_table("1,2,3", UCI_HEART_14)


def test_load_rejects_unknown_nominal_label():
    row = ROW_63.split(",")
    row[12] = "9"
    with pytest.raises(DataError, match="thal"):
        load_table(",".join(row), UCI_HEART_14)


def test_load_rejects_text_in_numeric_column():
    row = ROW_63.split(",")
    row[0] = "old"
    with pytest.raises(DataError, match="age"):
        load_table(",".join(row), UCI_HEART_14)


def test_load_header_flag():
    header = ",".join(a.name for a in UCI_HEART_14)
    table = load_table(f"{header}\n{ROW_63}", UCI_HEART_14, has_header=True)
    assert table.n_objects == 1
    with pytest.raises(DataError, match="header"):
        load_table(f"bad,{header}\n", UCI_HEART_14, has_header=True)


def test_roundtrip_cell_for_cell():
    row = ROW_63.split(",")
    row[11] = "?"
    text = ",".join(row) + "\n" + ROW_63
    table = load_table(text, UCI_HEART_14)
    again = load_table(to_delimited(table), UCI_HEART_14)
    assert again.rows == table.rows
    assert "?" in to_delimited(table)


SMALL = [
    AttributeSchema("x", "numeric"),
    AttributeSchema("k", "nominal", labels=("a", "b")),
    AttributeSchema("d", "binary", role="decision"),
]


def test_impute_identity_when_complete():
    table = load_table("1,a,0\n2,b,1", SMALL)
    assert impute(table, "drop-incomplete").rows == table.rows
    assert impute(table, "mode-median").rows == table.rows


def test_impute_drop_incomplete_filters_rows():
    table = load_table("1,a,0\n2,?,1\n3,b,1\n4,a,0", SMALL)
    dropped = impute(table, "drop-incomplete")
    assert dropped.n_objects == 3
    assert dropped.row_ids == (0, 2, 3)


def test_impute_median_fills_numeric_gap():
    table = load_table("10,a,0\n?,a,1\n30,b,1", SMALL)
    filled = impute(table, "mode-median")
    assert filled.cell(1, "x") == 20.0
    assert filled.cell(0, "x") == 10.0  # untouched cells stay put
    assert filled.n_objects == 3


def test_impute_mode_fills_nominal_gap():
    table = load_table("1,a,0\n2,?,1\n3,a,1\n4,b,0", SMALL)
    filled = impute(table, "mode-median")
    assert filled.cell(1, "k") == "a"


def test_impute_rejects_entirely_missing_attribute():
    table = load_table("?,a,0\n?,b,1", SMALL)
    with pytest.raises(DataError, match="'x'"):
        impute(table, "mode-median")


def test_impute_requires_decision_present():
    table = load_table("1,a,?", SMALL)
    with pytest.raises(DataError, match="decision"):
        impute(table, "mode-median")


def test_split_sizes_and_disjointness():
    table = load_table("\n".join(f"{i},a,0" for i in range(10)), SMALL)
    a, b = split(table, 0.5, seed=1)
    assert (a.n_objects, b.n_objects) == (5, 5)
    assert set(a.row_ids) | set(b.row_ids) == set(range(10))
    assert set(a.row_ids) & set(b.row_ids) == set()


def test_split_deterministic_per_seed():
    table = load_table("\n".join(f"{i},a,0" for i in range(20)), SMALL)
    first = split(table, 0.3, seed=42)
    second = split(table, 0.3, seed=42)
    assert first[0].row_ids == second[0].row_ids
    different = split(table, 0.3, seed=43)
    assert different[0].row_ids != first[0].row_ids


def test_split_rounding_rule():
    table = load_table("\n".join(f"{i},a,0" for i in range(303)), SMALL)
    a, b = split(table, 0.7, seed=42)
    assert (a.n_objects, b.n_objects) == (212, 91)


def test_split_rejects_bad_fraction():
    table = load_table("1,a,0", SMALL)
    for bad in (0.0, 1.0, -0.2, 1.7):
        with pytest.raises(ValueError):
            split(table, bad, seed=0)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 40),
       fraction=st.floats(0.05, 0.95))
def test_split_parts_reunite(seed, n, fraction):
    table = load_table("\n".join(f"{i},a,{i % 2}" for i in range(n)), SMALL)
    a, b = split(table, fraction, seed=seed)
    assert sorted(a.row_ids + b.row_ids) == list(range(n))


def test_complete_cases_keeps_ids():
    table = load_table("1,a,0\n?,b,1\n3,a,1", SMALL)
    comp = complete_cases(table)
    assert comp.row_ids == (0, 2)
