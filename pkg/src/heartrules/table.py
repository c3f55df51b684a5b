"""Decision tables: ingestion, validation, imputation, splitting.

A table is an immutable ordered collection of rows over a schema.  Cells are
``float`` for numeric attributes, ``str`` labels for nominal/binary ones, and
``None`` for missing values ("?" on disk).  After discretization (see
:mod:`heartrules.discretize`) numeric cells become :class:`Interval` values.

Row ids are stable: filtering and splitting preserve each row's id from the
table it came from, so object sets remain meaningful across derived tables.
"""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import IO, Iterable, Union

from .errors import DataError, SchemaError
from .schema import AttributeSchema, canonical_label, validate_schema

MISSING = None

Cell = Union[float, str, None, "object"]


@dataclass(frozen=True)
class DecisionTable:
    schema: tuple[AttributeSchema, ...]
    rows: tuple[tuple, ...]
    row_ids: tuple[int, ...] = ()
    # Cut thresholds the table was discretized with, if any (set by discretize()).
    cuts: "object" = None

    def __post_init__(self):
        validate_schema(list(self.schema))
        if not self.row_ids:
            object.__setattr__(self, "row_ids", tuple(range(len(self.rows))))
        if len(self.row_ids) != len(self.rows):
            raise DataError("row_ids length does not match row count")

    # -- schema helpers -------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.rows)

    @property
    def attribute_names(self) -> list[str]:
        return [a.name for a in self.schema]

    @property
    def decision(self) -> AttributeSchema:
        return next(a for a in self.schema if a.role == "decision")

    @property
    def conditions(self) -> list[AttributeSchema]:
        return [a for a in self.schema if a.role == "condition"]

    def attribute(self, name: str) -> AttributeSchema:
        for a in self.schema:
            if a.name == name:
                return a
        raise SchemaError(f"no attribute named {name!r}")

    def col_index(self, name: str) -> int:
        for i, a in enumerate(self.schema):
            if a.name == name:
                return i
        raise SchemaError(f"no attribute named {name!r}")

    # -- cell access ----------------------------------------------------

    def column(self, name: str) -> list:
        i = self.col_index(name)
        return [row[i] for row in self.rows]

    def cell(self, row_id: int, name: str):
        return self.rows[self.row_pos(row_id)][self.col_index(name)]

    def row_pos(self, row_id: int) -> int:
        try:
            return self._id_index()[row_id]
        except KeyError:
            raise DataError(f"no object with id {row_id}") from None

    def _id_index(self) -> dict:
        idx = getattr(self, "_id_idx", None)
        if idx is None:
            idx = {rid: pos for pos, rid in enumerate(self.row_ids)}
            object.__setattr__(self, "_id_idx", idx)
        return idx

    def decision_value(self, row_id: int):
        return self.cell(row_id, self.decision.name)

    @property
    def is_training_ready(self) -> bool:
        d = self.col_index(self.decision.name)
        return all(row[d] is not MISSING for row in self.rows)

    def subset(self, row_ids: Iterable[int]) -> "DecisionTable":
        """Rows with the given ids, in this table's order."""
        wanted = set(row_ids)
        keep = [(rid, self.rows[pos]) for pos, rid in enumerate(self.row_ids) if rid in wanted]
        return replace(self, rows=tuple(r for _, r in keep), row_ids=tuple(i for i, _ in keep))


def _parse_cell(token: str, attr: AttributeSchema, row_no: int):
    token = token.strip()
    if token == "?":
        return MISSING
    if attr.kind == "numeric":
        try:
            return float(token)
        except ValueError:
            raise DataError(
                f"row {row_no}: non-numeric value {token!r} in numeric column {attr.name!r}"
            ) from None
    label = canonical_label(token)
    if attr.collapse_positive:
        try:
            if float(label) >= 1:
                label = "1"
        except ValueError:
            pass
    if label not in attr.labels:
        raise DataError(
            f"row {row_no}: label {token!r} not in declared set {list(attr.labels)} "
            f"for attribute {attr.name!r}")
    return label


def load_table(source: Union[IO[str], Iterable[str], str],
               schema: list[AttributeSchema],
               has_header: bool = False,
               delimiter: str = ",") -> DecisionTable:
    """Parse delimited text into a validated decision table.

    "?" denotes a missing cell.  Column order must match the schema; when
    ``has_header`` is set the first row is checked against the schema names.
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source
    rows = []
    row_no = 0
    header_seen = False
    for raw in lines:
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        parts = line.split(delimiter)
        if has_header and not header_seen:
            header_seen = True
            names = [p.strip() for p in parts]
            expected = [a.name for a in schema]
            if names != expected:
                raise DataError(f"header {names} does not match schema {expected}")
            continue
        if len(parts) != len(schema):
            raise DataError(
                f"row {row_no}: expected {len(schema)} cells, got {len(parts)}")
        rows.append(tuple(_parse_cell(tok, attr, row_no) for tok, attr in zip(parts, schema)))
        row_no += 1
    return DecisionTable(schema=tuple(schema), rows=tuple(rows))


def load_table_file(path: Union[str, Path], schema: list[AttributeSchema],
                    has_header: bool = False) -> DecisionTable:
    with open(path, "r", encoding="utf-8") as fh:
        return load_table(fh, schema, has_header=has_header)


def format_cell(value) -> str:
    if value is MISSING:
        return "?"
    if isinstance(value, float):
        if value == int(value) and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def to_delimited(table: DecisionTable, header: bool = False, delimiter: str = ",") -> str:
    """Serialize back to delimited text (MISSING becomes "?")."""
    out = []
    if header:
        out.append(delimiter.join(table.attribute_names))
    for row in table.rows:
        out.append(delimiter.join(format_cell(c) for c in row))
    return "\n".join(out) + "\n"


IMPUTE_POLICIES = ("drop-incomplete", "mode-median")


def impute(table: DecisionTable, policy: str = "mode-median") -> DecisionTable:
    """Remove or fill missing condition cells.

    drop-incomplete drops any row with a missing condition cell; mode-median
    fills numeric gaps with the attribute median and nominal gaps with the
    mode (first-seen wins ties), both computed over the table's own
    non-missing cells.
    """
    if policy not in IMPUTE_POLICIES:
        raise ValueError(f"unknown imputation policy {policy!r}; choose from {IMPUTE_POLICIES}")
    if not table.is_training_ready:
        raise DataError("cannot impute: decision column contains missing values")
    cond_idx = [table.col_index(a.name) for a in table.conditions]
    if policy == "drop-incomplete":
        keep = [pos for pos, row in enumerate(table.rows)
                if all(row[i] is not MISSING for i in cond_idx)]
        return replace(table,
                       rows=tuple(table.rows[p] for p in keep),
                       row_ids=tuple(table.row_ids[p] for p in keep))

    fills = {}
    for a in table.conditions:
        col = table.column(a.name)
        present = [c for c in col if c is not MISSING]
        if any(c is MISSING for c in col):
            if not present:
                raise DataError(f"attribute {a.name!r} is entirely missing; cannot impute")
            if a.kind == "numeric":
                fills[table.col_index(a.name)] = float(statistics.median(present))
            else:
                counts: dict = {}
                for c in present:
                    counts[c] = counts.get(c, 0) + 1
                best = max(counts.values())
                fills[table.col_index(a.name)] = next(c for c in present if counts[c] == best)
    if not fills:
        return table
    new_rows = []
    for row in table.rows:
        new_rows.append(tuple(
            fills[i] if (cell is MISSING and i in fills) else cell
            for i, cell in enumerate(row)))
    return replace(table, rows=tuple(new_rows))


def complete_cases(table: DecisionTable) -> DecisionTable:
    """Rows with no missing condition cell (decision may not be missing)."""
    return impute(table, "drop-incomplete")


def split(table: DecisionTable, fraction: float, seed: int) -> tuple[DecisionTable, DecisionTable]:
    """Deterministic disjoint split; the first part gets round(fraction * n) rows."""
    if not (0.0 < fraction < 1.0):
        raise ValueError(f"split fraction must lie in (0, 1), got {fraction}")
    if table.n_objects == 0:
        raise DataError("cannot split an empty table")
    ids = list(table.row_ids)
    rng = random.Random(seed)
    rng.shuffle(ids)
    k = round(fraction * len(ids))
    first = set(ids[:k])
    part_a = table.subset(first)
    part_b = table.subset(set(ids) - first)
    return part_a, part_b


def concat_tables(tables: list[DecisionTable]) -> DecisionTable:
    """Stack tables sharing one schema; row ids are renumbered."""
    if not tables:
        raise ValueError("need at least one table")
    first = tables[0]
    for t in tables[1:]:
        if [a.name for a in t.schema] != [a.name for a in first.schema] or \
           [a.kind for a in t.schema] != [a.kind for a in first.schema]:
            raise SchemaError("cannot concatenate tables with differing schemas")
    rows = tuple(row for t in tables for row in t.rows)
    return DecisionTable(schema=first.schema, rows=rows)
