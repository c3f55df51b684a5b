"""Supervised discretization of numeric attributes by Boolean reasoning.

Candidate cuts are midpoints between adjacent distinct values whose value
groups are not pure with the same decision.  Cut selection is a greedy
set-cover: each step keeps the candidate that discerns the most
still-undiscerned object pairs among pairs with different decisions that
differ on at least one numeric attribute.  The chosen cuts later drive both
the discrete rule mining table and the fuzzy membership functions.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, replace

import numpy as np

from .errors import DataError, SchemaError
from .schema import AttributeSchema
from .table import MISSING, DecisionTable


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval [lo, hi); infinite bounds print as "*"."""
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi})")

    def contains(self, value: float) -> bool:
        return self.lo <= value < self.hi

    def __str__(self) -> str:
        lo = "*" if math.isinf(self.lo) else _fmt(self.lo)
        hi = "*" if math.isinf(self.hi) else _fmt(self.hi)
        return f"[{lo},{hi})"


def _fmt(x: float) -> str:
    if x == int(x):
        return str(int(x))
    return repr(x)


@dataclass(frozen=True)
class CutSet:
    """Per-attribute strictly increasing cut thresholds (attribute-name order)."""
    by_attribute: tuple[tuple[str, tuple[float, ...]], ...]

    def __post_init__(self):
        for name, cuts in self.by_attribute:
            if any(b <= a for a, b in zip(cuts, cuts[1:])):
                raise ValueError(f"cuts for {name!r} must be strictly increasing: {cuts}")
        object.__setattr__(self, "by_attribute",
                           tuple(sorted(self.by_attribute, key=lambda kv: kv[0])))

    @staticmethod
    def from_dict(d: dict[str, list[float]]) -> "CutSet":
        return CutSet(tuple((k, tuple(float(x) for x in v)) for k, v in d.items()))

    def to_dict(self) -> dict[str, list[float]]:
        return {name: list(cuts) for name, cuts in self.by_attribute}

    def cuts_for(self, attribute: str) -> tuple[float, ...]:
        for name, cuts in self.by_attribute:
            if name == attribute:
                return cuts
        return ()

    def interval_for(self, attribute: str, value: float) -> Interval:
        cuts = self.cuts_for(attribute)
        i = bisect_right(cuts, value)
        lo = cuts[i - 1] if i > 0 else -math.inf
        hi = cuts[i] if i < len(cuts) else math.inf
        return Interval(lo, hi)

    def intervals_for(self, attribute: str) -> list[Interval]:
        """All k+1 intervals induced by the attribute's k cuts, in order."""
        cuts = self.cuts_for(attribute)
        edges = [-math.inf, *cuts, math.inf]
        return [Interval(a, b) for a, b in zip(edges, edges[1:])]


def candidate_cuts(table: DecisionTable, attribute: str) -> list[float]:
    """Midpoints between adjacent distinct values with differing decision profiles.

    A midpoint between v_i < v_{i+1} is skipped only when both value groups
    are decision-pure with the same single decision.
    """
    attr = table.attribute(attribute)
    if attr.kind != "numeric":
        raise SchemaError(f"candidate cuts need a numeric attribute, {attribute!r} is {attr.kind}")
    col = table.column(attribute)
    dec = table.column(table.decision.name)
    if any(c is MISSING for c in col):
        raise DataError(f"attribute {attribute!r} has missing values; impute first")
    groups: dict[float, set] = {}
    for v, d in zip(col, dec):
        groups.setdefault(float(v), set()).add(d)
    values = sorted(groups)
    cands = []
    for a, b in zip(values, values[1:]):
        ga, gb = groups[a], groups[b]
        if len(ga) == 1 and ga == gb:
            continue
        cands.append((a + b) / 2.0)
    return cands


def select_cuts(table: DecisionTable) -> CutSet:
    """Greedy Boolean reasoning over all numeric attributes.

    Considers every object pair with different decisions that differs on at
    least one numeric attribute, and repeatedly keeps the candidate cut
    discerning the most not-yet-discerned pairs (ties broken by schema order,
    then lower threshold) until all such pairs are discerned.
    """
    numeric = [a.name for a in table.conditions if a.kind == "numeric"]
    chosen: dict[str, list[float]] = {name: [] for name in numeric}
    if not numeric or table.n_objects == 0:
        return CutSet(tuple((n, tuple(v)) for n, v in chosen.items()))

    dec_labels = table.column(table.decision.name)
    codes = {v: i for i, v in enumerate(dict.fromkeys(dec_labels))}
    dec = np.array([codes[v] for v in dec_labels])
    cols = {name: np.array([float(v) for v in table.column(name)]) for name in numeric}

    n = table.n_objects
    ii, jj = np.triu_indices(n, k=1)
    diff_dec = dec[ii] != dec[jj]
    diff_num = np.zeros(len(ii), dtype=bool)
    for name in numeric:
        c = cols[name]
        diff_num |= c[ii] != c[jj]
    pair_mask = diff_dec & diff_num
    pi, pj = ii[pair_mask], jj[pair_mask]
    if len(pi) == 0:
        return CutSet(tuple((n_, tuple(v)) for n_, v in chosen.items()))

    # Candidate discernment matrix: cand x pair.
    cand_list: list[tuple[int, str, float]] = []
    for order, name in enumerate(numeric):
        for theta in candidate_cuts(table, name):
            cand_list.append((order, name, theta))
    if not cand_list:
        return CutSet(tuple((n_, tuple(v)) for n_, v in chosen.items()))
    discerns = np.zeros((len(cand_list), len(pi)), dtype=bool)
    for k, (_, name, theta) in enumerate(cand_list):
        c = cols[name]
        lo = np.minimum(c[pi], c[pj])
        hi = np.maximum(c[pi], c[pj])
        discerns[k] = (lo < theta) & (theta <= hi)

    coverable = discerns.any(axis=0)
    uncovered = coverable.copy()
    while uncovered.any():
        counts = discerns[:, uncovered].sum(axis=1)
        best = int(np.argmax(counts))  # argmax takes first max: cand_list is in
        if counts[best] == 0:          # (schema order, threshold) order already
            break
        _, name, theta = cand_list[best]
        chosen[name].append(theta)
        uncovered &= ~discerns[best]

    return CutSet(tuple((name, tuple(sorted(chosen[name]))) for name in numeric))


def discretize(table: DecisionTable, cuts: CutSet) -> DecisionTable:
    """Replace each numeric cell by the half-open interval containing it."""
    numeric = [a for a in table.schema if a.kind == "numeric" and a.role == "condition"]
    if not numeric and any(a.kind == "interval" for a in table.schema):
        raise SchemaError("table is already discretized")
    for name, _ in cuts.by_attribute:
        if table.attribute(name).kind != "numeric":
            raise SchemaError(f"cuts reference non-numeric attribute {name!r}")

    new_schema = []
    for a in table.schema:
        if a in numeric:
            labels = tuple(str(iv) for iv in cuts.intervals_for(a.name))
            new_schema.append(replace(a, kind="interval", labels=labels))
        else:
            new_schema.append(a)

    numeric_idx = {table.col_index(a.name): a.name for a in numeric}
    new_rows = []
    for row in table.rows:
        cells = list(row)
        for i, name in numeric_idx.items():
            if cells[i] is not MISSING:
                cells[i] = cuts.interval_for(name, float(cells[i]))
        new_rows.append(tuple(cells))
    return DecisionTable(schema=tuple(new_schema), rows=tuple(new_rows),
                         row_ids=table.row_ids, cuts=cuts)
