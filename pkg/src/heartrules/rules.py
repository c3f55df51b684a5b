"""Crisp decision rules mined from object-relative reducts.

Each training object contributes one rule per object-relative reduct: the
conjunction of its values on the reduct attributes implying its decision.
Duplicate rules collapse (keeping first-emission order), empty antecedents
are discarded, and every rule carries its support: the number of training
objects matching antecedent and consequent together.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Union

import numpy as np

from .discretize import CutSet, Interval
from .errors import SchemaError
from .rough import object_relative_reducts, DEFAULT_EXHAUSTIVE_BOUND
from .table import MISSING, DecisionTable, to_delimited


@dataclass(frozen=True)
class Descriptor:
    """One attribute test: label equality or half-open interval membership."""
    attribute: str
    value: Union[str, Interval]

    def matches(self, cell) -> bool:
        if cell is MISSING:
            return False
        if isinstance(self.value, Interval):
            if isinstance(cell, Interval):
                return cell == self.value
            return self.value.contains(float(cell))
        return cell == self.value

    def __str__(self) -> str:
        return f"{self.attribute}({self.value})"


@dataclass(frozen=True)
class Rule:
    id: int
    antecedent: tuple[Descriptor, ...]
    consequent: str
    support: int = 0
    origin: frozenset = frozenset()

    def text(self, decision_name: str = "num") -> str:
        lhs = " AND ".join(str(d) for d in self.antecedent)
        return f"{lhs} => {decision_name}({self.consequent})"

    def antecedent_matches(self, table: DecisionTable, pos: int) -> bool:
        row = table.rows[pos]
        for d in self.antecedent:
            if not d.matches(row[table.col_index(d.attribute)]):
                return False
        return True


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[Rule, ...]
    provenance: str = ""
    cuts: Optional[CutSet] = None
    # Emission count before deduplication.
    raw_count: int = 0

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def by_id(self, rule_id: int) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(f"no rule with id {rule_id}")

    def subset_ids(self, ids: Iterable[int]) -> "RuleSet":
        wanted = set(ids)
        return replace(self, rules=tuple(r for r in self.rules if r.id in wanted))


def table_fingerprint(table: DecisionTable) -> str:
    h = hashlib.sha256()
    h.update(";".join(f"{a.name}:{a.kind}:{a.role}" for a in table.schema).encode())
    h.update(to_delimited(table).encode())
    return h.hexdigest()[:16]


def support(rule: Rule, table: DecisionTable) -> int:
    """Objects satisfying every antecedent descriptor and the consequent."""
    for d in rule.antecedent:
        table.col_index(d.attribute)  # raises SchemaError for unknown attributes
    dec_i = table.col_index(table.decision.name)
    count = 0
    for pos in range(table.n_objects):
        if table.rows[pos][dec_i] != rule.consequent:
            continue
        if rule.antecedent_matches(table, pos):
            count += 1
    return count


def _batch_supports(rules: list[Rule], table: DecisionTable) -> list[int]:
    """Vectorized support computation over encoded discrete columns."""
    n = table.n_objects
    if n == 0:
        return [0] * len(rules)
    codes: dict[str, np.ndarray] = {}
    value_code: dict[str, dict] = {}
    for a in table.schema:
        col = table.column(a.name)
        mapping: dict = {}
        arr = np.empty(n, dtype=np.int32)
        for i, v in enumerate(col):
            arr[i] = mapping.setdefault(v, len(mapping))
        codes[a.name] = arr
        value_code[a.name] = mapping
    dec_name = table.decision.name
    out = []
    for rule in rules:
        code = value_code[dec_name].get(rule.consequent)
        if code is None:
            out.append(0)
            continue
        mask = codes[dec_name] == code
        for d in rule.antecedent:
            c = value_code[d.attribute].get(d.value)
            if c is None:
                mask = np.zeros(n, dtype=bool)
                break
            mask &= codes[d.attribute] == c
        out.append(int(mask.sum()))
    return out


def generate_rules(table: DecisionTable,
                   bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> RuleSet:
    """Mine one rule per (object, object-relative reduct), deduplicated.

    Rules are ordered by (object id, reduct lexicographic in schema order);
    duplicates merge into the first occurrence, pooling origin ids.
    """
    if any(not a.is_discrete for a in table.conditions):
        raise SchemaError("rule generation needs a discrete table; discretize first")
    order = {a.name: i for i, a in enumerate(table.schema)}
    dec_name = table.decision.name

    seen: dict[tuple, int] = {}
    protos: list[dict] = []
    raw = 0
    for rid in table.row_ids:
        pos = table.row_pos(rid)
        reducts = object_relative_reducts(table, rid, bound=bound)
        keyed = sorted(
            (tuple(sorted((order[a] for a in red.attrs))) for red in reducts))
        for attr_ranks in keyed:
            if not attr_ranks:
                continue  # empty antecedent carries no information
            raw += 1
            antecedent = tuple(
                Descriptor(table.schema[r].name, table.rows[pos][r]) for r in attr_ranks)
            consequent = table.rows[pos][table.col_index(dec_name)]
            key = (antecedent, consequent)
            if key in seen:
                protos[seen[key]]["origin"].add(rid)
            else:
                seen[key] = len(protos)
                protos.append({"antecedent": antecedent, "consequent": consequent,
                               "origin": {rid}})

    skeleton = [Rule(id=i, antecedent=p["antecedent"], consequent=p["consequent"],
                     origin=frozenset(p["origin"])) for i, p in enumerate(protos)]
    supports = _batch_supports(skeleton, table)
    rules = tuple(replace(r, support=s) for r, s in zip(skeleton, supports))
    return RuleSet(rules=rules, provenance=table_fingerprint(table),
                   cuts=table.cuts, raw_count=raw)


def filter_by_support(ruleset: RuleSet, min_support: int) -> RuleSet:
    """Keep rules with support >= min_support, preserving order and ids."""
    if min_support < 0:
        raise ValueError("min_support must be non-negative")
    kept = tuple(r for r in ruleset.rules if r.support >= min_support)
    return replace(ruleset, rules=kept)
