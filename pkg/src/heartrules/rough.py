"""Rough-set primitives: partitions, approximations, discernibility, reducts.

Object sets are plain frozensets of row ids.  Reduct search runs on a
discernibility matrix; the exhaustive search returns exactly the minimal
hitting sets of the matrix's entries (Berge multiplication with absorption),
the greedy search returns one minimal-but-not-necessarily-minimum hitting set.

Decision-relative matrices keep an entry for a pair of objects only when the
decisions differ and at least one of the two lies in the positive region of
the full condition set.  On consistent tables this is the usual
"different decision values" filter; on inconsistent tables it is the filter
that makes matrix reducts coincide with positive-region preservation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DataError, SchemaError
from .table import DecisionTable


def _check_condition_attrs(table: DecisionTable, attrs: Iterable[str]) -> list[str]:
    cond = {a.name for a in table.conditions}
    attrs = list(attrs)
    for name in attrs:
        if name not in cond:
            raise SchemaError(f"{name!r} is not a condition attribute of this table")
    # Keep schema order for determinism.
    order = {a.name: i for i, a in enumerate(table.schema)}
    return sorted(set(attrs), key=order.__getitem__)


def _check_object_set(table: DecisionTable, X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    ids = set(table.row_ids)
    foreign = X - ids
    if foreign:
        raise DataError(f"object set contains ids not in table: {sorted(foreign)}")
    return X


def partition(table: DecisionTable, attrs: Iterable[str]) -> list[frozenset]:
    """Equivalence classes of the indiscernibility relation over ``attrs``.

    Empty ``attrs`` yields a single block containing every object.
    """
    attrs = _check_condition_attrs(table, attrs)
    idx = [table.col_index(a) for a in attrs]
    blocks: dict[tuple, list[int]] = {}
    for pos, rid in enumerate(table.row_ids):
        key = tuple(table.rows[pos][i] for i in idx)
        blocks.setdefault(key, []).append(rid)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def lower_approximation(table: DecisionTable, attrs: Iterable[str],
                        X: Iterable[int]) -> frozenset:
    """Union of blocks entirely inside X."""
    X = _check_object_set(table, X)
    out: set = set()
    for block in partition(table, attrs):
        if block <= X:
            out |= block
    return frozenset(out)


def upper_approximation(table: DecisionTable, attrs: Iterable[str],
                        X: Iterable[int]) -> frozenset:
    """Union of blocks intersecting X."""
    X = _check_object_set(table, X)
    out: set = set()
    for block in partition(table, attrs):
        if block & X:
            out |= block
    return frozenset(out)


def boundary_region(table: DecisionTable, attrs: Iterable[str],
                    X: Iterable[int]) -> frozenset:
    return upper_approximation(table, attrs, X) - lower_approximation(table, attrs, X)


def decision_classes(table: DecisionTable) -> dict:
    """Decision value -> frozenset of row ids."""
    classes: dict = {}
    for rid in table.row_ids:
        classes.setdefault(table.decision_value(rid), set()).add(rid)
    return {k: frozenset(v) for k, v in classes.items()}


def positive_region(table: DecisionTable, attrs: Iterable[str]) -> frozenset:
    """Union of lower approximations of all decision classes."""
    out: set = set()
    classes = decision_classes(table)
    dec_of = {rid: table.decision_value(rid) for rid in table.row_ids}
    for block in partition(table, attrs):
        probe = next(iter(block))
        if block <= classes[dec_of[probe]]:
            out |= block
    return frozenset(out)


MATRIX_MODES = ("full", "decision", "object")


@dataclass(frozen=True)
class DiscernibilityMatrix:
    """Non-empty attribute-difference sets for the object pairs a mode keeps."""
    mode: str
    attributes: tuple[str, ...]
    entries: tuple[tuple[tuple[int, int], frozenset], ...]
    universe: tuple[int, ...]
    origin: Optional[int] = None

    def entry(self, i: int, j: int) -> frozenset:
        key = (min(i, j), max(i, j))
        for pair, attrs in self.entries:
            if pair == key:
                return attrs
        return frozenset()

    @property
    def nonempty_entries(self) -> list[frozenset]:
        return [attrs for _, attrs in self.entries]


def discernibility_matrix(table: DecisionTable, mode: str = "decision",
                          origin: Optional[int] = None) -> DiscernibilityMatrix:
    """Pairwise condition-attribute differences under a mode filter.

    full: every pair (pairs differing nowhere are simply absent);
    decision: pairs with different decisions, at least one in POS_C(D);
    object: pairs containing ``origin`` whose decision differs from it.
    """
    if mode not in MATRIX_MODES:
        raise ValueError(f"unknown matrix mode {mode!r}")
    cond = [a.name for a in table.conditions]
    if any(not table.attribute(c).is_discrete for c in cond):
        raise SchemaError("discernibility needs a discrete table; discretize first")
    idx = [table.col_index(c) for c in cond]
    ids = list(table.row_ids)
    pos_of = {rid: p for p, rid in enumerate(ids)}

    def diff(a: int, b: int) -> frozenset:
        ra, rb = table.rows[pos_of[a]], table.rows[pos_of[b]]
        return frozenset(c for c, i in zip(cond, idx) if ra[i] != rb[i])

    entries = []
    if mode == "object":
        if origin is None or origin not in pos_of:
            raise DataError(f"object-relative matrix needs a valid origin id, got {origin}")
        d0 = table.decision_value(origin)
        for rid in ids:
            if rid == origin or table.decision_value(rid) == d0:
                continue
            attrs = diff(origin, rid)
            if attrs:  # condition-identical pairs are unresolvable; skip
                entries.append(((min(origin, rid), max(origin, rid)), attrs))
    else:
        pos = positive_region(table, cond) if mode == "decision" else None
        for a_pos in range(len(ids)):
            for b_pos in range(a_pos + 1, len(ids)):
                a, b = ids[a_pos], ids[b_pos]
                if mode == "decision":
                    if table.decision_value(a) == table.decision_value(b):
                        continue
                    if a not in pos and b not in pos:
                        continue
                attrs = diff(a, b)
                if attrs:
                    entries.append(((min(a, b), max(a, b)), attrs))
    return DiscernibilityMatrix(mode=mode, attributes=tuple(cond),
                                entries=tuple(entries), universe=tuple(ids),
                                origin=origin)


@dataclass(frozen=True)
class Reduct:
    attrs: frozenset
    kind: str = "decision-relative"
    origin: Optional[int] = None

    def sorted_by(self, order: Sequence[str]) -> tuple[str, ...]:
        rank = {name: i for i, name in enumerate(order)}
        return tuple(sorted(self.attrs, key=rank.__getitem__))


def _absorb_minimal(masks: Iterable[int]) -> list[int]:
    """Antichain of minimal masks (drop any strict superset)."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(r & m == r for r in out):
            out.append(m)
    return out


def _minimal_hitting_sets(clauses: list[int], n_bits: int) -> list[int]:
    """All minimal hitting sets of the clause masks (Berge multiplication)."""
    sols = [0]
    for clause in _absorb_minimal(clauses):
        extended = []
        bits = [1 << b for b in range(n_bits) if clause >> b & 1]
        for s in sols:
            if s & clause:
                extended.append(s)
            else:
                extended.extend(s | bit for bit in bits)
        sols = _absorb_minimal(extended)
    return sols


DEFAULT_EXHAUSTIVE_BOUND = 16


def reducts_exhaustive(matrix: DiscernibilityMatrix,
                       bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> set[Reduct]:
    """Exactly the minimal hitting sets of the matrix's non-empty entries."""
    attrs = matrix.attributes
    if len(attrs) > bound:
        raise ValueError(
            f"{len(attrs)} attributes exceed the exhaustive bound {bound}; "
            "use reduct_greedy instead")
    bit = {name: i for i, name in enumerate(attrs)}
    clauses = [sum(1 << bit[a] for a in entry) for entry in matrix.nonempty_entries]
    kind = "object-relative" if matrix.mode == "object" else "decision-relative"
    sols = _minimal_hitting_sets(clauses, len(attrs))
    return {
        Reduct(frozenset(a for a in attrs if m >> bit[a] & 1), kind=kind,
               origin=matrix.origin)
        for m in sols
    }


def reduct_greedy(matrix: DiscernibilityMatrix,
                  tie_order: Optional[Sequence[str]] = None) -> Reduct:
    """Johnson-style greedy hitting set, pruned to minimality.

    Repeatedly adds the attribute occurring in the most uncovered entries
    (ties broken by ``tie_order``, default schema order), then tries to drop
    the chosen attributes in reverse insertion order.
    """
    attrs = list(matrix.attributes)
    order = list(tie_order) if tie_order is not None else attrs
    if sorted(order) != sorted(attrs):
        raise ValueError("tie_order must be a permutation of the matrix attributes")
    rank = {name: i for i, name in enumerate(order)}
    entries = matrix.nonempty_entries
    uncovered = list(entries)
    chosen: list[str] = []
    while uncovered:
        counts: dict[str, int] = {}
        for entry in uncovered:
            for a in entry:
                counts[a] = counts.get(a, 0) + 1
        best = min(counts, key=lambda a: (-counts[a], rank[a]))
        chosen.append(best)
        uncovered = [e for e in uncovered if best not in e]
    for a in reversed(list(chosen)):
        rest = set(chosen) - {a}
        if all(entry & rest for entry in entries):
            chosen.remove(a)
    kind = "object-relative" if matrix.mode == "object" else "decision-relative"
    return Reduct(frozenset(chosen), kind=kind, origin=matrix.origin)


def object_relative_reducts(table: DecisionTable, x: int,
                            bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> set[Reduct]:
    """All minimal attribute sets discerning x from differently-decided objects.

    Falls back to a singleton greedy result when the condition-attribute
    count exceeds the exhaustive bound.
    """
    matrix = discernibility_matrix(table, "object", origin=x)
    if len(matrix.attributes) <= bound:
        return reducts_exhaustive(matrix, bound)
    return {reduct_greedy(matrix)}
