"""Hybrid rule selection: applicability table + reduct-based importance.

Candidate rules are turned into binary columns of a new decision table (1
where a rule's antecedent and consequent both hold on an evaluation object),
and the rules whose columns appear in the reducts of that table are kept.
Duplicate columns collapse to their lowest rule id before the reduct search.
Above the exhaustive bound the search unions greedy results over several
deterministic attribute-order permutations.
"""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from .errors import PipelineError
from .rough import _minimal_hitting_sets, DEFAULT_EXHAUSTIVE_BOUND
from .rules import Rule, RuleSet
from .schema import AttributeSchema
from .table import MISSING, DecisionTable

DEFAULT_ORDER_COUNT = 2
DEFAULT_ORDER_SEED = 2024


def rule_applies(rule: Rule, table: DecisionTable, row_id: int) -> int:
    """1 iff the object satisfies the rule's antecedent and consequent.

    A descriptor over a missing cell never matches.
    """
    pos = table.row_pos(row_id)
    dec = table.rows[pos][table.col_index(table.decision.name)]
    if dec != rule.consequent:
        return 0
    return 1 if rule.antecedent_matches(table, pos) else 0


def _descriptor_column(desc, table: DecisionTable, cache: dict) -> np.ndarray:
    key = (desc.attribute, desc.value)
    col = cache.get(key)
    if col is None:
        cells = table.column(desc.attribute)
        col = np.fromiter((desc.matches(c) for c in cells), dtype=bool, count=len(cells))
        cache[key] = col
    return col


def applicability_matrix(rules: RuleSet, table: DecisionTable,
                         antecedent_only: bool = False) -> np.ndarray:
    """(n_objects, n_rules) 0/1 matrix of rule_applies over the table."""
    n = table.n_objects
    dec_col = table.column(table.decision.name)
    out = np.zeros((n, len(rules.rules)), dtype=np.uint8)
    cache: dict = {}
    for k, rule in enumerate(rules.rules):
        mask = np.ones(n, dtype=bool)
        for d in rule.antecedent:
            mask &= _descriptor_column(d, table, cache)
        if not antecedent_only:
            mask &= np.fromiter((c == rule.consequent for c in dec_col), dtype=bool, count=n)
        out[:, k] = mask
    return out


def build_rule_table(rules: RuleSet, eval_table: DecisionTable) -> DecisionTable:
    """Decision table with one binary column per rule plus the copied decision."""
    if not rules.rules:
        raise PipelineError("selection", "no candidate rules to build a rule table from")
    if eval_table.n_objects == 0:
        raise PipelineError("selection", "evaluation table is empty")
    A = applicability_matrix(rules, eval_table)
    schema = tuple(
        [AttributeSchema(f"r{rule.id}", "binary") for rule in rules.rules]
        + [eval_table.decision])
    dec_col = eval_table.column(eval_table.decision.name)
    rows = tuple(
        tuple(str(int(v)) for v in A[i]) + (dec_col[i],)
        for i in range(eval_table.n_objects))
    return DecisionTable(schema=schema, rows=rows, row_ids=eval_table.row_ids)


def _pos_flags(A: np.ndarray, dec: np.ndarray) -> np.ndarray:
    """Positive-region membership of each row under all rule columns."""
    n = A.shape[0]
    groups: dict[bytes, list[int]] = {}
    for i in range(n):
        groups.setdefault(A[i].tobytes(), []).append(i)
    pos = np.zeros(n, dtype=bool)
    for members in groups.values():
        if len({dec[m] for m in members}) == 1:
            for m in members:
                pos[m] = True
    return pos


def _entry_rows(A: np.ndarray, dec: np.ndarray) -> np.ndarray:
    """Discernibility entries as boolean rows, one per kept object pair."""
    n = A.shape[0]
    pos = _pos_flags(A, dec)
    ii, jj = np.triu_indices(n, k=1)
    keep = (dec[ii] != dec[jj]) & (pos[ii] | pos[jj])
    ii, jj = ii[keep], jj[keep]
    if len(ii) == 0:
        return np.zeros((0, A.shape[1]), dtype=bool)
    return A[ii] != A[jj]


def _greedy_cover(E: np.ndarray, perm_rank: np.ndarray,
                  preferred: Optional[np.ndarray] = None) -> list[int]:
    """Greedy hitting set over entry rows, pruned to minimality.

    Scores update incrementally: a pair's contribution is subtracted exactly
    once when it first becomes covered, so the whole loop costs one pass
    over E regardless of how many steps it takes.

    With a ``preferred`` column mask the run picks preferred columns while
    any of them still covers something, then completes with the rest; the
    pruned result is a minimal hitting set either way, so preference only
    steers *which* reduct the run lands on.
    """
    covered = np.zeros(E.shape[0], dtype=bool)
    scores = E.sum(axis=0, dtype=np.int64)
    chosen: list[int] = []
    while not covered.all():
        pool = scores
        if preferred is not None:
            masked = np.where(preferred, scores, 0)
            if masked.max() > 0:
                pool = masked
        best_score = pool.max()
        if best_score == 0:
            break
        tied = np.flatnonzero(pool == best_score)
        best = int(tied[np.argmin(perm_rank[tied])])
        chosen.append(best)
        newly = ~covered & E[:, best]
        covered |= newly
        scores -= E[newly].sum(axis=0, dtype=np.int64)
    for c in list(reversed(chosen)):
        rest = [x for x in chosen if x != c]
        if not rest:
            if E.shape[0] == 0:
                chosen.remove(c)
            continue
        if E[:, rest].any(axis=1).all():
            chosen.remove(c)
    return chosen


def select_important_rules(rules: RuleSet, eval_table: DecisionTable,
                           bound: int = DEFAULT_EXHAUSTIVE_BOUND,
                           n_orders: int = DEFAULT_ORDER_COUNT,
                           seed: int = DEFAULT_ORDER_SEED) -> RuleSet:
    """Keep the rules appearing in reducts of the applicability table.

    Exhaustive reduct search under ``bound`` distinct columns, otherwise the
    union of greedy results over ``n_orders`` seeded column permutations.
    """
    if not rules.rules:
        raise PipelineError("selection", "no candidate rules to select from")
    if eval_table.n_objects == 0:
        raise PipelineError("selection", "evaluation table is empty")
    dec_labels = eval_table.column(eval_table.decision.name)
    if len(set(dec_labels)) < 2:
        raise PipelineError("selection",
                            "evaluation decision column is constant; selection undefined")
    codes = {v: i for i, v in enumerate(dict.fromkeys(dec_labels))}
    dec = np.array([codes[v] for v in dec_labels])

    A_full = applicability_matrix(rules, eval_table)
    # Identical columns are interchangeable; keep the lowest rule id of each.
    rep_of: dict[bytes, int] = {}
    rep_cols: list[int] = []
    for k in range(A_full.shape[1]):
        key = A_full[:, k].tobytes()
        if key not in rep_of:
            rep_of[key] = k
            rep_cols.append(k)
    A = A_full[:, rep_cols]

    E = _entry_rows(A, dec)
    m = A.shape[1]
    selected_cols: set[int] = set()
    if m <= bound:
        masks = [int(sum(1 << b for b in np.flatnonzero(row))) for row in E]
        for sol in _minimal_hitting_sets(masks, m):
            selected_cols.update(b for b in range(m) if sol >> b & 1)
    else:
        # One run per decision class (a one-sided cover is itself a reduct:
        # pure tie-order permutations all collapse onto the same side), then
        # unrestricted runs under distinct tie orders.
        consequents = [rules.rules[rep_cols[c]].consequent for c in range(m)]
        class_masks = []
        for label in dict.fromkeys(consequents):
            class_masks.append(np.array([c == label for c in consequents]))
        rng = random.Random(seed)
        identity = np.arange(m, dtype=np.int64)
        runs: list[tuple[np.ndarray, Optional[np.ndarray]]] = []
        for mask in class_masks[:max(0, n_orders)]:
            runs.append((identity, mask))
        while len(runs) < n_orders:
            perm = rng.sample(range(m), m)
            rank = np.empty(m, dtype=np.int64)
            for r, col in enumerate(perm):
                rank[col] = r
            runs.append((rank, None))
        for rank, mask in runs:
            selected_cols.update(_greedy_cover(E, rank, preferred=mask))

    selected_ids = sorted(rules.rules[rep_cols[c]].id for c in selected_cols)
    return rules.subset_ids(selected_ids)
