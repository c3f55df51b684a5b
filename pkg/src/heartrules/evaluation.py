"""Batch scoring: confusion matrices, accuracy/sensitivity/specificity, coverage.

Two evaluation paths: the fuzzy engine over raw inputs, and the crisp
selected rule set with support-weighted voting.  Objects no rule covers are
either excluded from the confusion counts (passthrough) or labelled with the
training majority class (majority fallback) while still counting as
uncovered for coverage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DataError
from .fuzzy import NO, UNDETERMINED, YES, FuzzyRuleBase
from .inference import diagnose, patient_from_row
from .rules import RuleSet
from .selection import applicability_matrix
from .table import DecisionTable

POSITIVE = "1"


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    tn: int = 0
    fp: int = 0
    fn: int = 0
    uncovered: int = 0

    @property
    def decided(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


def _ratio(num: int, den: int) -> Optional[float]:
    return num / den if den > 0 else None


@dataclass(frozen=True)
class Metrics:
    accuracy: Optional[float]
    sensitivity: Optional[float]
    specificity: Optional[float]
    coverage: Optional[float]

    @staticmethod
    def from_confusion(cm: ConfusionMatrix, total: int) -> "Metrics":
        return Metrics(
            accuracy=_ratio(cm.tp + cm.tn, cm.decided),
            sensitivity=_ratio(cm.tp, cm.tp + cm.fn),
            specificity=_ratio(cm.tn, cm.tn + cm.fp),
            coverage=_ratio(total - cm.uncovered, total),
        )


def evaluate(rulebase: FuzzyRuleBase, table: DecisionTable,
             threshold: Optional[float] = None,
             fallback_policy: str = "passthrough",
             samples: Optional[int] = None,
             missing_policy: str = "conservative") -> tuple[ConfusionMatrix, Metrics]:
    """Score every object of a raw table with the fuzzy engine."""
    if table.n_objects == 0:
        raise DataError("cannot evaluate an empty table")
    if not table.is_training_ready:
        raise DataError("evaluation table has missing decision labels")
    tp = tn = fp = fn = uncovered = 0
    for rid in table.row_ids:
        actual_yes = table.decision_value(rid) == POSITIVE
        result = diagnose(rulebase, patient_from_row(table, rid),
                          threshold=threshold, samples=samples,
                          missing_policy=missing_policy,
                          fallback_policy=fallback_policy)
        if result.uncovered:
            uncovered += 1
            if result.label == UNDETERMINED:
                continue
        predicted_yes = result.label == YES
        if predicted_yes and actual_yes:
            tp += 1
        elif predicted_yes:
            fp += 1
        elif actual_yes:
            fn += 1
        else:
            tn += 1
    cm = ConfusionMatrix(tp=tp, tn=tn, fp=fp, fn=fn, uncovered=uncovered)
    return cm, Metrics.from_confusion(cm, table.n_objects)


def crisp_evaluate(rules: RuleSet, table: DecisionTable,
                   tie_yes: bool = True) -> tuple[ConfusionMatrix, Metrics]:
    """Support-weighted vote among rules whose antecedents match each object."""
    if table.n_objects == 0:
        raise DataError("cannot evaluate an empty table")
    if not table.is_training_ready:
        raise DataError("evaluation table has missing decision labels")
    if not rules.rules:
        raise DataError("cannot evaluate with an empty rule set")
    A = applicability_matrix(rules, table, antecedent_only=True)
    supports = np.array([r.support for r in rules.rules], dtype=np.int64)
    yes_cols = np.array([r.consequent == POSITIVE for r in rules.rules])
    yes_votes = A @ (supports * yes_cols)
    no_votes = A @ (supports * ~yes_cols)
    tp = tn = fp = fn = uncovered = 0
    covered = A.any(axis=1)
    for pos, rid in enumerate(table.row_ids):
        if not covered[pos]:
            uncovered += 1
            continue
        if yes_votes[pos] > no_votes[pos]:
            predicted_yes = True
        elif yes_votes[pos] < no_votes[pos]:
            predicted_yes = False
        else:
            predicted_yes = tie_yes
        actual_yes = table.decision_value(rid) == POSITIVE
        if predicted_yes and actual_yes:
            tp += 1
        elif predicted_yes:
            fp += 1
        elif actual_yes:
            fn += 1
        else:
            tn += 1
    cm = ConfusionMatrix(tp=tp, tn=tn, fp=fp, fn=fn, uncovered=uncovered)
    return cm, Metrics.from_confusion(cm, table.n_objects)
