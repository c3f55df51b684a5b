"""Weighted Mamdani inference over the fuzzy rule base.

Firing: each term's degree is the max membership over its label union, rule
strength is the min over terms, and the activation is weight x strength.
Each rule's output set is clipped at its activation (min implication), the
clipped curves combine by pointwise max over a uniformly sampled [0, 100]
universe, and the centroid of the aggregate is the percent-blocking score.
No rule firing yields UNDETERMINED rather than a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DataError
from .fuzzy import NO, UNDETERMINED, YES, FuzzyRuleBase
from .table import MISSING, DecisionTable

MISSING_POLICIES = ("conservative", "ignore-term")
FALLBACK_POLICIES = ("passthrough", "majority")

PatientInput = dict


def validate_input(rulebase: FuzzyRuleBase, patient: PatientInput) -> None:
    for name, value in patient.items():
        if value is MISSING:
            continue
        try:
            var = rulebase.variable(name)
        except KeyError:
            raise DataError(f"unknown attribute {name!r}") from None
        if var.kind == "nominal":
            if not isinstance(value, str) or value not in var.labels:
                raise DataError(
                    f"attribute {name!r}: value {value!r} not in labels {list(var.labels)}")
        else:
            if isinstance(value, str) or not isinstance(value, (int, float)):
                raise DataError(f"attribute {name!r} expects a number, got {value!r}")


def fire(rulebase: FuzzyRuleBase, patient: PatientInput,
         missing_policy: str = "conservative") -> np.ndarray:
    """Per-rule activations (weight x min over term degrees) for one input."""
    if missing_policy not in MISSING_POLICIES:
        raise ValueError(f"unknown missing policy {missing_policy!r}")
    validate_input(rulebase, patient)
    activations = np.zeros(len(rulebase.rules))
    for k, rule in enumerate(rulebase.rules):
        strength = 1.0
        for attr, labels in rule.terms:
            value = patient.get(attr, MISSING)
            if value is MISSING:
                if missing_policy == "ignore-term":
                    continue
                strength = 0.0
                break
            var = rulebase.variable(attr)
            degree = max(var.membership(label, value) for label in labels)
            strength = min(strength, degree)
            if strength == 0.0:
                break
        activations[k] = rule.weight * strength
    return activations


@lru_cache(maxsize=32)
def _sampled_output_sets(output_sets, universe, samples: int):
    lo, hi = universe
    xs = np.linspace(lo, hi, samples)
    curves = {f.label: np.array([f.membership(x) for x in xs]) for f in output_sets}
    return xs, curves


def _output_samples(rulebase: FuzzyRuleBase, samples: int) -> tuple[np.ndarray, dict]:
    return _sampled_output_sets(rulebase.output_sets, rulebase.universe, samples)


def aggregate_and_defuzzify(rulebase: FuzzyRuleBase, activations: np.ndarray,
                            samples: Optional[int] = None,
                            return_curve: bool = False):
    """Centroid of the max-combined, activation-clipped output sets.

    Returns None when nothing fired (all activations zero); with
    ``return_curve`` returns (percentage, xs, aggregate) instead.
    """
    samples = samples or rulebase.samples
    if len(activations) != len(rulebase.rules):
        raise ValueError("activations are not aligned with the rule base")
    xs, curves = _output_samples(rulebase, samples)
    if not np.any(activations > 0):
        return (None, xs, None) if return_curve else None
    agg = np.zeros(samples)
    for act, rule in zip(activations, rulebase.rules):
        if act <= 0:
            continue
        np.maximum(agg, np.minimum(act, curves[rule.consequent]), out=agg)
    centroid = float((xs * agg).sum() / agg.sum())
    return (centroid, xs, agg) if return_curve else centroid


def classify(percentage: Optional[float], threshold: float = 50.0,
             fallback_policy: str = "passthrough",
             majority_label: str = NO) -> str:
    """YES strictly above the threshold, NO at or below, UNDETERMINED if nothing fired.

    The majority fallback substitutes the training majority label for
    UNDETERMINED; coverage bookkeeping happens in evaluation.
    """
    if fallback_policy not in FALLBACK_POLICIES:
        raise ValueError(f"unknown fallback policy {fallback_policy!r}")
    if percentage is None:
        return majority_label if fallback_policy == "majority" else UNDETERMINED
    return YES if percentage > threshold else NO


@dataclass(frozen=True)
class InferenceResult:
    activations: tuple[float, ...]
    percentage: Optional[float]
    label: str
    fired: tuple[int, ...]  # rule indices sorted by activation desc, then index
    xs: tuple[float, ...] = ()
    aggregate: Optional[tuple[float, ...]] = None

    @property
    def uncovered(self) -> bool:
        return self.percentage is None


def diagnose(rulebase: FuzzyRuleBase, patient: PatientInput,
             threshold: Optional[float] = None,
             samples: Optional[int] = None,
             missing_policy: str = "conservative",
             fallback_policy: str = "passthrough",
             with_curve: bool = False) -> InferenceResult:
    """Full evaluation of one patient input against the rule base."""
    threshold = rulebase.threshold if threshold is None else threshold
    activations = fire(rulebase, patient, missing_policy=missing_policy)
    pct, xs, agg = aggregate_and_defuzzify(rulebase, activations, samples=samples,
                                           return_curve=True)
    label = classify(pct, threshold=threshold, fallback_policy=fallback_policy,
                     majority_label=rulebase.majority_label)
    fired = tuple(sorted((k for k in range(len(activations)) if activations[k] > 0),
                         key=lambda k: (-activations[k], k)))
    return InferenceResult(
        activations=tuple(float(a) for a in activations),
        percentage=pct, label=label, fired=fired,
        xs=tuple(float(x) for x in xs) if with_curve else (),
        aggregate=tuple(float(v) for v in agg) if (with_curve and agg is not None) else None)


def patient_from_row(table: DecisionTable, row_id: int) -> PatientInput:
    """Condition cells of a raw table row as an inference input."""
    pos = table.row_pos(row_id)
    out: PatientInput = {}
    for a in table.conditions:
        cell = table.rows[pos][table.col_index(a.name)]
        if cell is MISSING:
            out[a.name] = None
        elif a.kind == "numeric":
            out[a.name] = float(cell)
        else:
            out[a.name] = cell
    return out
