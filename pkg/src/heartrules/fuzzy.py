"""Membership functions from discretization cuts, and weighted fuzzy rules.

A numeric attribute with cuts t1 < ... < tk gets k+1 functions: a left
shoulder trapezoid, k-1 triangles peaked at the interior interval midpoints,
and a right shoulder trapezoid, all overlapping by a spread c so that
membership crosses 0.5 exactly at each cut.  Nominal attributes keep crisp
indicator functions.  Crisp rules translate term-by-term: an interval
descriptor becomes the union of the fuzzy labels whose core intervals it
covers, and each rule is weighted by its support relative to the largest
support in the set.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .discretize import CutSet, Interval
from .errors import PipelineError, SchemaError
from .rules import Rule, RuleSet
from .table import MISSING, DecisionTable

YES = "CAD-YES"
NO = "CAD-NO"
UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class MembershipFunction:
    label: str
    shape: str  # trapezoid | triangle | crisp
    points: tuple[float, ...] = ()
    # crisp: labels that map to 1; empty tuple means "always 1"
    crisp_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.shape == "trapezoid":
            a, b, c, d = self.points
            if not (a <= b <= c <= d):
                raise ValueError(f"trapezoid breakpoints must be ordered: {self.points}")
        elif self.shape == "triangle":
            a, b, c = self.points
            if not (a <= b <= c):
                raise ValueError(f"triangle breakpoints must be ordered: {self.points}")
        elif self.shape != "crisp":
            raise ValueError(f"unknown membership shape {self.shape!r}")

    def membership(self, value) -> float:
        if value is MISSING:
            return 0.0
        if self.shape == "crisp":
            if not self.crisp_labels:
                return 1.0
            return 1.0 if value in self.crisp_labels else 0.0
        x = float(value)
        if self.shape == "trapezoid":
            a, b, c, d = self.points
            if b <= x <= c:
                return 1.0
            if x < b:
                if x <= a:
                    return 0.0
                return (x - a) / (b - a)
            if x >= d:
                return 0.0
            return (d - x) / (d - c)
        a, b, c = self.points
        if x == b:
            return 1.0
        if x <= a or x >= c:
            return 0.0
        if x < b:
            return (x - a) / (b - a)
        return (c - x) / (c - b)


@dataclass(frozen=True)
class FuzzyVariable:
    attribute: str
    kind: str  # numeric | nominal
    functions: tuple[MembershipFunction, ...]
    cuts: tuple[float, ...] = ()
    spread: float = 0.0
    universe: tuple[float, float] = (0.0, 0.0)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f.label for f in self.functions)

    def function(self, label: str) -> MembershipFunction:
        for f in self.functions:
            if f.label == label:
                return f
        raise KeyError(f"variable {self.attribute!r} has no fuzzy set {label!r}")

    def membership(self, label: str, value) -> float:
        return self.function(label).membership(value)


@dataclass(frozen=True)
class SpreadPolicy:
    """Spread c = factor x (min adjacent cut gap), or factor x IQR for one cut."""
    factor: float = 0.25
    overrides: tuple[tuple[str, float], ...] = ()

    def resolve(self, attribute: str, cuts: Sequence[float],
                values: Optional[Sequence[float]] = None) -> float:
        for name, c in self.overrides:
            if name == attribute:
                return c
        k = len(cuts)
        if k == 0:
            return 0.0
        if k == 1:
            if not values:
                raise PipelineError(
                    "fuzzify", f"attribute {attribute!r} has one cut; spread needs data values")
            q1, _, q3 = statistics.quantiles(sorted(float(v) for v in values), n=4,
                                             method="inclusive")
            return self.factor * (q3 - q1)
        return self.factor * min(b - a for a, b in zip(cuts, cuts[1:]))


def _interval_labels(k: int) -> list[str]:
    """Fuzzy set names for the k+1 intervals of a k-cut attribute."""
    if k == 0:
        return ["ANY"]
    if k == 1:
        return ["LOW", "HIGH"]
    if k == 2:
        return ["LOW", "MEDIUM", "HIGH"]
    return ["LOW"] + [f"MEDIUM_{i}" for i in range(1, k)] + ["HIGH"]


def build_memberships(attribute: str, cuts: Sequence[float],
                      spread: Union[SpreadPolicy, float] = SpreadPolicy(),
                      values: Optional[Sequence[float]] = None) -> FuzzyVariable:
    """Fuzzy variable for a numeric attribute from its cut thresholds.

    ``spread`` is either the numeric overlap half-width c or a policy that
    resolves it from the cuts (and, for single-cut attributes, the training
    values).
    """
    cuts = tuple(float(t) for t in cuts)
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"cuts must be strictly increasing: {cuts}")
    labels = _interval_labels(len(cuts))
    if values:
        lo, hi = min(float(v) for v in values), max(float(v) for v in values)
    elif cuts:
        lo, hi = cuts[0], cuts[-1]
    else:
        lo, hi = 0.0, 0.0

    if not cuts:
        fn = MembershipFunction(label="ANY", shape="crisp")
        return FuzzyVariable(attribute=attribute, kind="numeric", functions=(fn,),
                             universe=(lo, hi))

    c = spread.resolve(attribute, cuts, values) if isinstance(spread, SpreadPolicy) \
        else float(spread)
    if c <= 0:
        raise PipelineError(
            "fuzzify", f"attribute {attribute!r}: spread must be positive, got {c}")

    functions = [MembershipFunction(
        label=labels[0], shape="trapezoid",
        points=(-math.inf, -math.inf, cuts[0] - c, cuts[0] + c))]
    for i in range(len(cuts) - 1):
        peak = (cuts[i] + cuts[i + 1]) / 2.0
        functions.append(MembershipFunction(
            label=labels[i + 1], shape="triangle",
            points=(cuts[i] - c, peak, cuts[i + 1] + c)))
    functions.append(MembershipFunction(
        label=labels[-1], shape="trapezoid",
        points=(cuts[-1] - c, cuts[-1] + c, math.inf, math.inf)))
    return FuzzyVariable(attribute=attribute, kind="numeric",
                         functions=tuple(functions), cuts=cuts, spread=c,
                         universe=(lo - c, hi + c))


def build_nominal_variable(attribute: str, labels: Sequence[str]) -> FuzzyVariable:
    fns = tuple(MembershipFunction(label=l, shape="crisp", crisp_labels=(l,))
                for l in labels)
    return FuzzyVariable(attribute=attribute, kind="nominal", functions=fns)


def build_variables(table: DecisionTable, cuts: CutSet,
                    spread: SpreadPolicy = SpreadPolicy()) -> dict[str, FuzzyVariable]:
    """One fuzzy variable per condition attribute of a raw training table."""
    out: dict[str, FuzzyVariable] = {}
    for attr in table.conditions:
        if attr.kind == "numeric":
            col = [float(v) for v in table.column(attr.name) if v is not MISSING]
            out[attr.name] = build_memberships(attr.name, cuts.cuts_for(attr.name),
                                               spread, col)
        else:
            out[attr.name] = build_nominal_variable(attr.name, attr.labels)
    return out


@dataclass(frozen=True)
class FuzzyRule:
    terms: tuple[tuple[str, tuple[str, ...]], ...]  # (attribute, union of set labels)
    consequent: str  # CAD-YES | CAD-NO
    weight: float
    source_id: int
    support: int

    def text(self) -> str:
        lhs = " AND ".join(
            f"{attr} is {'|'.join(labels)}" for attr, labels in self.terms)
        return f"{lhs} => {self.consequent} [w={self.weight:.3f}]"


OUTPUT_UNIVERSE = (0.0, 100.0)
OUTPUT_SETS = (
    MembershipFunction(label=NO, shape="trapezoid", points=(0.0, 0.0, 30.0, 70.0)),
    MembershipFunction(label=YES, shape="trapezoid", points=(30.0, 70.0, 100.0, 100.0)),
)
DEFAULT_THRESHOLD = 50.0
DEFAULT_SAMPLES = 1001


@dataclass(frozen=True)
class FuzzyRuleBase:
    variables: tuple[tuple[str, FuzzyVariable], ...]
    rules: tuple[FuzzyRule, ...]
    output_sets: tuple[MembershipFunction, ...] = OUTPUT_SETS
    universe: tuple[float, float] = OUTPUT_UNIVERSE
    threshold: float = DEFAULT_THRESHOLD
    samples: int = DEFAULT_SAMPLES
    majority_label: str = NO
    decision_name: str = "num"

    def variable(self, attribute: str) -> FuzzyVariable:
        for name, var in self.variables:
            if name == attribute:
                return var
        raise KeyError(f"no fuzzy variable for attribute {attribute!r}")

    def output_set(self, label: str) -> MembershipFunction:
        for f in self.output_sets:
            if f.label == label:
                return f
        raise KeyError(f"no output set {label!r}")


def rule_weights(rules: Union[RuleSet, Sequence[Rule]]) -> list[float]:
    """Support-proportional weights: each support over the maximum support."""
    rule_list = list(rules.rules) if isinstance(rules, RuleSet) else list(rules)
    if not rule_list:
        raise ValueError("cannot weight an empty rule list")
    if any(r.support <= 0 for r in rule_list):
        bad = [r.id for r in rule_list if r.support <= 0]
        raise ValueError(f"rules with zero support cannot be weighted: ids {bad}")
    top = max(r.support for r in rule_list)
    return [r.support / top for r in rule_list]


def _interval_to_labels(iv: Interval, var: FuzzyVariable, rule_id: int) -> tuple[str, ...]:
    cuts = var.cuts
    k = len(cuts)
    labels = var.labels
    if math.isinf(iv.lo):
        start = 0
    else:
        try:
            start = cuts.index(iv.lo) + 1
        except ValueError:
            raise PipelineError(
                "fuzzify",
                f"rule {rule_id}: bound {iv.lo} of {var.attribute!r} is not a cut") from None
    if math.isinf(iv.hi):
        end = k
    else:
        try:
            end = cuts.index(iv.hi)
        except ValueError:
            raise PipelineError(
                "fuzzify",
                f"rule {rule_id}: bound {iv.hi} of {var.attribute!r} is not a cut") from None
    return tuple(labels[start:end + 1])


def fuzzify_ruleset(rules: RuleSet, variables: dict[str, FuzzyVariable],
                    threshold: float = DEFAULT_THRESHOLD,
                    samples: int = DEFAULT_SAMPLES,
                    majority_label: str = NO,
                    decision_name: str = "num") -> FuzzyRuleBase:
    """Translate crisp rules into a weighted fuzzy rule base.

    Interval descriptors become unions of the fuzzy labels they cover;
    nominal descriptors become crisp singletons.  Decision 1 maps to CAD-YES,
    0 to CAD-NO.
    """
    if not rules.rules:
        raise PipelineError("fuzzify", "cannot fuzzify an empty rule set")
    weights = rule_weights(rules)
    fuzzy_rules = []
    for rule, w in zip(rules.rules, weights):
        terms = []
        for d in rule.antecedent:
            var = variables.get(d.attribute)
            if var is None:
                raise PipelineError("fuzzify",
                                    f"rule {rule.id}: no variable for {d.attribute!r}")
            if isinstance(d.value, Interval):
                labels = _interval_to_labels(d.value, var, rule.id)
            else:
                if d.value not in var.labels:
                    raise PipelineError(
                        "fuzzify",
                        f"rule {rule.id}: label {d.value!r} unknown for {d.attribute!r}")
                labels = (d.value,)
            terms.append((d.attribute, labels))
        if rule.consequent == "1":
            consequent = YES
        elif rule.consequent == "0":
            consequent = NO
        else:
            raise PipelineError(
                "fuzzify",
                f"rule {rule.id}: decision value {rule.consequent!r} is not binary")
        fuzzy_rules.append(FuzzyRule(terms=tuple(terms), consequent=consequent,
                                     weight=w, source_id=rule.id, support=rule.support))
    ordered = tuple(variables.items())  # build_variables preserves schema order
    return FuzzyRuleBase(variables=ordered, rules=tuple(fuzzy_rules),
                         threshold=threshold, samples=samples,
                         majority_label=majority_label, decision_name=decision_name)
