"""The trained rule-base artifact: one JSON document, lossless round-trip.

Infinite breakpoints serialize as the strings "-inf"/"inf" (standard JSON has
no infinity literal).  Saving is canonical — sorted keys, full-precision
floats — so identical training runs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .discretize import CutSet, Interval
from .errors import DataError
from .fuzzy import (FuzzyRule, FuzzyRuleBase, FuzzyVariable, MembershipFunction)
from .rules import Descriptor, Rule, RuleSet
from .schema import AttributeSchema, schema_from_dicts, schema_to_dicts

FORMAT_VERSION = "1"


def _num(x: float) -> Union[float, str]:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _denum(x) -> float:
    return float(x)


def _mf_to_dict(f: MembershipFunction) -> dict:
    return {"label": f.label, "shape": f.shape,
            "points": [_num(p) for p in f.points],
            "crisp_labels": list(f.crisp_labels)}


def _mf_from_dict(d: dict) -> MembershipFunction:
    return MembershipFunction(label=d["label"], shape=d["shape"],
                              points=tuple(_denum(p) for p in d["points"]),
                              crisp_labels=tuple(d["crisp_labels"]))


def _var_to_dict(v: FuzzyVariable) -> dict:
    return {"attribute": v.attribute, "kind": v.kind,
            "functions": [_mf_to_dict(f) for f in v.functions],
            "cuts": list(v.cuts), "spread": v.spread,
            "universe": [v.universe[0], v.universe[1]]}


def _var_from_dict(d: dict) -> FuzzyVariable:
    return FuzzyVariable(attribute=d["attribute"], kind=d["kind"],
                         functions=tuple(_mf_from_dict(f) for f in d["functions"]),
                         cuts=tuple(d["cuts"]), spread=d["spread"],
                         universe=(d["universe"][0], d["universe"][1]))


def _descriptor_to_dict(desc: Descriptor) -> dict:
    if isinstance(desc.value, Interval):
        return {"attribute": desc.attribute, "interval":
                {"lo": _num(desc.value.lo), "hi": _num(desc.value.hi)}}
    return {"attribute": desc.attribute, "label": desc.value}


def _descriptor_from_dict(d: dict) -> Descriptor:
    if "interval" in d:
        iv = d["interval"]
        return Descriptor(d["attribute"], Interval(_denum(iv["lo"]), _denum(iv["hi"])))
    return Descriptor(d["attribute"], d["label"])


def _rule_to_dict(r: Rule) -> dict:
    return {"id": r.id, "antecedent": [_descriptor_to_dict(d) for d in r.antecedent],
            "consequent": r.consequent, "support": r.support,
            "origin": sorted(r.origin)}


def _rule_from_dict(d: dict) -> Rule:
    return Rule(id=d["id"],
                antecedent=tuple(_descriptor_from_dict(x) for x in d["antecedent"]),
                consequent=d["consequent"], support=d["support"],
                origin=frozenset(d["origin"]))


def _fuzzy_rule_to_dict(r: FuzzyRule) -> dict:
    return {"terms": [[attr, list(labels)] for attr, labels in r.terms],
            "consequent": r.consequent, "weight": r.weight,
            "source_id": r.source_id, "support": r.support}


def _fuzzy_rule_from_dict(d: dict) -> FuzzyRule:
    return FuzzyRule(terms=tuple((attr, tuple(labels)) for attr, labels in d["terms"]),
                     consequent=d["consequent"], weight=d["weight"],
                     source_id=d["source_id"], support=d["support"])


@dataclass(frozen=True)
class RuleBaseArtifact:
    rulebase: FuzzyRuleBase
    cuts: CutSet
    crisp_rules: RuleSet
    schema: tuple[AttributeSchema, ...]
    fingerprint: str
    config: dict
    stage_counts: dict
    format_version: str = FORMAT_VERSION

    def to_dict(self) -> dict:
        rb = self.rulebase
        return {
            "format_version": self.format_version,
            "fingerprint": self.fingerprint,
            "config": self.config,
            "stage_counts": self.stage_counts,
            "schema": schema_to_dicts(list(self.schema)),
            "cuts": self.cuts.to_dict(),
            "crisp_rules": [_rule_to_dict(r) for r in self.crisp_rules.rules],
            "crisp_provenance": self.crisp_rules.provenance,
            "crisp_raw_count": self.crisp_rules.raw_count,
            "fuzzy": {
                "variables": [_var_to_dict(v) for _, v in rb.variables],
                "rules": [_fuzzy_rule_to_dict(r) for r in rb.rules],
                "output_sets": [_mf_to_dict(f) for f in rb.output_sets],
                "universe": [rb.universe[0], rb.universe[1]],
                "threshold": rb.threshold,
                "samples": rb.samples,
                "majority_label": rb.majority_label,
                "decision_name": rb.decision_name,
            },
        }

    @staticmethod
    def from_dict(doc: dict) -> "RuleBaseArtifact":
        if doc.get("format_version") != FORMAT_VERSION:
            raise DataError(
                f"unsupported artifact format {doc.get('format_version')!r}; "
                f"expected {FORMAT_VERSION!r}")
        fz = doc["fuzzy"]
        variables = tuple((v["attribute"], _var_from_dict(v)) for v in fz["variables"])
        rulebase = FuzzyRuleBase(
            variables=variables,
            rules=tuple(_fuzzy_rule_from_dict(r) for r in fz["rules"]),
            output_sets=tuple(_mf_from_dict(f) for f in fz["output_sets"]),
            universe=(fz["universe"][0], fz["universe"][1]),
            threshold=fz["threshold"], samples=fz["samples"],
            majority_label=fz["majority_label"], decision_name=fz["decision_name"])
        cuts = CutSet.from_dict(doc["cuts"])
        crisp = RuleSet(rules=tuple(_rule_from_dict(r) for r in doc["crisp_rules"]),
                        provenance=doc.get("crisp_provenance", ""),
                        cuts=cuts, raw_count=doc.get("crisp_raw_count", 0))
        return RuleBaseArtifact(
            rulebase=rulebase, cuts=cuts, crisp_rules=crisp,
            schema=tuple(schema_from_dicts(doc["schema"])),
            fingerprint=doc["fingerprint"], config=doc["config"],
            stage_counts=doc["stage_counts"])

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True,
                          allow_nan=False) + "\n"

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @staticmethod
    def load(path: Union[str, Path]) -> "RuleBaseArtifact":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise DataError(f"artifact {path} is not valid JSON: {e}") from None
        return RuleBaseArtifact.from_dict(doc)
