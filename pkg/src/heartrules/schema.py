"""Attribute schemas for decision tables.

A schema is an ordered list of attributes, exactly one of which plays the
decision role.  Numeric attributes hold real values, nominal attributes hold
labels from a declared finite set, binary attributes are nominal over
{"0", "1"}.  The ``uci-heart-14`` preset describes the standard 14-column
UCI heart disease layout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import SchemaError

# "interval" is the kind discretization rewrites numeric attributes to;
# it never appears in schema files.
KINDS = ("numeric", "nominal", "binary", "interval")
ROLES = ("condition", "decision")


@dataclass(frozen=True)
class AttributeSchema:
    name: str
    kind: str
    role: str = "condition"
    labels: tuple[str, ...] = ()
    description: str = ""
    # Collapse integral decision values >= 1 to "1" at load time (the raw UCI
    # files grade disease severity 0-4 while the pipeline is binary).
    collapse_positive: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"attribute {self.name!r}: unknown kind {self.kind!r}")
        if self.role not in ROLES:
            raise SchemaError(f"attribute {self.name!r}: unknown role {self.role!r}")
        if self.kind == "binary" and not self.labels:
            object.__setattr__(self, "labels", ("0", "1"))
        if self.kind == "nominal" and not self.labels:
            raise SchemaError(f"nominal attribute {self.name!r} must declare its label set")
        if self.kind == "numeric" and self.labels:
            raise SchemaError(f"numeric attribute {self.name!r} cannot declare labels")

    @property
    def is_discrete(self) -> bool:
        return self.kind in ("nominal", "binary", "interval")


def validate_schema(attributes: list[AttributeSchema]) -> None:
    names = [a.name for a in attributes]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise SchemaError(f"duplicate attribute names: {dupes}")
    decisions = [a for a in attributes if a.role == "decision"]
    if len(decisions) != 1:
        raise SchemaError(f"schema must have exactly one decision attribute, found {len(decisions)}")


def canonical_label(token: str) -> str:
    """Normalize a nominal token: integral floats collapse to their int form.

    The UCI processed files write nominal codes as floats ("6.0" for thal=6);
    declared label sets use the bare integer form.
    """
    token = token.strip()
    try:
        value = float(token)
    except ValueError:
        return token
    if value == int(value):
        return str(int(value))
    return token


UCI_HEART_14 = [
    AttributeSchema("age", "numeric", description="Age in years"),
    AttributeSchema("sex", "binary", description="Sex: 1 male, 0 female"),
    AttributeSchema("cp", "nominal", labels=("1", "2", "3", "4"),
                    description="Chest pain type: 1 typical angina, 2 atypical angina, "
                                "3 non-anginal pain, 4 asymptomatic"),
    AttributeSchema("trestbps", "numeric", description="Resting systolic blood pressure (mmHg)"),
    AttributeSchema("chol", "numeric", description="Serum cholesterol (mg/dl)"),
    AttributeSchema("fbs", "binary", description="Fasting blood sugar over 120 mg/dl"),
    AttributeSchema("restecg", "nominal", labels=("0", "1", "2"),
                    description="Resting ECG: 0 normal, 1 ST-T abnormality, 2 LV hypertrophy"),
    AttributeSchema("thalach", "numeric", description="Maximum heart rate achieved (bpm)"),
    AttributeSchema("exang", "binary", description="Exercise induced angina"),
    AttributeSchema("oldpeak", "numeric", description="ST depression induced by exercise relative to rest"),
    AttributeSchema("slope", "nominal", labels=("1", "2", "3"),
                    description="Slope of the peak exercise ST segment: 1 up, 2 flat, 3 down"),
    AttributeSchema("ca", "numeric", description="Number of major vessels colored by fluoroscopy (0-3)"),
    AttributeSchema("thal", "nominal", labels=("3", "6", "7"),
                    description="Thallium scintigraphy: 3 normal, 6 fixed defect, 7 reversible defect"),
    AttributeSchema("num", "binary", role="decision", collapse_positive=True,
                    description="Disease present: 1 if any major vessel narrows by more than 50%"),
]

PRESETS = {"uci-heart-14": UCI_HEART_14}


def schema_to_dicts(attributes: list[AttributeSchema]) -> list[dict]:
    out = []
    for a in attributes:
        d: dict = {"name": a.name, "kind": a.kind, "role": a.role}
        if a.kind == "nominal" or (a.kind == "binary" and a.labels != ("0", "1")):
            d["labels"] = list(a.labels)
        if a.description:
            d["description"] = a.description
        if a.collapse_positive:
            d["collapse_positive"] = True
        out.append(d)
    return out


def schema_from_dicts(entries: list[dict]) -> list[AttributeSchema]:
    attrs = []
    for e in entries:
        attrs.append(AttributeSchema(
            name=e["name"],
            kind=e["kind"],
            role=e.get("role", "condition"),
            labels=tuple(str(x) for x in e.get("labels", ())),
            description=e.get("description", ""),
            collapse_positive=bool(e.get("collapse_positive", False)),
        ))
    validate_schema(attrs)
    return attrs


def load_schema(name_or_path: str) -> list[AttributeSchema]:
    """Resolve a schema preset name or a JSON schema file path."""
    if name_or_path in PRESETS:
        return list(PRESETS[name_or_path])
    path = Path(name_or_path)
    if not path.exists():
        raise SchemaError(
            f"unknown schema {name_or_path!r}: not a preset ({', '.join(sorted(PRESETS))}) "
            f"and no such file")
    with open(path, "r", encoding="utf-8") as fh:
        entries = json.load(fh)
    return schema_from_dicts(entries)
