"""End-to-end training: load, impute, discretize, mine, filter, select, fuzzify.

Every stage failure is re-raised as a PipelineError naming the stage.  The
result is a RuleBaseArtifact plus the per-stage counts the CLI prints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .artifact import RuleBaseArtifact
from .discretize import discretize, select_cuts
from .errors import HeartRulesError, PipelineError
from .evaluation import crisp_evaluate
from .fuzzy import NO, YES, SpreadPolicy, build_variables, fuzzify_ruleset
from .rough import DEFAULT_EXHAUSTIVE_BOUND
from .rules import filter_by_support, generate_rules, table_fingerprint
from .schema import load_schema
from .selection import DEFAULT_ORDER_COUNT, DEFAULT_ORDER_SEED, select_important_rules
from .table import (DecisionTable, complete_cases, concat_tables, impute,
                    load_table_file, split)

SELECTION_TABLES = ("complete", "training")


@dataclass(frozen=True)
class PipelineConfig:
    data: tuple[str, ...]
    schema: str = "uci-heart-14"
    has_header: bool = False
    impute_policy: str = "mode-median"
    split_fraction: Optional[float] = None
    split_seed: int = 13
    min_support: int = 2
    selection_table: str = "complete"
    selection_orders: int = DEFAULT_ORDER_COUNT
    selection_seed: int = DEFAULT_ORDER_SEED
    exhaustive_bound: int = DEFAULT_EXHAUSTIVE_BOUND
    spread_factor: float = 0.25
    spread_overrides: tuple[tuple[str, float], ...] = ()
    threshold: float = 50.0
    samples: int = 1001

    def __post_init__(self):
        if self.selection_table not in SELECTION_TABLES:
            raise ValueError(f"selection_table must be one of {SELECTION_TABLES}")
        if not (0 < self.threshold < 100):
            raise ValueError("threshold must lie in (0, 100)")
        if self.samples < 11:
            raise ValueError("sample count is unreasonably small")
        if self.min_support < 0:
            raise ValueError("min_support must be non-negative")

    def to_dict(self) -> dict:
        return {
            "data": list(self.data),
            "schema": self.schema,
            "has_header": self.has_header,
            "impute_policy": self.impute_policy,
            "split_fraction": self.split_fraction,
            "split_seed": self.split_seed,
            "min_support": self.min_support,
            "selection_table": self.selection_table,
            "selection_orders": self.selection_orders,
            "selection_seed": self.selection_seed,
            "exhaustive_bound": self.exhaustive_bound,
            "spread_factor": self.spread_factor,
            "spread_overrides": {k: v for k, v in self.spread_overrides},
            "threshold": self.threshold,
            "samples": self.samples,
        }


def _stage(name: str):
    class _Guard:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc is not None and isinstance(exc, HeartRulesError) \
                    and not isinstance(exc, PipelineError):
                raise PipelineError(name, str(exc)) from exc
            if exc is not None and isinstance(exc, ValueError):
                raise PipelineError(name, str(exc)) from exc
            return False
    return _Guard()


def load_data(config: PipelineConfig) -> DecisionTable:
    with _stage("load"):
        schema = load_schema(config.schema)
        tables = [load_table_file(p, schema, has_header=config.has_header)
                  for p in config.data]
        return concat_tables(tables)


def train(config: PipelineConfig) -> tuple[RuleBaseArtifact, dict]:
    full = load_data(config)
    counts: dict = {"objects_loaded": full.n_objects}

    with _stage("split"):
        if config.split_fraction is not None:
            train_raw, _holdout = split(full, config.split_fraction, config.split_seed)
        else:
            train_raw = full
    with _stage("impute"):
        train_tbl = impute(train_raw, config.impute_policy)
    counts["objects_training"] = train_tbl.n_objects

    with _stage("discretize"):
        cuts = select_cuts(train_tbl)
        disc = discretize(train_tbl, cuts)
    counts["cuts"] = {name: len(c) for name, c in cuts.by_attribute}

    with _stage("generate"):
        ruleset = generate_rules(disc, bound=config.exhaustive_bound)
    counts["rules_generated_raw"] = ruleset.raw_count
    counts["rules_generated"] = len(ruleset)

    with _stage("filter"):
        filtered = filter_by_support(ruleset, config.min_support)
        if not filtered.rules:
            raise PipelineError(
                "filter", f"no rules survive min_support={config.min_support}")
    counts["rules_filtered"] = len(filtered)

    with _stage("select"):
        if config.selection_table == "complete":
            sel_table = complete_cases(full)
        else:
            sel_table = train_tbl
        counts["objects_selection"] = sel_table.n_objects
        selected = select_important_rules(
            filtered, sel_table, bound=config.exhaustive_bound,
            n_orders=config.selection_orders, seed=config.selection_seed)
        if not selected.rules:
            raise PipelineError("select", "selection kept no rules")
        _, sel_metrics = crisp_evaluate(selected, sel_table)
    counts["rules_selected"] = len(selected)
    counts["selection_accuracy"] = round(sel_metrics.accuracy, 6) \
        if sel_metrics.accuracy is not None else None
    counts["selection_coverage"] = round(sel_metrics.coverage, 6) \
        if sel_metrics.coverage is not None else None

    with _stage("fuzzify"):
        policy = SpreadPolicy(factor=config.spread_factor,
                              overrides=config.spread_overrides)
        variables = build_variables(train_tbl, cuts, policy)
        dec = train_tbl.decision.name
        n_yes = sum(1 for v in train_tbl.column(dec) if v == "1")
        majority = YES if n_yes * 2 > train_tbl.n_objects else NO
        rulebase = fuzzify_ruleset(selected, variables,
                                   threshold=config.threshold,
                                   samples=config.samples,
                                   majority_label=majority,
                                   decision_name=dec)

    artifact = RuleBaseArtifact(
        rulebase=rulebase, cuts=cuts, crisp_rules=selected,
        schema=full.schema, fingerprint=table_fingerprint(train_tbl),
        config=config.to_dict(), stage_counts=counts)
    return artifact, counts
