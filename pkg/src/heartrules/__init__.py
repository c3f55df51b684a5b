"""Rough-set rule learning and weighted fuzzy inference for CAD decision support."""

from .artifact import RuleBaseArtifact
from .discretize import CutSet, Interval, candidate_cuts, discretize, select_cuts
from .errors import DataError, HeartRulesError, PipelineError, SchemaError
from .evaluation import ConfusionMatrix, Metrics, crisp_evaluate, evaluate
from .fuzzy import (FuzzyRule, FuzzyRuleBase, FuzzyVariable, MembershipFunction,
                    SpreadPolicy, build_memberships, build_variables,
                    fuzzify_ruleset, rule_weights)
from .inference import InferenceResult, aggregate_and_defuzzify, classify, diagnose, fire
from .pipeline import PipelineConfig, train
from .rough import (DiscernibilityMatrix, Reduct, boundary_region,
                    discernibility_matrix, lower_approximation,
                    object_relative_reducts, partition, positive_region,
                    reduct_greedy, reducts_exhaustive, upper_approximation)
from .rules import (Descriptor, Rule, RuleSet, filter_by_support, generate_rules,
                    support)
from .schema import AttributeSchema, load_schema
from .selection import build_rule_table, rule_applies, select_important_rules
from .table import (DecisionTable, complete_cases, impute, load_table,
                    load_table_file, split, to_delimited)

__version__ = "0.1.0"
