"""Evaluation reports: delimited metrics, JSON documents, matplotlib figures.

The eval CLI drops metrics.csv / metrics.json next to rendered PNGs
(membership functions per fuzzified attribute, the output sets, and a metric
bar chart); diagnose can render the aggregated output curve of one patient.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .evaluation import ConfusionMatrix, Metrics
from .fuzzy import FuzzyRuleBase
from .inference import InferenceResult

CSV_COLUMNS = ["dataset", "mode", "policy", "objects", "tp", "tn", "fp", "fn",
               "uncovered", "accuracy", "sensitivity", "specificity", "coverage"]


def metrics_row(dataset: str, mode: str, policy: str, objects: int,
                cm: ConfusionMatrix, metrics: Metrics) -> dict:
    def fmt(v: Optional[float]):
        return None if v is None else round(v, 6)
    return {
        "dataset": dataset, "mode": mode, "policy": policy, "objects": objects,
        "tp": cm.tp, "tn": cm.tn, "fp": cm.fp, "fn": cm.fn,
        "uncovered": cm.uncovered,
        "accuracy": fmt(metrics.accuracy),
        "sensitivity": fmt(metrics.sensitivity),
        "specificity": fmt(metrics.specificity),
        "coverage": fmt(metrics.coverage),
    }


def write_metrics_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("n/a" if row.get(k) is None else row.get(k))
                             for k in CSV_COLUMNS})


def write_metrics_json(rows: list[dict], path, extra: Optional[dict] = None) -> None:
    doc = {"rows": rows}
    if extra:
        doc.update(extra)
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def format_metrics_table(rows: list[dict]) -> str:
    headers = ["dataset", "mode", "policy", "accuracy", "sensitivity",
               "specificity", "coverage", "uncovered"]
    def cell(row, key):
        v = row.get(key)
        if v is None:
            return "n/a"
        if isinstance(v, float):
            return f"{v:.3f}"
        return str(v)
    table = [headers] + [[cell(r, h) for h in headers] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)) for line in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _finite_span(var) -> tuple[float, float]:
    lo, hi = var.universe
    if not math.isfinite(lo) or not math.isfinite(hi) or lo >= hi:
        lo, hi = 0.0, 1.0
    pad = 0.05 * (hi - lo) or 0.5
    return lo - pad, hi + pad


def save_membership_figures(rulebase: FuzzyRuleBase, out_dir) -> list[Path]:
    """One PNG per numeric variable that actually has cuts."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, var in rulebase.variables:
        if var.kind != "numeric" or not var.cuts:
            continue
        lo, hi = _finite_span(var)
        xs = np.linspace(lo, hi, 400)
        fig, ax = plt.subplots(figsize=(6, 3.2))
        for fn in var.functions:
            ax.plot(xs, [fn.membership(x) for x in xs], label=fn.label)
        for cut in var.cuts:
            ax.axvline(cut, color="gray", lw=0.8, ls=":")
        ax.set_xlabel(name)
        ax.set_ylabel("membership")
        ax.set_ylim(-0.05, 1.1)
        ax.legend(loc="center right", fontsize=8)
        fig.tight_layout()
        path = out_dir / f"membership_{name}.png"
        fig.savefig(path, dpi=110)
        plt.close(fig)
        written.append(path)
    return written


def save_output_sets_figure(rulebase: FuzzyRuleBase, path) -> Path:
    lo, hi = rulebase.universe
    xs = np.linspace(lo, hi, 400)
    fig, ax = plt.subplots(figsize=(6, 3.2))
    for fn in rulebase.output_sets:
        ax.plot(xs, [fn.membership(x) for x in xs], label=fn.label)
    ax.axvline(rulebase.threshold, color="gray", lw=0.8, ls="--",
               label=f"threshold {rulebase.threshold:g}%")
    ax.set_xlabel("percent narrowing")
    ax.set_ylabel("membership")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def save_metrics_figure(rows: list[dict], path) -> Path:
    keys = ["accuracy", "sensitivity", "specificity", "coverage"]
    labels = [f"{r['dataset']}\n{r['mode']}/{r['policy']}" for r in rows]
    x = np.arange(len(rows))
    width = 0.2
    fig, ax = plt.subplots(figsize=(max(6, 1.6 * len(rows)), 3.6))
    for i, key in enumerate(keys):
        vals = [r.get(key) if r.get(key) is not None else 0.0 for r in rows]
        ax.bar(x + (i - 1.5) * width, vals, width, label=key)
    ax.set_xticks(x, labels, fontsize=8)
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=8)
    ax.set_ylabel("score")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def save_inference_figure(result: InferenceResult, rulebase: FuzzyRuleBase, path) -> Path:
    """Aggregated output curve with the centroid marked."""
    fig, ax = plt.subplots(figsize=(6, 3.2))
    lo, hi = rulebase.universe
    if result.aggregate is not None and result.xs:
        ax.fill_between(result.xs, result.aggregate, alpha=0.4, label="aggregate")
        ax.plot(result.xs, result.aggregate, lw=1.0)
    else:
        xs = np.linspace(lo, hi, 3)
        ax.plot(xs, [0, 0, 0], lw=1.0)
    if result.percentage is not None:
        ax.axvline(result.percentage, color="C3", lw=1.2,
                   label=f"centroid {result.percentage:.1f}%")
    ax.axvline(rulebase.threshold, color="gray", lw=0.8, ls="--",
               label=f"threshold {rulebase.threshold:g}%")
    ax.set_xlim(lo, hi)
    ax.set_ylim(-0.02, 1.05)
    ax.set_xlabel("percent narrowing")
    ax.set_ylabel("membership")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
