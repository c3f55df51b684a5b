"""Command line driver: train, eval, diagnose, serve.

Every flag can also be set through an environment variable prefixed
HEARTRULES_ (e.g. HEARTRULES_TRAIN_MIN_SUPPORT=3).
"""

from __future__ import annotations

from pathlib import Path

import click

from .artifact import RuleBaseArtifact
from .errors import HeartRulesError
from .evaluation import crisp_evaluate, evaluate
from .fuzzy import UNDETERMINED
from .inference import diagnose as run_diagnose
from .pipeline import PipelineConfig, train as train_pipeline
from .report import (format_metrics_table, metrics_row, save_inference_figure,
                     save_membership_figures, save_metrics_figure,
                     save_output_sets_figure, write_metrics_csv,
                     write_metrics_json)
from .schema import canonical_label
from .selection import DEFAULT_ORDER_COUNT, DEFAULT_ORDER_SEED
from .table import concat_tables, load_table_file


@click.group()
def main():
    """Learn interpretable diagnosis rules and serve weighted fuzzy inference."""


def _fail(exc: Exception) -> "click.ClickException":
    return click.ClickException(str(exc))


@main.command("train")
@click.option("--data", "data_paths", multiple=True, required=True,
              type=click.Path(exists=True), help="Delimited data file (repeatable).")
@click.option("--schema", default="uci-heart-14", show_default=True,
              help="Schema preset name or JSON schema file.")
@click.option("--out", "out_path", required=True, type=click.Path(),
              help="Artifact output path.")
@click.option("--header/--no-header", default=False, show_default=True)
@click.option("--impute", "impute_policy", default="mode-median", show_default=True,
              type=click.Choice(["mode-median", "drop-incomplete"]))
@click.option("--split", "split_fraction", type=float, default=None,
              help="Training fraction in (0,1); omit to train on all rows.")
@click.option("--seed", "split_seed", type=int, default=13, show_default=True)
@click.option("--min-support", type=int, default=2, show_default=True)
@click.option("--selection", "selection_table", default="complete", show_default=True,
              type=click.Choice(["complete", "training"]),
              help="Evaluation table for rule selection.")
@click.option("--selection-orders", type=int, default=DEFAULT_ORDER_COUNT,
              show_default=True,
              help="Greedy reduct searches to union (first two are class-stratified).")
@click.option("--selection-seed", type=int, default=DEFAULT_ORDER_SEED, show_default=True)
@click.option("--spread-factor", type=float, default=0.25, show_default=True)
@click.option("--spread-override", "spread_overrides", multiple=True,
              help="attr=value fixed membership spread (repeatable).")
@click.option("--threshold", type=float, default=50.0, show_default=True)
@click.option("--samples", type=int, default=1001, show_default=True)
@click.option("--exhaustive-bound", type=int, default=16, show_default=True)
@click.option("--plot-dir", type=click.Path(), default=None,
              help="Render membership-function figures here after training.")
def cmd_train(data_paths, schema, out_path, header, impute_policy, split_fraction,
              split_seed, min_support, selection_table, selection_orders,
              selection_seed, spread_factor, spread_overrides, threshold, samples,
              exhaustive_bound, plot_dir):
    """Run the full training pipeline and write the rule-base artifact."""
    overrides = []
    for item in spread_overrides:
        name, _, val = item.partition("=")
        try:
            overrides.append((name, float(val)))
        except ValueError:
            raise click.BadParameter(f"--spread-override needs attr=number, got {item!r}")
    try:
        config = PipelineConfig(
            data=tuple(data_paths), schema=schema, has_header=header,
            impute_policy=impute_policy, split_fraction=split_fraction,
            split_seed=split_seed, min_support=min_support,
            selection_table=selection_table, selection_orders=selection_orders,
            selection_seed=selection_seed, exhaustive_bound=exhaustive_bound,
            spread_factor=spread_factor, spread_overrides=tuple(overrides),
            threshold=threshold, samples=samples)
        artifact, counts = train_pipeline(config)
    except (HeartRulesError, ValueError) as exc:
        raise _fail(exc)
    artifact.save(out_path)

    click.echo(f"objects loaded:      {counts['objects_loaded']}")
    click.echo(f"training objects:    {counts['objects_training']}")
    cut_counts = counts["cuts"]
    total_cuts = sum(cut_counts.values())
    per_attr = ", ".join(f"{k}={v}" for k, v in sorted(cut_counts.items()))
    click.echo(f"cuts selected:       {total_cuts} ({per_attr})")
    click.echo(f"rules generated:     {counts['rules_generated']} "
               f"({counts['rules_generated_raw']} before deduplication)")
    click.echo(f"rules after support: {counts['rules_filtered']} (min_support={min_support})")
    click.echo(f"selection objects:   {counts['objects_selection']}")
    click.echo(f"rules selected:      {counts['rules_selected']}")
    acc = counts.get("selection_accuracy")
    cov = counts.get("selection_coverage")
    click.echo("selected-set crisp:  accuracy "
               f"{'n/a' if acc is None else format(acc, '.3f')}, coverage "
               f"{'n/a' if cov is None else format(cov, '.3f')} (on the selection table)")
    click.echo(f"artifact written:    {out_path}")
    if plot_dir:
        written = save_membership_figures(artifact.rulebase, plot_dir)
        save_output_sets_figure(artifact.rulebase, Path(plot_dir) / "output_sets.png")
        click.echo(f"figures written:     {len(written) + 1} -> {plot_dir}")


@main.command("eval")
@click.option("--artifact", "artifact_path", required=True, type=click.Path(exists=True))
@click.option("--data", "data_paths", multiple=True, required=True,
              type=click.Path(exists=True))
@click.option("--dataset-name", default=None, help="Label for report rows.")
@click.option("--header/--no-header", default=False, show_default=True)
@click.option("--threshold", type=float, default=None,
              help="Override the artifact's classification threshold.")
@click.option("--policy", default="passthrough", show_default=True,
              type=click.Choice(["passthrough", "majority"]),
              help="How uncovered objects enter the fuzzy confusion matrix.")
@click.option("--report-dir", type=click.Path(), default=None,
              help="Write metrics.csv, metrics.json and figures here.")
def cmd_eval(artifact_path, data_paths, dataset_name, header, threshold, policy,
             report_dir):
    """Evaluate an artifact: fuzzy engine (both policies) and crisp rule vote."""
    try:
        artifact = RuleBaseArtifact.load(artifact_path)
        tables = [load_table_file(p, list(artifact.schema), has_header=header)
                  for p in data_paths]
        table = concat_tables(tables)
        name = dataset_name or Path(data_paths[0]).stem
        rows = []
        for pol in ["passthrough", "majority"] if policy == "passthrough" \
                else ["majority", "passthrough"]:
            cm, met = evaluate(artifact.rulebase, table, threshold=threshold,
                               fallback_policy=pol)
            rows.append(metrics_row(name, "fuzzy", pol, table.n_objects, cm, met))
        ccm, cmet = crisp_evaluate(artifact.crisp_rules, table)
        rows.append(metrics_row(name, "crisp", "vote", table.n_objects, ccm, cmet))
    except (HeartRulesError, ValueError) as exc:
        raise _fail(exc)

    click.echo(format_metrics_table(rows))
    click.echo("(crisp vote ties resolve to the positive class)")
    if report_dir:
        out = Path(report_dir)
        out.mkdir(parents=True, exist_ok=True)
        write_metrics_csv(rows, out / "metrics.csv")
        write_metrics_json(rows, out / "metrics.json",
                           extra={"artifact": str(artifact_path),
                                  "fingerprint": artifact.fingerprint})
        save_metrics_figure(rows, out / "metrics.png")
        save_membership_figures(artifact.rulebase, out)
        save_output_sets_figure(artifact.rulebase, out / "output_sets.png")
        click.echo(f"report written: {out}")


@main.command("diagnose")
@click.option("--artifact", "artifact_path", required=True, type=click.Path(exists=True))
@click.option("--set", "assignments", multiple=True,
              help="attr=value patient attribute (repeatable; '?' for unknown).")
@click.option("--threshold", type=float, default=None)
@click.option("--missing-policy", default="conservative", show_default=True,
              type=click.Choice(["conservative", "ignore-term"]))
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Render the aggregated output curve to this PNG.")
def cmd_diagnose(artifact_path, assignments, threshold, missing_policy, plot_path):
    """Score one patient from attr=value pairs."""
    try:
        artifact = RuleBaseArtifact.load(artifact_path)
    except HeartRulesError as exc:
        raise _fail(exc)
    conditions = {a.name: a for a in artifact.schema if a.role == "condition"}
    patient: dict = {}
    for item in assignments:
        name, eq, raw = item.partition("=")
        if not eq:
            raise click.BadParameter(f"--set needs attr=value, got {item!r}")
        attr = conditions.get(name)
        if attr is None:
            raise click.ClickException(
                f"unknown attribute {name!r}; legal names: {', '.join(conditions)}")
        if raw == "?":
            patient[name] = None
        elif attr.kind == "numeric":
            try:
                patient[name] = float(raw)
            except ValueError:
                raise click.ClickException(f"attribute {name!r} expects a number, got {raw!r}")
        else:
            patient[name] = canonical_label(raw)
    try:
        result = run_diagnose(artifact.rulebase, patient, threshold=threshold,
                              missing_policy=missing_policy, with_curve=bool(plot_path))
    except (HeartRulesError, ValueError) as exc:
        raise _fail(exc)

    if result.percentage is None:
        click.echo("percentage: undetermined (no rule fired)")
    else:
        click.echo(f"percentage: {result.percentage:.2f}")
    click.echo(f"label:      {result.label}")
    rb = artifact.rulebase
    if result.fired:
        click.echo("fired rules:")
        for k in result.fired:
            fr = rb.rules[k]
            crisp = artifact.crisp_rules.by_id(fr.source_id)
            click.echo(f"  [{fr.source_id}] activation={result.activations[k]:.3f} "
                       f"weight={fr.weight:.3f} support={fr.support}  "
                       f"{crisp.text(rb.decision_name)}")
    elif result.label == UNDETERMINED:
        click.echo("fired rules: none")
    if plot_path:
        save_inference_figure(result, rb, plot_path)
        click.echo(f"curve written: {plot_path}")


@main.command("serve")
@click.option("--artifact", "artifact_path", required=True, type=click.Path(exists=True))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8710, show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True), default=None,
              help="Directory of built UI assets to serve at /.")
def cmd_serve(artifact_path, host, port, static_dir):
    """Serve the diagnosis HTTP API (and optionally the web UI)."""
    import uvicorn

    from .service import create_app

    try:
        artifact = RuleBaseArtifact.load(artifact_path)
    except HeartRulesError as exc:
        raise _fail(exc)
    app = create_app(artifact, static_dir=static_dir)
    click.echo(f"serving {len(artifact.crisp_rules.rules)} rules on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port, log_level="info")


def entrypoint():
    main(auto_envvar_prefix="HEARTRULES")


if __name__ == "__main__":
    entrypoint()
