"""Seeded synthetic CAD cohorts shaped like the UCI heart-disease files.

The build and test environment has no network access to the UCI repository,
so the repo ships generated stand-ins with the same 14-column layout.  Each
patient gets a latent severity t ~ N(0,1); attribute distributions
interpolate between healthy and diseased parameter sets as a function of t,
and the recorded label thresholds t plus boundary noise.  Mislabeled
patients therefore sit near the class boundary (like real diagnostic
disagreement) rather than being attribute-extreme contradictions, and the
boundary-noise scale caps the accuracy any classifier can reach.  Anyone
with the real processed UCI files can point the CLI at them instead;
nothing in the package depends on these generators.
"""

from __future__ import annotations

import math
import random
from pathlib import Path

import click

from .table import format_cell

COLUMNS = ["age", "sex", "cp", "trestbps", "chol", "fbs", "restecg", "thalach",
           "exang", "oldpeak", "slope", "ca", "thal", "num"]

# (healthy, diseased) parameter pairs, loosely matching Cleveland class stats.
NORMALS = {
    "age": ((51.5, 9.0), (58.5, 7.5), 29, 77),
    "trestbps": ((127.0, 15.0), (139.0, 18.0), 94, 200),
    "chol": ((238.0, 50.0), (262.0, 50.0), 126, 564),
    "thalach": ((163.0, 16.5), (132.0, 20.0), 71, 202),
}
BERNOULLIS = {
    "sex": (0.53, 0.87),
    "fbs": (0.12, 0.18),
    "exang": (0.10, 0.68),
}
CATEGORICALS = {
    "cp": (("1", "2", "3", "4"), (0.16, 0.28, 0.40, 0.16), (0.02, 0.04, 0.09, 0.85)),
    "restecg": (("0", "1", "2"), (0.60, 0.02, 0.38), (0.40, 0.05, 0.55)),
    "slope": (("1", "2", "3"), (0.72, 0.22, 0.06), (0.17, 0.66, 0.17)),
    "ca": (("0", "1", "2", "3"), (0.80, 0.13, 0.05, 0.02), (0.32, 0.27, 0.23, 0.18)),
    "thal": (("3", "6", "7"), (0.87, 0.05, 0.08), (0.22, 0.10, 0.68)),
}
POSITIVE_RATE = 0.46
# Sharpness of the attribute response to latent severity.
SEVERITY_GAIN = 2.6
# Label noise at the class boundary: the cohort file feeds training (low),
# the held-out evaluation file stands in for the generalization gap (higher).
COHORT_BOUNDARY_NOISE = 0.15
EVAL_BOUNDARY_NOISE = 0.45


def _mix(t: float) -> float:
    return 1.0 / (1.0 + math.exp(-SEVERITY_GAIN * t))


def _clipped_normal(rng, mu, sd, lo, hi) -> float:
    return min(max(rng.normalvariate(mu, sd), lo), hi)


def _oldpeak(rng: random.Random, w: float) -> float:
    zero_p = 0.75 + w * (0.10 - 0.75)
    if rng.random() < zero_p:
        return 0.0
    shift = w * 0.5
    mean = 0.6 + w * (1.7 - 0.6)
    return round(min(shift + rng.expovariate(1 / mean), 6.2), 1)


def generate_row(rng: random.Random, boundary_noise: float) -> dict:
    t = rng.normalvariate(0.0, 1.0)
    w = _mix(t)
    row: dict = {}
    for name, (p0, p1, lo, hi) in NORMALS.items():
        mu = p0[0] + w * (p1[0] - p0[0])
        sd = p0[1] + w * (p1[1] - p0[1])
        row[name] = float(round(_clipped_normal(rng, mu, sd, lo, hi)))
    for name, (q0, q1) in BERNOULLIS.items():
        row[name] = "1" if rng.random() < q0 + w * (q1 - q0) else "0"
    for name, (labels, w0, w1) in CATEGORICALS.items():
        weights = [a + w * (b - a) for a, b in zip(w0, w1)]
        row[name] = rng.choices(labels, weights=weights, k=1)[0]
    row["oldpeak"] = _oldpeak(rng, w)
    row["ca"] = float(row["ca"])  # ca is numeric in the schema
    # Label: severity over a threshold, blurred at the boundary.
    tau = _severity_threshold(boundary_noise)
    u = t + rng.normalvariate(0.0, boundary_noise)
    row["num"] = "1" if u > tau else "0"
    return row


def _severity_threshold(boundary_noise: float) -> float:
    # P(N(0, 1 + s^2) > tau) = POSITIVE_RATE
    z = _normal_quantile(1.0 - POSITIVE_RATE)
    return z * math.sqrt(1.0 + boundary_noise ** 2)


def _normal_quantile(p: float) -> float:
    """Acklam's rational approximation; plenty for data synthesis."""
    a = [-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
         1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00]
    b = [-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
         6.680131188771972e+01, -1.328068155288572e+01]
    c = [-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
         -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00]
    d = [7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
         3.754408661907416e+00]
    plow, phigh = 0.02425, 1 - 0.02425
    if p < plow:
        q = math.sqrt(-2 * math.log(p))
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / \
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1)
    if p > phigh:
        return -_normal_quantile(1 - p)
    q = p - 0.5
    r = q * q
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q / \
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1)


DEFAULT_SEED = 3


def generate_cohort(seed: int = DEFAULT_SEED, n_base: int = 303, n_extension: int = 358,
                    boundary_noise: float = COHORT_BOUNDARY_NOISE) -> list[dict]:
    """Training cohort: a mostly-complete base plus rows with slope/ca/thal gaps."""
    rng = random.Random(seed)
    base = [generate_row(rng, boundary_noise) for _ in range(n_base)]
    # A handful of objects with missing values, like the real base file (4 ca, 2 thal).
    gaps = rng.sample(range(n_base), 6)
    for i in gaps[:4]:
        base[i]["ca"] = None
    for i in gaps[4:]:
        base[i]["thal"] = None
    extension = []
    for _ in range(n_extension):
        row = generate_row(rng, boundary_noise)
        if rng.random() < 0.25:
            row["slope"] = None
        if rng.random() < 0.35:
            row["ca"] = None
        if rng.random() < 0.30:
            row["thal"] = None
        extension.append(row)
    return base + extension


def generate_eval_set(seed: int = 104729 + DEFAULT_SEED, n: int = 303,
                      boundary_noise: float = EVAL_BOUNDARY_NOISE) -> list[dict]:
    """Held-out evaluation rows, disjoint from the cohort, blurrier labels."""
    rng = random.Random(seed)
    rows = [generate_row(rng, boundary_noise) for _ in range(n)]
    gaps = rng.sample(range(n), 6)
    for i in gaps[:4]:
        rows[i]["ca"] = None
    for i in gaps[4:]:
        rows[i]["thal"] = None
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = []
    for row in rows:
        lines.append(",".join(format_cell(row[c]) for c in COLUMNS))
    return "\n".join(lines) + "\n"


def write_datasets(out_dir, seed: int = DEFAULT_SEED,
                   cohort_noise: float = COHORT_BOUNDARY_NOISE,
                   eval_noise: float = EVAL_BOUNDARY_NOISE) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cohort = generate_cohort(seed=seed, boundary_noise=cohort_noise)
    heldout = generate_eval_set(seed=104729 + seed, boundary_noise=eval_noise)
    paths = []
    p1 = out / "synth_cad_661.csv"
    p1.write_text(rows_to_csv(cohort), encoding="utf-8")
    paths.append(p1)
    p2 = out / "synth_cleveland_303.csv"
    p2.write_text(rows_to_csv(heldout), encoding="utf-8")
    paths.append(p2)
    return paths


@click.command()
@click.option("--out", "out_dir", default="data", show_default=True, type=click.Path())
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--cohort-noise", type=float, default=COHORT_BOUNDARY_NOISE,
              show_default=True)
@click.option("--eval-noise", type=float, default=EVAL_BOUNDARY_NOISE, show_default=True)
def main(out_dir, seed, cohort_noise, eval_noise):
    """Regenerate the bundled synthetic CAD data files."""
    for p in write_datasets(out_dir, seed=seed, cohort_noise=cohort_noise,
                            eval_noise=eval_noise):
        click.echo(f"wrote {p}")


if __name__ == "__main__":
    main()
