// What-if sweep chart: percentage vs attribute value as an SVG polyline.
// Geometry helpers are pure so click-to-value mapping is testable.

import type { SweepPoint } from "./api.js";

export const CHART_W = 520;
export const CHART_H = 220;
export const PAD_L = 44;
export const PAD_R = 16;
export const PAD_T = 12;
export const PAD_B = 30;

export interface PlottedPoint {
  x: number;
  y: number | null; // null when the engine returned no percentage
  value: number;
  percentage: number | null;
}

export function plotPoints(points: SweepPoint[]): PlottedPoint[] {
  if (points.length === 0) {
    return [];
  }
  const innerW = CHART_W - PAD_L - PAD_R;
  const innerH = CHART_H - PAD_T - PAD_B;
  const lo = points[0].value;
  const hi = points[points.length - 1].value;
  const span = hi - lo;
  return points.map((p, i) => {
    const fx = span === 0 ? (points.length === 1 ? 0.5 : i / (points.length - 1))
      : (p.value - lo) / span;
    const x = PAD_L + fx * innerW;
    const y = p.percentage === null ? null
      : PAD_T + (1 - p.percentage / 100) * innerH;
    return { x, y, value: p.value, percentage: p.percentage };
  });
}

export function yFor(percentage: number): number {
  const innerH = CHART_H - PAD_T - PAD_B;
  return PAD_T + (1 - percentage / 100) * innerH;
}

/** Index of the plotted point nearest to a chart-local x coordinate. */
export function nearestIndex(plotted: PlottedPoint[], x: number): number {
  let best = 0;
  let bestDist = Infinity;
  plotted.forEach((p, i) => {
    const d = Math.abs(p.x - x);
    if (d < bestDist) {
      bestDist = d;
      best = i;
    }
  });
  return best;
}

function segments(plotted: PlottedPoint[]): string[] {
  // consecutive runs of defined percentages; undetermined points break the line
  const runs: string[] = [];
  let current: string[] = [];
  for (const p of plotted) {
    if (p.y === null) {
      if (current.length > 1) {
        runs.push(current.join(" "));
      }
      current = [];
    } else {
      current.push(`${p.x.toFixed(2)},${p.y.toFixed(2)}`);
    }
  }
  if (current.length > 1) {
    runs.push(current.join(" "));
  }
  return runs;
}

export function sweepChartSvg(points: SweepPoint[], threshold: number,
                              currentValue: number | null): string {
  const plotted = plotPoints(points);
  const parts: string[] = [];
  parts.push(`<svg viewBox="0 0 ${CHART_W} ${CHART_H}" class="sweep-chart" ` +
    `role="img" aria-label="what-if sweep">`);
  for (const pct of [0, 25, 50, 75, 100]) {
    const y = yFor(pct).toFixed(2);
    parts.push(`<line x1="${PAD_L}" y1="${y}" x2="${CHART_W - PAD_R}" y2="${y}" class="grid"/>`);
    parts.push(`<text x="${PAD_L - 6}" y="${y}" class="axis-label" ` +
      `text-anchor="end" dominant-baseline="middle">${pct}</text>`);
  }
  const ty = yFor(threshold).toFixed(2);
  parts.push(`<line x1="${PAD_L}" y1="${ty}" x2="${CHART_W - PAD_R}" y2="${ty}" class="threshold-line"/>`);
  for (const run of segments(plotted)) {
    parts.push(`<polyline points="${run}" class="sweep-line"/>`);
  }
  plotted.forEach((p, i) => {
    if (p.y === null) {
      return;
    }
    parts.push(`<circle cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="3.5" ` +
      `class="sweep-point" data-index="${i}"/>`);
  });
  if (currentValue !== null && plotted.length > 0) {
    const lo = plotted[0];
    const hi = plotted[plotted.length - 1];
    if (hi.value !== lo.value) {
      const fx = (currentValue - lo.value) / (hi.value - lo.value);
      if (fx >= 0 && fx <= 1) {
        const x = (lo.x + fx * (hi.x - lo.x)).toFixed(2);
        parts.push(`<line x1="${x}" y1="${PAD_T}" x2="${x}" ` +
          `y2="${CHART_H - PAD_B}" class="current-line"/>`);
      }
    }
  }
  if (plotted.length > 0) {
    const first = plotted[0];
    const last = plotted[plotted.length - 1];
    parts.push(`<text x="${first.x.toFixed(2)}" y="${CHART_H - 8}" class="axis-label" ` +
      `text-anchor="middle">${first.value}</text>`);
    parts.push(`<text x="${last.x.toFixed(2)}" y="${CHART_H - 8}" class="axis-label" ` +
      `text-anchor="middle">${last.value}</text>`);
  }
  parts.push("</svg>");
  return parts.join("");
}
