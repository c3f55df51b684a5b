import assert from "node:assert/strict";
import { test } from "node:test";
import { CHART_W, PAD_L, PAD_R, nearestIndex, plotPoints, sweepChartSvg, yFor } from "../src/chart.js";
function series(values, pcts) {
    return values.map((v, i) => ({
        value: v,
        percentage: pcts[i],
        label: pcts[i] === null ? "UNDETERMINED" : (pcts[i] > 50 ? "CAD-YES" : "CAD-NO"),
    }));
}
test("x positions scale linearly with the swept value", () => {
    const plotted = plotPoints(series([0, 5, 10], [40, 50, 60]));
    assert.equal(plotted[0].x, PAD_L);
    assert.equal(plotted[2].x, CHART_W - PAD_R);
    assert.ok(Math.abs(plotted[1].x - (PAD_L + (CHART_W - PAD_L - PAD_R) / 2)) < 1e-9);
});
test("a flat series renders a flat line", () => {
    const plotted = plotPoints(series([0, 1, 2, 3], [63.2, 63.2, 63.2, 63.2]));
    const ys = plotted.map((p) => p.y);
    assert.ok(ys.every((y) => y !== null && Math.abs(y - ys[0]) < 1e-9));
});
test("higher percentage plots higher on the chart", () => {
    assert.ok(yFor(80) < yFor(20));
});
test("a single point (steps=1) sits centered", () => {
    const plotted = plotPoints(series([4], [70]));
    assert.equal(plotted.length, 1);
    const mid = PAD_L + (CHART_W - PAD_L - PAD_R) / 2;
    assert.ok(Math.abs(plotted[0].x - mid) < 1e-9);
});
test("clicks map to the nearest swept value", () => {
    const plotted = plotPoints(series([0, 5, 10], [40, 50, 60]));
    assert.equal(nearestIndex(plotted, plotted[0].x + 1), 0);
    assert.equal(nearestIndex(plotted, plotted[1].x - 2), 1);
    assert.equal(nearestIndex(plotted, 9999), 2);
});
test("undetermined points break the polyline into segments", () => {
    const svg = sweepChartSvg(series([0, 1, 2, 3, 4], [40, 45, null, 55, 60]), 50, null);
    const polylines = svg.match(/<polyline/g) ?? [];
    assert.equal(polylines.length, 2);
});
test("threshold line and current-value marker are drawn", () => {
    const svg = sweepChartSvg(series([0, 10], [40, 60]), 50, 5);
    assert.match(svg, /threshold-line/);
    assert.match(svg, /current-line/);
    const none = sweepChartSvg(series([0, 10], [40, 60]), 50, null);
    assert.ok(!none.includes("current-line"));
});
test("axis labels show the sweep endpoints", () => {
    const svg = sweepChartSvg(series([0.5, 6.2], [40, 60]), 50, null);
    assert.match(svg, />0\.5</);
    assert.match(svg, />6\.2</);
});
