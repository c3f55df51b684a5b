import assert from "node:assert/strict";
import { test } from "node:test";

import { gaugeSvg } from "../src/gauge.js";

test("gauge shows exactly the server-computed percentage", () => {
  const svg = gaugeSvg(71.4, 50);
  assert.match(svg, />71\.4%</);
  assert.match(svg, /gauge-fill-high/);
});

test("gauge at or below threshold renders the low style", () => {
  const svg = gaugeSvg(42.0, 50);
  assert.match(svg, />42\.0%</);
  assert.match(svg, /gauge-fill-low/);
  assert.ok(!svg.includes("gauge-fill-high"));
});

test("undetermined renders a dash and no fill arc", () => {
  const svg = gaugeSvg(null, 50);
  assert.match(svg, /&#8212;/);
  assert.ok(!svg.includes("gauge-fill-low"));
  assert.ok(!svg.includes("gauge-fill-high"));
});

test("the threshold tick is marked and labeled", () => {
  const svg = gaugeSvg(70, 50);
  assert.match(svg, /gauge-threshold/);
  assert.match(svg, />50%</);
  // at threshold 50 the tick sits at the arc apex: x == center
  const m = svg.match(/<line x1="([0-9.]+)"[^/]*class="gauge-threshold"/);
  assert.ok(m);
  assert.ok(Math.abs(Number(m![1]) - 140) < 0.01);
});

test("threshold off-center moves the tick", () => {
  const svg = gaugeSvg(70, 60);
  const m = svg.match(/<line x1="([0-9.]+)"[^/]*class="gauge-threshold"/);
  assert.ok(m);
  assert.ok(Number(m![1]) > 140);
  assert.match(svg, />60%</);
});

test("extreme values clamp instead of overflowing the arc", () => {
  assert.ok(gaugeSvg(0, 50).includes("gauge-track"));
  const full = gaugeSvg(100, 50);
  assert.match(full, />100\.0%</);
});
