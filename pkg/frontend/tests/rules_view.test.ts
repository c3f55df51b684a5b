import assert from "node:assert/strict";
import { test } from "node:test";

import type { Activation, RuleInfo } from "../src/api.js";
import { firedRows, renderRuleList } from "../src/rules_view.js";

const RULES: RuleInfo[] = [
  { id: 509, text: "thalach([*,128.5)) AND thal(7) => num(1)", support: 25,
    weight: 0.694, consequent: "CAD-YES",
    terms: [{ attribute: "thalach", labels: ["LOW"] },
            { attribute: "thal", labels: ["7"] }] },
  { id: 12, text: "oldpeak([*,0.35)) => num(0)", support: 36, weight: 1.0,
    consequent: "CAD-NO", terms: [{ attribute: "oldpeak", labels: ["LOW"] }] },
  { id: 77, text: "cp(4) => num(1)", support: 10, weight: 0.3,
    consequent: "CAD-YES", terms: [{ attribute: "cp", labels: ["4"] }] },
];

const ACTIVATIONS: Activation[] = [
  { rule_id: 509, activation: 0.694, weight: 0.694 },
  { rule_id: 12, activation: 0.0, weight: 1.0 },
  { rule_id: 77, activation: 0.9, weight: 0.3 },
];


test("zero activations are dropped and the rest sort strongest-first", () => {
  const rows = firedRows(RULES, ACTIVATIONS);
  assert.deepEqual(rows.map((r) => r.ruleId), [77, 509]);
  assert.equal(rows[0].activation, 0.9);
});

test("rows merge server activation with rule text by id", () => {
  const rows = firedRows(RULES, ACTIVATIONS);
  assert.equal(rows[1].text, "thalach([*,128.5)) AND thal(7) => num(1)");
  assert.equal(rows[1].support, 25);
  assert.equal(rows[1].weight, 0.694);
});

test("activation ties break by rule id", () => {
  const tied: Activation[] = [
    { rule_id: 77, activation: 0.5, weight: 1 },
    { rule_id: 12, activation: 0.5, weight: 1 },
  ];
  assert.deepEqual(firedRows(RULES, tied).map((r) => r.ruleId), [12, 77]);
});

test("rendered list shows bars proportional to activation", () => {
  const html = renderRuleList(RULES, ACTIVATIONS);
  assert.match(html, /width:90%/);
  assert.match(html, /width:69%/);
  assert.match(html, /1 rule did not fire/);
  assert.match(html, /#77/);
});

test("rule text is HTML-escaped", () => {
  const html = renderRuleList(RULES, ACTIVATIONS);
  assert.ok(html.includes("thalach([*,128.5)) AND thal(7) =&gt; num(1)"));
  assert.ok(!html.includes("=> num(1)</code>".replace("&gt;", ">")) ||
            !html.includes("<script"));
});

test("no firing rules yields the empty-state message", () => {
  const html = renderRuleList(RULES, [
    { rule_id: 509, activation: 0, weight: 0.694 }]);
  assert.match(html, /No rule fired/);
});
