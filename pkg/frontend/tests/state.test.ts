import assert from "node:assert/strict";
import { test } from "node:test";

import type { SchemaAttribute } from "../src/api.js";
import { RequestSequencer, adoptValue, allBlank, fmt, isBlank, toWire,
         validateField } from "../src/state.js";

const SCHEMA: SchemaAttribute[] = [
  { name: "age", kind: "numeric", role: "condition", description: "",
    range: [24.5, 81.5] },
  { name: "oldpeak", kind: "numeric", role: "condition", description: "",
    range: [0, 6.2] },
  { name: "thal", kind: "nominal", role: "condition", description: "",
    labels: ["3", "6", "7"] },
  { name: "sex", kind: "binary", role: "condition", description: "",
    labels: ["0", "1"] },
];


test("blank fields travel as null", () => {
  const { attributes, issues } = toWire({ age: "63", thal: "" }, SCHEMA);
  assert.deepEqual(issues, []);
  assert.deepEqual(attributes,
                   { age: 63, oldpeak: null, thal: null, sex: null });
});

test("numeric strings convert, labels pass through", () => {
  const { attributes } = toWire({ age: "63.5", thal: "7", sex: "1" }, SCHEMA);
  assert.equal(attributes.age, 63.5);
  assert.equal(attributes.thal, "7");
  assert.equal(attributes.sex, "1");
});

test("out-of-range numerics are flagged before any request", () => {
  const issues = toWire({ age: "300" }, SCHEMA).issues;
  assert.equal(issues.length, 1);
  assert.equal(issues[0].field, "age");
  assert.match(issues[0].message, /range/);
});

test("non-numeric text in a numeric field is flagged", () => {
  assert.match(validateField(SCHEMA[0], "old") ?? "", /number/);
});

test("labels outside the declared set are flagged", () => {
  assert.match(validateField(SCHEMA[2], "9") ?? "", /one of/);
  assert.equal(validateField(SCHEMA[2], "7"), null);
});

test("allBlank gates the submit button", () => {
  assert.ok(allBlank({}, SCHEMA));
  assert.ok(allBlank({ age: "  " }, SCHEMA));
  assert.ok(!allBlank({ age: "63" }, SCHEMA));
});

test("isBlank treats whitespace as blank", () => {
  assert.ok(isBlank(undefined));
  assert.ok(isBlank("   "));
  assert.ok(!isBlank("0"));
});

test("adopting a sweep value equals typing it directly", () => {
  const typed = toWire({ age: "63", oldpeak: "2.5" }, SCHEMA);
  const adopted = toWire(adoptValue({ age: "63" }, "oldpeak", 2.5), SCHEMA);
  assert.deepEqual(adopted.attributes, typed.attributes);
  assert.deepEqual(adopted.issues, []);
});

test("adopting trims float noise the same way the form does", () => {
  const values = adoptValue({}, "oldpeak", 1.2000000000000002);
  assert.equal(values.oldpeak, "1.2");
  assert.equal(fmt(50), "50");
});

test("sequencer keeps only the newest request", () => {
  const seq = new RequestSequencer();
  const first = seq.begin();
  const second = seq.begin();
  assert.ok(!seq.isCurrent(first));
  assert.ok(seq.isCurrent(second));
  const third = seq.begin();
  assert.ok(!seq.isCurrent(second));
  assert.ok(seq.isCurrent(third));
});
