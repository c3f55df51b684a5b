import assert from "node:assert/strict";
import { test } from "node:test";
import { groupAttributes } from "../src/groups.js";
function attr(name) {
    return { name, kind: "numeric", role: "condition", description: "" };
}
const STANDARD = ["age", "sex", "cp", "trestbps", "chol", "fbs", "restecg",
    "thalach", "exang", "oldpeak", "slope", "ca", "thal"];
test("standard schema groups into the three clinical sections", () => {
    const groups = groupAttributes(STANDARD.map(attr));
    assert.deepEqual(groups.map(([title]) => title), [
        "Physical examination", "Diagnostic laboratory", "Stress & imaging tests"
    ]);
    const flat = groups.flatMap(([, members]) => members.map((m) => m.name));
    assert.deepEqual([...flat].sort(), [...STANDARD].sort());
});
test("unknown attributes land in a trailing group", () => {
    const groups = groupAttributes([attr("age"), attr("mystery")]);
    const last = groups[groups.length - 1];
    assert.equal(last[0], "Other attributes");
    assert.deepEqual(last[1].map((m) => m.name), ["mystery"]);
});
test("a fully custom schema yields only the trailing group", () => {
    const groups = groupAttributes([attr("a"), attr("b")]);
    assert.equal(groups.length, 1);
    assert.equal(groups[0][0], "Other attributes");
});
