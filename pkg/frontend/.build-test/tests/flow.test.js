// View-model level walk of the interaction loop against a scripted service:
// the gauge and rule list carry server numbers verbatim, sweeps over unused
// attributes stay flat, and adopting a sweep point reproduces direct entry.
import assert from "node:assert/strict";
import { test } from "node:test";
import { Client } from "../src/api.js";
import { plotPoints, sweepChartSvg } from "../src/chart.js";
import { gaugeSvg } from "../src/gauge.js";
import { renderRuleList } from "../src/rules_view.js";
import { adoptValue, toWire } from "../src/state.js";
const SCHEMA = [
    { name: "oldpeak", kind: "numeric", role: "condition", description: "",
        range: [0, 6.2] },
    { name: "chol", kind: "numeric", role: "condition", description: "",
        range: [126, 564] },
    { name: "thal", kind: "nominal", role: "condition", description: "",
        labels: ["3", "6", "7"] },
];
const RULES = [{
        id: 0, text: "oldpeak([3,*)) AND thal(7) => num(1)", support: 4,
        weight: 1.0, consequent: "CAD-YES",
        terms: [{ attribute: "oldpeak", labels: ["HIGH"] },
            { attribute: "thal", labels: ["7"] }],
    }];
function scriptedFetch(script) {
    const sent = [];
    const fetchFn = async (url, init) => {
        const body = init?.body ? JSON.parse(String(init.body)) : undefined;
        sent.push({ url, body });
        const responder = script[url];
        if (!responder) {
            throw new Error(`no script for ${url}`);
        }
        return new Response(JSON.stringify(responder(body)), {
            status: 200, headers: { "content-type": "application/json" },
        });
    };
    return { sent, fetchFn };
}
test("diagnose round-trip renders the server's numbers verbatim", async () => {
    const { fetchFn } = scriptedFetch({
        "/v1/diagnose": () => ({
            percentage: 73.693006993007, label: "CAD-YES", uncovered: false,
            activations: [{ rule_id: 0, activation: 1.0, weight: 1.0 }],
        }),
    });
    const client = new Client(fetchFn);
    const wire = toWire({ oldpeak: "4", thal: "7" }, SCHEMA);
    assert.deepEqual(wire.issues, []);
    const response = await client.diagnose(wire.attributes);
    const gauge = gaugeSvg(response.percentage, 50);
    assert.match(gauge, />73\.7%</); // rounded for display only
    assert.match(gauge, /gauge-fill-high/);
    const ruleHtml = renderRuleList(RULES, response.activations);
    assert.match(ruleHtml, /#0/);
    assert.match(ruleHtml, /1\.000/);
    assert.match(ruleHtml, /width:100%/);
});
test("a sweep over an attribute no rule uses renders a flat line", async () => {
    const flat = (body) => {
        const { from, to, steps } = body.sweep;
        return Array.from({ length: steps }, (_, i) => ({
            value: from + (i * (to - from)) / (steps - 1),
            percentage: 73.69, // chol appears in no rule: constant response
            label: "CAD-YES",
        }));
    };
    const { fetchFn } = scriptedFetch({ "/v1/whatif": flat });
    const client = new Client(fetchFn);
    const points = await client.whatif({ oldpeak: 4, thal: "7", chol: null }, { attribute: "chol", from: 126, to: 564,
        steps: 50 });
    const ys = plotPoints(points).map((p) => p.y);
    assert.equal(ys.length, 50);
    assert.ok(ys.every((y) => y !== null && Math.abs(y - ys[0]) < 1e-9));
    const svg = sweepChartSvg(points, 50, null);
    assert.equal((svg.match(/<polyline/g) ?? []).length, 1);
});
test("adopting a sweep point re-diagnoses exactly like direct entry", async () => {
    const { sent, fetchFn } = scriptedFetch({
        "/v1/diagnose": () => ({
            percentage: 60.0, label: "CAD-YES", uncovered: false, activations: [],
        }),
    });
    const client = new Client(fetchFn);
    const base = { thal: "7" };
    const sweepValue = 3.479999999999999; // float noise from a linspace point
    const adopted = toWire(adoptValue({ ...base }, "oldpeak", sweepValue), SCHEMA);
    await client.diagnose(adopted.attributes);
    const direct = toWire({ ...base, oldpeak: "3.48" }, SCHEMA);
    await client.diagnose(direct.attributes);
    assert.deepEqual(sent[0].body, sent[1].body);
});
