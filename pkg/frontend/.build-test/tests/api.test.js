import assert from "node:assert/strict";
import { test } from "node:test";
import { ApiError, Client } from "../src/api.js";
function jsonResponse(body, status = 200) {
    return new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
    });
}
function capture(responses) {
    const calls = [];
    const fetchFn = async (url, init) => {
        calls.push({ url, init });
        const next = responses.shift();
        if (!next) {
            throw new Error("no scripted response left");
        }
        return next;
    };
    return { calls, fetchFn };
}
test("getSchema hits /v1/schema", async () => {
    const { calls, fetchFn } = capture([jsonResponse({
            attributes: [], decision: "num", threshold: 50, fingerprint: "x",
        })]);
    const client = new Client(fetchFn);
    const schema = await client.getSchema();
    assert.equal(calls[0].url, "/v1/schema");
    assert.equal(schema.threshold, 50);
});
test("diagnose posts the attribute map unchanged", async () => {
    const { calls, fetchFn } = capture([jsonResponse({
            percentage: 71.4, label: "CAD-YES", uncovered: false, activations: [],
        })]);
    const client = new Client(fetchFn);
    const attributes = { age: 63, thal: "7", ca: null };
    const out = await client.diagnose(attributes);
    assert.equal(calls[0].url, "/v1/diagnose");
    assert.equal(calls[0].init?.method, "POST");
    assert.deepEqual(JSON.parse(String(calls[0].init?.body)), { attributes });
    assert.equal(out.percentage, 71.4);
});
test("whatif posts attributes plus sweep and returns the point array", async () => {
    const points = [{ value: 0, percentage: 40.0, label: "CAD-NO" }];
    const { calls, fetchFn } = capture([jsonResponse(points)]);
    const client = new Client(fetchFn);
    const sweep = { attribute: "oldpeak", from: 0, to: 4, steps: 50 };
    const out = await client.whatif({ thal: "7" }, sweep);
    assert.deepEqual(JSON.parse(String(calls[0].init?.body)), { attributes: { thal: "7" }, sweep });
    assert.deepEqual(out, points);
});
test("field-level 400 becomes an ApiError with the field", async () => {
    const { fetchFn } = capture([jsonResponse({
            detail: [{ field: "attributes.thal", message: "label '9' not one of ['3','6','7']" }],
        }, 400)]);
    const client = new Client(fetchFn);
    await assert.rejects(client.diagnose({ thal: "9" }), (err) => {
        assert.ok(err instanceof ApiError);
        assert.equal(err.status, 400);
        assert.equal(err.field, "attributes.thal");
        assert.match(err.message, /label/);
        return true;
    });
});
test("a dead socket becomes a retryable network ApiError", async () => {
    const client = new Client(async () => {
        throw new TypeError("fetch failed");
    });
    await assert.rejects(client.getRules(), (err) => {
        assert.ok(err instanceof ApiError);
        assert.equal(err.status, 0);
        assert.ok(err.isNetwork);
        return true;
    });
});
test("non-JSON error bodies still raise a status error", async () => {
    const { fetchFn } = capture([new Response("boom", { status: 500 })]);
    const client = new Client(fetchFn);
    await assert.rejects(client.getSchema(), (err) => {
        assert.ok(err instanceof ApiError);
        assert.equal(err.status, 500);
        return true;
    });
});
