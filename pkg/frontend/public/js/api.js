// Typed client for the /v1 diagnosis service. All numbers shown anywhere in
// the UI come from these responses; the client never computes medicine.
/** Field-addressable request failure; status 0 means the network died. */
export class ApiError extends Error {
    constructor(status, field, message) {
        super(message);
        this.status = status;
        this.field = field;
        this.name = "ApiError";
    }
    get isNetwork() {
        return this.status === 0;
    }
}
async function toApiError(resp) {
    let field = null;
    let message = `request failed with status ${resp.status}`;
    try {
        const body = await resp.json();
        const detail = body?.detail;
        if (Array.isArray(detail) && detail.length > 0) {
            field = typeof detail[0].field === "string" ? detail[0].field : null;
            message = String(detail[0].message ?? message);
        }
        else if (typeof detail === "string") {
            message = detail;
        }
    }
    catch {
        // non-JSON error body; keep the status message
    }
    return new ApiError(resp.status, field, message);
}
export class Client {
    constructor(fetchFn = (...args) => fetch(...args), base = "") {
        this.fetchFn = fetchFn;
        this.base = base;
    }
    async request(path, init) {
        let resp;
        try {
            resp = await this.fetchFn(this.base + path, init);
        }
        catch (err) {
            throw new ApiError(0, null, `network failure: ${String(err)}`);
        }
        if (!resp.ok) {
            throw await toApiError(resp);
        }
        return (await resp.json());
    }
    getSchema() {
        return this.request("/v1/schema");
    }
    async getRules() {
        const body = await this.request("/v1/rules");
        return body.rules;
    }
    diagnose(attributes) {
        return this.request("/v1/diagnose", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ attributes }),
        });
    }
    whatif(attributes, sweep) {
        return this.request("/v1/whatif", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ attributes, sweep }),
        });
    }
}
