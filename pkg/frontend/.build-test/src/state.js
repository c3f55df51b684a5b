// Form state and validation: raw input strings on one side, wire values on
// the other. Blank means "unknown" and travels as null.
export function isBlank(raw) {
    return raw === undefined || raw.trim() === "";
}
export function allBlank(values, schema) {
    return schema.every((attr) => isBlank(values[attr.name]));
}
/** Pre-submit validation for a single field; null means fine. */
export function validateField(attr, raw) {
    if (isBlank(raw)) {
        return null;
    }
    if (attr.kind === "numeric") {
        const value = Number(raw);
        if (!Number.isFinite(value)) {
            return "expected a number";
        }
        if (attr.range) {
            const [lo, hi] = attr.range;
            if (value < lo || value > hi) {
                return `outside the observed range ${fmt(lo)} to ${fmt(hi)}`;
            }
        }
        return null;
    }
    const labels = attr.labels ?? [];
    if (!labels.includes(raw.trim())) {
        return `expected one of: ${labels.join(", ")}`;
    }
    return null;
}
/** Convert the form to a request body, collecting per-field problems. */
export function toWire(values, schema) {
    const attributes = {};
    const issues = [];
    for (const attr of schema) {
        const raw = values[attr.name] ?? "";
        if (isBlank(raw)) {
            attributes[attr.name] = null;
            continue;
        }
        const problem = validateField(attr, raw);
        if (problem) {
            issues.push({ field: attr.name, message: problem });
            continue;
        }
        attributes[attr.name] = attr.kind === "numeric" ? Number(raw) : raw.trim();
    }
    return { attributes, issues };
}
/** Writing a sweep value back into the form, exactly as direct entry would. */
export function adoptValue(values, attribute, value) {
    return { ...values, [attribute]: fmt(value) };
}
export function fmt(value) {
    const rounded = Math.round(value * 1000) / 1000;
    return String(rounded);
}
/**
 * Discards stale responses: every view keeps one sequencer, begin() before a
 * request and apply results only while the token is still current.
 */
export class RequestSequencer {
    constructor() {
        this.counter = 0;
    }
    begin() {
        this.counter += 1;
        return this.counter;
    }
    isCurrent(token) {
        return token === this.counter;
    }
}
