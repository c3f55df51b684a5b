// Form state and validation: raw input strings on one side, wire values on
// the other. Blank means "unknown" and travels as null.

import type { SchemaAttribute, WireAttributes } from "./api.js";

export type FormValues = Record<string, string>;

export interface FieldIssue {
  field: string;
  message: string;
}

export function isBlank(raw: string | undefined): boolean {
  return raw === undefined || raw.trim() === "";
}

export function allBlank(values: FormValues, schema: SchemaAttribute[]): boolean {
  return schema.every((attr) => isBlank(values[attr.name]));
}

/** Pre-submit validation for a single field; null means fine. */
export function validateField(attr: SchemaAttribute, raw: string): string | null {
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

export interface WireResult {
  attributes: WireAttributes;
  issues: FieldIssue[];
}

/** Convert the form to a request body, collecting per-field problems. */
export function toWire(values: FormValues, schema: SchemaAttribute[]): WireResult {
  const attributes: WireAttributes = {};
  const issues: FieldIssue[] = [];
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
export function adoptValue(values: FormValues, attribute: string, value: number): FormValues {
  return { ...values, [attribute]: fmt(value) };
}

export function fmt(value: number): string {
  const rounded = Math.round(value * 1000) / 1000;
  return String(rounded);
}

/**
 * Discards stale responses: every view keeps one sequencer, begin() before a
 * request and apply results only while the token is still current.
 */
export class RequestSequencer {
  private counter = 0;

  begin(): number {
    this.counter += 1;
    return this.counter;
  }

  isCurrent(token: number): boolean {
    return token === this.counter;
  }
}
