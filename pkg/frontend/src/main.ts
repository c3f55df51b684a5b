// DOM wiring for the single-page what-if interface. All scoring comes from
// the service; this file only moves values between form, requests and SVG.

import { ApiError, Client } from "./api.js";
import type { DiagnoseResponse, RuleInfo, SchemaAttribute, SchemaResponse,
              SweepPoint } from "./api.js";
import { nearestIndex, plotPoints, sweepChartSvg } from "./chart.js";
import { gaugeSvg } from "./gauge.js";
import { groupAttributes } from "./groups.js";
import { renderRuleList } from "./rules_view.js";
import { RequestSequencer, adoptValue, allBlank, fmt, toWire } from "./state.js";
import type { FormValues } from "./state.js";

const client = new Client();
const diagnoseSeq = new RequestSequencer();
const whatifSeq = new RequestSequencer();

let schema: SchemaResponse;
let rules: RuleInfo[] = [];
let values: FormValues = {};
let lastDiagnosis: DiagnoseResponse | null = null;
let lastSweep: { attribute: string; points: SweepPoint[] } | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function fieldInput(attr: SchemaAttribute): string {
  const id = `field-${attr.name}`;
  if (attr.kind === "numeric") {
    const range = attr.range;
    const hint = range ? ` placeholder="${fmt(range[0])} to ${fmt(range[1])}"` : "";
    return `<input type="number" step="any" id="${id}" name="${attr.name}"${hint}>`;
  }
  const labels = attr.labels ?? [];
  const options = [`<option value="">unknown</option>`]
    .concat(labels.map((l) => `<option value="${l}">${l}</option>`));
  return `<select id="${id}" name="${attr.name}">${options.join("")}</select>`;
}

function buildForm(): void {
  const container = el<HTMLDivElement>("form-groups");
  const sections = groupAttributes(schema.attributes).map(([title, members]) => {
    const fields = members.map((attr) => `
      <label class="field" for="field-${attr.name}" title="${attr.description}">
        <span class="field-name">${attr.name}</span>
        ${fieldInput(attr)}
        <span class="field-error" id="error-${attr.name}"></span>
      </label>`);
    return `<fieldset><legend>${title}</legend>${fields.join("")}</fieldset>`;
  });
  container.innerHTML = sections.join("");
  for (const attr of schema.attributes) {
    const input = el<HTMLInputElement | HTMLSelectElement>(`field-${attr.name}`);
    input.addEventListener("input", () => {
      values[attr.name] = input.value;
      clearFieldError(attr.name);
      updateSubmitState();
    });
  }
  const sweepSelect = el<HTMLSelectElement>("sweep-attribute");
  const numeric = schema.attributes.filter((a) => a.kind === "numeric");
  sweepSelect.innerHTML = numeric
    .map((a) => `<option value="${a.name}">${a.name}</option>`).join("");
}

function updateSubmitState(): void {
  el<HTMLButtonElement>("diagnose-btn").disabled = allBlank(values, schema.attributes);
}

function clearFieldError(name: string): void {
  const node = document.getElementById(`error-${name}`);
  if (node) {
    node.textContent = "";
  }
}

function showFieldError(field: string, message: string): void {
  const name = field.startsWith("attributes.") ? field.slice("attributes.".length) : field;
  const node = document.getElementById(`error-${name}`);
  if (node) {
    node.textContent = message;
  } else {
    showBanner(`${field}: ${message}`, false);
  }
}

function showBanner(message: string, retryable: boolean): void {
  const banner = el<HTMLDivElement>("banner");
  banner.classList.remove("hidden");
  banner.innerHTML = retryable
    ? `<span>${message}</span> <button id="retry-btn" type="button">Retry</button>`
    : `<span>${message}</span>`;
  if (retryable) {
    el<HTMLButtonElement>("retry-btn").addEventListener("click", () => {
      hideBanner();
      void runDiagnose();
    });
  }
}

function hideBanner(): void {
  const banner = el<HTMLDivElement>("banner");
  banner.classList.add("hidden");
  banner.innerHTML = "";
}

function renderDiagnosis(response: DiagnoseResponse): void {
  lastDiagnosis = response;
  el<HTMLDivElement>("gauge-box").innerHTML =
    gaugeSvg(response.percentage, schema.threshold);
  const label = el<HTMLDivElement>("label-box");
  label.textContent = response.label;
  label.className = `label-box label-${response.label.toLowerCase()}`;
  const unknowns = schema.attributes
    .filter((a) => !(values[a.name] ?? "").trim())
    .map((a) => a.name);
  el<HTMLDivElement>("unknown-box").textContent = unknowns.length > 0
    ? `unknown inputs: ${unknowns.join(", ")}` : "";
  el<HTMLDivElement>("rules-box").innerHTML =
    renderRuleList(rules, response.activations);
  el<HTMLButtonElement>("sweep-btn").disabled = false;
}

async function runDiagnose(): Promise<void> {
  const wire = toWire(values, schema.attributes);
  schema.attributes.forEach((a) => clearFieldError(a.name));
  if (wire.issues.length > 0) {
    for (const issue of wire.issues) {
      showFieldError(issue.field, issue.message);
    }
    return;
  }
  hideBanner();
  const token = diagnoseSeq.begin();
  try {
    const response = await client.diagnose(wire.attributes);
    if (!diagnoseSeq.isCurrent(token)) {
      return; // a newer request superseded this one
    }
    renderDiagnosis(response);
    if (lastSweep) {
      await runSweep(lastSweep.attribute);
    }
  } catch (err) {
    if (!diagnoseSeq.isCurrent(token)) {
      return;
    }
    if (err instanceof ApiError && err.field) {
      showFieldError(err.field, err.message);
    } else if (err instanceof ApiError && err.isNetwork) {
      showBanner("The service is unreachable; your inputs are preserved.", true);
    } else {
      showBanner(err instanceof Error ? err.message : String(err), false);
    }
  }
}

async function runSweep(attribute: string): Promise<void> {
  const attr = schema.attributes.find((a) => a.name === attribute);
  if (!attr || attr.kind !== "numeric" || !lastDiagnosis) {
    return;
  }
  const range = attr.range ?? [0, 1];
  const wire = toWire(values, schema.attributes);
  if (wire.issues.length > 0) {
    return;
  }
  const token = whatifSeq.begin();
  try {
    const points = await client.whatif(wire.attributes, {
      attribute, from: range[0], to: range[1], steps: 50,
    });
    if (!whatifSeq.isCurrent(token)) {
      return;
    }
    lastSweep = { attribute, points };
    renderSweep();
  } catch (err) {
    if (!whatifSeq.isCurrent(token)) {
      return;
    }
    showBanner(err instanceof Error ? err.message : String(err),
               err instanceof ApiError && err.isNetwork);
  }
}

function renderSweep(): void {
  if (!lastSweep) {
    return;
  }
  const { attribute, points } = lastSweep;
  const current = (values[attribute] ?? "").trim();
  const box = el<HTMLDivElement>("sweep-box");
  box.innerHTML = sweepChartSvg(points, schema.threshold,
                                current === "" ? null : Number(current));
  el<HTMLDivElement>("sweep-caption").textContent =
    `${attribute}: click a point to adopt that value and re-diagnose`;
  const svg = box.querySelector("svg");
  if (svg) {
    svg.addEventListener("click", (event) => {
      const rect = svg.getBoundingClientRect();
      const plotted = plotPoints(points);
      if (plotted.length === 0) {
        return;
      }
      const scaleX = 520 / rect.width;
      const x = (event.clientX - rect.left) * scaleX;
      const idx = nearestIndex(plotted, x);
      adoptSweepPoint(attribute, plotted[idx].value);
    });
  }
}

function adoptSweepPoint(attribute: string, value: number): void {
  values = adoptValue(values, attribute, value);
  const input = el<HTMLInputElement>(`field-${attribute}`);
  input.value = values[attribute];
  updateSubmitState();
  void runDiagnose(); // the answer feeds the next move
}

async function init(): Promise<void> {
  try {
    schema = await client.getSchema();
    rules = await client.getRules();
  } catch (err) {
    showBanner("Could not load the rule base; is the service running?", false);
    throw err;
  }
  buildForm();
  updateSubmitState();
  el<HTMLFormElement>("patient-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void runDiagnose();
  });
  el<HTMLButtonElement>("sweep-btn").addEventListener("click", () => {
    const attribute = el<HTMLSelectElement>("sweep-attribute").value;
    void runSweep(attribute);
  });
}

if (typeof document !== "undefined" && document.getElementById("patient-form")) {
  void init();
}
