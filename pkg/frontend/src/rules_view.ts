// Fired-rule inspection: rule text joined with server activations,
// strongest first, with proportional activation bars.

import type { Activation, RuleInfo } from "./api.js";

export interface FiredRuleRow {
  ruleId: number;
  text: string;
  support: number;
  weight: number;
  activation: number;
  consequent: string;
}

export function firedRows(rules: RuleInfo[], activations: Activation[]): FiredRuleRow[] {
  const byId = new Map(rules.map((r) => [r.id, r]));
  const rows: FiredRuleRow[] = [];
  for (const act of activations) {
    if (act.activation <= 0) {
      continue;
    }
    const rule = byId.get(act.rule_id);
    rows.push({
      ruleId: act.rule_id,
      text: rule ? rule.text : `rule ${act.rule_id}`,
      support: rule ? rule.support : 0,
      weight: act.weight,
      activation: act.activation,
      consequent: rule ? rule.consequent : "",
    });
  }
  rows.sort((a, b) => b.activation - a.activation || a.ruleId - b.ruleId);
  return rows;
}

function escapeHtml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderRuleList(rules: RuleInfo[], activations: Activation[]): string {
  const rows = firedRows(rules, activations);
  if (rows.length === 0) {
    return `<p class="no-rules">No rule fired for this input.</p>`;
  }
  const silent = activations.length - rows.length;
  const items = rows.map((row) => {
    const width = Math.round(row.activation * 100);
    const side = row.consequent === "CAD-YES" ? "bar-yes" : "bar-no";
    return `<li class="rule-row">
      <div class="rule-meta">
        <span class="rule-id">#${row.ruleId}</span>
        <span class="rule-activation">${row.activation.toFixed(3)}</span>
        <span class="rule-weight">w=${row.weight.toFixed(3)}</span>
        <span class="rule-support">support ${row.support}</span>
      </div>
      <div class="rule-bar-track"><div class="rule-bar ${side}" style="width:${width}%"></div></div>
      <code class="rule-text">${escapeHtml(row.text)}</code>
    </li>`;
  });
  const summary = silent > 0
    ? `<p class="silent-rules">${silent} rule${silent === 1 ? "" : "s"} did not fire.</p>`
    : "";
  return `<ul class="rule-list">${items.join("")}</ul>${summary}`;
}
