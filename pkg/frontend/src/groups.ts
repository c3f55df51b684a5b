// Clinical grouping of the standard inputs for the entry form. Attributes a
// schema adds beyond these fall into a trailing group.

import type { SchemaAttribute } from "./api.js";

export const GROUPS: [string, string[]][] = [
  ["Physical examination", ["age", "sex", "cp", "trestbps"]],
  ["Diagnostic laboratory", ["chol", "fbs", "restecg"]],
  ["Stress & imaging tests", ["thalach", "exang", "oldpeak", "slope", "ca", "thal"]],
];

export function groupAttributes(schema: SchemaAttribute[]): [string, SchemaAttribute[]][] {
  const byName = new Map(schema.map((a) => [a.name, a]));
  const used = new Set<string>();
  const out: [string, SchemaAttribute[]][] = [];
  for (const [title, names] of GROUPS) {
    const members = names.flatMap((n) => {
      const attr = byName.get(n);
      if (!attr) {
        return [];
      }
      used.add(n);
      return [attr];
    });
    if (members.length > 0) {
      out.push([title, members]);
    }
  }
  const rest = schema.filter((a) => !used.has(a.name));
  if (rest.length > 0) {
    out.push(["Other attributes", rest]);
  }
  return out;
}
