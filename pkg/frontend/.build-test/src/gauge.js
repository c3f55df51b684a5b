// Percent-blocking gauge: a half-circle arc from 0 to 100 with the decision
// threshold marked. Pure SVG string construction.
const W = 280;
const H = 170;
const CX = W / 2;
const CY = 150;
const R = 110;
function polar(fraction) {
    // 0 -> left horizon, 1 -> right horizon
    const angle = Math.PI * (1 - fraction);
    return [CX + R * Math.cos(angle), CY - R * Math.sin(angle)];
}
function arcPath(from, to) {
    const [x0, y0] = polar(from);
    const [x1, y1] = polar(to);
    const large = to - from > 0.5 ? 1 : 0;
    return `M ${x0.toFixed(2)} ${y0.toFixed(2)} A ${R} ${R} 0 ${large} 1 ${x1.toFixed(2)} ${y1.toFixed(2)}`;
}
export function gaugeSvg(percentage, threshold) {
    const parts = [];
    parts.push(`<svg viewBox="0 0 ${W} ${H}" class="gauge" role="img" ` +
        `aria-label="percent blocking gauge">`);
    parts.push(`<path d="${arcPath(0, 1)}" class="gauge-track"/>`);
    if (percentage !== null) {
        const frac = Math.min(Math.max(percentage / 100, 0), 1);
        const cls = percentage > threshold ? "gauge-fill-high" : "gauge-fill-low";
        if (frac > 0) {
            parts.push(`<path d="${arcPath(0, frac)}" class="gauge-fill ${cls}"/>`);
        }
    }
    const [tx0, ty0] = polar(threshold / 100);
    const tickAngle = Math.PI * (1 - threshold / 100);
    const tx1 = CX + (R + 14) * Math.cos(tickAngle);
    const ty1 = CY - (R + 14) * Math.sin(tickAngle);
    parts.push(`<line x1="${tx0.toFixed(2)}" y1="${ty0.toFixed(2)}" ` +
        `x2="${tx1.toFixed(2)}" y2="${ty1.toFixed(2)}" class="gauge-threshold"/>`);
    parts.push(`<text x="${tx1.toFixed(2)}" y="${(ty1 - 6).toFixed(2)}" ` +
        `class="gauge-threshold-label" text-anchor="middle">${threshold}%</text>`);
    const reading = percentage === null ? "&#8212;" : `${percentage.toFixed(1)}%`;
    parts.push(`<text x="${CX}" y="${CY - 24}" class="gauge-reading" ` +
        `text-anchor="middle">${reading}</text>`);
    parts.push(`<text x="${CX - R}" y="${CY + 16}" class="gauge-end" text-anchor="middle">0</text>`);
    parts.push(`<text x="${CX + R}" y="${CY + 16}" class="gauge-end" text-anchor="middle">100</text>`);
    parts.push("</svg>");
    return parts.join("");
}
