/**
 * Live convergence chart: the solver's strength trace against the target,
 * rendered as a small self-contained SVG string after each progress event.
 */

import { TracePoint } from "./state.js";

const WIDTH = 420;
const HEIGHT = 160;
const PAD = 24;

export function renderTraceChart(trace: TracePoint[], targetText: string | null): string {
  if (trace.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}"></svg>`;
  }
  const maxIteration = trace[trace.length - 1]!.iteration;
  const x = (iteration: number) =>
    PAD + (WIDTH - 2 * PAD) * (maxIteration <= 1 ? 1 : (iteration - 1) / (maxIteration - 1));
  const y = (strength: number) => HEIGHT - PAD - (HEIGHT - 2 * PAD) * strength;

  const points = trace.map((p) => `${x(p.iteration).toFixed(1)},${y(p.strength.value).toFixed(1)}`);
  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}">`);
  parts.push(`<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="#fafafa" stroke="#ddd"/>`);
  const target = targetText === null ? NaN : Number(targetText);
  if (Number.isFinite(target)) {
    const ty = y(target);
    parts.push(
      `<line class="target" x1="${PAD}" y1="${ty.toFixed(1)}" x2="${WIDTH - PAD}" y2="${ty.toFixed(1)}" ` +
        `stroke="#888" stroke-dasharray="4 3"/>`,
    );
  }
  parts.push(
    `<polyline class="trace" fill="none" stroke="#3574b2" stroke-width="2" points="${points.join(" ")}"/>`,
  );
  const last = trace[trace.length - 1]!;
  parts.push(
    `<text class="trace-label" x="${WIDTH - PAD}" y="${PAD}" text-anchor="end">` +
      `iteration ${last.iteration}: ${last.strength.text}</text>`,
  );
  parts.push("</svg>");
  return parts.join("");
}
