/** Macro view: zoomable force-laid-out graph of fields.
 *
 * Node size comes from the precomputed logarithmic display size, fill
 * from the activity ramp, edge thickness from the shared-term weight.
 * The edge tooltip lists the exact shared terms recomputed from the
 * field payloads; a disagreement with the server weight is flagged
 * loudly instead of hidden.  Clicking a node opens its meso view.
 */

import { clear, el, svgEl } from "./dom.js";
import { forceLayout } from "./layout.js";
import { edgeTooltip } from "./models.js";
import { edgeWidth, formatValue, growthColor, macroRadius } from "./scales.js";
import type { FieldsPayload, MapPayload } from "./types.js";

const WIDTH = 900;
const HEIGHT = 620;

export function renderMacro(
  container: HTMLElement,
  map: MapPayload,
  fields: FieldsPayload,
  sessionSeed: number,
  onOpenField: (fieldId: number) => void,
): void {
  clear(container);
  if (map.nodes.length === 0) {
    container.appendChild(
      el(
        "p",
        "empty",
        "no fields within the size filter; widen the filter or lower the threshold",
      ),
    );
    return;
  }

  const svg = svgEl("svg", { viewBox: `0 0 ${WIDTH} ${HEIGHT}`, class: "macro-plot" });
  let viewBox = { x: 0, y: 0, w: WIDTH, h: HEIGHT };
  const applyViewBox = () =>
    svg.setAttribute("viewBox", `${viewBox.x} ${viewBox.y} ${viewBox.w} ${viewBox.h}`);

  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    const factor = event.deltaY > 0 ? 1.15 : 1 / 1.15;
    const cx = viewBox.x + viewBox.w / 2;
    const cy = viewBox.y + viewBox.h / 2;
    viewBox = {
      x: cx - (viewBox.w * factor) / 2,
      y: cy - (viewBox.h * factor) / 2,
      w: viewBox.w * factor,
      h: viewBox.h * factor,
    };
    applyViewBox();
  });
  let dragging: { x: number; y: number } | null = null;
  svg.addEventListener("mousedown", (event) => {
    dragging = { x: event.clientX, y: event.clientY };
  });
  svg.addEventListener("mousemove", (event) => {
    if (!dragging) return;
    const scale = viewBox.w / WIDTH;
    viewBox.x -= (event.clientX - dragging.x) * scale;
    viewBox.y -= (event.clientY - dragging.y) * scale;
    dragging = { x: event.clientX, y: event.clientY };
    applyViewBox();
  });
  svg.addEventListener("mouseup", () => (dragging = null));
  svg.addEventListener("mouseleave", () => (dragging = null));

  const positions = forceLayout(
    map.nodes.map((n) => n.field_id),
    map.edges.map((e) => ({ a: e.field_a, b: e.field_b, weight: e.weight })),
    WIDTH,
    HEIGHT,
    sessionSeed,
  );

  for (const edge of map.edges) {
    const a = positions.get(edge.field_a);
    const b = positions.get(edge.field_b);
    if (!a || !b) continue;
    const line = svgEl("line", {
      x1: a.x,
      y1: a.y,
      x2: b.x,
      y2: b.y,
      class: "macro-edge",
      "stroke-width": edgeWidth(edge.weight, map),
    });
    const tooltip = edgeTooltip(edge, fields);
    const title = svgEl("title");
    title.textContent =
      `${tooltip.weight} shared term${tooltip.weight === 1 ? "" : "s"}: ` +
      tooltip.sharedTerms.join(", ") +
      (tooltip.consistent ? "" : "  (MISMATCH with server weight!)");
    line.appendChild(title);
    svg.appendChild(line);
  }

  for (const node of map.nodes) {
    const position = positions.get(node.field_id);
    if (!position) continue;
    const group = svgEl("g", { class: "macro-node" });
    const circle = svgEl("circle", {
      cx: position.x,
      cy: position.y,
      r: macroRadius(node.size_display, map),
      fill: growthColor(node.activity),
    });
    const title = svgEl("title");
    title.textContent =
      `${node.label} (${node.n_terms} terms)\n` +
      `activity=${node.activity === null ? "undefined" : formatValue(node.activity)}` +
      (node.activity_excluded ? ` (${node.activity_excluded} excluded)` : "") +
      `\nsize=${formatValue(node.size_display)}`;
    circle.appendChild(title);
    group.appendChild(circle);
    const text = svgEl("text", {
      x: position.x,
      y: position.y - macroRadius(node.size_display, map) - 4,
      class: "macro-label",
      "text-anchor": "middle",
    });
    text.textContent = node.label;
    group.appendChild(text);
    group.addEventListener("click", () => onOpenField(node.field_id));
    svg.appendChild(group);
  }
  container.appendChild(svg);
}
