/** Meso view: one scatter plot per field, each term at (i_s, i_g).
 *
 * Orientation follows the embedding contract: i_s decreases from left
 * to right, i_g from top to bottom.  Sphere radius tracks the
 * intra-field co-occurrence weight and fill color the growth ramp;
 * undefined growth renders neutral with a dashed outline.  Hovering a
 * sphere shows the exact payload values.
 */

import { clear, el, svgEl } from "./dom.js";
import { formatValue, growthColor, mesoRadius, mesoX, mesoY } from "./scales.js";
import type { FieldPayload } from "./types.js";

const WIDTH = 460;
const HEIGHT = 380;

export function renderMeso(
  container: HTMLElement,
  fields: FieldPayload[],
  highlightId?: number,
): void {
  clear(container);
  if (fields.length === 0) {
    container.appendChild(
      el("p", "empty", "no fields at these parameters; lower the threshold or k"),
    );
    return;
  }
  for (const field of fields) {
    container.appendChild(renderField(field, field.id === highlightId));
  }
}

function renderField(field: FieldPayload, highlight: boolean): HTMLElement {
  const box = el("section", highlight ? "field highlight" : "field");
  const caption =
    `field ${field.id} - generic: ${field.label_generic}, ` +
    `specific: ${field.label_specific} (${field.members.length} terms)`;
  box.appendChild(el("h3", "panel-title", caption));

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "meso-plot",
  });
  svg.appendChild(
    svgEl("rect", { x: 0, y: 0, width: WIDTH, height: HEIGHT, class: "plot-bg" }),
  );
  const xLabel = svgEl("text", { x: WIDTH - 8, y: HEIGHT - 8, class: "axis-label", "text-anchor": "end" });
  xLabel.textContent = "i_s decreasing →";
  svg.appendChild(xLabel);
  const yLabel = svgEl("text", { x: 8, y: HEIGHT - 8, class: "axis-label" });
  yLabel.textContent = "↓ i_g decreasing";
  svg.appendChild(yLabel);

  for (const member of field.members) {
    const cx = mesoX(member.i_s, WIDTH);
    const cy = mesoY(member.i_g, HEIGHT);
    const circle = svgEl("circle", {
      cx,
      cy,
      r: mesoRadius(member, field),
      fill: growthColor(member.growth),
      class: member.growth === null ? "sphere undefined-growth" : "sphere",
    });
    const title = svgEl("title");
    title.textContent =
      `${member.label}\ni_s=${formatValue(member.i_s)} i_g=${formatValue(member.i_g)}` +
      `\nintra-weight=${member.intra_weight}` +
      `\ngrowth=${member.growth === null ? "undefined" : formatValue(member.growth)}`;
    circle.appendChild(title);
    svg.appendChild(circle);
    const text = svgEl("text", { x: cx, y: cy - mesoRadius(member, field) - 3, class: "sphere-label", "text-anchor": "middle" });
    text.textContent = member.label;
    svg.appendChild(text);
  }
  box.appendChild(svg);
  return box;
}
