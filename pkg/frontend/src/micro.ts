/** Micro view: the two-panel neighborhood of the current term.
 *
 * Top panel: neighbors under the inverted focus (more generic side).
 * Bottom panel: neighbors under the direct focus (more specific side).
 * Clicking a neighbor pivots to it; the focus inversion on pivot keeps
 * the displayed distance identical in the new view.
 */

import { clear, el } from "./dom.js";
import { microPanels, type PanelModel } from "./models.js";
import { formatValue } from "./scales.js";
import type { NeighborsPayload } from "./types.js";

export function renderMicro(
  container: HTMLElement,
  direct: NeighborsPayload,
  dual: NeighborsPayload,
  onPivot: (label: string) => void,
): void {
  clear(container);
  const panels = microPanels(direct, dual);
  container.appendChild(renderPanel(panels.generic, onPivot));
  container.appendChild(renderPanel(panels.specific, onPivot));
}

function renderPanel(panel: PanelModel, onPivot: (label: string) => void): HTMLElement {
  const box = el("section", "panel");
  box.appendChild(el("h3", "panel-title", panel.title));
  if (panel.entries.length === 0) {
    box.appendChild(el("p", "empty", "no neighbors above the threshold"));
    return box;
  }
  const list = el("ul", "neighbor-list");
  const top = panel.entries[0].value;
  for (const entry of panel.entries) {
    const item = el("li", "neighbor");
    const button = el("button", "neighbor-label", entry.label);
    button.title = `pivot to ${entry.label}`;
    button.addEventListener("click", () => onPivot(entry.label));
    const bar = el("span", "bar");
    bar.style.width = `${Math.max(2, (entry.value / top) * 160)}px`;
    const value = el("span", "value", formatValue(entry.value));
    item.appendChild(button);
    item.appendChild(bar);
    item.appendChild(value);
    list.appendChild(item);
  }
  box.appendChild(list);
  return box;
}

export function renderMicroError(container: HTMLElement, message: string): void {
  clear(container);
  container.appendChild(el("p", "error", message));
}
