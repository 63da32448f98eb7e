/** Pure view-model builders, kept DOM-free so they are unit-testable. */

import type { FieldsPayload, MapEdge, NeighborsPayload } from "./types.js";

export interface PanelModel {
  title: string;
  alpha: number;
  entries: { label: string; value: number }[];
}

/** The two micro panels: the dual focus (1/alpha) lists neighbors more
 * generic than the target, the direct focus the more specific ones
 * (for alpha > 1; at alpha = 1 both panels coincide). */
export function microPanels(
  direct: NeighborsPayload,
  dual: NeighborsPayload,
): { generic: PanelModel; specific: PanelModel } {
  const asPanel = (payload: NeighborsPayload, title: string): PanelModel => ({
    title,
    alpha: payload.alpha,
    entries: payload.neighbors.map((n) => ({ label: n.label, value: n.value })),
  });
  const [low, high] =
    direct.alpha <= dual.alpha ? [direct, dual] : [dual, direct];
  return {
    generic: asPanel(low, `more generic (focus ${low.alpha})`),
    specific: asPanel(high, `more specific (focus ${high.alpha})`),
  };
}

/** Displayed distance of a term inside a neighbors payload, or null
 * when it fell under the threshold. */
export function displayedValue(
  payload: NeighborsPayload,
  label: string,
): number | null {
  const entry = payload.neighbors.find((n) => n.label === label);
  return entry ? entry.value : null;
}

export interface EdgeTooltip {
  sharedTerms: string[];
  weight: number;
  consistent: boolean;
}

/** Shared-term tooltip for a macro edge.  This is the one number the
 * viewer recomputes client-side; it must equal the server's edge
 * weight, and the mismatch flag makes any disagreement visible. */
export function edgeTooltip(
  edge: MapEdge,
  fields: FieldsPayload,
): EdgeTooltip {
  const byId = new Map(fields.fields.map((f) => [f.id, f]));
  const a = byId.get(edge.field_a);
  const b = byId.get(edge.field_b);
  if (!a || !b) {
    return { sharedTerms: [], weight: edge.weight, consistent: false };
  }
  const labels = new Set(a.members.map((m) => m.label));
  const shared = b.members
    .map((m) => m.label)
    .filter((label) => labels.has(label))
    .sort();
  return {
    sharedTerms: shared,
    weight: edge.weight,
    consistent: shared.length === edge.weight,
  };
}
