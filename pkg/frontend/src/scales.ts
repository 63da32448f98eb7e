/** Presentation-only mappings.  All numbers displayed by the viewer
 * come straight from server payloads; these functions only place and
 * color them. */

import type { FieldMember, FieldPayload, MapPayload } from "./types.js";

/** Meso orientation contract: i_s decreases from left to right and
 * i_g decreases from top to bottom, so a term with both indexes at 1
 * sits in the top-left corner.  Indexes live in [0, 1] by definition. */
export function mesoX(i_s: number, width: number, pad = 30): number {
  return pad + (1 - i_s) * (width - 2 * pad);
}

export function mesoY(i_g: number, height: number, pad = 30): number {
  return pad + (1 - i_g) * (height - 2 * pad);
}

/** Sphere radius grows with the intra-field co-occurrence weight. */
export function mesoRadius(member: FieldMember, field: FieldPayload, max = 26): number {
  const top = Math.max(1, ...field.members.map((m) => m.intra_weight));
  return 4 + (max - 4) * Math.sqrt(member.intra_weight / top);
}

const BLUE: [number, number, number] = [59, 76, 192];
const WHITE: [number, number, number] = [255, 255, 255];
const RED: [number, number, number] = [180, 4, 38];
const NEUTRAL: [number, number, number] = [200, 200, 200];

/** Ratio of 2.5 (a 150% increase) saturates to full red. */
export const FULL_RED_RATIO = 2.5;

function mix(
  low: [number, number, number],
  high: [number, number, number],
  fraction: number,
): string {
  const rgb = low.map((l, i) => Math.round(l + (high[i] - l) * fraction));
  return "#" + rgb.map((v) => v.toString(16).padStart(2, "0")).join("");
}

/** Same anchors as the server-side DOT ramp: blue below 1, white at 1,
 * deep red from 2.5 up; undefined growth renders neutral gray. */
export function growthColor(ratio: number | null | undefined): string {
  if (ratio === null || ratio === undefined) return mix(NEUTRAL, NEUTRAL, 0);
  if (ratio <= 1) return mix(BLUE, WHITE, Math.max(0, Math.min(1, ratio)));
  return mix(WHITE, RED, Math.min(1, (ratio - 1) / (FULL_RED_RATIO - 1)));
}

/** Macro node radius from the precomputed logarithmic display size. */
export function macroRadius(sizeDisplay: number, map: MapPayload, max = 42): number {
  const top = Math.max(1, ...map.nodes.map((n) => n.size_display));
  return 12 + (max - 12) * (sizeDisplay - 1) / Math.max(1e-9, top - 1);
}

export function edgeWidth(weight: number, map: MapPayload, max = 9): number {
  const top = Math.max(1, ...map.edges.map((e) => e.weight));
  return 1.5 + (max - 1.5) * (weight - 1) / Math.max(1, top - 1 || 1);
}

export function formatValue(value: number): string {
  if (value === 0) return "0";
  if (value >= 0.001) return value.toFixed(4);
  return value.toExponential(2);
}
