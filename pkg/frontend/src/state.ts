/** Navigation state: the full view is encodable into the URL hash, so
 * reloading or sharing a link reproduces the exact view. */

export type ViewKind = "micro" | "meso" | "macro";

export interface NavigationState {
  term: string;
  alpha: number; // slider range 0.1 .. 10, log scale
  threshold: number; // s in [0, 1]
  window: [number, number];
  view: ViewKind;
  history: string[]; // previously visited terms, oldest first
}

export const ALPHA_MIN = 0.1;
export const ALPHA_MAX = 10;

export function defaultState(): NavigationState {
  return {
    term: "",
    alpha: 1,
    threshold: 0.05,
    window: [2002, 2005],
    view: "micro",
    history: [],
  };
}

export function clampAlpha(alpha: number): number {
  if (!Number.isFinite(alpha) || alpha <= 0) return 1;
  return Math.min(ALPHA_MAX, Math.max(ALPHA_MIN, alpha));
}

/** Pivot to a neighbor: the new target is the neighbor and alpha flips
 * to 1/alpha, so the term we came from appears in the new view at the
 * distance that was just displayed. The old term goes on the history
 * stack. */
export function pivot(state: NavigationState, neighbor: string): NavigationState {
  return {
    ...state,
    term: neighbor,
    alpha: clampAlpha(1 / state.alpha),
    history: state.term ? [...state.history, state.term] : [...state.history],
  };
}

/** Pop the previous term; alpha flips back so the restored view shows
 * the same distances it showed before the pivot. */
export function goBack(state: NavigationState): NavigationState {
  if (state.history.length === 0) return state;
  const history = state.history.slice(0, -1);
  const term = state.history[state.history.length - 1];
  return { ...state, term, alpha: clampAlpha(1 / state.alpha), history };
}

export function encodeState(state: NavigationState): string {
  const params = new URLSearchParams();
  if (state.term) params.set("term", state.term);
  params.set("alpha", String(state.alpha));
  params.set("s", String(state.threshold));
  params.set("y1", String(state.window[0]));
  params.set("y2", String(state.window[1]));
  params.set("view", state.view);
  if (state.history.length) params.set("history", state.history.join("|"));
  return params.toString();
}

export function decodeState(hash: string): NavigationState {
  const state = defaultState();
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const term = params.get("term");
  if (term) state.term = term;
  const alpha = Number(params.get("alpha"));
  if (Number.isFinite(alpha) && alpha > 0) state.alpha = alpha;
  const s = Number(params.get("s"));
  if (Number.isFinite(s) && s >= 0 && s <= 1) state.threshold = s;
  const y1 = Number(params.get("y1"));
  const y2 = Number(params.get("y2"));
  if (Number.isInteger(y1) && Number.isInteger(y2) && y1 <= y2) {
    state.window = [y1, y2];
  }
  const view = params.get("view");
  if (view === "micro" || view === "meso" || view === "macro") state.view = view;
  const history = params.get("history");
  if (history) state.history = history.split("|").filter((t) => t.length > 0);
  return state;
}

/** Log-scale slider mapping with detents at 0.1, 1 and 10. */
export function sliderToAlpha(position: number): number {
  const alpha = Math.pow(10, position); // position in [-1, 1]
  for (const detent of [0.1, 1, 10]) {
    if (Math.abs(Math.log10(alpha / detent)) < 0.03) return detent;
  }
  return alpha;
}

export function alphaToSlider(alpha: number): number {
  return Math.log10(clampAlpha(alpha));
}
