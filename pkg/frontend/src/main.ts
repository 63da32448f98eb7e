/** Viewer bootstrap: state wiring, controls, fetch-and-render loop.
 *
 * The full navigation state lives in the URL hash; reloading restores
 * the exact view.  Fetches carry sequence numbers and stale responses
 * are dropped, so scrubbing the sliders stays consistent.
 */

import { ApiClient, ApiError } from "./api.js";
import { clear, el } from "./dom.js";
import { renderMacro } from "./macro.js";
import { renderMeso } from "./meso.js";
import { renderMicro, renderMicroError } from "./micro.js";
import {
  alphaToSlider,
  decodeState,
  defaultState,
  encodeState,
  goBack,
  pivot,
  sliderToAlpha,
  type NavigationState,
} from "./state.js";

const api = new ApiClient("");
const sessionSeed = Math.floor(Math.random() * 2 ** 31); // layout only

let state: NavigationState = defaultState();
let applyingHash = false;

function pushState(next: NavigationState): void {
  state = next;
  applyingHash = true;
  window.location.hash = encodeState(state);
  applyingHash = false;
  syncControls();
  void render();
}

function syncControls(): void {
  (document.getElementById("term") as HTMLInputElement).value = state.term;
  (document.getElementById("alpha") as HTMLInputElement).value = String(
    alphaToSlider(state.alpha),
  );
  document.getElementById("alpha-value")!.textContent = `focus α = ${state.alpha}`;
  (document.getElementById("threshold") as HTMLInputElement).value = String(
    state.threshold,
  );
  document.getElementById("threshold-value")!.textContent = `threshold s = ${state.threshold}`;
  (document.getElementById("y1") as HTMLInputElement).value = String(state.window[0]);
  (document.getElementById("y2") as HTMLInputElement).value = String(state.window[1]);
  for (const kind of ["micro", "meso", "macro"] as const) {
    document
      .getElementById(`tab-${kind}`)!
      .classList.toggle("active", state.view === kind);
  }
  (document.getElementById("back") as HTMLButtonElement).disabled =
    state.history.length === 0;
}

async function render(): Promise<void> {
  const sequence = api.nextSequence();
  const container = document.getElementById("view")!;
  const status = document.getElementById("status")!;
  status.textContent = "loading…";
  try {
    if (state.view === "micro") {
      await renderMicroView(container, sequence);
    } else if (state.view === "meso") {
      await renderMesoView(container, sequence);
    } else {
      await renderMacroView(container, sequence);
    }
    if (api.isCurrent(sequence)) status.textContent = "";
  } catch (error) {
    if (!api.isCurrent(sequence)) return; // a newer view superseded us
    status.textContent = "";
    const message =
      error instanceof ApiError
        ? error.status === 404
          ? `unknown term: ${state.term}`
          : error.message
        : String(error);
    if (state.view === "micro") {
      renderMicroError(container, message);
    } else {
      clear(container);
      container.appendChild(el("p", "error", message));
    }
  }
}

async function renderMicroView(container: HTMLElement, sequence: number): Promise<void> {
  if (!state.term) {
    clear(container);
    container.appendChild(
      el("p", "empty", "pick a term to explore its neighborhoods"),
    );
    return;
  }
  const [direct, dual] = await Promise.all([
    api.neighbors(state.term, state.alpha, state.threshold, state.window),
    api.neighbors(state.term, 1 / state.alpha, state.threshold, state.window),
  ]);
  if (!api.isCurrent(sequence)) return;
  renderMicro(container, direct, dual, (label) => pushState(pivot(state, label)));
}

let highlightFieldId: number | undefined;

async function renderMesoView(container: HTMLElement, sequence: number): Promise<void> {
  const payload = await api.fields(state.alpha, state.threshold, 3, state.window);
  if (!api.isCurrent(sequence)) return;
  renderMeso(container, payload.fields, highlightFieldId);
  highlightFieldId = undefined;
}

async function renderMacroView(container: HTMLElement, sequence: number): Promise<void> {
  const [map, fields] = await Promise.all([
    api.map(state.alpha, state.threshold, 3, state.window),
    api.fields(state.alpha, state.threshold, 3, state.window),
  ]);
  if (!api.isCurrent(sequence)) return;
  renderMacro(container, map, fields, sessionSeed, (fieldId) => {
    highlightFieldId = fieldId;
    pushState({ ...state, view: "meso" });
  });
}

async function setupTermList(): Promise<void> {
  try {
    const payload = await api.terms("");
    const datalist = document.getElementById("terms-list")!;
    clear(datalist);
    for (const entry of payload.terms) {
      const option = document.createElement("option");
      option.value = entry.label;
      datalist.appendChild(option);
    }
  } catch {
    // vocabulary list is a convenience; typing still works without it
  }
}

function wireControls(): void {
  document.getElementById("term")!.addEventListener("change", (event) => {
    const term = (event.target as HTMLInputElement).value.trim();
    pushState({ ...state, term });
  });
  document.getElementById("alpha")!.addEventListener("input", (event) => {
    const position = Number((event.target as HTMLInputElement).value);
    pushState({ ...state, alpha: sliderToAlpha(position) });
  });
  document.getElementById("threshold")!.addEventListener("input", (event) => {
    pushState({ ...state, threshold: Number((event.target as HTMLInputElement).value) });
  });
  const applyWindow = () => {
    const y1 = Number((document.getElementById("y1") as HTMLInputElement).value);
    const y2 = Number((document.getElementById("y2") as HTMLInputElement).value);
    if (Number.isInteger(y1) && Number.isInteger(y2) && y1 <= y2) {
      pushState({ ...state, window: [y1, y2] });
    }
  };
  document.getElementById("y1")!.addEventListener("change", applyWindow);
  document.getElementById("y2")!.addEventListener("change", applyWindow);
  for (const kind of ["micro", "meso", "macro"] as const) {
    document.getElementById(`tab-${kind}`)!.addEventListener("click", () => {
      pushState({ ...state, view: kind });
    });
  }
  document.getElementById("back")!.addEventListener("click", () => {
    pushState(goBack(state));
  });
  window.addEventListener("hashchange", () => {
    if (applyingHash) return;
    state = decodeState(window.location.hash);
    syncControls();
    void render();
  });
}

function start(): void {
  state = window.location.hash.length > 1
    ? decodeState(window.location.hash)
    : defaultState();
  wireControls();
  syncControls();
  void setupTermList();
  void render();
}

start();
