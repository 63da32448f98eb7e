import { describe, expect, it } from "vitest";

import { growthColor, mesoX, mesoY } from "../src/scales.js";

describe("meso orientation contract", () => {
  // from left to right i_s decreases; from top to bottom i_g decreases
  it("higher specificity sits further left", () => {
    expect(mesoX(0.9, 400)).toBeLessThan(mesoX(0.2, 400));
  });

  it("higher genericity sits further up", () => {
    expect(mesoY(0.9, 400)).toBeLessThan(mesoY(0.2, 400));
  });

  it("a singleton field's (1, 1) term lands in the top-left corner", () => {
    expect(mesoX(1, 400, 30)).toBe(30);
    expect(mesoY(1, 400, 30)).toBe(30);
  });

  it("index 0 maps to the far edge", () => {
    expect(mesoX(0, 400, 30)).toBe(370);
    expect(mesoY(0, 400, 30)).toBe(370);
  });
});

describe("growth/activity color ramp", () => {
  // anchors mirror the server-side DOT export exactly
  it("matches the server anchors", () => {
    expect(growthColor(1)).toBe("#ffffff");
    expect(growthColor(2.5)).toBe("#b40426");
    expect(growthColor(9)).toBe("#b40426"); // saturates at 150% increase
    expect(growthColor(0)).toBe("#3b4cc0");
    expect(growthColor(null)).toBe("#c8c8c8");
  });

  it("is blue-ish below 1 and red-ish above", () => {
    const declining = growthColor(0.5);
    const growing = growthColor(1.75);
    expect(declining).not.toBe("#ffffff");
    expect(growing).not.toBe("#ffffff");
    expect(declining).not.toBe(growing);
  });
});
