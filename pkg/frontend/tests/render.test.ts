import { describe, expect, it } from "vitest";
import { DEGENERATE_BANNER, render } from "../src/render.js";
import { initialState } from "../src/state.js";
import type { EvaluateResponse } from "../src/types.js";

// Canned /api/evaluate response; no physics engine is present in this test
// environment, so every plotted number must come straight from this object.
const CANNED: EvaluateResponse = {
  grid_x: [-2, -1, 0, 1, 2],
  free_density: [0.1, 0.9, 2.4000000000000004, 0.9, 0.1],
  nonfree_density: [0.15, 0.85, 2.1999999999999997, 1.05, 0.2],
  rt: [
    { k: 1, R: { re: -0.5, im: -0.5 }, T: { re: 0.5, im: -0.5 }, abs_R2: 0.5, abs_T2: 0.5 },
  ],
  report: {
    corr_lag: 0.3,
    phase_delay: 0.29,
    fwhm: 2.9,
    scatterer_span: 0,
    mean_spacing: 0,
    peak_prominence: 0.42,
  },
  window: { x_lo: -1, x_hi: 1, max_lag: 0.4 },
  scatterers: [{ x: 0, alpha: 2 }],
};

describe("render", () => {
  it("plot data is bitwise-equal to the response arrays", () => {
    const plot = render(initialState(), CANNED);
    expect(plot.x.length).toBe(CANNED.grid_x.length);
    for (let i = 0; i < plot.x.length; i++) {
      expect(Object.is(plot.x[i], CANNED.grid_x[i])).toBe(true);
      expect(Object.is(plot.free[i], CANNED.free_density[i])).toBe(true);
      expect(Object.is(plot.nonfree[i], CANNED.nonfree_density[i])).toBe(true);
    }
    expect(plot.scattererPositions).toEqual([0]);
  });

  it("is a pure function: replaying the same inputs gives identical plot data", () => {
    const state = initialState();
    const a = render(state, CANNED);
    const b = render(state, CANNED);
    expect(b).toEqual(a);
  });

  it("shows the degenerate banner exactly when n_waves is 1", () => {
    const state = initialState();
    const degenerate = {
      ...state,
      scenario: {
        ...state.scenario,
        spectrum: { ...state.scenario.spectrum, n_waves: 1 },
      },
    };
    expect(render(degenerate, CANNED).banner).toBe(DEGENERATE_BANNER);
    expect(render(state, CANNED).banner).toBeNull();
  });

  it("renders null report fields as placeholders, not NaN", () => {
    const resp = { ...CANNED, report: { ...CANNED.report, fwhm: null, corr_lag: null } };
    const plot = render(initialState(), resp);
    expect(plot.readout.corrLag).toBe("—");
  });

  it("surfaces the server error message verbatim", () => {
    const state = {
      ...initialState(),
      errorMessage: "SchemaError: scenario/spectrum/n_waves: 0 is less than the minimum of 1",
    };
    const plot = render(state, null);
    expect(plot.error).toBe(
      "SchemaError: scenario/spectrum/n_waves: 0 is less than the minimum of 1",
    );
  });
});
