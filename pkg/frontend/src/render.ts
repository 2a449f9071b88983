import type { EvaluateResponse } from "./types.js";
import type { LabState } from "./state.js";

export const DEGENERATE_BANNER =
  "measurement unreliable — structureless free density";

export interface ReadoutView {
  corrLag: string;
  phaseDelay: string;
  prominence: string;
}

/**
 * Everything the chart and readout need, derived purely from
 * (state, response). Density arrays are the response arrays verbatim —
 * the client never recomputes or transforms physics values.
 */
export interface PlotData {
  x: number[];
  free: number[];
  nonfree: number[];
  scattererPositions: number[];
  window: { x_lo: number; x_hi: number } | null;
  readout: ReadoutView;
  banner: string | null;
  error: string | null;
}

function fmt(v: number | null, digits = 4): string {
  return v === null ? "—" : v.toFixed(digits);
}

/** Pure view function: same (state, response) always yields identical plot data. */
export function render(state: LabState, response: EvaluateResponse | null): PlotData {
  if (response === null) {
    return {
      x: [],
      free: [],
      nonfree: [],
      scattererPositions: [],
      window: null,
      readout: { corrLag: "—", phaseDelay: "—", prominence: "—" },
      banner: null,
      error: state.errorMessage,
    };
  }
  const banner =
    state.scenario.spectrum.n_waves === 1 ? DEGENERATE_BANNER : null;
  return {
    x: response.grid_x,
    free: response.free_density,
    nonfree: response.nonfree_density,
    scattererPositions: response.scatterers.map((s) => s.x),
    window: { x_lo: response.window.x_lo, x_hi: response.window.x_hi },
    readout: {
      corrLag: fmt(response.report.corr_lag),
      phaseDelay: fmt(response.report.phase_delay),
      prominence: fmt(response.report.peak_prominence),
    },
    banner,
    error: state.errorMessage,
  };
}
