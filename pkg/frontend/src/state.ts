import type { EvaluateResponse, Scenario } from "./types.js";

/** Whole-lab state; the view is a pure function of this plus the last response. */
export interface LabState {
  scenario: Scenario;
  t: number;
  playing: boolean;
  lastResponse: EvaluateResponse | null;
  /** Server 400 payload or network failure text; null when healthy. */
  errorMessage: string | null;
}

export function defaultScenario(): Scenario {
  return {
    scatterers: [
      { x: -2, alpha: 1 },
      { x: -1, alpha: 1 },
      { x: 0, alpha: 1 },
      { x: 1, alpha: 1 },
      { x: 2, alpha: 1 },
    ],
    coupling_scale: 1,
    spectrum: { k0: 1, dk: 0.25, n_waves: 8 },
    grid: { x_min: -60, x_max: 60, n_points: 2001 },
    t: 0,
  };
}

export function initialState(): LabState {
  return {
    scenario: defaultScenario(),
    t: 0,
    playing: false,
    lastResponse: null,
    errorMessage: null,
  };
}

export type ControlId =
  | "coupling_scale"
  | "n_waves"
  | "dk"
  | "k0"
  | "t";

/** Apply one slider/control edit, returning a new state (state is never mutated). */
export function applyControl(state: LabState, control: ControlId, value: number): LabState {
  const scenario = structuredClone(state.scenario);
  let t = state.t;
  switch (control) {
    case "coupling_scale":
      scenario.coupling_scale = value;
      break;
    case "n_waves":
      scenario.spectrum.n_waves = Math.round(value);
      break;
    case "dk":
      scenario.spectrum.dk = value;
      break;
    case "k0":
      scenario.spectrum.k0 = value;
      break;
    case "t":
      t = value;
      scenario.t = value;
      break;
  }
  return { ...state, scenario, t };
}
