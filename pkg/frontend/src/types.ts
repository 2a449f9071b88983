/** Shared request/response shapes for the deltalab HTTP API. */

export interface Scatterer {
  x: number;
  alpha: number;
}

export interface Spectrum {
  k0: number;
  dk: number;
  n_waves: number;
}

export interface GridSpec {
  x_min: number;
  x_max: number;
  n_points: number;
}

export interface WindowSpec {
  x_lo: number;
  x_hi: number;
  max_lag: number;
}

export interface Scenario {
  scatterers: Scatterer[];
  coupling_scale: number;
  spectrum: Spectrum;
  grid: GridSpec;
  t?: number;
  window?: WindowSpec;
}

export interface ComplexPair {
  re: number;
  im: number;
}

export interface ModeResult {
  k: number;
  R: ComplexPair;
  T: ComplexPair;
  abs_R2: number;
  abs_T2: number;
}

/** Report fields are null when the quantity is undefined (e.g. FWHM at n_waves=1). */
export interface Report {
  corr_lag: number | null;
  phase_delay: number | null;
  fwhm: number | null;
  scatterer_span: number | null;
  mean_spacing: number | null;
  peak_prominence: number | null;
}

export interface EvaluateResponse {
  grid_x: number[];
  free_density: number[];
  nonfree_density: number[];
  rt: ModeResult[];
  report: Report;
  window: WindowSpec;
  scatterers: Scatterer[];
}

export interface ApiError {
  error: string;
}
