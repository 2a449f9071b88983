import type { Scenario } from "./types.js";

/** Slider/control bounds enforced before any request leaves the client. */
export const COUPLING_MIN = 0;
export const COUPLING_MAX = 10;
export const N_WAVES_MIN = 1;
export const N_WAVES_MAX = 32;

export interface ValidationIssue {
  /** Dotted path of the offending field, e.g. "scatterers.1.x". */
  field: string;
  message: string;
}

function finite(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

/**
 * Client-side mirror of the server scenario schema: cheap structural and
 * range checks so obviously invalid edits never produce a request. The
 * server remains the authority; anything it rejects is shown verbatim.
 */
export function validateScenario(s: Scenario): ValidationIssue[] {
  const issues: ValidationIssue[] = [];

  if (s.scatterers.length === 0) {
    issues.push({ field: "scatterers", message: "at least one scatterer" });
  }
  s.scatterers.forEach((sc, i) => {
    if (!finite(sc.x)) {
      issues.push({ field: `scatterers.${i}.x`, message: "position must be a finite number" });
    }
    if (!finite(sc.alpha)) {
      issues.push({ field: `scatterers.${i}.alpha`, message: "strength must be a finite number" });
    }
  });
  const seen = new Map<number, number>();
  s.scatterers.forEach((sc, i) => {
    const j = seen.get(sc.x);
    if (j !== undefined) {
      issues.push({
        field: `scatterers.${i}.x`,
        message: `duplicate position ${sc.x} (same as scatterer ${j})`,
      });
    } else {
      seen.set(sc.x, i);
    }
  });

  if (!finite(s.coupling_scale) || s.coupling_scale < COUPLING_MIN || s.coupling_scale > COUPLING_MAX) {
    issues.push({
      field: "coupling_scale",
      message: `must be in [${COUPLING_MIN}, ${COUPLING_MAX}]`,
    });
  }

  const sp = s.spectrum;
  if (!Number.isInteger(sp.n_waves) || sp.n_waves < N_WAVES_MIN || sp.n_waves > N_WAVES_MAX) {
    issues.push({
      field: "spectrum.n_waves",
      message: `must be an integer in [${N_WAVES_MIN}, ${N_WAVES_MAX}]`,
    });
  }
  if (!finite(sp.dk) || sp.dk <= 0) {
    issues.push({ field: "spectrum.dk", message: "must be > 0" });
  }
  if (!finite(sp.k0)) {
    issues.push({ field: "spectrum.k0", message: "must be a finite number" });
  }

  if (!finite(s.grid.x_min) || !finite(s.grid.x_max) || s.grid.x_min >= s.grid.x_max) {
    issues.push({ field: "grid", message: "x_min must be below x_max" });
  }
  if (!Number.isInteger(s.grid.n_points) || s.grid.n_points < 2) {
    issues.push({ field: "grid.n_points", message: "need at least 2 points" });
  }

  if (s.t !== undefined && !finite(s.t)) {
    issues.push({ field: "t", message: "must be a finite number" });
  }

  return issues;
}
