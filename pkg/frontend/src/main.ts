import { EvaluateRequester } from "./api.js";
import { drawChart } from "./chart.js";
import { render } from "./render.js";
import { applyControl, initialState, type ControlId, type LabState } from "./state.js";
import { validateScenario } from "./validate.js";

const PLAY_INTERVAL_MS = 100; // ≤ 10 requests/s in animation mode
const PLAY_DT = 0.1;

let state: LabState = initialState();

const canvas = document.getElementById("chart") as HTMLCanvasElement;
const bannerEl = document.getElementById("banner") as HTMLDivElement;
const errorEl = document.getElementById("error") as HTMLDivElement;
const readoutEl = document.getElementById("readout") as HTMLDivElement;
const validationEl = document.getElementById("validation") as HTMLDivElement;

function redraw(): void {
  const plot = render(state, state.lastResponse);
  drawChart(canvas, plot);
  bannerEl.textContent = plot.banner ?? "";
  bannerEl.style.display = plot.banner ? "block" : "none";
  errorEl.textContent = plot.error ?? "";
  errorEl.style.display = plot.error ? "block" : "none";
  readoutEl.textContent =
    `corr_lag ${plot.readout.corrLag}   ` +
    `phase_delay ${plot.readout.phaseDelay}   ` +
    `prominence ${plot.readout.prominence}`;
}

const apiBase =
  new URLSearchParams(window.location.search).get("api") ??
  "http://127.0.0.1:8777";

const requester = new EvaluateRequester(
  (outcome) => {
    state = {
      ...state,
      lastResponse: outcome.response ?? state.lastResponse,
      errorMessage: outcome.error,
    };
    redraw();
  },
  { baseUrl: apiBase },
);

function submit(): void {
  const issues = validateScenario(state.scenario);
  validationEl.textContent = issues
    .map((i) => `${i.field}: ${i.message}`)
    .join("; ");
  validationEl.style.display = issues.length ? "block" : "none";
  for (const issue of issues) {
    const input = document.querySelector<HTMLElement>(
      `[data-field="${issue.field}"]`,
    );
    input?.classList.add("invalid");
  }
  if (issues.length === 0) {
    requester.schedule(state.scenario);
  }
}

function bindSlider(id: string, control: ControlId, labelId: string): void {
  const el = document.getElementById(id) as HTMLInputElement;
  const label = document.getElementById(labelId) as HTMLSpanElement;
  const update = () => {
    const value = Number(el.value);
    label.textContent = el.value;
    state = applyControl(state, control, value);
    document
      .querySelectorAll(".invalid")
      .forEach((n) => n.classList.remove("invalid"));
    submit();
  };
  el.addEventListener("input", update);
  label.textContent = el.value;
}

function bindScattererEditor(): void {
  const box = document.getElementById("scatterers") as HTMLTextAreaElement;
  box.value = state.scenario.scatterers
    .map((s) => `${s.x} ${s.alpha}`)
    .join("\n");
  box.addEventListener("change", () => {
    const rows = box.value
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line.length > 0)
      .map((line) => {
        const [x, alpha] = line.split(/\s+/).map(Number);
        return { x: x ?? NaN, alpha: alpha ?? NaN };
      });
    const scenario = structuredClone(state.scenario);
    scenario.scatterers = rows;
    state = { ...state, scenario };
    box.classList.remove("invalid");
    submit();
  });
}

let playTimer: number | null = null;

function bindPlay(): void {
  const btn = document.getElementById("play") as HTMLButtonElement;
  const tSlider = document.getElementById("t") as HTMLInputElement;
  btn.addEventListener("click", () => {
    state = { ...state, playing: !state.playing };
    btn.textContent = state.playing ? "pause" : "play";
    if (state.playing) {
      playTimer = window.setInterval(() => {
        state = applyControl(state, "t", state.t + PLAY_DT);
        tSlider.value = String(state.t);
        (document.getElementById("t-value") as HTMLSpanElement).textContent =
          state.t.toFixed(1);
        if (validateScenario(state.scenario).length === 0) {
          requester.sendNow(state.scenario);
        }
      }, PLAY_INTERVAL_MS);
    } else if (playTimer !== null) {
      window.clearInterval(playTimer);
      playTimer = null;
    }
  });
}

bindSlider("coupling", "coupling_scale", "coupling-value");
bindSlider("nwaves", "n_waves", "nwaves-value");
bindSlider("dk", "dk", "dk-value");
bindSlider("k0", "k0", "k0-value");
bindSlider("t", "t", "t-value");
bindScattererEditor();
bindPlay();
submit();
