import type { PlotData } from "./render.js";

const MARGIN = { left: 48, right: 12, top: 10, bottom: 26 };
const FREE_COLOR = "#888";
const NONFREE_COLOR = "#1565c0";
const SCATTERER_COLOR = "#c62828";
const WINDOW_FILL = "rgba(21, 101, 192, 0.07)";

/** Draws the overlaid free/non-free density curves onto a canvas. */
export function drawChart(canvas: HTMLCanvasElement, plot: PlotData): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const w = canvas.width;
  const h = canvas.height;
  ctx.clearRect(0, 0, w, h);
  if (plot.x.length === 0) return;

  const x0 = plot.x[0]!;
  const x1 = plot.x[plot.x.length - 1]!;
  let yMax = 0;
  for (const v of plot.free) yMax = Math.max(yMax, v);
  for (const v of plot.nonfree) yMax = Math.max(yMax, v);
  if (yMax <= 0) yMax = 1;

  const px = (x: number) =>
    MARGIN.left + ((x - x0) / (x1 - x0)) * (w - MARGIN.left - MARGIN.right);
  const py = (y: number) =>
    h - MARGIN.bottom - (y / yMax) * (h - MARGIN.top - MARGIN.bottom);

  if (plot.window) {
    ctx.fillStyle = WINDOW_FILL;
    ctx.fillRect(
      px(plot.window.x_lo),
      MARGIN.top,
      px(plot.window.x_hi) - px(plot.window.x_lo),
      h - MARGIN.top - MARGIN.bottom,
    );
  }

  for (const sx of plot.scattererPositions) {
    ctx.strokeStyle = SCATTERER_COLOR;
    ctx.setLineDash([4, 4]);
    ctx.beginPath();
    ctx.moveTo(px(sx), MARGIN.top);
    ctx.lineTo(px(sx), h - MARGIN.bottom);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  const trace = (values: number[], color: string) => {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    for (let i = 0; i < plot.x.length; i++) {
      const X = px(plot.x[i]!);
      const Y = py(values[i]!);
      if (i === 0) ctx.moveTo(X, Y);
      else ctx.lineTo(X, Y);
    }
    ctx.stroke();
  };
  trace(plot.free, FREE_COLOR);
  trace(plot.nonfree, NONFREE_COLOR);

  ctx.strokeStyle = "#333";
  ctx.lineWidth = 1;
  ctx.strokeRect(
    MARGIN.left,
    MARGIN.top,
    w - MARGIN.left - MARGIN.right,
    h - MARGIN.top - MARGIN.bottom,
  );
  ctx.fillStyle = "#333";
  ctx.font = "12px sans-serif";
  ctx.fillText(x0.toFixed(0), MARGIN.left, h - 8);
  ctx.fillText(x1.toFixed(0), w - MARGIN.right - 24, h - 8);
  ctx.fillText(yMax.toPrecision(3), 4, MARGIN.top + 10);
}
