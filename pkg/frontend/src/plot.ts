/** Canvas plotting for diagrams and curves.
 *
 * Everything plotted is a number the service sent; this module only maps
 * those numbers to pixels. The painter draws through a narrow surface
 * interface so tests can record the drawing calls without a real canvas.
 */

export const BUBBLE_COLOR = "#1a9641";
export const DEW_COLOR = "#7b3294";
export const CURVE_COLOR_1 = "#d7191c";
export const CURVE_COLOR_2 = "#2b83ba";
export const MARKER_COLOR = "#e66101";
export const AXIS_COLOR = "#555555";
export const GRID_COLOR = "#dddddd";

/** The slice of CanvasRenderingContext2D the painter uses. */
export interface Surface {
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
  setLineDash(segments: number[]): void;
  strokeStyle: string;
  fillStyle: string;
  lineWidth: number;
  font: string;
  textAlign: string;
  textBaseline: string;
}

/** One polyline. `points` carries the raw service record behind each
 * vertex so the hover readout can echo it without recomputation. */
export interface Series {
  label: string;
  color: string;
  xs: number[];
  ys: number[];
  dash?: number[];
  points?: Array<Record<string, number | string>>;
}

export interface Marker {
  x: number;
  y: number;
  label: string;
  record: Record<string, number | string>;
}

export interface PlotSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  markers: Marker[];
  width: number;
  height: number;
}

export interface LinearScale {
  domain: [number, number];
  range: [number, number];
  apply(value: number): number;
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  return {
    domain,
    range,
    apply(value: number): number {
      if (span === 0) return (r0 + r1) / 2;
      return r0 + ((value - d0) / span) * (r1 - r0);
    },
  };
}

/** Round tick positions covering [lo, hi], at most `count + 1` of them. */
export function niceTicks(lo: number, hi: number, count: number): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / count;
  const power = Math.floor(Math.log10(rawStep));
  const base = Math.pow(10, power);
  let step = base;
  for (const mult of [1, 2, 5, 10]) {
    if (mult * base >= rawStep) {
      step = mult * base;
      break;
    }
  }
  const ticks: number[] = [];
  let tick = Math.ceil(lo / step) * step;
  while (tick <= hi + step * 1e-9) {
    ticks.push(tick);
    tick += step;
  }
  return ticks;
}

export interface Layout {
  plot: { left: number; top: number; width: number; height: number };
  x: LinearScale;
  y: LinearScale;
}

const MARGIN = { left: 72, right: 16, top: 30, bottom: 44 };

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (lo === Infinity) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  return [lo, hi];
}

function padded([lo, hi]: [number, number]): [number, number] {
  const pad = (hi - lo) * 0.05;
  return [lo - pad, hi + pad];
}

/** Pixel geometry for a spec. Shared by the painter and the hit tester so
 * hover positions always agree with what was drawn. */
export function computeLayout(spec: PlotSpec): Layout {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of spec.series) {
    xs.push(...s.xs);
    ys.push(...s.ys);
  }
  for (const m of spec.markers) {
    xs.push(m.x);
    ys.push(m.y);
  }
  const plot = {
    left: MARGIN.left,
    top: MARGIN.top,
    width: spec.width - MARGIN.left - MARGIN.right,
    height: spec.height - MARGIN.top - MARGIN.bottom,
  };
  const x = linearScale(padded(extent(xs)), [plot.left, plot.left + plot.width]);
  const y = linearScale(padded(extent(ys)), [plot.top + plot.height, plot.top]);
  return { plot, x, y };
}

function formatTick(value: number): string {
  const magnitude = Math.abs(value);
  if (magnitude !== 0 && (magnitude >= 1e5 || magnitude < 1e-3)) {
    return value.toExponential(2);
  }
  return String(Number(value.toPrecision(6)));
}

export function drawPlot(ctx: Surface, spec: PlotSpec): Layout {
  const layout = computeLayout(spec);
  const { plot, x, y } = layout;
  ctx.clearRect(0, 0, spec.width, spec.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, spec.width, spec.height);

  ctx.font = "12px sans-serif";
  ctx.setLineDash([]);
  ctx.lineWidth = 1;

  const xTicks = niceTicks(x.domain[0], x.domain[1], 6);
  const yTicks = niceTicks(y.domain[0], y.domain[1], 6);

  ctx.strokeStyle = GRID_COLOR;
  for (const t of xTicks) {
    const px = x.apply(t);
    ctx.beginPath();
    ctx.moveTo(px, plot.top);
    ctx.lineTo(px, plot.top + plot.height);
    ctx.stroke();
  }
  for (const t of yTicks) {
    const py = y.apply(t);
    ctx.beginPath();
    ctx.moveTo(plot.left, py);
    ctx.lineTo(plot.left + plot.width, py);
    ctx.stroke();
  }

  ctx.strokeStyle = AXIS_COLOR;
  ctx.strokeRect(plot.left, plot.top, plot.width, plot.height);

  ctx.fillStyle = AXIS_COLOR;
  ctx.textAlign = "center";
  ctx.textBaseline = "top";
  for (const t of xTicks) {
    ctx.fillText(formatTick(t), x.apply(t), plot.top + plot.height + 6);
  }
  ctx.textAlign = "right";
  ctx.textBaseline = "middle";
  for (const t of yTicks) {
    ctx.fillText(formatTick(t), plot.left - 6, y.apply(t));
  }

  ctx.textAlign = "center";
  ctx.textBaseline = "bottom";
  ctx.fillText(spec.title, plot.left + plot.width / 2, plot.top - 10);
  ctx.textBaseline = "top";
  ctx.fillText(spec.xLabel, plot.left + plot.width / 2, plot.top + plot.height + 24);
  ctx.textAlign = "left";
  ctx.fillText(spec.yLabel, 4, 4);

  for (const series of spec.series) {
    if (series.xs.length === 0) continue;
    ctx.strokeStyle = series.color;
    ctx.lineWidth = 2;
    ctx.setLineDash(series.dash ?? []);
    ctx.beginPath();
    ctx.moveTo(x.apply(series.xs[0]), y.apply(series.ys[0]));
    for (let i = 1; i < series.xs.length; i += 1) {
      ctx.lineTo(x.apply(series.xs[i]), y.apply(series.ys[i]));
    }
    ctx.stroke();
  }
  ctx.setLineDash([]);
  ctx.lineWidth = 1;

  for (const marker of spec.markers) {
    const px = x.apply(marker.x);
    const py = y.apply(marker.y);
    ctx.strokeStyle = MARKER_COLOR;
    ctx.fillStyle = MARKER_COLOR;
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.arc(px, py, 5, 0, Math.PI * 2);
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(px - 8, py);
    ctx.lineTo(px + 8, py);
    ctx.moveTo(px, py - 8);
    ctx.lineTo(px, py + 8);
    ctx.stroke();
    ctx.textAlign = "left";
    ctx.textBaseline = "bottom";
    ctx.fillText(marker.label, px + 8, py - 8);
  }
  ctx.lineWidth = 1;

  // Legend in the upper right of the plot area.
  let legendY = plot.top + 8;
  for (const series of spec.series) {
    ctx.strokeStyle = series.color;
    ctx.lineWidth = 2;
    ctx.setLineDash(series.dash ?? []);
    ctx.beginPath();
    ctx.moveTo(plot.left + plot.width - 120, legendY);
    ctx.lineTo(plot.left + plot.width - 96, legendY);
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = AXIS_COLOR;
    ctx.textAlign = "left";
    ctx.textBaseline = "middle";
    ctx.fillText(series.label, plot.left + plot.width - 90, legendY);
    legendY += 16;
  }
  ctx.lineWidth = 1;
  return layout;
}

export interface Hit {
  seriesIndex: number;
  pointIndex: number;
  record: Record<string, number | string>;
}

/** Nearest data vertex within `radius` pixels of (px, py), if any. */
export function hitTest(spec: PlotSpec, layout: Layout, px: number, py: number, radius = 12): Hit | null {
  let best: Hit | null = null;
  let bestDist = radius * radius;
  spec.series.forEach((series, seriesIndex) => {
    const records = series.points;
    if (records === undefined) return;
    for (let i = 0; i < series.xs.length; i += 1) {
      const dx = layout.x.apply(series.xs[i]) - px;
      const dy = layout.y.apply(series.ys[i]) - py;
      const dist = dx * dx + dy * dy;
      if (dist < bestDist) {
        bestDist = dist;
        best = { seriesIndex, pointIndex: i, record: records[i] };
      }
    }
  });
  return best;
}
