/**
 * Plane view: a log-log heatmap of a combined metric over (cc, dio) or
 * (xbs, bw), service-computed iso-lines, the crossover boundary, and a
 * cursor probe whose readout is a direct evaluation of the hovered point.
 */

import { formatSig, metricLabel } from "./format.js";
import type { PlaneKind, SessionStore } from "./state.js";

const MARGIN = { left: 64, right: 16, top: 12, bottom: 40 };

interface AxisMap {
  min: number;
  max: number;
  toPx(value: number): number;
  fromPx(px: number): number;
}

function logAxis(min: number, max: number, pxMin: number, pxMax: number): AxisMap {
  const logMin = Math.log10(min);
  const span = Math.log10(max) - logMin;
  return {
    min,
    max,
    toPx: (v) => pxMin + ((Math.log10(v) - logMin) / span) * (pxMax - pxMin),
    fromPx: (px) => 10 ** (logMin + ((px - pxMin) / (pxMax - pxMin)) * span),
  };
}

/** Dark-to-bright ramp; input in [0, 1]. */
function heatColor(t: number): string {
  const clamped = Math.max(0, Math.min(1, t));
  const hue = 240 - 200 * clamped;
  const light = 18 + 44 * clamped;
  return `hsl(${hue}, 75%, ${light}%)`;
}

export class PlaneControls {
  constructor(root: HTMLElement, store: SessionStore) {
    const planeSelect = document.createElement("select");
    planeSelect.id = "plane-select";
    for (const [value, label] of [
      ["cc_dio", "cycles vs DIO"],
      ["xbs_bw", "crossbars vs bandwidth"],
    ]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = label;
      planeSelect.append(option);
    }
    planeSelect.addEventListener("change", () => {
      store.setPlane(planeSelect.value as PlaneKind);
      void store.refreshPlane();
    });

    const levelInput = document.createElement("input");
    levelInput.type = "number";
    levelInput.placeholder = "iso level (GOPS / W)";
    levelInput.id = "level-input";
    const pinButton = document.createElement("button");
    pinButton.textContent = "pin level";
    pinButton.addEventListener("click", () => {
      const level = Number(levelInput.value);
      if (Number.isFinite(level) && level > 0) {
        store.pinLevel(level);
        void store.refreshPlane();
      }
    });

    const levels = document.createElement("span");
    levels.id = "pinned-levels";
    store.subscribe(() => {
      levels.replaceChildren();
      for (const level of store.plane.pinnedLevels) {
        const chip = document.createElement("button");
        chip.className = "level-chip";
        chip.textContent = `${level} ×`;
        chip.addEventListener("click", () => {
          store.unpinLevel(level);
          void store.refreshPlane();
        });
        levels.append(chip);
      }
    });

    root.append(planeSelect, levelInput, pinButton, levels);
  }
}

export class PlaneView {
  private readonly canvas: HTMLCanvasElement;
  private readonly readout: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly store: SessionStore;
  private probeTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    canvas: HTMLCanvasElement,
    readout: HTMLElement,
    banner: HTMLElement,
    store: SessionStore,
  ) {
    this.canvas = canvas;
    this.readout = readout;
    this.banner = banner;
    this.store = store;
    store.subscribe(() => this.render());
    canvas.addEventListener("mousemove", (event) => this.onHover(event));
    canvas.addEventListener("click", () => void this.store.pinProbeAsColumn());
    this.render();
  }

  private axes(): [AxisMap, AxisMap] | null {
    const grid = this.store.plane.grid;
    if (!grid || grid.axes.length !== 2) return null;
    const [x, y] = grid.axes;
    return [
      logAxis(x.values[0], x.values[x.values.length - 1], MARGIN.left, this.canvas.width - MARGIN.right),
      logAxis(y.values[0], y.values[y.values.length - 1], this.canvas.height - MARGIN.bottom, MARGIN.top),
    ];
  }

  private onHover(event: MouseEvent): void {
    const axes = this.axes();
    if (!axes) return;
    const rect = this.canvas.getBoundingClientRect();
    const px = event.clientX - rect.left;
    const py = event.clientY - rect.top;
    if (
      px < MARGIN.left || px > this.canvas.width - MARGIN.right ||
      py < MARGIN.top || py > this.canvas.height - MARGIN.bottom
    ) {
      return;
    }
    const x = axes[0].fromPx(px);
    const y = axes[1].fromPx(py);
    // rate-limit probes: one evaluation per settle, not per pixel
    if (this.probeTimer !== null) clearTimeout(this.probeTimer);
    this.probeTimer = setTimeout(() => void this.store.probe(x, y), 60);
  }

  render(): void {
    const plane = this.store.plane;
    this.banner.textContent = plane.banner ?? "";
    this.banner.style.display = plane.banner ? "block" : "none";
    const context = this.canvas.getContext("2d");
    if (!context) return;
    context.clearRect(0, 0, this.canvas.width, this.canvas.height);

    const grid = plane.grid;
    const axes = this.axes();
    if (!grid || !axes) {
      context.fillStyle = "#888";
      context.fillText("no plane data — pick a column and refresh", 70, 80);
      this.renderProbe();
      return;
    }
    const [xAxis, yAxis] = axes;
    const xs = grid.axes[0].values;
    const ys = grid.axes[1].values;
    const cells = grid.values as (number | null)[][][];

    let lo = Infinity;
    let hi = -Infinity;
    for (const row of cells) {
      for (const cell of row) {
        const v = cell[0];
        if (v !== null && Number.isFinite(v)) {
          lo = Math.min(lo, v);
          hi = Math.max(hi, v);
        }
      }
    }
    const logLo = Math.log10(Math.max(lo, 1e-12));
    const logSpan = Math.max(Math.log10(hi) - logLo, 1e-9);

    for (let i = 0; i < xs.length; i++) {
      for (let j = 0; j < ys.length; j++) {
        const value = cells[i][j][0];
        if (value === null) continue;
        const x0 = xAxis.toPx(i === 0 ? xs[0] : Math.sqrt(xs[i - 1] * xs[i]));
        const x1 = xAxis.toPx(i === xs.length - 1 ? xs[i] : Math.sqrt(xs[i] * xs[i + 1]));
        const y0 = yAxis.toPx(j === 0 ? ys[0] : Math.sqrt(ys[j - 1] * ys[j]));
        const y1 = yAxis.toPx(j === ys.length - 1 ? ys[j] : Math.sqrt(ys[j] * ys[j + 1]));
        context.fillStyle = heatColor((Math.log10(value) - logLo) / logSpan);
        context.fillRect(x0, Math.min(y0, y1), Math.max(1, x1 - x0), Math.abs(y0 - y1));
      }
    }

    context.strokeStyle = "#111";
    for (const line of plane.isoLines) {
      context.beginPath();
      let started = false;
      for (const [cc, dio] of line.points) {
        if (dio < yAxis.min || cc < xAxis.min) continue;
        const px = xAxis.toPx(cc);
        const py = yAxis.toPx(Math.max(dio, yAxis.min));
        if (!started) {
          context.moveTo(px, py);
          started = true;
        } else {
          context.lineTo(px, py);
        }
      }
      context.stroke();
    }

    if (plane.crossover && plane.crossover.points.length) {
      context.strokeStyle = "#fff";
      context.setLineDash([4, 3]);
      context.beginPath();
      let started = false;
      for (const [bwGbps, xbs] of plane.crossover.points) {
        const bw = bwGbps * 1e9;
        if (xbs < xAxis.min || xbs > xAxis.max) continue;
        const px = xAxis.toPx(xbs);
        const py = yAxis.toPx(bw);
        if (!started) {
          context.moveTo(px, py);
          started = true;
        } else {
          context.lineTo(px, py);
        }
      }
      context.stroke();
      context.setLineDash([]);
    }

    context.fillStyle = "#333";
    context.fillText(grid.axes[0].param, this.canvas.width / 2, this.canvas.height - 8);
    context.save();
    context.translate(14, this.canvas.height / 2);
    context.rotate(-Math.PI / 2);
    context.fillText(grid.axes[1].param, 0, 0);
    context.restore();

    if (plane.probe) {
      const px = xAxis.toPx(plane.probe.x);
      const py = yAxis.toPx(plane.probe.y);
      context.strokeStyle = "#fff";
      context.beginPath();
      context.arc(px, py, 4, 0, 2 * Math.PI);
      context.stroke();
    }
    this.renderProbe();
  }

  private renderProbe(): void {
    const probe = this.store.plane.probe;
    if (!probe) {
      this.readout.textContent = "hover to probe; click to pin as a column";
      return;
    }
    const metric = this.store.plane.metric;
    const parts = [
      `${this.store.plane.kind === "cc_dio" ? "cc" : "xbs"} ${formatSig(probe.x)}`,
      `${this.store.plane.kind === "cc_dio" ? "dio" : "bw"} ${formatSig(probe.y)}`,
      `${metricLabel(metric)} = ${formatSig(probe.result[metric])}`,
      `PIM ${formatSig(probe.result["tp_pim_gops"])} GOPS`,
      `CPU ${formatSig(probe.result["tp_cpu_gops"])} GOPS`,
      `combined ${formatSig(probe.result["tp_combined_gops"])} GOPS`,
      `power ${formatSig(probe.result["p_combined_w"])} W`,
    ];
    this.readout.textContent = parts.join("  ·  ");
  }
}
