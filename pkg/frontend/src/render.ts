import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import { findColumn, readCurve } from "./csv.js";
import { encodePng } from "./png.js";
import { Raster, parseColor } from "./raster.js";
import { formatTick, makeScale, type Scale } from "./scale.js";
import type { FigureSpec } from "./spec.js";
import { SvgBuilder, fmt } from "./svg.js";

const PALETTE = ["#1f6fb4", "#d95319", "#2a9d3a", "#8444b0", "#c0392b"];
const GUIDE_COLOR = "#777777";

interface PlottedCurve {
  label: string;
  color: string;
  xs: number[];
  ys: number[];
}

export interface RenderResult {
  svgPath: string;
  pngPath: string;
  warnings: string[];
}

function loadCurves(spec: FigureSpec, warnings: string[]): PlottedCurve[] {
  const out: PlottedCurve[] = [];
  spec.curves.forEach((cs, i) => {
    const path = resolve(spec.baseDir, cs.csv);
    const curve = readCurve(path);
    if (curve.columns.length < 2) {
      throw new Error(`${path} has fewer than two columns`);
    }
    const xcol = cs.xColumn ? findColumn(curve, cs.xColumn, path) : curve.columns[0];
    const ycol = cs.yColumn ? findColumn(curve, cs.yColumn, path) : curve.columns[1];
    let xs = xcol.values;
    let ys = cs.abs ? ycol.values.map(Math.abs) : ycol.values;
    // points a log axis cannot show are dropped, with a warning
    const keep = xs.map(
      (x, k) =>
        (spec.x.scale !== "log" || x > 0) &&
        (spec.y.scale !== "log" || ys[k] > 0),
    );
    if (keep.some((k) => !k)) {
      warnings.push(
        `${cs.csv}: dropped ${keep.filter((k) => !k).length} point(s) not ` +
        `representable on a log axis`,
      );
      xs = xs.filter((_, k) => keep[k]);
      ys = ys.filter((_, k) => keep[k]);
    }
    if (xs.length === 0) {
      warnings.push(`${cs.csv}: curve is empty, drawing axes only`);
    }
    out.push({
      label: cs.label ?? `${ycol.name} (${cs.csv})`,
      color: cs.color ?? PALETTE[i % PALETTE.length],
      xs,
      ys,
    });
  });
  return out;
}

function domainOf(values: number[][], axis: { min?: number; max?: number },
                  log: boolean): [number, number] {
  const flat = values.flat();
  let lo = axis.min ?? (flat.length ? Math.min(...flat) : log ? 1 : 0);
  let hi = axis.max ?? (flat.length ? Math.max(...flat) : log ? 10 : 1);
  if (lo === hi) {
    if (log) {
      lo /= 2;
      hi *= 2;
    } else {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  return [lo, hi];
}

/** Guide segment in pixel coordinates, clipped to the plot box. */
function guideSegment(slope: number, intercept: number, sx: Scale, sy: Scale):
    [number, number, number, number] | null {
  const tx = (x: number) => (sx.kind === "log" ? Math.log10(x) : x);
  const ty = (y: number) => (sy.kind === "log" ? Math.log10(y) : y);
  const ux = (u: number) => (sx.kind === "log" ? Math.pow(10, u) : u);
  const uy = (v: number) => (sy.kind === "log" ? Math.pow(10, v) : v);
  let u0 = tx(sx.domain[0]);
  let u1 = tx(sx.domain[1]);
  const vlo = Math.min(ty(sy.domain[0]), ty(sy.domain[1]));
  const vhi = Math.max(ty(sy.domain[0]), ty(sy.domain[1]));
  if (slope !== 0) {
    // keep only the u-interval where v = slope*u + intercept stays in box
    const ua = (vlo - intercept) / slope;
    const ub = (vhi - intercept) / slope;
    u0 = Math.max(u0, Math.min(ua, ub));
    u1 = Math.min(u1, Math.max(ua, ub));
    if (u0 >= u1) return null;
  } else if (intercept < vlo || intercept > vhi) {
    return null;
  }
  const v0 = slope * u0 + intercept;
  const v1 = slope * u1 + intercept;
  return [sx.map(ux(u0)), sy.map(uy(v0)), sx.map(ux(u1)), sy.map(uy(v1))];
}

/** Render one figure to <out>.svg and <out>.png; pure in (spec, CSV bytes). */
export function renderFigure(spec: FigureSpec): RenderResult {
  const warnings: string[] = [];
  const curves = loadCurves(spec, warnings);

  const mLeft = 64;
  const mRight = 16;
  const mTop = spec.title ? 36 : 16;
  const mBottom = 48;
  const box = {
    x0: mLeft,
    y0: mTop,
    x1: spec.width - mRight,
    y1: spec.height - mBottom,
  };

  const xDomain = domainOf(curves.map((c) => c.xs), spec.x, spec.x.scale === "log");
  const yDomain = domainOf(curves.map((c) => c.ys), spec.y, spec.y.scale === "log");
  const sx = makeScale(spec.x.scale, xDomain, [box.x0, box.x1]);
  const sy = makeScale(spec.y.scale, yDomain, [box.y1, box.y0]);

  const svg = new SvgBuilder(spec.width, spec.height, {
    "data-x-scale": spec.x.scale,
    "data-y-scale": spec.y.scale,
    "data-x-domain": `${sx.domain[0]} ${sx.domain[1]}`,
    "data-y-domain": `${sy.domain[0]} ${sy.domain[1]}`,
    "data-box": `${box.x0} ${box.y0} ${box.x1} ${box.y1}`,
  });
  const img = new Raster(spec.width, spec.height);
  const black: [number, number, number] = [0, 0, 0];

  svg.element("rect", {
    x: "0", y: "0", width: String(spec.width), height: String(spec.height),
    fill: "#ffffff",
  });
  if (spec.title) {
    svg.text(spec.width / 2, 22, spec.title,
             { "text-anchor": "middle", "font-size": "15" });
    img.text(spec.width / 2, 12, spec.title, black, 2, "center");
  }

  // frame
  for (const [a, b, c, d] of [
    [box.x0, box.y1, box.x1, box.y1],
    [box.x0, box.y0, box.x0, box.y1],
    [box.x0, box.y0, box.x1, box.y0],
    [box.x1, box.y0, box.x1, box.y1],
  ] as const) {
    svg.line(a, b, c, d, { stroke: "#000000", "stroke-width": "1", class: "frame" });
    img.line(a, b, c, d, black, 1);
  }

  for (const t of sx.ticks()) {
    const px = sx.map(t);
    svg.line(px, box.y1, px, box.y1 + 5, { stroke: "#000000", class: "tick" });
    svg.text(px, box.y1 + 18, formatTick(t, sx.kind),
             { "text-anchor": "middle", "font-size": "11" });
    img.line(px, box.y1, px, box.y1 + 5, black, 1);
    img.text(px, box.y1 + 9, formatTick(t, sx.kind), black, 1, "center");
  }
  for (const t of sy.ticks()) {
    const py = sy.map(t);
    svg.line(box.x0 - 5, py, box.x0, py, { stroke: "#000000", class: "tick" });
    svg.text(box.x0 - 8, py + 4, formatTick(t, sy.kind),
             { "text-anchor": "end", "font-size": "11" });
    img.line(box.x0 - 5, py, box.x0, py, black, 1);
    img.text(box.x0 - 8, py - 3, formatTick(t, sy.kind), black, 1, "right");
  }
  svg.text((box.x0 + box.x1) / 2, spec.height - 12, spec.x.label,
           { "text-anchor": "middle" });
  img.text((box.x0 + box.x1) / 2, spec.height - 22, spec.x.label, black, 1,
           "center");
  svg.element("text", {
    x: "16", y: fmt((box.y0 + box.y1) / 2), "font-size": "13",
    transform: `rotate(-90 16 ${fmt((box.y0 + box.y1) / 2)})`,
    "text-anchor": "middle",
  }, spec.y.label);
  img.textVertical(8, (box.y0 + box.y1) / 2, spec.y.label, black, 1);

  // guide lines come from their declared formulas, never from fits
  spec.guides.forEach((g) => {
    const seg = guideSegment(g.slope, g.intercept, sx, sy);
    if (!seg) {
      warnings.push(`guide slope=${g.slope} lies outside the plot box`);
      return;
    }
    svg.line(seg[0], seg[1], seg[2], seg[3], {
      stroke: GUIDE_COLOR, "stroke-dasharray": "6 4", class: "guide",
      "data-slope": String(g.slope), "data-intercept": String(g.intercept),
    });
    img.line(seg[0], seg[1], seg[2], seg[3], [119, 119, 119], 1, 5);
    if (g.label) {
      svg.text(seg[2] - 4, seg[3] - 6, g.label,
               { "text-anchor": "end", fill: GUIDE_COLOR, "font-size": "11" });
      img.text(seg[2] - 4, seg[3] - 14, g.label, [119, 119, 119], 1, "right");
    }
  });

  curves.forEach((c) => {
    if (c.xs.length === 0) return;
    const px = c.xs.map((x) => sx.map(x));
    const py = c.ys.map((y) => sy.map(y));
    svg.polyline(px, py, {
      stroke: c.color, "stroke-width": "2", class: "curve",
      "data-label": c.label,
    });
    img.polyline(px, py, parseColor(c.color), 2);
  });

  // legend, top right inside the frame
  curves.forEach((c, i) => {
    const ly = box.y0 + 16 + 18 * i;
    const lx = box.x1 - 150;
    svg.line(lx, ly - 4, lx + 22, ly - 4,
             { stroke: c.color, "stroke-width": "2", class: "legend" });
    svg.text(lx + 28, ly, c.label, { "font-size": "12" });
    img.line(lx, ly - 4, lx + 22, ly - 4, parseColor(c.color), 2);
    img.text(lx + 28, ly - 7, c.label, black, 1);
  });

  const stem = resolve(spec.baseDir, spec.out);
  mkdirSync(dirname(stem), { recursive: true });
  const svgPath = `${stem}.svg`;
  const pngPath = `${stem}.png`;
  writeFileSync(svgPath, svg.toString());
  writeFileSync(pngPath, encodePng(spec.width, spec.height, img.data));
  return { svgPath, pngPath, warnings };
}
