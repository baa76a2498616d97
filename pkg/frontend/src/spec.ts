import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import type { ScaleKind } from "./scale.js";

export interface CurveSpec {
  csv: string;
  label?: string;
  color?: string;
  /** Column names; default: first column is x, second is y. */
  xColumn?: string;
  yColumn?: string;
  /** Plot |y| instead of y (log-axis magnitudes). */
  abs?: boolean;
}

/**
 * Guide line declared by formula, never fitted: on linear axes
 * y = slope*x + intercept; with log axes the same relation holds between
 * log10 of the coordinates (a power law y = 10^intercept * x^slope).
 */
export interface GuideSpec {
  slope: number;
  intercept: number;
  label?: string;
}

export interface AxisSpec {
  label: string;
  scale: ScaleKind;
  min?: number;
  max?: number;
}

export interface FigureSpec {
  title?: string;
  width: number;
  height: number;
  x: AxisSpec;
  y: AxisSpec;
  curves: CurveSpec[];
  guides: GuideSpec[];
  /** Output stem; .svg and .png are appended. */
  out: string;
  /** Directory all relative paths resolve against (the spec file's). */
  baseDir: string;
}

const AXIS_KEYS = new Set(["label", "scale", "min", "max"]);
const CURVE_KEYS = new Set(["csv", "label", "color", "xColumn", "yColumn", "abs"]);
const GUIDE_KEYS = new Set(["slope", "intercept", "label"]);

function checkKeys(obj: Record<string, unknown>, allowed: Set<string>, where: string) {
  for (const key of Object.keys(obj)) {
    if (!allowed.has(key)) throw new Error(`unknown key "${key}" in ${where}`);
  }
}

function asAxis(raw: unknown, where: string): AxisSpec {
  const obj = (raw ?? {}) as Record<string, unknown>;
  checkKeys(obj, AXIS_KEYS, where);
  const scale = (obj.scale ?? "linear") as string;
  if (scale !== "linear" && scale !== "log") {
    throw new Error(`${where}.scale must be "linear" or "log", got "${scale}"`);
  }
  return {
    label: String(obj.label ?? ""),
    scale,
    min: obj.min === undefined ? undefined : Number(obj.min),
    max: obj.max === undefined ? undefined : Number(obj.max),
  };
}

function normalize(raw: Record<string, unknown>, baseDir: string): FigureSpec {
  checkKeys(raw, new Set(["title", "width", "height", "x", "y", "curves", "guides", "out"]), "figure");
  const curvesRaw = (raw.curves ?? []) as Record<string, unknown>[];
  if (!Array.isArray(curvesRaw)) throw new Error("curves must be an array");
  const curves = curvesRaw.map((c, i) => {
    checkKeys(c, CURVE_KEYS, `curves[${i}]`);
    if (!c.csv) throw new Error(`curves[${i}] is missing "csv"`);
    return {
      csv: String(c.csv),
      label: c.label === undefined ? undefined : String(c.label),
      color: c.color === undefined ? undefined : String(c.color),
      xColumn: c.xColumn === undefined ? undefined : String(c.xColumn),
      yColumn: c.yColumn === undefined ? undefined : String(c.yColumn),
      abs: Boolean(c.abs ?? false),
    };
  });
  const guidesRaw = (raw.guides ?? []) as Record<string, unknown>[];
  const guides = guidesRaw.map((g, i) => {
    checkKeys(g, GUIDE_KEYS, `guides[${i}]`);
    if (g.slope === undefined || g.intercept === undefined) {
      throw new Error(`guides[${i}] needs slope and intercept`);
    }
    return {
      slope: Number(g.slope),
      intercept: Number(g.intercept),
      label: g.label === undefined ? undefined : String(g.label),
    };
  });
  if (!raw.out) throw new Error('figure spec is missing "out"');
  return {
    title: raw.title === undefined ? undefined : String(raw.title),
    width: Number(raw.width ?? 720),
    height: Number(raw.height ?? 520),
    x: asAxis(raw.x, "x"),
    y: asAxis(raw.y, "y"),
    curves,
    guides,
    out: String(raw.out),
    baseDir,
  };
}

/** Minimal section/key=value format, mirroring the computation configs.
 * Comments are full-line only so that #rrggbb color values survive. */
function parseCfg(text: string): Record<string, unknown> {
  const root: Record<string, unknown> = {};
  let target: Record<string, unknown> = root;
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line || line.startsWith("#")) continue;
    const section = line.match(/^\[(.+)\]$/);
    if (section) {
      const name = section[1].trim();
      if (name === "figure") {
        target = root;
      } else if (name === "x" || name === "y") {
        target = {};
        root[name] = target;
      } else if (name.startsWith("curve")) {
        target = {};
        root.curves = [...((root.curves as unknown[]) ?? []), target];
      } else if (name.startsWith("guide")) {
        target = {};
        root.guides = [...((root.guides as unknown[]) ?? []), target];
      } else {
        throw new Error(`unknown section [${name}] in figure cfg`);
      }
      continue;
    }
    const eq = line.indexOf("=");
    if (eq < 0) throw new Error(`expected key = value, got "${line}"`);
    const key = line.slice(0, eq).trim();
    const value = line.slice(eq + 1).trim();
    const num = Number(value);
    target[key] =
      value !== "" && !Number.isNaN(num) && /^[-+0-9.eE]+$/.test(value)
        ? num
        : value;
  }
  return root;
}

/** Load SPEC.json or SPEC.cfg; relative paths resolve against the spec. */
export function loadSpec(path: string): FigureSpec {
  const text = readFileSync(path, "utf-8");
  const baseDir = dirname(resolve(path));
  const raw = path.endsWith(".cfg")
    ? parseCfg(text)
    : (JSON.parse(text) as Record<string, unknown>);
  return normalize(raw, baseDir);
}
