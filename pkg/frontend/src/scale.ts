export type ScaleKind = "linear" | "log";

/** Maps data coordinates to pixel coordinates on one axis. */
export interface Scale {
  kind: ScaleKind;
  domain: [number, number];
  range: [number, number];
  map(x: number): number;
  ticks(): number[];
}

function niceStep(span: number, target: number): number {
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const m of [1, 2, 5, 10]) {
    if (raw <= m * mag) return m * mag;
  }
  return 10 * mag;
}

export function makeScale(
  kind: ScaleKind,
  domain: [number, number],
  range: [number, number],
): Scale {
  let [d0, d1] = domain;
  if (kind === "log") {
    if (d0 <= 0 || d1 <= 0) {
      throw new Error(`log scale needs a positive domain, got [${d0}, ${d1}]`);
    }
    const l0 = Math.log10(d0);
    const l1 = Math.log10(d1);
    return {
      kind,
      domain: [d0, d1],
      range,
      map: (x) =>
        range[0] +
        ((Math.log10(x) - l0) / (l1 - l0 || 1)) * (range[1] - range[0]),
      ticks: () => {
        const ticks: number[] = [];
        const step = Math.max(1, Math.round((l1 - l0) / 8));
        for (let e = Math.ceil(l0); e <= Math.floor(l1) + 1e-9; e += step) {
          ticks.push(Math.pow(10, e));
        }
        return ticks.length >= 2 ? ticks : [d0, d1];
      },
    };
  }
  if (d0 === d1) {
    d0 -= 0.5;
    d1 += 0.5;
  }
  return {
    kind,
    domain: [d0, d1],
    range,
    map: (x) => range[0] + ((x - d0) / (d1 - d0)) * (range[1] - range[0]),
    ticks: () => {
      const step = niceStep(d1 - d0, 6);
      const ticks: number[] = [];
      for (
        let t = Math.ceil(d0 / step) * step;
        t <= d1 + 1e-9 * step;
        t += step
      ) {
        ticks.push(Math.abs(t) < 1e-12 * step ? 0 : t);
      }
      return ticks;
    },
  };
}

/** Compact deterministic tick label. */
export function formatTick(x: number, kind: ScaleKind): string {
  if (x === 0) return "0";
  const e = Math.floor(Math.log10(Math.abs(x)));
  if (kind === "log" || e >= 5 || e <= -4) {
    const mant = x / Math.pow(10, e);
    const m = Math.round(mant * 100) / 100;
    return m === 1 ? `1e${e}` : `${m}e${e}`;
  }
  // up to 6 significant digits, trailing zeros trimmed
  return parseFloat(x.toPrecision(6)).toString();
}
