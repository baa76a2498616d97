import { GLYPH_H, GLYPH_W, glyph, textWidth } from "./font.js";

export type RGB = [number, number, number];

/** Software RGBA canvas: enough drawing to rasterize a line plot. */
export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number, background: RGB = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.data[4 * i] = background[0];
      this.data[4 * i + 1] = background[1];
      this.data[4 * i + 2] = background[2];
      this.data[4 * i + 3] = 255;
    }
  }

  set(x: number, y: number, color: RGB): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = 4 * (y * this.width + x);
    this.data[i] = color[0];
    this.data[i + 1] = color[1];
    this.data[i + 2] = color[2];
    this.data[i + 3] = 255;
  }

  dot(x: number, y: number, color: RGB, thickness: number): void {
    const r = Math.floor(thickness / 2);
    for (let dy = -r; dy <= r; dy++) {
      for (let dx = -r; dx <= r; dx++) {
        this.set(x + dx, y + dy, color);
      }
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, color: RGB,
       thickness = 1, dash = 0): void {
    const steps = Math.max(Math.abs(x1 - x0), Math.abs(y1 - y0), 1);
    for (let s = 0; s <= steps; s++) {
      if (dash > 0 && Math.floor(s / dash) % 2 === 1) continue;
      const t = s / steps;
      this.dot(x0 + t * (x1 - x0), y0 + t * (y1 - y0), color, thickness);
    }
  }

  polyline(xs: number[], ys: number[], color: RGB, thickness = 2): void {
    for (let i = 1; i < xs.length; i++) {
      this.line(xs[i - 1], ys[i - 1], xs[i], ys[i], color, thickness);
    }
  }

  text(x: number, y: number, s: string, color: RGB, size = 1,
       align: "left" | "center" | "right" = "left"): void {
    const w = textWidth(s, size);
    let cx = align === "left" ? x : align === "center" ? x - w / 2 : x - w;
    for (const ch of s) {
      const g = glyph(ch);
      for (let row = 0; row < GLYPH_H; row++) {
        for (let col = 0; col < GLYPH_W; col++) {
          if (g[row][col] !== "X") continue;
          for (let sy = 0; sy < size; sy++) {
            for (let sx = 0; sx < size; sx++) {
              this.set(cx + col * size + sx, y + row * size + sy, color);
            }
          }
        }
      }
      cx += (GLYPH_W + 1) * size;
    }
  }

  /** Vertical text, rotated 90 degrees counterclockwise. */
  textVertical(x: number, y: number, s: string, color: RGB, size = 1): void {
    const w = textWidth(s, size);
    let cy = y + w / 2;
    for (const ch of s) {
      const g = glyph(ch);
      for (let row = 0; row < GLYPH_H; row++) {
        for (let col = 0; col < GLYPH_W; col++) {
          if (g[row][col] !== "X") continue;
          for (let sy = 0; sy < size; sy++) {
            for (let sx = 0; sx < size; sx++) {
              this.set(x + row * size + sx, cy - col * size - sy, color);
            }
          }
        }
      }
      cy -= (GLYPH_W + 1) * size;
    }
  }
}

export function parseColor(hex: string): RGB {
  const m = hex.match(/^#([0-9a-fA-F]{6})$/);
  if (!m) throw new Error(`bad color "${hex}" (want #rrggbb)`);
  const v = parseInt(m[1], 16);
  return [(v >> 16) & 255, (v >> 8) & 255, v & 255];
}
