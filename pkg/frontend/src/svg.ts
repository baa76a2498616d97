/** Tiny deterministic SVG builder: fixed number formatting, no timestamps. */

export function fmt(v: number): string {
  return Number.isInteger(v) ? String(v) : v.toFixed(2);
}

export class SvgBuilder {
  private parts: string[] = [];

  constructor(width: number, height: number,
              attrs: Record<string, string> = {}) {
    const extra = Object.entries(attrs)
      .map(([k, v]) => ` ${k}="${esc(v)}"`)
      .join("");
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
      `height="${height}" viewBox="0 0 ${width} ${height}"` +
      ` font-family="Helvetica, Arial, sans-serif"${extra}>`,
    );
  }

  element(tag: string, attrs: Record<string, string>, text?: string): void {
    const a = Object.entries(attrs)
      .map(([k, v]) => ` ${k}="${esc(v)}"`)
      .join("");
    if (text === undefined) {
      this.parts.push(`<${tag}${a}/>`);
    } else {
      this.parts.push(`<${tag}${a}>${esc(text)}</${tag}>`);
    }
  }

  line(x1: number, y1: number, x2: number, y2: number,
       attrs: Record<string, string>): void {
    this.element("line", {
      x1: fmt(x1), y1: fmt(y1), x2: fmt(x2), y2: fmt(y2), ...attrs,
    });
  }

  text(x: number, y: number, s: string, attrs: Record<string, string> = {}): void {
    this.element("text", { x: fmt(x), y: fmt(y), "font-size": "13", ...attrs }, s);
  }

  polyline(xs: number[], ys: number[], attrs: Record<string, string>): void {
    const pts = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
    this.element("polyline", { points: pts, fill: "none", ...attrs });
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
