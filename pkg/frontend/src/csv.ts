import { readFileSync } from "node:fs";

/** One column of a ScalarCurve CSV: "name[unit]". */
export interface Column {
  name: string;
  unit: string;
  values: number[];
}

export interface Curve {
  /** #-prefixed "key: value" header lines. */
  metadata: Record<string, string>;
  columns: Column[];
  rows: number;
}

function splitLabel(label: string): { name: string; unit: string } {
  const m = label.match(/^(.*?)\[(.*)\]$/);
  if (!m) return { name: label, unit: "" };
  return { name: m[1], unit: m[2] };
}

/** Parse a ScalarCurve CSV produced by the computation CLI. */
export function readCurve(path: string): Curve {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new Error(`cannot read CSV ${path}: ${(err as Error).message}`);
  }
  const metadata: Record<string, string> = {};
  let header: string[] | null = null;
  const data: number[][] = [];
  for (const raw of text.split("\n")) {
    const line = raw.trimEnd();
    if (!line) continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const idx = body.indexOf(":");
      if (idx > 0) {
        const key = body.slice(0, idx).trim();
        if (!(key in metadata)) metadata[key] = body.slice(idx + 1).trim();
      }
      continue;
    }
    if (header === null) {
      header = line.split(",");
      continue;
    }
    const row = line.split(",").map(Number);
    if (row.some((v) => Number.isNaN(v))) {
      throw new Error(`bad numeric row in ${path}: "${line}"`);
    }
    data.push(row);
  }
  if (header === null) {
    throw new Error(`no column header in ${path}`);
  }
  const columns: Column[] = header.map((label, i) => ({
    ...splitLabel(label),
    values: data.map((row) => row[i]),
  }));
  return { metadata, columns, rows: data.length };
}

/** Find a column by name; a missing column is an error naming it. */
export function findColumn(curve: Curve, name: string, path: string): Column {
  const col = curve.columns.find((c) => c.name === name);
  if (!col) {
    const have = curve.columns.map((c) => c.name).join(", ");
    throw new Error(
      `column "${name}" not found in ${path} (columns: ${have})`,
    );
  }
  return col;
}
