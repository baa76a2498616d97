#!/usr/bin/env node
import { renderFigure } from "./render.js";
import { loadSpec } from "./spec.js";

export function main(argv: string[]): number {
  if (argv.length === 0 || argv.includes("--help")) {
    console.error("usage: plotgen SPEC.json|SPEC.cfg [...]");
    return argv.length === 0 ? 1 : 0;
  }
  for (const path of argv) {
    let result;
    try {
      result = renderFigure(loadSpec(path));
    } catch (err) {
      console.error(`plotgen: ${path}: ${(err as Error).message}`);
      return 1;
    }
    for (const w of result.warnings) {
      console.error(`plotgen: warning: ${w}`);
    }
    console.log(result.svgPath);
    console.log(result.pngPath);
  }
  return 0;
}

process.exitCode = main(process.argv.slice(2));
