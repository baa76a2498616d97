/** 5x7 bitmap glyphs for raster labels; lowercase maps to uppercase. */

const GLYPHS: Record<string, string[]> = {
  " ": ["     ", "     ", "     ", "     ", "     ", "     ", "     "],
  "0": [" XXX ", "X   X", "X  XX", "X X X", "XX  X", "X   X", " XXX "],
  "1": ["  X  ", " XX  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  "2": [" XXX ", "X   X", "    X", "   X ", "  X  ", " X   ", "XXXXX"],
  "3": ["XXXXX", "   X ", "  X  ", "   X ", "    X", "X   X", " XXX "],
  "4": ["   X ", "  XX ", " X X ", "X  X ", "XXXXX", "   X ", "   X "],
  "5": ["XXXXX", "X    ", "XXXX ", "    X", "    X", "X   X", " XXX "],
  "6": ["  XX ", " X   ", "X    ", "XXXX ", "X   X", "X   X", " XXX "],
  "7": ["XXXXX", "    X", "   X ", "  X  ", " X   ", " X   ", " X   "],
  "8": [" XXX ", "X   X", "X   X", " XXX ", "X   X", "X   X", " XXX "],
  "9": [" XXX ", "X   X", "X   X", " XXXX", "    X", "   X ", " XX  "],
  A: [" XXX ", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  B: ["XXXX ", "X   X", "X   X", "XXXX ", "X   X", "X   X", "XXXX "],
  C: [" XXX ", "X   X", "X    ", "X    ", "X    ", "X   X", " XXX "],
  D: ["XXXX ", "X   X", "X   X", "X   X", "X   X", "X   X", "XXXX "],
  E: ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "XXXXX"],
  F: ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "X    "],
  G: [" XXX ", "X   X", "X    ", "X XXX", "X   X", "X   X", " XXXX"],
  H: ["X   X", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  I: [" XXX ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  J: ["  XXX", "   X ", "   X ", "   X ", "   X ", "X  X ", " XX  "],
  K: ["X   X", "X  X ", "X X  ", "XX   ", "X X  ", "X  X ", "X   X"],
  L: ["X    ", "X    ", "X    ", "X    ", "X    ", "X    ", "XXXXX"],
  M: ["X   X", "XX XX", "X X X", "X X X", "X   X", "X   X", "X   X"],
  N: ["X   X", "XX  X", "X X X", "X  XX", "X   X", "X   X", "X   X"],
  O: [" XXX ", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  P: ["XXXX ", "X   X", "X   X", "XXXX ", "X    ", "X    ", "X    "],
  Q: [" XXX ", "X   X", "X   X", "X   X", "X X X", "X  X ", " XX X"],
  R: ["XXXX ", "X   X", "X   X", "XXXX ", "X X  ", "X  X ", "X   X"],
  S: [" XXXX", "X    ", "X    ", " XXX ", "    X", "    X", "XXXX "],
  T: ["XXXXX", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  "],
  U: ["X   X", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  V: ["X   X", "X   X", "X   X", "X   X", "X   X", " X X ", "  X  "],
  W: ["X   X", "X   X", "X   X", "X X X", "X X X", "XX XX", "X   X"],
  X: ["X   X", "X   X", " X X ", "  X  ", " X X ", "X   X", "X   X"],
  Y: ["X   X", "X   X", " X X ", "  X  ", "  X  ", "  X  ", "  X  "],
  Z: ["XXXXX", "    X", "   X ", "  X  ", " X   ", "X    ", "XXXXX"],
  ".": ["     ", "     ", "     ", "     ", "     ", "  XX ", "  XX "],
  ",": ["     ", "     ", "     ", "     ", "  XX ", "  XX ", " X   "],
  "-": ["     ", "     ", "     ", "XXXXX", "     ", "     ", "     "],
  "+": ["     ", "  X  ", "  X  ", "XXXXX", "  X  ", "  X  ", "     "],
  "=": ["     ", "     ", "XXXXX", "     ", "XXXXX", "     ", "     "],
  "/": ["    X", "    X", "   X ", "  X  ", " X   ", "X    ", "X    "],
  "(": ["   X ", "  X  ", " X   ", " X   ", " X   ", "  X  ", "   X "],
  ")": [" X   ", "  X  ", "   X ", "   X ", "   X ", "  X  ", " X   "],
  "[": [" XXX ", " X   ", " X   ", " X   ", " X   ", " X   ", " XXX "],
  "]": [" XXX ", "   X ", "   X ", "   X ", "   X ", "   X ", " XXX "],
  "^": ["  X  ", " X X ", "X   X", "     ", "     ", "     ", "     "],
  _: ["     ", "     ", "     ", "     ", "     ", "     ", "XXXXX"],
  "|": ["  X  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  "],
  "*": ["     ", "X X X", " XXX ", "XXXXX", " XXX ", "X X X", "     "],
  ":": ["     ", "  XX ", "  XX ", "     ", "  XX ", "  XX ", "     "],
  "~": ["     ", "     ", " X   ", "X X X", "   X ", "     ", "     "],
  "%": ["XX  X", "XX X ", "   X ", "  X  ", " X   ", "X  XX", "X  XX"],
  "'": ["  X  ", "  X  ", "     ", "     ", "     ", "     ", "     "],
};

export const GLYPH_W = 5;
export const GLYPH_H = 7;

export function glyph(ch: string): string[] {
  return GLYPHS[ch] ?? GLYPHS[ch.toUpperCase()] ?? GLYPHS["."];
}

export function textWidth(text: string, size = 1): number {
  return text.length * (GLYPH_W + 1) * size;
}
