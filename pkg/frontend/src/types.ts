export interface SpecDocument {
  gamma: number;
  Gamma: number;
  L: string;
  C: string;
  R: string;
  xi: number;
}

export interface Position {
  X: number;
  Y: number;
  mp: number;
}

export interface Move {
  t: number;
  m: number;
}

export type Outcome = "P" | "N";

export interface OutcomeResponse {
  outcome: Outcome;
  bestMove: Move | null;
}

export interface WindowResponse {
  cells: number[][]; // cells[y][i], i = x - x0, y ascending from 0
  x0: number;
  rows: number;
}

export const RULE110_SPEC: SpecDocument = {
  gamma: 1,
  Gamma: 0,
  L: "0",
  C: "11010011101100",
  R: "0",
  xi: 0,
};

export const RULE60_SPEC: SpecDocument = {
  gamma: 0,
  Gamma: 0,
  L: "0",
  C: "",
  R: "1",
  xi: 0,
};

export function sameMove(a: Move, b: Move): boolean {
  return a.t === b.t && a.m === b.m;
}

export function samePosition(a: Position, b: Position): boolean {
  return a.X === b.X && a.Y === b.Y && a.mp === b.mp;
}
