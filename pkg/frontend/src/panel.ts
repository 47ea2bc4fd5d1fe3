import { ApiError, type ApiClient } from "./api.js";
import type { Outcome, Position, SpecDocument } from "./types.js";

export interface Cell {
  x: number;
  y: number;
}

/**
 * Data behind the spacetime side panel: the grid around the position's
 * tracked column x = X - gamma*Y, the column cells that must be 0 for a
 * second-player win, and the cell below that must be 1.
 */
export interface PredicatePanel {
  grid: number[][] | null; // grid[y][x - x0]; null when degraded
  x0: number;
  rows: number;
  column: Cell[];
  requiredOne: Cell | null;
  predicate: Outcome | null; // null outside the verified domain
  degraded: boolean;
}

export async function buildPredicatePanel(
  client: ApiClient,
  spec: SpecDocument,
  position: Position,
  margin = 6,
): Promise<PredicatePanel> {
  const x = position.X - spec.gamma * position.Y;
  const rows = Math.max(position.Y + Math.max(position.mp, 1), 2);
  const x0 = Math.min(x - margin, 0);
  const x1 = Math.max(x + margin, position.X + 1);
  const column: Cell[] = [];
  for (let i = 0; i < position.mp; i++) {
    column.push({ x, y: position.Y + i });
  }
  const requiredOne: Cell | null =
    position.Y > 0 ? { x, y: position.Y - 1 } : null;

  let predicate: Outcome | null = null;
  try {
    predicate = await client.predicate(spec, position);
  } catch (err) {
    if (!(err instanceof ApiError) || err.code !== "out-of-verified-domain") {
      throw err;
    }
  }

  try {
    const window = await client.window(spec, x0, x1, rows);
    return {
      grid: window.cells,
      x0: window.x0,
      rows: window.rows,
      column,
      requiredOne,
      predicate,
      degraded: false,
    };
  } catch (err) {
    if (err instanceof ApiError && err.code === "window-too-large") {
      // board-only view: the grid is too big for the server's budget
      return {
        grid: null,
        x0,
        rows,
        column,
        requiredOne,
        predicate,
        degraded: true,
      };
    }
    throw err;
  }
}
