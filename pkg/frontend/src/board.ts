import type { PredicatePanel } from "./panel.js";
import type { Move, Position } from "./types.js";

/**
 * DOM renderers for the board. Token colors always come from the
 * server's row-0 window (the board never evaluates the coloring rule
 * itself).
 */

export function renderTokenStack(
  container: HTMLElement,
  colors: number[], // colors[i] is token i+1, bottom first
): void {
  container.replaceChildren();
  const stack = document.createElement("div");
  stack.className = "token-stack";
  // render top-down so the last token of the heap sits on top visually
  for (let i = colors.length - 1; i >= 0; i--) {
    const token = document.createElement("div");
    token.className = colors[i] ? "token black" : "token white";
    token.title = `token ${i + 1} (${colors[i] ? "black" : "white"})`;
    stack.appendChild(token);
  }
  if (colors.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-heap";
    empty.textContent = "(no tokens)";
    stack.appendChild(empty);
  }
  container.appendChild(stack);
}

export function renderMatchHeap(container: HTMLElement, position: Position): void {
  container.replaceChildren();
  const matches = document.createElement("div");
  matches.className = "match-heap";
  matches.textContent = "|".repeat(Math.min(position.Y, 60));
  const label = document.createElement("div");
  label.textContent = `${position.Y} matches`;
  const badge = document.createElement("div");
  badge.className = "mp-badge";
  badge.textContent = `previous move took ${position.mp}`;
  container.append(matches, label, badge);
}

export function renderMovePicker(
  select: HTMLSelectElement,
  moves: Move[],
): void {
  select.replaceChildren();
  for (const move of moves) {
    const option = document.createElement("option");
    option.value = `${move.t},${move.m}`;
    option.textContent = `take ${move.t} token${move.t === 1 ? "" : "s"}, ${move.m} match${move.m === 1 ? "" : "es"}`;
    select.appendChild(option);
  }
  select.disabled = moves.length === 0;
}

export function selectedMove(select: HTMLSelectElement): Move | null {
  if (!select.value) {
    return null;
  }
  const [t, m] = select.value.split(",").map(Number);
  return { t, m };
}

const CELL = 18;

export function renderPanel(canvas: HTMLCanvasElement, panel: PredicatePanel): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  if (panel.grid === null) {
    canvas.width = 360;
    canvas.height = 40;
    ctx.fillStyle = "#666";
    ctx.fillText("window too large for the server budget — board-only view", 8, 22);
    return;
  }
  const width = panel.grid[0]?.length ?? 0;
  const height = panel.grid.length;
  canvas.width = width * CELL + 1;
  canvas.height = height * CELL + 1;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let y = 0; y < height; y++) {
    const row = panel.grid[y];
    const top = (height - 1 - y) * CELL; // time flows upward
    for (let i = 0; i < width; i++) {
      ctx.fillStyle = row[i] ? "#c83232" : "#ffffff";
      ctx.fillRect(i * CELL, top, CELL, CELL);
      ctx.strokeStyle = "#ddd";
      ctx.strokeRect(i * CELL + 0.5, top + 0.5, CELL, CELL);
    }
  }
  const outline = (x: number, y: number, color: string) => {
    const i = x - panel.x0;
    if (i < 0 || i >= width || y < 0 || y >= height) {
      return;
    }
    ctx.lineWidth = 2.5;
    ctx.strokeStyle = color;
    ctx.strokeRect(i * CELL + 2, (height - 1 - y) * CELL + 2, CELL - 4, CELL - 4);
    ctx.lineWidth = 1;
  };
  for (const cell of panel.column) {
    outline(cell.x, cell.y, "#1f4fd0");
  }
  if (panel.requiredOne) {
    outline(panel.requiredOne.x, panel.requiredOne.y, "#d01f1f");
  }
}
