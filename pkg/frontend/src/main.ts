import { ApiClient, ApiError } from "./api.js";
import {
  renderMatchHeap,
  renderMovePicker,
  renderPanel,
  renderTokenStack,
  selectedMove,
} from "./board.js";
import { buildPredicatePanel } from "./panel.js";
import {
  startSession,
  submitMove,
  type HumanRole,
  type SessionState,
} from "./session.js";
import { RULE110_SPEC, type Move, type SpecDocument } from "./types.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
};

const client = new ApiClient("");
let session: SessionState | null = null;
let offeredMoves: Move[] = [];

function setBanner(text: string, kind: "info" | "error" | "win" | "lose" = "info") {
  const el = $<HTMLDivElement>("banner");
  el.textContent = text;
  el.className = `banner ${kind}`;
}

function readSpec(): SpecDocument {
  return {
    gamma: Number(($<HTMLInputElement>("gamma")).value),
    Gamma: Number(($<HTMLInputElement>("Gamma")).value),
    L: ($<HTMLInputElement>("L")).value,
    C: ($<HTMLInputElement>("C")).value,
    R: ($<HTMLInputElement>("R")).value,
    xi: Number(($<HTMLInputElement>("xi")).value),
  };
}

async function refreshBoard(): Promise<void> {
  if (!session) {
    return;
  }
  const { spec, current } = session;
  renderMatchHeap($("matches"), current);
  const colors =
    current.X > 0
      ? (await client.window(spec, 1, current.X, 0)).cells[0]
      : [];
  renderTokenStack($("tokens"), colors);

  if (session.status === "human-turn") {
    offeredMoves = await client.moves(spec, current);
    renderMovePicker($<HTMLSelectElement>("move-picker"), offeredMoves);
    setBanner(
      `your move — engine verdict for this position: ${(await client.outcome(spec, current)).outcome}`,
    );
  } else {
    offeredMoves = [];
    renderMovePicker($<HTMLSelectElement>("move-picker"), []);
    if (session.status === "human-won") {
      setBanner("engine has no legal move — you win", "win");
    } else {
      const why =
        session.history.length === 0
          ? "no legal moves — you lose"
          : "you have no legal move — engine wins";
      setBanner(why, "lose");
    }
  }

  try {
    const panel = await buildPredicatePanel(client, spec, current);
    renderPanel($<HTMLCanvasElement>("panel"), panel);
    $("predicate-verdict").textContent =
      panel.predicate === null
        ? "prediction not defined here"
        : `position predicted ${panel.predicate} from the grid`;
  } catch (err) {
    $("predicate-verdict").textContent = `panel unavailable: ${String(err)}`;
  }

  $("history").textContent = session.history
    .map((e, i) => `${i + 1}. ${e.mover} took t=${e.move.t} m=${e.move.m}`)
    .join("\n");
}

async function onStart(): Promise<void> {
  try {
    const spec = readSpec();
    const initial = {
      X: Number(($<HTMLInputElement>("X")).value),
      Y: Number(($<HTMLInputElement>("Y")).value),
      mp: Number(($<HTMLInputElement>("mp")).value),
    };
    const role = ($<HTMLSelectElement>("role")).value as HumanRole;
    session = await startSession(client, spec, initial, role);
    await refreshBoard();
  } catch (err) {
    if (err instanceof ApiError && err.code === "service-unreachable") {
      setBanner("engine service unreachable — is `cagames serve` running?", "error");
    } else {
      setBanner(String(err), "error");
    }
  }
}

async function onSubmit(): Promise<void> {
  if (!session || session.status !== "human-turn") {
    return;
  }
  const move = selectedMove($<HTMLSelectElement>("move-picker"));
  if (!move || !offeredMoves.some((m) => m.t === move.t && m.m === move.m)) {
    setBanner("pick a move from the list", "error");
    return;
  }
  const picker = $<HTMLSelectElement>("move-picker");
  const button = $<HTMLButtonElement>("submit-move");
  picker.disabled = true;
  button.disabled = true;
  try {
    session = await submitMove(client, session, move);
    await refreshBoard();
  } catch (err) {
    // state is unchanged on failure; surface the error and keep playing
    setBanner(String(err), "error");
  } finally {
    button.disabled = false;
    if (session && session.status === "human-turn") {
      picker.disabled = false;
    }
  }
}

function fillDefaults(): void {
  const spec = RULE110_SPEC;
  ($<HTMLInputElement>("gamma")).value = String(spec.gamma);
  ($<HTMLInputElement>("Gamma")).value = String(spec.Gamma);
  ($<HTMLInputElement>("L")).value = spec.L;
  ($<HTMLInputElement>("C")).value = spec.C;
  ($<HTMLInputElement>("R")).value = spec.R;
  ($<HTMLInputElement>("xi")).value = String(spec.xi);
  ($<HTMLInputElement>("X")).value = "6";
  ($<HTMLInputElement>("Y")).value = "2";
  ($<HTMLInputElement>("mp")).value = "3";
}

window.addEventListener("DOMContentLoaded", () => {
  fillDefaults();
  $("start").addEventListener("click", () => void onStart());
  $("submit-move").addEventListener("click", () => void onSubmit());
});
