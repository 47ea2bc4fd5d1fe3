import type { ApiClient } from "./api.js";
import type { Move, Position, SpecDocument } from "./types.js";
import { samePosition } from "./types.js";

export type HumanRole = "first" | "second";
export type Mover = "human" | "engine";
export type SessionStatus = "human-turn" | "human-won" | "engine-won";

export interface HistoryEntry {
  /** Position the move was made from. */
  position: Position;
  move: Move;
  mover: Mover;
}

export interface SessionState {
  spec: SpecDocument;
  initial: Position;
  current: Position;
  history: HistoryEntry[];
  humanRole: HumanRole;
  status: SessionStatus;
}

/**
 * The engine's reply policy: the winning move when the position is N,
 * otherwise the first legal move. Returns null when the engine has no
 * move (it loses).
 */
async function engineReply(
  client: ApiClient,
  spec: SpecDocument,
  position: Position,
): Promise<Move | null> {
  const legal = await client.moves(spec, position);
  if (legal.length === 0) {
    return null;
  }
  const verdict = await client.outcome(spec, position);
  return verdict.bestMove ?? legal[0];
}

async function settle(
  client: ApiClient,
  state: SessionState,
): Promise<SessionState> {
  // engine moves (possibly concluding the game), then the human either
  // has a turn or is stuck
  const engineMove = await engineReply(client, state.spec, state.current);
  if (engineMove === null) {
    return { ...state, status: "human-won" };
  }
  const after = await client.apply(state.spec, state.current, engineMove);
  const next: SessionState = {
    ...state,
    current: after,
    history: [
      ...state.history,
      { position: state.current, move: engineMove, mover: "engine" },
    ],
  };
  const humanMoves = await client.moves(next.spec, next.current);
  if (humanMoves.length === 0) {
    return { ...next, status: "engine-won" };
  }
  return { ...next, status: "human-turn" };
}

export async function startSession(
  client: ApiClient,
  spec: SpecDocument,
  initial: Position,
  humanRole: HumanRole,
): Promise<SessionState> {
  const state: SessionState = {
    spec,
    initial,
    current: initial,
    history: [],
    humanRole,
    status: "human-turn",
  };
  if (humanRole === "second") {
    return settle(client, state);
  }
  const humanMoves = await client.moves(spec, initial);
  if (humanMoves.length === 0) {
    return { ...state, status: "engine-won" };
  }
  return state;
}

/**
 * Apply a human move (it must come from the server's legal list) and
 * let the engine answer. The input state is never mutated; on any API
 * failure it remains the valid session.
 */
export async function submitMove(
  client: ApiClient,
  state: SessionState,
  move: Move,
): Promise<SessionState> {
  if (state.status !== "human-turn") {
    throw new Error("session is over");
  }
  const after = await client.apply(state.spec, state.current, move);
  const next: SessionState = {
    ...state,
    current: after,
    history: [
      ...state.history,
      { position: state.current, move, mover: "human" },
    ],
  };
  return settle(client, next);
}

/** Replaying the history through the server must reproduce `current`. */
export async function replayConsistent(
  client: ApiClient,
  state: SessionState,
): Promise<boolean> {
  let position = state.initial;
  for (const entry of state.history) {
    if (!samePosition(position, entry.position)) {
      return false;
    }
    position = await client.apply(state.spec, position, entry.move);
  }
  return samePosition(position, state.current);
}

/** Transcript in the CLI path-check syntax: "t,m;t,m;...". */
export function transcript(state: SessionState): string {
  return state.history.map((e) => `${e.move.t},${e.move.m}`).join(";");
}
