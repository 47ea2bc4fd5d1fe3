import type {
  Move,
  Outcome,
  OutcomeResponse,
  Position,
  SpecDocument,
  WindowResponse,
} from "./types.js";

/** Error body surfaced by the service: machine code + human message. */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

/** Thin typed client for the engine's JSON endpoints. */
export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, "service-unreachable", String(err));
    }
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(
        response.status,
        payload.code ?? "unknown",
        payload.message ?? "request failed",
      );
    }
    return payload as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await fetch(this.baseUrl + "/api/health");
    return (await response.json()) as { status: string; version: string };
  }

  window(
    spec: SpecDocument,
    x0: number,
    x1: number,
    rows: number,
  ): Promise<WindowResponse> {
    return this.post("/api/ca/window", { spec, x0, x1, rows });
  }

  async moves(spec: SpecDocument, position: Position): Promise<Move[]> {
    const body = await this.post<{ moves: Move[] }>("/api/game/moves", {
      spec,
      position,
    });
    return body.moves;
  }

  async apply(
    spec: SpecDocument,
    position: Position,
    move: Move,
  ): Promise<Position> {
    const body = await this.post<{ position: Position }>("/api/game/apply", {
      spec,
      position,
      move,
    });
    return body.position;
  }

  outcome(spec: SpecDocument, position: Position): Promise<OutcomeResponse> {
    return this.post("/api/game/outcome", { spec, position });
  }

  async predicate(spec: SpecDocument, position: Position): Promise<Outcome> {
    const body = await this.post<{ outcome: Outcome }>("/api/game/predicate", {
      spec,
      position,
    });
    return body.outcome;
  }
}
