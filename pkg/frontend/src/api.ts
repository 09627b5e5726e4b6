/** Thin typed client for the explanation service JSON API.
 *
 * Every state-bearing response is returned together with its raw body text,
 * so the view layer can prove it renders exactly what the service sent.
 */

import type {
  ExtensionsRecord,
  FrameworkSnapshot,
  SequenceRecord,
  SessionState,
} from "./model.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly reason?: string,
  ) {
    super(message);
  }
}

export interface StateResponse {
  state: SessionState;
  raw: string;
}

export interface SessionOpened extends StateResponse {
  sessionId: string;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<{ body: unknown; raw: string }> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const raw = await response.text();
    let body: unknown = null;
    if (raw) {
      try {
        body = JSON.parse(raw);
      } catch {
        throw new ApiError(response.status, `invalid JSON from service: ${raw.slice(0, 120)}`);
      }
    }
    if (!response.ok) {
      const record = (body ?? {}) as { error?: string; reason?: string };
      throw new ApiError(response.status, record.error ?? `HTTP ${response.status}`, record.reason);
    }
    return { body, raw };
  }

  private post(path: string, payload: unknown): Promise<{ body: unknown; raw: string }> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  async uploadFramework(format: string, content: string): Promise<FrameworkSnapshot> {
    const { body } = await this.post("/api/frameworks", { format, content });
    return body as FrameworkSnapshot;
  }

  async initialSets(frameworkId: string): Promise<unknown> {
    const { body } = await this.request(`/api/frameworks/${frameworkId}/initial-sets`);
    return body;
  }

  async extensions(frameworkId: string, semantics: string): Promise<ExtensionsRecord> {
    const { body } = await this.request(
      `/api/frameworks/${frameworkId}/extensions?semantics=${encodeURIComponent(semantics)}`,
    );
    return body as ExtensionsRecord;
  }

  async decompose(frameworkId: string, extension: string[]): Promise<SequenceRecord> {
    const { body } = await this.post(`/api/frameworks/${frameworkId}/decompose`, { extension });
    return body as SequenceRecord;
  }

  async openSession(frameworkId: string, semantics: string): Promise<SessionOpened> {
    const { body, raw } = await this.post("/api/sessions", { frameworkId, semantics });
    const record = body as { sessionId: string; state: SessionState };
    return { sessionId: record.sessionId, state: record.state, raw };
  }

  async step(sessionId: string, select: string[]): Promise<StateResponse> {
    const { body, raw } = await this.post(`/api/sessions/${sessionId}/step`, { select });
    return { state: (body as { state: SessionState }).state, raw };
  }

  async undo(sessionId: string): Promise<StateResponse> {
    const { body, raw } = await this.post(`/api/sessions/${sessionId}/undo`, {});
    return { state: (body as { state: SessionState }).state, raw };
  }

  async sequence(sessionId: string): Promise<SequenceRecord> {
    const { body } = await this.request(`/api/sessions/${sessionId}/sequence`);
    return body as SequenceRecord;
  }
}
