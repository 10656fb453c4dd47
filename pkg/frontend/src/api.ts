// Thin client over the session endpoints. Every method returns the fresh
// SessionView the service responded with.

import { HintMap, SessionView } from './types';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(detail);
  }
}

async function decode(response: Response): Promise<unknown> {
  const body: unknown = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail =
      typeof body === 'object' && body !== null && 'detail' in body
        ? (body as { detail: unknown }).detail
        : body;
    const text = typeof detail === 'string' ? detail : JSON.stringify(detail);
    throw new ApiError(response.status, text);
  }
  return body;
}

export class SessionApi {
  constructor(
    private readonly baseUrl: string,
    private sessionId: string | null = null,
  ) {}

  get id(): string {
    if (this.sessionId === null) throw new Error('no session created yet');
    return this.sessionId;
  }

  async createSession(document: unknown): Promise<SessionView> {
    const body = (await decode(
      await fetch(`${this.baseUrl}/sessions`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(document),
      }),
    )) as { id: string; view: SessionView };
    this.sessionId = body.id;
    return body.view;
  }

  async getView(): Promise<SessionView> {
    return (await decode(
      await fetch(`${this.baseUrl}/sessions/${this.id}`),
    )) as SessionView;
  }

  async chairAction(action: string): Promise<SessionView> {
    return (await decode(
      await fetch(`${this.baseUrl}/sessions/${this.id}/chair`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify({ action }),
      }),
    )) as SessionView;
  }

  async universeMove(
    move: { mode: 'adversarial' } | { ranks: number[] },
  ): Promise<SessionView> {
    return (await decode(
      await fetch(`${this.baseUrl}/sessions/${this.id}/universe`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(move),
      }),
    )) as SessionView;
  }

  async hint(): Promise<HintMap> {
    return (await decode(
      await fetch(`${this.baseUrl}/sessions/${this.id}/hint`),
    )) as HintMap;
  }
}
