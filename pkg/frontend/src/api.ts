// Thin fetch wrapper around the game service.

import type { NewGameRequest, View } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(`service error ${status}`);
  }
}

export class Client {
  constructor(private base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await res.json().catch(() => null);
    if (!res.ok) {
      throw new ApiError(res.status, body && (body as { detail?: unknown }).detail);
    }
    return body as T;
  }

  newGame(req: NewGameRequest): Promise<View> {
    return this.request<View>("/games", { method: "POST", body: JSON.stringify(req) });
  }

  getView(gameId: string, seat: number, locale: string): Promise<View> {
    return this.request<View>(
      `/games/${gameId}?seat=${seat}&locale=${encodeURIComponent(locale)}`,
    );
  }

  postAction(gameId: string, seat: number, action: number, locale: string): Promise<View> {
    return this.request<View>(`/games/${gameId}/actions?locale=${encodeURIComponent(locale)}`, {
      method: "POST",
      body: JSON.stringify({ seat, action }),
    });
  }

  health(): Promise<{ status: string }> {
    return this.request<{ status: string }>("/health");
  }
}
