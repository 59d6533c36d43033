import type { Api, ScoreResponse, Span, SuggestionResponse } from "./types.js";

async function post<T>(base: string, path: string, body: unknown): Promise<T> {
  const resp = await fetch(base + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    throw new Error(`${path} failed with ${resp.status}`);
  }
  return resp.json() as Promise<T>;
}

export function createApi(base = ""): Api {
  return {
    score: (text) => post<ScoreResponse>(base, "/api/score", { text }),
    alternatives: (text, span: Span) =>
      post<SuggestionResponse>(base, "/api/alternatives", { text, span }),
    scoreSpan: (text, span: Span) =>
      post<{ score_0_100: number }>(base, "/api/score-span", { text, span }),
    feedback: (text, comment) =>
      post<{ accepted: boolean }>(base, "/api/feedback", { text, comment }),
  };
}
