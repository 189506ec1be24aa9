/** Thin fetch wrapper around the depra service.
 *
 * Every helper resolves with the parsed JSON body or rejects with
 * ApiError (the server answered with its error envelope) or
 * NetworkError (the server could not be reached at all). Callers
 * branch on `status` for the reload-on-409 and inline-422 flows.
 */

import type {
  ConflictsResponse,
  CriteriaJson,
  DpnResponse,
  ErrorEnvelope,
  ProjectResponse,
  PropertyJson,
  PutEvaluationResponse,
  PutPropertiesResponse,
  RamsResponse,
  SaveResponse,
  WhatifOverride,
  WhatifResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class NetworkError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NetworkError";
  }
}

export interface Api {
  getProject(): Promise<ProjectResponse>;
  getDpn(): Promise<DpnResponse>;
  getRams(alternativeId: string): Promise<RamsResponse>;
  putEvaluation(
    alternativeId: string,
    propertyName: string,
    criteria: CriteriaJson,
    revision: number,
  ): Promise<PutEvaluationResponse>;
  putProperties(
    properties: PropertyJson[],
    revision: number,
  ): Promise<PutPropertiesResponse>;
  whatif(overrides: WhatifOverride[]): Promise<WhatifResponse>;
  conflicts(fromId: string, toId: string): Promise<ConflictsResponse>;
  save(): Promise<SaveResponse>;
}

function isEnvelope(data: unknown): data is ErrorEnvelope {
  if (typeof data !== "object" || data === null) return false;
  const error = (data as { error?: unknown }).error;
  return (
    typeof error === "object" &&
    error !== null &&
    typeof (error as { code?: unknown }).code === "string" &&
    typeof (error as { message?: unknown }).message === "string"
  );
}

/** `baseUrl` is read per request so a settings change needs no rebuild. */
export function createApi(baseUrl: () => string): Api {
  async function request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const url = baseUrl().replace(/\/+$/, "") + path;
    let response: Response;
    try {
      response = await fetch(url, {
        method,
        headers: body === undefined ? {} : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (error) {
      throw new NetworkError(`cannot reach ${url}: ${String(error)}`);
    }
    let data: unknown;
    const text = await response.text();
    if (text !== "") {
      try {
        data = JSON.parse(text);
      } catch {
        data = undefined;
      }
    }
    if (!response.ok) {
      if (isEnvelope(data)) {
        throw new ApiError(response.status, data.error.code, data.error.message);
      }
      throw new ApiError(
        response.status,
        "http",
        `unexpected ${response.status} response from ${path}`,
      );
    }
    return data as T;
  }

  return {
    getProject: () => request<ProjectResponse>("GET", "/project"),
    getDpn: () => request<DpnResponse>("GET", "/dpn"),
    getRams: (alternativeId) =>
      request<RamsResponse>(
        "GET",
        `/alternatives/${encodeURIComponent(alternativeId)}/rams`,
      ),
    putEvaluation: (alternativeId, propertyName, criteria, revision) =>
      request<PutEvaluationResponse>(
        "PUT",
        `/alternatives/${encodeURIComponent(alternativeId)}/evaluations/` +
          encodeURIComponent(propertyName),
        { revision, criteria },
      ),
    putProperties: (properties, revision) =>
      request<PutPropertiesResponse>("PUT", "/properties", {
        revision,
        properties,
      }),
    whatif: (overrides) =>
      request<WhatifResponse>("POST", "/whatif", { overrides }),
    conflicts: (fromId, toId) =>
      request<ConflictsResponse>(
        "GET",
        `/conflicts?from=${encodeURIComponent(fromId)}&to=${encodeURIComponent(toId)}`,
      ),
    save: () => request<SaveResponse>("POST", "/save", {}),
  };
}
