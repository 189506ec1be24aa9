import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, NetworkError, createApi } from "../src/api.js";

function jsonResponse(status: number, body: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    text: async () => JSON.stringify(body),
  } as unknown as Response;
}

const BASE = "http://server.test:9999";

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("createApi", () => {
  it("resolves with the parsed body on success", async () => {
    const fetchMock = vi.fn(async () =>
      jsonResponse(200, { revision: 3, project: { name: "p" } }),
    );
    vi.stubGlobal("fetch", fetchMock);
    const api = createApi(() => BASE);
    const result = await api.getProject();
    expect(result.revision).toBe(3);
    expect(fetchMock).toHaveBeenCalledWith(
      `${BASE}/project`,
      expect.objectContaining({ method: "GET" }),
    );
  });

  it("strips trailing slashes from the base URL", async () => {
    const fetchMock = vi.fn(async (_url: string, _init?: RequestInit) =>
      jsonResponse(200, { revision: 1 }),
    );
    vi.stubGlobal("fetch", fetchMock);
    const api = createApi(() => `${BASE}//`);
    await api.getDpn();
    expect(fetchMock.mock.calls[0]?.[0]).toBe(`${BASE}/dpn`);
  });

  it("turns the error envelope into an ApiError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () =>
        jsonResponse(409, {
          error: { code: "conflict", message: "expected revision 2, found 5" },
        }),
      ),
    );
    const api = createApi(() => BASE);
    const failure = await api.getProject().catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(409);
    expect(failure.code).toBe("conflict");
    expect(failure.message).toBe("expected revision 2, found 5");
  });

  it("maps non-envelope failures to a generic ApiError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () =>
        ({ ok: false, status: 502, text: async () => "bad gateway" }) as unknown as Response,
      ),
    );
    const api = createApi(() => BASE);
    const failure = await api.getDpn().catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.code).toBe("http");
    expect(failure.status).toBe(502);
  });

  it("maps fetch rejections to NetworkError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        throw new TypeError("fetch failed");
      }),
    );
    const api = createApi(() => BASE);
    const failure = await api.getProject().catch((error) => error);
    expect(failure).toBeInstanceOf(NetworkError);
    expect(failure.message).toContain("/project");
  });

  it("sends the revision and the whole criteria object on PUT", async () => {
    const fetchMock = vi.fn(async (_url: string, _init?: RequestInit) =>
      jsonResponse(200, { revision: 2, result: null, missing: ["security"] }),
    );
    vi.stubGlobal("fetch", fetchMock);
    const api = createApi(() => BASE);
    const criteria = { overall_acceptance: 0.6, comment: "check me" };
    await api.putEvaluation("alt one", "safety", criteria, 7);
    const [url, init] = fetchMock.mock.calls[0]!;
    expect(url).toBe(`${BASE}/alternatives/alt%20one/evaluations/safety`);
    expect(init?.method).toBe("PUT");
    expect(init?.headers).toEqual({ "Content-Type": "application/json" });
    expect(JSON.parse(init?.body as string)).toEqual({ revision: 7, criteria });
  });

  it("URL-encodes the conflict endpoints", async () => {
    const fetchMock = vi.fn(async (_url: string, _init?: RequestInit) =>
      jsonResponse(200, { revision: 1, pairs: [] }),
    );
    vi.stubGlobal("fetch", fetchMock);
    const api = createApi(() => BASE);
    await api.conflicts("from&id", "to id");
    expect(fetchMock.mock.calls[0]?.[0]).toBe(
      `${BASE}/conflicts?from=from%26id&to=to%20id`,
    );
  });
});
