/** Entry point: wire the store, the HTTP client, and the renderer together. */

import { createApi } from "./api.js";
import { Store } from "./state.js";
import { renderApp, type Actions } from "./views.js";

const STORAGE_KEY = "depra.baseUrl";
const DEFAULT_BASE_URL = "http://127.0.0.1:8080";

function readBaseUrl(): string {
  try {
    return window.localStorage.getItem(STORAGE_KEY) ?? DEFAULT_BASE_URL;
  } catch {
    return DEFAULT_BASE_URL;
  }
}

function writeBaseUrl(url: string): void {
  try {
    window.localStorage.setItem(STORAGE_KEY, url);
  } catch {
    // private mode or storage quota; the in-memory closure still applies
  }
}

export function bootstrap(root: HTMLElement): Store {
  let baseUrl = readBaseUrl();
  const api = createApi(() => baseUrl);
  const store = new Store(api);

  const actions: Actions = {
    retry: () => void store.load(),
    reload: () => void store.reload(),
    select: (alternativeId, propertyName) =>
      store.select(alternativeId, propertyName),
    submitEvaluation: (alternativeId, propertyName, criteria) =>
      void store.submitEvaluation(alternativeId, propertyName, criteria),
    submitWeights: (properties) => void store.submitWeights(properties),
    addOverride: (override) => void store.addOverride(override),
    discardOverrides: () => store.discardOverrides(),
    loadConflicts: (fromId, toId) => void store.loadConflicts(fromId, toId),
    save: () => void store.saveProject(),
    baseUrl: () => baseUrl,
    setBaseUrl: (url) => {
      baseUrl = url.trim() || DEFAULT_BASE_URL;
      writeBaseUrl(baseUrl);
      void store.load();
    },
  };

  store.subscribe(() => renderApp(root, store.getState(), actions));
  void store.load();
  return store;
}

const mount = document.getElementById("app");
if (mount) bootstrap(mount);
