/** Application shell: owns the dialog state, talks to the service, and
 * re-renders on every change.
 *
 * The URL fragment always mirrors the serialisable state, so a reload
 * restores the dialog position (a restored results step re-submits its
 * request). Submissions run through a token gate: only the most recent
 * submission may publish its outcome, so a stale response can never
 * overwrite a newer one.
 */

import { RequestGate, ServiceClient, ServiceError } from "./api.js";
import { downloadCsv, downloadPng } from "./download.js";
import { InlineError, renderApp, View } from "./render.js";
import { FieldedError, ResultBundle, csvBytes, csvFilename, runTask } from "./result.js";
import {
  Action,
  DialogState,
  decodeState,
  encodeState,
  initialState,
  inputsComplete,
  invalidatesResult,
  reduce,
} from "./state.js";
import type { ValidatedComponent } from "./types.js";

const BASE_STORAGE_KEY = "vlekit-service-base";
const DEFAULT_BASE = "http://127.0.0.1:8080";

/** Input fields whose value changes which other fields are visible. */
const STRUCTURAL_FIELDS = new Set(["mode", "variant", "rangeMode"]);

function toInlineError(exc: unknown): InlineError {
  if (exc instanceof FieldedError) {
    return { field: exc.field, body: exc.cause.body, status: exc.cause.status };
  }
  if (exc instanceof ServiceError) {
    return { field: null, body: exc.body, status: exc.status };
  }
  return {
    field: null,
    body: { code: "transport_error", message: String((exc as Error).message ?? exc) },
    status: null,
  };
}

export class AppShell {
  private state: DialogState;
  private result: ResultBundle | null = null;
  private echo: Partial<Record<"smiles1" | "smiles2", ValidatedComponent>> = {};
  private error: InlineError | null = null;
  private busy = false;
  private models: string[] | null = null;
  private modelsError: string | null = null;
  private base: string;
  private readonly gate = new RequestGate();
  private lastWrittenHash = "";
  private readonly hashListener = (): void => this.onHashChange();

  constructor(
    private readonly root: HTMLElement,
    base?: string,
  ) {
    this.base = base ?? AppShell.storedBase();
    const restored = decodeState(window.location.hash.replace(/^#/, ""));
    let resubmit = false;
    if (restored === null) {
      this.state = initialState();
    } else if (restored.step === "results") {
      this.state = { ...restored, step: "input" };
      resubmit = true;
    } else {
      this.state = restored;
    }
    window.addEventListener("hashchange", this.hashListener);
    if (this.state.step === "model-select") void this.fetchModels();
    this.syncUrl();
    this.render();
    if (resubmit && inputsComplete(this.state)) void this.submit();
  }

  private static storedBase(): string {
    try {
      return window.localStorage.getItem(BASE_STORAGE_KEY) ?? DEFAULT_BASE;
    } catch {
      return DEFAULT_BASE;
    }
  }

  private client(): ServiceClient {
    return new ServiceClient(this.base);
  }

  private view(): View {
    return {
      state: this.state,
      models: this.models,
      modelsError: this.modelsError,
      echo: this.echo,
      error: this.error,
      busy: this.busy,
      result: this.result,
      base: this.base,
    };
  }

  private render(): void {
    renderApp(this.root, this.view(), {
      dispatch: (action) => this.dispatch(action),
      submit: () => void this.submit(),
      setBase: (base) => this.setBase(base),
      retryModels: () => void this.fetchModels(),
      downloadCsv: () => this.downloadCsv(),
      downloadPng: (canvasId, filename) => void this.downloadPngById(canvasId, filename),
    });
  }

  dispatch(action: Action): void {
    const before = this.state;
    this.state = reduce(before, action);
    if (invalidatesResult(action)) {
      // Orphan any submission still in flight: its token is now stale,
      // so its response will be dropped when it finally arrives.
      this.gate.begin();
      this.busy = false;
      this.result = null;
      this.error = null;
      if (action.type === "edit-input") {
        if (action.field === "smiles1" || action.field === "smiles2") {
          delete this.echo[action.field];
        }
      } else {
        this.echo = {};
      }
    }
    if (this.state.step === "model-select" && this.models === null && this.modelsError === null) {
      void this.fetchModels();
    }
    this.syncUrl();
    if (action.type === "edit-input" && !STRUCTURAL_FIELDS.has(action.field)) {
      // Keep the focused text field alive; only refresh what typing can
      // change: the submit gate, a stale echo line, a stale error box.
      this.updateAfterTyping(action.field);
    } else if (this.state !== before || invalidatesResult(action)) {
      this.render();
    }
  }

  private updateAfterTyping(field: string): void {
    const submit = this.root.querySelector<HTMLButtonElement>("#submit-button");
    if (submit !== null) {
      submit.disabled = this.busy || !inputsComplete(this.state);
      if (!this.busy) submit.textContent = "Validate and compute";
    }
    this.root.querySelector(".error-box")?.remove();
    if (field === "smiles1" || field === "smiles2") {
      this.root.querySelector(`[data-echo-for="${field}"]`)?.remove();
    }
  }

  async fetchModels(): Promise<void> {
    this.models = null;
    this.modelsError = null;
    this.render();
    try {
      const payload = await this.client().models();
      this.models = payload.models;
    } catch (exc) {
      this.modelsError = String((exc as Error).message ?? exc);
    }
    this.render();
  }

  async submit(): Promise<void> {
    if (this.busy || !inputsComplete(this.state)) return;
    const token = this.gate.begin();
    this.busy = true;
    this.error = null;
    this.render();
    try {
      const submission = await runTask(this.client(), this.state);
      if (!this.gate.isCurrent(token)) return;
      this.busy = false;
      this.echo = submission.echo;
      this.result = submission.bundle;
      this.dispatch({ type: "result-ready" });
    } catch (exc) {
      if (!this.gate.isCurrent(token)) return;
      this.busy = false;
      this.error = toInlineError(exc);
      this.render();
    }
  }

  private setBase(base: string): void {
    this.base = base.trim() === "" ? DEFAULT_BASE : base.trim();
    try {
      window.localStorage.setItem(BASE_STORAGE_KEY, this.base);
    } catch {
      // Storage may be unavailable; the base still applies to this page.
    }
    this.models = null;
    this.modelsError = null;
    if (this.state.step === "model-select") void this.fetchModels();
    this.render();
  }

  private downloadCsv(): void {
    if (this.result === null) return;
    const bytes = csvBytes(this.result);
    if (bytes === null) return;
    downloadCsv(bytes, csvFilename(this.result));
  }

  private async downloadPngById(canvasId: string, filename: string): Promise<void> {
    const canvas = this.root.querySelector<HTMLCanvasElement>(`#${canvasId}`);
    if (canvas === null) return;
    await downloadPng(canvas, filename);
  }

  private syncUrl(): void {
    const hash = "#" + encodeState(this.state);
    this.lastWrittenHash = hash;
    if (window.location.hash !== hash) {
      window.history.replaceState(null, "", hash);
    }
  }

  private onHashChange(): void {
    if (window.location.hash === this.lastWrittenHash) return;
    const restored = decodeState(window.location.hash.replace(/^#/, ""));
    if (restored === null) return;
    this.state = restored.step === "results" ? { ...restored, step: "input" } : restored;
    this.result = null;
    this.error = null;
    if (this.state.step === "model-select") void this.fetchModels();
    this.render();
  }

  /** Test hook: the current result bundle, if any. */
  currentResult(): ResultBundle | null {
    return this.result;
  }

  /** Detach the shell from window-level events. */
  dispose(): void {
    window.removeEventListener("hashchange", this.hashListener);
  }
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root === null) return;
  new AppShell(root);
}
