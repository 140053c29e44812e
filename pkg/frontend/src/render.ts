/** DOM rendering for the wizard.
 *
 * The whole dialog renders from a view snapshot; handlers route user
 * events back to the shell. Numbers shown anywhere on this page are the
 * service's own values converted to text, never results of arithmetic
 * done here.
 */

import { computeLayout, drawPlot, hitTest, PlotSpec, Surface } from "./plot.js";
import { activitySpec, diagramSpec, fitCurvesSpec, xySpec } from "./specs.js";
import {
  DialogInputs,
  DialogState,
  Step,
  TASKS,
  Task,
  inputsComplete,
  taskNeedsModel,
  taskSmilesCount,
} from "./state.js";
import type { Action } from "./state.js";
import type {
  ApiErrorBody,
  BoilingResponse,
  ConsistencyCheck,
  ValidatedComponent,
  VaporPressureResponse,
  Warning,
} from "./types.js";
import type { ResultBundle } from "./result.js";

export interface InlineError {
  /** Which SMILES field the diagnostic belongs to, if the service said so. */
  field: "smiles1" | "smiles2" | null;
  body: ApiErrorBody;
  status: number | null;
}

export interface View {
  state: DialogState;
  models: string[] | null;
  modelsError: string | null;
  echo: Partial<Record<"smiles1" | "smiles2", ValidatedComponent>>;
  error: InlineError | null;
  busy: boolean;
  result: ResultBundle | null;
  base: string;
}

export interface Handlers {
  dispatch(action: Action): void;
  submit(): void;
  setBase(base: string): void;
  retryModels(): void;
  downloadCsv(): void;
  downloadPng(canvasId: string, filename: string): void;
}

type Child = Node | string | null;

function h<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  props: Record<string, unknown> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(props)) {
    if (value === undefined || value === null) continue;
    if (key === "class") {
      node.className = String(value);
    } else if (key === "dataset") {
      for (const [dk, dv] of Object.entries(value as Record<string, string>)) {
        node.dataset[dk] = dv;
      }
    } else if (key.startsWith("on") && typeof value === "function") {
      node.addEventListener(key.slice(2).toLowerCase(), value as EventListener);
    } else if (key in node) {
      (node as unknown as Record<string, unknown>)[key] = value;
    } else {
      node.setAttribute(key, String(value));
    }
  }
  for (const child of children) {
    if (child === null) continue;
    node.append(child);
  }
  return node;
}

const STEP_TITLES: Array<{ id: Step; title: string }> = [
  { id: "task-select", title: "1. Task" },
  { id: "model-select", title: "2. Model" },
  { id: "input", title: "3. Inputs" },
  { id: "results", title: "4. Results" },
];

function stepper(view: View, handlers: Handlers): HTMLElement {
  const current = view.state.step;
  const order = STEP_TITLES.map((s) => s.id);
  const currentIdx = order.indexOf(current);
  const items = STEP_TITLES.map(({ id, title }) => {
    const idx = order.indexOf(id);
    const skipped = id === "model-select" && view.state.task !== null && !taskNeedsModel(view.state.task);
    const cls =
      id === current ? "step active" : idx < currentIdx && !skipped ? "step done" : "step pending";
    const button = h(
      "button",
      {
        class: cls,
        type: "button",
        disabled: idx >= currentIdx || skipped,
        onclick: () => handlers.dispatch({ type: "back", to: id }),
      },
      title,
    );
    return h("li", {}, button);
  });
  return h("ol", { class: "stepper" }, ...items);
}

function taskSelectStep(handlers: Handlers): HTMLElement {
  const cards = TASKS.map((task) =>
    h(
      "button",
      {
        class: "task-card",
        type: "button",
        dataset: { task: task.id },
        onclick: () => handlers.dispatch({ type: "select-task", task: task.id }),
      },
      h("strong", {}, task.label),
      h("span", {}, task.blurb),
    ),
  );
  return h(
    "section",
    { class: "panel" },
    h("h2", {}, "What do you want to compute?"),
    h("div", { class: "task-grid" }, ...cards),
  );
}

function modelSelectStep(view: View, handlers: Handlers): HTMLElement {
  const body: Child[] = [h("h2", {}, "Pick an activity model")];
  if (view.modelsError !== null) {
    body.push(
      h(
        "div",
        { class: "error-box" },
        h("strong", {}, "Could not load the model list. "),
        view.modelsError,
        " ",
        h("button", { type: "button", onclick: () => handlers.retryModels() }, "Retry"),
      ),
    );
  } else if (view.models === null) {
    body.push(h("p", { class: "muted" }, "Loading models from the service..."));
  } else {
    const buttons = view.models.map((model) =>
      h(
        "button",
        {
          class: "model-card",
          type: "button",
          dataset: { model },
          onclick: () => handlers.dispatch({ type: "select-model", model }),
        },
        model,
      ),
    );
    body.push(h("div", { class: "task-grid" }, ...buttons));
  }
  return h("section", { class: "panel" }, ...body);
}

function caretLine(text: string, offset: number): HTMLElement {
  const caret = " ".repeat(Math.max(0, Math.min(offset, text.length))) + "^";
  return h("pre", { class: "caret-line" }, `${text}\n${caret}`);
}

function errorBox(view: View): HTMLElement | null {
  const error = view.error;
  if (error === null) return null;
  const children: Child[] = [
    h("strong", {}, `${error.body.code}: `),
    error.body.message,
  ];
  if (error.body.offset !== undefined && error.field !== null) {
    children.push(caretLine(view.state.inputs[error.field], error.body.offset));
  }
  if (error.body.pair !== undefined) {
    children.push(h("div", { class: "muted" }, `main groups without parameters: (${error.body.pair.join(", ")})`));
  }
  if (error.body.detail !== undefined) {
    children.push(h("pre", { class: "caret-line" }, JSON.stringify(error.body.detail, null, 2)));
  }
  return h("div", { class: "error-box" }, ...children);
}

function echoLine(echo: ValidatedComponent | undefined, fieldName: string): HTMLElement | null {
  if (echo === undefined) return null;
  const notes: string[] = [`canonical: ${echo.canonical}`];
  if (echo.groups === null) notes.push("no UNIFAC decomposition");
  if (!echo.antoine_covered) notes.push("no vapor pressure coverage");
  return h("div", { class: "echo", dataset: { echoFor: fieldName } }, notes.join("  |  "));
}

function field(labelText: string, input: HTMLElement, extra: Child = null): HTMLElement {
  return h("label", { class: "field" }, h("span", {}, labelText), input, extra);
}

function textInput(
  view: View,
  handlers: Handlers,
  name: keyof DialogInputs,
  placeholder: string,
): HTMLInputElement {
  return h("input", {
    type: "text",
    value: view.state.inputs[name],
    placeholder,
    dataset: { field: name },
    oninput: (event: Event) => {
      const target = event.target as HTMLInputElement;
      handlers.dispatch({ type: "edit-input", field: name, value: target.value });
    },
  });
}

function selectInput(
  view: View,
  handlers: Handlers,
  name: keyof DialogInputs,
  options: Array<[string, string]>,
): HTMLSelectElement {
  const select = h(
    "select",
    {
      dataset: { field: name },
      onchange: (event: Event) => {
        const target = event.target as HTMLSelectElement;
        handlers.dispatch({ type: "edit-input", field: name, value: target.value });
      },
    },
    ...options.map(([value, label]) =>
      h("option", { value, selected: view.state.inputs[name] === value }, label),
    ),
  );
  return select;
}

function inputStep(view: View, handlers: Handlers): HTMLElement {
  const task = view.state.task as Task;
  const inputs = view.state.inputs;
  const rows: Child[] = [];

  const smilesLabel = taskSmilesCount(task) === 2 ? "Component 1 SMILES" : "Component SMILES";
  rows.push(
    field(
      smilesLabel,
      textInput(view, handlers, "smiles1", "e.g. CCO"),
      echoLine(view.echo.smiles1, "smiles1"),
    ),
  );
  if (taskSmilesCount(task) === 2) {
    rows.push(
      field(
        "Component 2 SMILES",
        textInput(view, handlers, "smiles2", "e.g. CCCCCC"),
        echoLine(view.echo.smiles2, "smiles2"),
      ),
    );
  }

  if (task === "vle") {
    rows.push(
      field(
        "Condition",
        selectInput(view, handlers, "mode", [
          ["isothermal", "isothermal (fixed T)"],
          ["isobaric", "isobaric (fixed p)"],
        ]),
      ),
    );
    if (inputs.mode === "isothermal") {
      rows.push(field("Temperature / K", textInput(view, handlers, "T_K", "350")));
    } else {
      rows.push(field("Pressure / Pa", textInput(view, handlers, "p_Pa", "101325")));
    }
  } else if (task === "activity" || task === "psat") {
    rows.push(field("Temperature / K", textInput(view, handlers, "T_K", "350")));
  } else if (task === "tboil") {
    rows.push(field("Pressure / Pa", textInput(view, handlers, "p_Pa", "101325")));
  } else if (task === "fit") {
    rows.push(
      field(
        "NRTL variant",
        selectInput(view, handlers, "variant", [
          ["3", "3 parameters (a12, a21, c12)"],
          ["6", "6 parameters (adds b12, b21, c12 over T)"],
          ["10", "10 parameters (adds e, f, d terms)"],
        ]),
      ),
    );
    rows.push(
      field(
        "Temperature handling",
        selectInput(view, handlers, "rangeMode", [
          ["single", "single temperature"],
          ["range", "temperature range"],
        ]),
      ),
    );
    if (inputs.rangeMode === "single") {
      rows.push(field("Temperature / K", textInput(view, handlers, "T_K", "340")));
    } else {
      rows.push(field("T low / K", textInput(view, handlers, "T_lo", "300")));
      rows.push(field("T high / K", textInput(view, handlers, "T_hi", "400")));
    }
  }

  const submit = h(
    "button",
    {
      class: "primary",
      type: "button",
      id: "submit-button",
      disabled: view.busy || !inputsComplete(view.state),
      onclick: () => handlers.submit(),
    },
    view.busy ? "Computing..." : "Validate and compute",
  );

  const modelNote =
    view.state.model !== null
      ? h("p", { class: "muted" }, `Model: ${view.state.model}`)
      : null;

  return h(
    "section",
    { class: "panel" },
    h("h2", {}, "Enter the system"),
    modelNote,
    h("div", { class: "form" }, ...rows),
    errorBox(view),
    submit,
  );
}

function numberText(value: number): string {
  // String() of a received double prints the shortest text that parses
  // back to the same bits, so this stays a faithful echo of the payload.
  return String(value);
}

function recordReadout(record: Record<string, number | string>): string {
  return Object.entries(record)
    .map(([key, value]) => `${key} = ${typeof value === "number" ? numberText(value) : value}`)
    .join("   ");
}

function plotPanel(id: string, spec: PlotSpec, handlers: Handlers, csvButton: HTMLElement | null): HTMLElement {
  const canvas = h("canvas", { id, width: spec.width, height: spec.height, class: "plot" });
  const readout = h("div", { class: "readout", dataset: { readoutFor: id } }, "hover a curve for exact values");
  let maybeCtx: Surface | null = null;
  try {
    maybeCtx = ((canvas as HTMLCanvasElement).getContext?.("2d") ?? null) as Surface | null;
  } catch {
    maybeCtx = null;
  }
  const layout = maybeCtx !== null ? drawPlot(maybeCtx, spec) : computeLayout(spec);
  canvas.addEventListener("mousemove", (event: MouseEvent) => {
    const rect = canvas.getBoundingClientRect();
    const hit = hitTest(spec, layout, event.clientX - rect.left, event.clientY - rect.top);
    readout.textContent = hit === null ? "hover a curve for exact values" : recordReadout(hit.record);
  });
  const buttons = h(
    "div",
    { class: "plot-buttons" },
    h(
      "button",
      { type: "button", onclick: () => handlers.downloadPng(id, `${id}.png`) },
      "Download PNG",
    ),
    csvButton,
  );
  return h("div", { class: "plot-panel" }, canvas, readout, buttons);
}

function warningsList(warnings: Warning[]): HTMLElement | null {
  if (warnings.length === 0) return null;
  return h(
    "ul",
    { class: "warnings" },
    ...warnings.map((w) => h("li", {}, `${w.code}: ${w.message}`)),
  );
}

function scalarCard(title: string, value: string, unit: string): HTMLElement {
  return h(
    "div",
    { class: "scalar-card" },
    h("h3", {}, title),
    h("div", { class: "scalar-value" }, value, h("span", { class: "unit" }, ` ${unit}`)),
  );
}

function consistencyBlock(checks: Array<[string, ConsistencyCheck]>, passed: boolean): HTMLElement {
  const rows = checks.map(([name, check]) =>
    h(
      "li",
      { class: check.verdict === "pass" ? "check-pass" : "check-fail" },
      `${name}: ${check.verdict}`,
      check.detail !== undefined ? h("span", { class: "muted" }, ` (${check.detail})`) : null,
    ),
  );
  return h(
    "div",
    { class: "consistency" },
    h("h3", {}, passed ? "Consistency battery: passed" : "Consistency battery: FAILED"),
    h("ul", {}, ...rows),
  );
}

function csvDownloadButton(handlers: Handlers): HTMLElement {
  return h(
    "button",
    { type: "button", id: "download-csv", onclick: () => handlers.downloadCsv() },
    "Download CSV",
  );
}

function vleResults(view: View, handlers: Handlers): HTMLElement[] {
  const bundle = view.result;
  if (bundle === null || bundle.kind !== "vle") return [];
  const diagram = bundle.data;
  const panels: HTMLElement[] = [
    plotPanel("plot-diagram", diagramSpec(diagram), handlers, csvDownloadButton(handlers)),
  ];
  if (diagram.mode === "isothermal" && bundle.lnGamma !== null) {
    panels.push(
      plotPanel(
        "plot-lngamma",
        activitySpec(bundle.lnGamma, `ln gamma at ${numberText(bundle.lnGamma.T_K)} K`),
        handlers,
        null,
      ),
    );
  } else {
    panels.push(plotPanel("plot-xy", xySpec(diagram), handlers, null));
  }

  const blocks: HTMLElement[] = [h("div", { class: "plot-row" }, ...panels)];

  if (diagram.azeotropes.length > 0) {
    blocks.push(
      h(
        "div",
        { class: "azeotropes" },
        h("h3", {}, "Azeotropes"),
        h(
          "ul",
          {},
          ...diagram.azeotropes.map((az) =>
            h(
              "li",
              {},
              `x1 = ${numberText(az.x1)}, y1 = ${numberText(az.y1)}, ` +
                `T = ${numberText(az.T_K)} K, p = ${numberText(az.p_Pa)} Pa`,
            ),
          ),
        ),
      ),
    );
  } else {
    blocks.push(h("p", { class: "muted" }, "No azeotrope detected."));
  }

  const c = diagram.consistency;
  blocks.push(
    consistencyBlock(
      [
        ["merge at pure ends", c.merge_at_pure],
        ["ordering", c.ordering],
        ["slope sign agreement", c.slope_sign_agreement],
        ["azeotrope coincidence", c.azeotrope_coincidence],
      ],
      c.passed,
    ),
  );
  return blocks;
}

function activityResults(view: View, handlers: Handlers): HTMLElement[] {
  const bundle = view.result;
  if (bundle === null || bundle.kind !== "activity") return [];
  const curve = bundle.data;
  const title = `${curve.model} at ${numberText(curve.T_K)} K`;
  return [
    h(
      "div",
      { class: "plot-row" },
      plotPanel("plot-activity", activitySpec(curve, title), handlers, csvDownloadButton(handlers)),
    ),
  ];
}

function fitResults(view: View, handlers: Handlers): HTMLElement[] {
  const bundle = view.result;
  if (bundle === null || bundle.kind !== "fit") return [];
  const fit = bundle.data;
  const paramRows = Object.entries(fit.params).map(([name, value]) =>
    h("tr", {}, h("td", {}, name), h("td", { class: "num" }, numberText(value))),
  );
  const summaryRows = [
    h("tr", {}, h("td", {}, "target model"), h("td", { class: "num" }, fit.target_model)),
    h("tr", {}, h("td", {}, "variant"), h("td", { class: "num" }, String(fit.variant))),
    h("tr", {}, h("td", {}, "loss"), h("td", { class: "num" }, numberText(fit.loss))),
    h("tr", {}, h("td", {}, "starts"), h("td", { class: "num" }, String(fit.n_starts))),
    h("tr", {}, h("td", {}, "converged"), h("td", { class: "num" }, String(fit.converged))),
  ];
  return [
    h(
      "div",
      { class: "plot-row" },
      plotPanel("plot-fit", fitCurvesSpec(bundle.curves), handlers, csvDownloadButton(handlers)),
    ),
    h(
      "div",
      { class: "fit-details" },
      h("h3", {}, "Fitted equations"),
      h("pre", { class: "equations", id: "fit-equations" }, fit.equations),
      h("h3", {}, "Parameters"),
      h("table", { class: "params" }, h("tbody", {}, ...summaryRows, ...paramRows)),
    ),
  ];
}

function scalarResults(view: View): HTMLElement[] {
  const bundle = view.result;
  if (bundle === null) return [];
  if (bundle.kind === "psat") {
    const data: VaporPressureResponse = bundle.data;
    return [
      h(
        "div",
        { class: "plot-row" },
        scalarCard(`Vapor pressure of ${data.smiles} at ${numberText(data.T_K)} K`, numberText(data.p_Pa), "Pa"),
      ),
      warningsList(data.warnings) ?? h("p", { class: "muted" }, "No warnings."),
    ];
  }
  if (bundle.kind === "tboil") {
    const data: BoilingResponse = bundle.data;
    return [
      h(
        "div",
        { class: "plot-row" },
        scalarCard(`Boiling point of ${data.smiles} at ${numberText(data.p_Pa)} Pa`, numberText(data.T_K), "K"),
      ),
      warningsList(data.warnings) ?? h("p", { class: "muted" }, "No warnings."),
    ];
  }
  return [];
}

function resultsStep(view: View, handlers: Handlers): HTMLElement {
  const blocks = [
    ...vleResults(view, handlers),
    ...activityResults(view, handlers),
    ...fitResults(view, handlers),
    ...scalarResults(view),
  ];
  if (blocks.length === 0) {
    blocks.push(h("p", { class: "muted" }, "No result to show; go back and compute."));
  }
  return h("section", { class: "panel" }, h("h2", {}, "Results"), ...blocks);
}

function header(view: View, handlers: Handlers): HTMLElement {
  const baseInput = h("input", {
    type: "text",
    value: view.base,
    class: "base-input",
    onchange: (event: Event) => handlers.setBase((event.target as HTMLInputElement).value),
  });
  return h(
    "header",
    {},
    h("h1", {}, "vlekit"),
    h("span", { class: "muted" }, "binary VLE and activity properties"),
    h("span", { class: "spacer" }),
    h("label", { class: "base-label" }, "service ", baseInput),
  );
}

export function renderApp(root: HTMLElement, view: View, handlers: Handlers): void {
  root.textContent = "";
  const stepBody =
    view.state.step === "task-select"
      ? taskSelectStep(handlers)
      : view.state.step === "model-select"
        ? modelSelectStep(view, handlers)
        : view.state.step === "input"
          ? inputStep(view, handlers)
          : resultsStep(view, handlers);
  root.append(header(view, handlers), stepper(view, handlers), stepBody);
}
