/** Dialog state machine for the property wizard.
 *
 * The dialog walks task-select, model-select, input, results in order.
 * Forward moves happen only through actions that carry the data the next
 * step needs (a chosen task, a chosen model, a finished result), so an
 * incomplete step can never be skipped. Edits upstream always drop the
 * stale result. The serialisable part of the state round-trips through
 * the URL fragment so a reload lands on the same step.
 */

export type Step = "task-select" | "model-select" | "input" | "results";

export type Task = "vle" | "activity" | "fit" | "psat" | "tboil";

export const TASKS: Array<{ id: Task; label: string; blurb: string }> = [
  { id: "vle", label: "VLE diagram", blurb: "Bubble and dew lines for a binary pair, isothermal or isobaric" },
  { id: "activity", label: "Activity coefficients", blurb: "ln gamma curves for a binary pair at fixed temperature" },
  { id: "fit", label: "NRTL fit", blurb: "Regress NRTL parameters against a predicted activity surface" },
  { id: "psat", label: "Vapor pressure", blurb: "Pure component saturation pressure at a temperature" },
  { id: "tboil", label: "Boiling temperature", blurb: "Pure component boiling point at a pressure" },
];

/** Tasks that run an activity model and therefore need a model choice. */
export function taskNeedsModel(task: Task): boolean {
  return task === "vle" || task === "activity" || task === "fit";
}

/** Number of SMILES fields the task's input step shows. */
export function taskSmilesCount(task: Task): 1 | 2 {
  return taskNeedsModel(task) ? 2 : 1;
}

export interface DialogInputs {
  smiles1: string;
  smiles2: string;
  /** Which condition pins the VLE diagram. */
  mode: "isothermal" | "isobaric";
  T_K: string;
  p_Pa: string;
  /** NRTL fit variant as entered (3, 6 or 10 parameters). */
  variant: "3" | "6" | "10";
  rangeMode: "single" | "range";
  T_lo: string;
  T_hi: string;
}

export function defaultInputs(): DialogInputs {
  return {
    smiles1: "",
    smiles2: "",
    mode: "isothermal",
    T_K: "350",
    p_Pa: "101325",
    variant: "3",
    rangeMode: "single",
    T_lo: "300",
    T_hi: "400",
  };
}

export interface DialogState {
  step: Step;
  task: Task | null;
  model: string | null;
  inputs: DialogInputs;
}

export function initialState(): DialogState {
  return { step: "task-select", task: null, model: null, inputs: defaultInputs() };
}

export type Action =
  | { type: "select-task"; task: Task }
  | { type: "select-model"; model: string }
  | { type: "edit-input"; field: keyof DialogInputs; value: string }
  | { type: "back"; to: Step }
  | { type: "result-ready" }
  | { type: "reset" };

const STEP_ORDER: Step[] = ["task-select", "model-select", "input", "results"];

function stepIndex(step: Step): number {
  return STEP_ORDER.indexOf(step);
}

/** Pure transition function. Unexpected actions leave the state untouched,
 * so a stray click can never push the dialog somewhere inconsistent. */
export function reduce(state: DialogState, action: Action): DialogState {
  switch (action.type) {
    case "select-task": {
      if (state.step !== "task-select") return state;
      const step: Step = taskNeedsModel(action.task) ? "model-select" : "input";
      return { step, task: action.task, model: null, inputs: state.inputs };
    }
    case "select-model": {
      if (state.step !== "model-select" || state.task === null) return state;
      return { ...state, step: "input", model: action.model };
    }
    case "edit-input": {
      if (state.step !== "input") return state;
      const inputs = { ...state.inputs, [action.field]: action.value };
      return { ...state, inputs };
    }
    case "back": {
      if (stepIndex(action.to) >= stepIndex(state.step)) return state;
      if (action.to === "model-select" && (state.task === null || !taskNeedsModel(state.task))) {
        return state;
      }
      if (action.to !== "task-select" && state.task === null) return state;
      return { ...state, step: action.to };
    }
    case "result-ready": {
      if (state.step !== "input") return state;
      return { ...state, step: "results" };
    }
    case "reset":
      return initialState();
  }
}

/** True when an action would discard a result shown on the results step.
 * The shell uses this to clear its cached payloads on upstream edits. */
export function invalidatesResult(action: Action): boolean {
  return (
    action.type === "select-task" ||
    action.type === "select-model" ||
    action.type === "edit-input" ||
    action.type === "reset"
  );
}

function isFiniteNumber(text: string): boolean {
  if (text.trim() === "") return false;
  return Number.isFinite(Number(text));
}

/** Completeness check for the input step. This gatekeeps only whether a
 * submission may be attempted; SMILES syntax and every physical check stay
 * with the service, whose diagnostics the dialog shows inline. */
export function inputsComplete(state: DialogState): boolean {
  const { task, model, inputs } = state;
  if (task === null) return false;
  if (taskNeedsModel(task) && model === null) return false;
  if (inputs.smiles1.trim() === "") return false;
  if (taskSmilesCount(task) === 2 && inputs.smiles2.trim() === "") return false;
  switch (task) {
    case "psat":
    case "activity":
      return isFiniteNumber(inputs.T_K);
    case "tboil":
      return isFiniteNumber(inputs.p_Pa);
    case "vle":
      return inputs.mode === "isothermal"
        ? isFiniteNumber(inputs.T_K)
        : isFiniteNumber(inputs.p_Pa);
    case "fit":
      if (inputs.rangeMode === "single") return isFiniteNumber(inputs.T_K);
      return (
        isFiniteNumber(inputs.T_lo) &&
        isFiniteNumber(inputs.T_hi) &&
        Number(inputs.T_lo) < Number(inputs.T_hi)
      );
  }
}

const STEPS = new Set<string>(STEP_ORDER);
const TASK_IDS = new Set<string>(TASKS.map((t) => t.id));

/** Encode the dialog position for the URL fragment. Results are not
 * serialised; a reload re-submits the same request instead. */
export function encodeState(state: DialogState): string {
  const payload = {
    step: state.step,
    task: state.task,
    model: state.model,
    inputs: state.inputs,
  };
  return encodeURIComponent(JSON.stringify(payload));
}

export function decodeState(fragment: string): DialogState | null {
  if (fragment === "") return null;
  let raw: unknown;
  try {
    raw = JSON.parse(decodeURIComponent(fragment));
  } catch {
    return null;
  }
  if (typeof raw !== "object" || raw === null) return null;
  const obj = raw as Record<string, unknown>;
  if (typeof obj.step !== "string" || !STEPS.has(obj.step)) return null;
  const task = obj.task === null ? null : typeof obj.task === "string" && TASK_IDS.has(obj.task) ? (obj.task as Task) : undefined;
  if (task === undefined) return null;
  const model = obj.model === null ? null : typeof obj.model === "string" ? obj.model : undefined;
  if (model === undefined) return null;
  const inputs = defaultInputs();
  if (typeof obj.inputs === "object" && obj.inputs !== null) {
    const src = obj.inputs as Record<string, unknown>;
    for (const key of Object.keys(inputs) as Array<keyof DialogInputs>) {
      const value = src[key];
      if (typeof value !== "string") continue;
      // The three enumerated fields only accept their known values; a URL
      // carrying anything else falls back to the default rather than
      // smuggling an impossible state into the dialog.
      if (key === "mode") {
        if (value === "isothermal" || value === "isobaric") inputs.mode = value;
      } else if (key === "variant") {
        if (value === "3" || value === "6" || value === "10") inputs.variant = value;
      } else if (key === "rangeMode") {
        if (value === "single" || value === "range") inputs.rangeMode = value;
      } else {
        inputs[key] = value;
      }
    }
  }
  let step = obj.step as Step;
  if (task === null && step !== "task-select") return null;
  if (task !== null && taskNeedsModel(task) && model === null && stepIndex(step) > stepIndex("model-select")) {
    // The URL claims a step whose prerequisites are missing; fall back to
    // the earliest step that can still be satisfied.
    step = "model-select";
  }
  if (task !== null && !taskNeedsModel(task) && step === "model-select") {
    step = "input";
  }
  return { step, task, model, inputs };
}
