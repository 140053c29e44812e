/** Submission flow: validate the SMILES entries, run the task, and keep
 * every byte the dialog will later need.
 *
 * Requests run strictly one after another, so at most one request is in
 * flight at any moment. The CSV stream for tabular results is fetched up
 * front and stored verbatim; the download button hands out those bytes
 * unchanged, and the fit plot reads its curves out of the same stream.
 */

import {
  ActivityRequest,
  FitRequest,
  ServiceClient,
  ServiceError,
  VleRequest,
} from "./api.js";
import { FitCurveSeries, parseFitCurves } from "./csv.js";
import { DialogState } from "./state.js";
import type {
  ActivityResponse,
  BoilingResponse,
  FitResponse,
  ValidatedComponent,
  VaporPressureResponse,
  VleResponse,
} from "./types.js";

export type ResultBundle =
  | { kind: "vle"; data: VleResponse; csv: Uint8Array; lnGamma: ActivityResponse | null }
  | { kind: "activity"; data: ActivityResponse; csv: Uint8Array }
  | { kind: "fit"; data: FitResponse; csv: Uint8Array; curves: FitCurveSeries[] }
  | { kind: "psat"; data: VaporPressureResponse }
  | { kind: "tboil"; data: BoilingResponse };

export type SmilesField = "smiles1" | "smiles2";

/** A service rejection attributed to the SMILES field that caused it. */
export class FieldedError extends Error {
  constructor(
    readonly field: SmilesField,
    readonly cause: ServiceError,
  ) {
    super(cause.message);
    this.name = "FieldedError";
  }
}

export interface Submission {
  echo: Partial<Record<SmilesField, ValidatedComponent>>;
  bundle: ResultBundle;
}

function csvText(bytes: Uint8Array): string {
  return new TextDecoder().decode(bytes);
}

/** Validate each SMILES field with its own request so a failure lands on
 * the field that caused it, then run the task with the canonical forms. */
export async function runTask(client: ServiceClient, state: DialogState): Promise<Submission> {
  const { task, model, inputs } = state;
  if (task === null) throw new Error("no task chosen");

  const fields: SmilesField[] =
    task === "psat" || task === "tboil" ? ["smiles1"] : ["smiles1", "smiles2"];
  const echo: Partial<Record<SmilesField, ValidatedComponent>> = {};
  for (const fieldName of fields) {
    try {
      const validated = await client.validateSmiles([inputs[fieldName].trim()]);
      echo[fieldName] = validated.components[0];
    } catch (exc) {
      if (exc instanceof ServiceError) throw new FieldedError(fieldName, exc);
      throw exc;
    }
  }

  const canonical1 = echo.smiles1?.canonical ?? inputs.smiles1.trim();
  const canonical2 = echo.smiles2?.canonical ?? inputs.smiles2.trim();

  switch (task) {
    case "psat": {
      const data = await client.vaporPressure(canonical1, Number(inputs.T_K));
      return { echo, bundle: { kind: "psat", data } };
    }
    case "tboil": {
      const data = await client.boilingTemperature(canonical1, Number(inputs.p_Pa));
      return { echo, bundle: { kind: "tboil", data } };
    }
    case "activity": {
      const req: ActivityRequest = {
        smiles: [canonical1, canonical2],
        model: model ?? "",
        T_K: Number(inputs.T_K),
      };
      const data = await client.activity(req);
      const csv = await client.activityCsv(req);
      return { echo, bundle: { kind: "activity", data, csv } };
    }
    case "vle": {
      const req: VleRequest = { smiles: [canonical1, canonical2], model: model ?? "" };
      if (inputs.mode === "isothermal") {
        req.T_K = Number(inputs.T_K);
      } else {
        req.p_Pa = Number(inputs.p_Pa);
      }
      const data = await client.vle(req);
      const csv = await client.vleCsv(req);
      let lnGamma: ActivityResponse | null = null;
      if (data.mode === "isothermal" && data.T_K !== null) {
        lnGamma = await client.activity({
          smiles: [canonical1, canonical2],
          model: model ?? "",
          T_K: data.T_K,
        });
      }
      return { echo, bundle: { kind: "vle", data, csv, lnGamma } };
    }
    case "fit": {
      const req: FitRequest = {
        smiles: [canonical1, canonical2],
        model: model ?? "",
        variant: Number(inputs.variant),
      };
      if (inputs.rangeMode === "single") {
        req.T_K = Number(inputs.T_K);
      } else {
        req.T_range_K = [Number(inputs.T_lo), Number(inputs.T_hi)];
      }
      const data = await client.fitNrtl(req);
      const csv = await client.fitNrtlCsv(req);
      const curves = parseFitCurves(csvText(csv));
      return { echo, bundle: { kind: "fit", data, csv, curves } };
    }
  }
}

/** File name for the CSV download of the current bundle. */
export function csvFilename(bundle: ResultBundle): string {
  switch (bundle.kind) {
    case "vle":
      return bundle.data.mode === "isothermal" ? "vle_isothermal.csv" : "vle_isobaric.csv";
    case "activity":
      return "activity_curve.csv";
    case "fit":
      return "nrtl_fit.csv";
    default:
      return "result.csv";
  }
}

/** The stored server byte stream for the bundle, if it has one. */
export function csvBytes(bundle: ResultBundle): Uint8Array | null {
  if (bundle.kind === "vle" || bundle.kind === "activity" || bundle.kind === "fit") {
    return bundle.csv;
  }
  return null;
}
