/** Payload shapes for the /v1 JSON API. These mirror the service responses
 * field for field; nothing here is computed in the browser. */

export interface ValidatedComponent {
  input: string;
  canonical: string;
  groups: Record<string, number> | null;
  antoine_covered: boolean;
}

export interface ValidateResponse {
  components: ValidatedComponent[];
}

export interface Warning {
  code: string;
  message: string;
}

export interface VaporPressureResponse {
  smiles: string;
  T_K: number;
  p_Pa: number;
  warnings: Warning[];
}

export interface BoilingResponse {
  smiles: string;
  p_Pa: number;
  T_K: number;
  warnings: Warning[];
}

export interface ActivityResponse {
  model: string;
  T_K: number;
  x1: number[];
  ln_gamma1: number[];
  ln_gamma2: number[];
}

export interface VlePoint {
  x1: number;
  y1: number;
  T_K: number;
  p_Pa: number;
  gamma1: number;
  gamma2: number;
}

export interface Azeotrope {
  x1: number;
  y1: number;
  T_K: number;
  p_Pa: number;
  gamma1: number;
  gamma2: number;
}

export interface ConsistencyCheck {
  verdict: string;
  detail?: string;
  location?: number;
  residuals?: number[];
}

export interface ConsistencyReport {
  passed: boolean;
  merge_at_pure: ConsistencyCheck;
  ordering: ConsistencyCheck;
  slope_sign_agreement: ConsistencyCheck;
  azeotrope_coincidence: ConsistencyCheck;
}

export interface VleResponse {
  mode: "isothermal" | "isobaric";
  T_K: number | null;
  p_Pa: number | null;
  bubble: VlePoint[];
  dew: VlePoint[];
  azeotropes: Azeotrope[];
  consistency: ConsistencyReport;
}

export interface FitGrid {
  compositions: number[];
  temperatures: number[];
}

export interface FitResponse {
  target_model: string;
  variant: number;
  params: Record<string, number>;
  loss: number;
  n_starts: number;
  start_losses: Array<number | null>;
  converged: boolean;
  equations: string;
  grid: FitGrid;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  offset?: number;
  pair?: number[];
  detail?: unknown;
  uncovered_atoms?: number[];
  report?: unknown;
}
