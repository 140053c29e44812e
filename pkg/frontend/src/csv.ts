/** Reader for the "# curves" section of a fit export.
 *
 * The service tabulates the fitted model onto the fit grid inside the CSV
 * stream, which is the only place those curve values exist. The dialog
 * plots them straight from this table; it never evaluates the model.
 */

export interface FitCurveSeries {
  T_K: number;
  x1: number[];
  ln_gamma1: number[];
  ln_gamma2: number[];
}

export function parseFitCurves(csvText: string): FitCurveSeries[] {
  const byTemperature = new Map<string, FitCurveSeries>();
  let section: string | null = null;
  for (const raw of csvText.split("\n")) {
    const line = raw.trim();
    if (line === "") continue;
    if (line.startsWith("#")) {
      section = line.slice(1).trim();
      continue;
    }
    if (section !== "curves" || line === "T_K,x1,ln_gamma1,ln_gamma2") continue;
    const cells = line.split(",");
    if (cells.length !== 4) continue;
    let series = byTemperature.get(cells[0]);
    if (series === undefined) {
      series = { T_K: Number(cells[0]), x1: [], ln_gamma1: [], ln_gamma2: [] };
      byTemperature.set(cells[0], series);
    }
    series.x1.push(Number(cells[1]));
    series.ln_gamma1.push(Number(cells[2]));
    series.ln_gamma2.push(Number(cells[3]));
  }
  return Array.from(byTemperature.values());
}
