/** Builders that turn service payloads into plot specifications.
 *
 * Each vertex keeps the originating service record alongside it, so the
 * hover readout can show x, y, T, p and both gammas exactly as received.
 */

import {
  BUBBLE_COLOR,
  CURVE_COLOR_1,
  CURVE_COLOR_2,
  DEW_COLOR,
  GRID_COLOR,
  PlotSpec,
  Series,
} from "./plot.js";
import type { FitCurveSeries } from "./csv.js";
import type { ActivityResponse, VlePoint, VleResponse } from "./types.js";

const WIDTH = 560;
const HEIGHT = 400;

function pointRecord(pt: VlePoint): Record<string, number> {
  return {
    x1: pt.x1,
    y1: pt.y1,
    T_K: pt.T_K,
    p_Pa: pt.p_Pa,
    gamma1: pt.gamma1,
    gamma2: pt.gamma2,
  };
}

/** Bubble and dew lines against pressure (isothermal) or temperature
 * (isobaric). The bubble line is keyed on liquid composition, the dew
 * line on vapor composition. */
export function diagramSpec(diagram: VleResponse): PlotSpec {
  const isothermal = diagram.mode === "isothermal";
  const ordinate = (pt: VlePoint) => (isothermal ? pt.p_Pa : pt.T_K);
  const bubble: Series = {
    label: "bubble",
    color: BUBBLE_COLOR,
    xs: diagram.bubble.map((pt) => pt.x1),
    ys: diagram.bubble.map(ordinate),
    points: diagram.bubble.map(pointRecord),
  };
  const dew: Series = {
    label: "dew",
    color: DEW_COLOR,
    xs: diagram.dew.map((pt) => pt.y1),
    ys: diagram.dew.map(ordinate),
    points: diagram.dew.map(pointRecord),
  };
  return {
    title: isothermal ? "p-x-y diagram" : "T-x-y diagram",
    xLabel: "x1, y1",
    yLabel: isothermal ? "p / Pa" : "T / K",
    series: [bubble, dew],
    markers: diagram.azeotropes.map((az) => ({
      x: az.x1,
      y: isothermal ? az.p_Pa : az.T_K,
      label: "azeotrope",
      record: pointRecord(az),
    })),
    width: WIDTH,
    height: HEIGHT,
  };
}

/** Vapor versus liquid composition along the bubble line, with the
 * diagonal as a dashed reference. */
export function xySpec(diagram: VleResponse): PlotSpec {
  const curve: Series = {
    label: "equilibrium",
    color: BUBBLE_COLOR,
    xs: diagram.bubble.map((pt) => pt.x1),
    ys: diagram.bubble.map((pt) => pt.y1),
    points: diagram.bubble.map(pointRecord),
  };
  const diagonal: Series = {
    label: "y = x",
    color: GRID_COLOR,
    xs: [0, 1],
    ys: [0, 1],
    dash: [4, 4],
  };
  return {
    title: "x-y diagram",
    xLabel: "x1",
    yLabel: "y1",
    series: [diagonal, curve],
    markers: diagram.azeotropes.map((az) => ({
      x: az.x1,
      y: az.y1,
      label: "azeotrope",
      record: pointRecord(az),
    })),
    width: WIDTH,
    height: HEIGHT,
  };
}

export function activitySpec(curve: ActivityResponse, title: string): PlotSpec {
  const record = (i: number): Record<string, number> => ({
    x1: curve.x1[i],
    T_K: curve.T_K,
    ln_gamma1: curve.ln_gamma1[i],
    ln_gamma2: curve.ln_gamma2[i],
  });
  const records = curve.x1.map((_, i) => record(i));
  return {
    title,
    xLabel: "x1",
    yLabel: "ln gamma",
    series: [
      {
        label: "ln gamma1",
        color: CURVE_COLOR_1,
        xs: curve.x1,
        ys: curve.ln_gamma1,
        points: records,
      },
      {
        label: "ln gamma2",
        color: CURVE_COLOR_2,
        xs: curve.x1,
        ys: curve.ln_gamma2,
        points: records,
      },
    ],
    markers: [],
    width: WIDTH,
    height: HEIGHT,
  };
}

/** Fitted model curves as tabulated by the service in its CSV export. */
export function fitCurvesSpec(curves: FitCurveSeries[]): PlotSpec {
  const series: Series[] = [];
  curves.forEach((curve, k) => {
    const records = curve.x1.map((_, i) => ({
      T_K: curve.T_K,
      x1: curve.x1[i],
      ln_gamma1: curve.ln_gamma1[i],
      ln_gamma2: curve.ln_gamma2[i],
    }));
    const suffix = curves.length > 1 ? ` @ ${curve.T_K} K` : "";
    series.push({
      label: `ln gamma1${suffix}`,
      color: CURVE_COLOR_1,
      dash: k === 0 ? undefined : [6, 3 * k],
      xs: curve.x1,
      ys: curve.ln_gamma1,
      points: records,
    });
    series.push({
      label: `ln gamma2${suffix}`,
      color: CURVE_COLOR_2,
      dash: k === 0 ? undefined : [6, 3 * k],
      xs: curve.x1,
      ys: curve.ln_gamma2,
      points: records,
    });
  });
  return {
    title: "Fitted activity curves",
    xLabel: "x1",
    yLabel: "ln gamma",
    series,
    markers: [],
    width: WIDTH,
    height: HEIGHT,
  };
}
