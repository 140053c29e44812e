import { describe, expect, it } from "vitest";

import { parseFitCurves } from "../src/csv.js";
import { BUBBLE_COLOR, DEW_COLOR, GRID_COLOR } from "../src/plot.js";
import { activitySpec, diagramSpec, fitCurvesSpec, xySpec } from "../src/specs.js";
import type { ActivityResponse, VleResponse } from "../src/types.js";
import { fixtureJson, fixtureText } from "./helpers.js";

const isothermal = fixtureJson<VleResponse>("vle_isothermal.json");
const isobaric = fixtureJson<VleResponse>("vle_isobaric.json");
const isobaricAzeotropic = fixtureJson<VleResponse>("vle_isobaric_azeotropic.json");
const activity = fixtureJson<ActivityResponse>("activity_400.json");

describe("diagram spec", () => {
  it("plots pressure over composition for an isothermal diagram", () => {
    const spec = diagramSpec(isothermal);
    expect(spec.title).toBe("p-x-y diagram");
    expect(spec.yLabel).toBe("p / Pa");
    const [bubble, dew] = spec.series;
    expect(bubble.label).toBe("bubble");
    expect(bubble.color).toBe(BUBBLE_COLOR);
    expect(dew.label).toBe("dew");
    expect(dew.color).toBe(DEW_COLOR);
    expect(bubble.xs).toHaveLength(101);
    expect(dew.xs).toHaveLength(101);
  });

  it("keys the bubble line on x1 and the dew line on y1", () => {
    const spec = diagramSpec(isothermal);
    const [bubble, dew] = spec.series;
    for (const k of [0, 17, 50, 100]) {
      expect(bubble.xs[k]).toBe(isothermal.bubble[k].x1);
      expect(bubble.ys[k]).toBe(isothermal.bubble[k].p_Pa);
      expect(dew.xs[k]).toBe(isothermal.dew[k].y1);
      expect(dew.ys[k]).toBe(isothermal.dew[k].p_Pa);
    }
  });

  it("plots temperature for an isobaric diagram", () => {
    const spec = diagramSpec(isobaric);
    expect(spec.title).toBe("T-x-y diagram");
    expect(spec.yLabel).toBe("T / K");
    const [bubble, dew] = spec.series;
    for (const k of [0, 43, 100]) {
      expect(bubble.ys[k]).toBe(isobaric.bubble[k].T_K);
      expect(dew.ys[k]).toBe(isobaric.dew[k].T_K);
    }
  });

  it("places one marker per reported azeotrope at the exact payload values", () => {
    const spec = diagramSpec(isothermal);
    expect(isothermal.azeotropes.length).toBeGreaterThan(0);
    expect(spec.markers).toHaveLength(isothermal.azeotropes.length);
    expect(spec.markers[0].x).toBe(isothermal.azeotropes[0].x1);
    expect(spec.markers[0].y).toBe(isothermal.azeotropes[0].p_Pa);
    expect(spec.markers[0].label).toBe("azeotrope");
  });

  it("attaches the full service record to every vertex", () => {
    const spec = diagramSpec(isothermal);
    const record = spec.series[0].points?.[57];
    const point = isothermal.bubble[57];
    expect(record).toEqual({
      x1: point.x1,
      y1: point.y1,
      T_K: point.T_K,
      p_Pa: point.p_Pa,
      gamma1: point.gamma1,
      gamma2: point.gamma2,
    });
  });
});

describe("x-y spec", () => {
  it("pairs vapor with liquid composition along the bubble line", () => {
    const spec = xySpec(isobaric);
    const curve = spec.series[1];
    expect(curve.color).toBe(BUBBLE_COLOR);
    for (const k of [0, 31, 100]) {
      expect(curve.xs[k]).toBe(isobaric.bubble[k].x1);
      expect(curve.ys[k]).toBe(isobaric.bubble[k].y1);
    }
  });

  it("draws the diagonal as a dashed guide", () => {
    const spec = xySpec(isobaric);
    const diagonal = spec.series[0];
    expect(diagonal.color).toBe(GRID_COLOR);
    expect(diagonal.dash).toBeDefined();
    expect(diagonal.xs).toEqual([0, 1]);
    expect(diagonal.points).toBeUndefined();
  });

  it("shows no marker when the service reports no azeotrope", () => {
    expect(isobaric.azeotropes).toHaveLength(0);
    expect(xySpec(isobaric).markers).toHaveLength(0);
    expect(diagramSpec(isobaric).markers).toHaveLength(0);
  });

  it("marks an isobaric azeotrope on the diagonal", () => {
    const spec = xySpec(isobaricAzeotropic);
    expect(isobaricAzeotropic.azeotropes).toHaveLength(1);
    expect(spec.markers[0].x).toBe(isobaricAzeotropic.azeotropes[0].x1);
    expect(spec.markers[0].y).toBe(isobaricAzeotropic.azeotropes[0].y1);
  });

  it("marks an isobaric azeotrope on the boiling envelope", () => {
    const spec = diagramSpec(isobaricAzeotropic);
    expect(spec.markers[0].x).toBe(isobaricAzeotropic.azeotropes[0].x1);
    expect(spec.markers[0].y).toBe(isobaricAzeotropic.azeotropes[0].T_K);
  });
});

describe("activity spec", () => {
  it("carries both ln gamma curves through unchanged", () => {
    const spec = activitySpec(activity, "demo");
    expect(spec.series).toHaveLength(2);
    expect(spec.series[0].ys).toBe(activity.ln_gamma1);
    expect(spec.series[1].ys).toBe(activity.ln_gamma2);
    expect(spec.series[0].xs).toBe(activity.x1);
  });

  it("exposes the temperature in each hover record", () => {
    const spec = activitySpec(activity, "demo");
    const record = spec.series[0].points?.[11];
    expect(record?.T_K).toBe(activity.T_K);
    expect(record?.ln_gamma1).toBe(activity.ln_gamma1[11]);
  });
});

describe("fit curves spec", () => {
  it("builds two series per tabulated temperature", () => {
    const curves = parseFitCurves(fixtureText("fit.csv"));
    const spec = fitCurvesSpec(curves);
    expect(spec.series).toHaveLength(2 * curves.length);
    expect(spec.series[0].ys).toBe(curves[0].ln_gamma1);
    expect(spec.series[1].ys).toBe(curves[0].ln_gamma2);
  });

  it("labels multi-temperature fits by their temperature", () => {
    const spec = fitCurvesSpec([
      { T_K: 300, x1: [0, 1], ln_gamma1: [0.1, 0], ln_gamma2: [0, 0.1] },
      { T_K: 350, x1: [0, 1], ln_gamma1: [0.2, 0], ln_gamma2: [0, 0.2] },
    ]);
    expect(spec.series.map((s) => s.label)).toEqual([
      "ln gamma1 @ 300 K",
      "ln gamma2 @ 300 K",
      "ln gamma1 @ 350 K",
      "ln gamma2 @ 350 K",
    ]);
  });
});
