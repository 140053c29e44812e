import { describe, expect, it } from "vitest";

import { csvBlob } from "../src/download.js";
import { fixtureBytes } from "./helpers.js";

describe("csv blob", () => {
  it("wraps the exact recorded service bytes", async () => {
    const original = fixtureBytes("vle_isothermal.csv");
    const blob = csvBlob(original);
    expect(blob.type).toBe("text/csv");
    const roundTrip = new Uint8Array(await blob.arrayBuffer());
    expect(roundTrip.length).toBe(original.length);
    expect(roundTrip).toEqual(original);
  });

  it("copies from a subarray view without dragging in neighbours", async () => {
    const backing = new Uint8Array([1, 2, 3, 4, 5, 6]);
    const view = backing.subarray(2, 5);
    const bytes = new Uint8Array(await csvBlob(view).arrayBuffer());
    expect(Array.from(bytes)).toEqual([3, 4, 5]);
  });
});
