import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import {
  exactDoc,
  fractionToNumber,
  loadExact,
  loadSimulate,
  loadSweep,
  SchemaMismatchError,
  simulateDoc,
} from "../src/schema.js";
import { FIXTURES } from "./helpers.js";

describe("fixture documents", () => {
  it("all five parse against their schemas", () => {
    expect(loadExact(FIXTURES.exactSquare).parameters.model).toBe(
      "square-two-sided",
    );
    expect(loadExact(FIXTURES.exactTriangular).mean.fraction).toBe("941/48");
    expect(loadSweep(FIXTURES.sweep).argmin.C).toBe("163/100");
    const sim = loadSimulate(FIXTURES.simSquare);
    expect(sim.parameters.lattice).toBe("infinite-square");
    expect(sim.trapped).toBeGreaterThan(0);
    loadSimulate(FIXTURES.simTriangular);
  });

  it("rejects a foreign schema version", () => {
    const doc = JSON.parse(readFileSync(FIXTURES.exactSquare, "utf8"));
    doc.schemaVersion = "2";
    expect(exactDoc.safeParse(doc).success).toBe(false);

    const dir = mkdtempSync(join(tmpdir(), "figtest-"));
    const bad = join(dir, "bad.json");
    writeFileSync(bad, JSON.stringify(doc));
    expect(() => loadExact(bad)).toThrow(SchemaMismatchError);
    expect(() => loadExact(bad)).toThrow(/schemaVersion/);
  });

  it("rejects the wrong command and missing files", () => {
    const doc = JSON.parse(readFileSync(FIXTURES.sweep, "utf8"));
    expect(exactDoc.safeParse(doc).success).toBe(false);
    expect(() => loadExact(join(tmpdir(), "nope.json"))).toThrow(
      SchemaMismatchError,
    );
  });

  it("rejects malformed simulate rows", () => {
    const doc = JSON.parse(readFileSync(FIXTURES.simSquare, "utf8"));
    doc.rows[0].observable = "area";
    expect(simulateDoc.safeParse(doc).success).toBe(false);
  });
});

describe("fractionToNumber", () => {
  it("parses integers and fractions", () => {
    expect(fractionToNumber("17")).toBe(17);
    expect(fractionToNumber("941/48")).toBeCloseTo(19.604166666666668, 12);
    expect(fractionToNumber("-3/4")).toBe(-0.75);
  });

  it("rejects junk", () => {
    expect(() => fractionToNumber("1.5")).toThrow(SchemaMismatchError);
    expect(() => fractionToNumber("a/b")).toThrow(SchemaMismatchError);
    expect(() => fractionToNumber("1/0")).toThrow(SchemaMismatchError);
  });
});
