import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { FIXTURES, ROOT } from "./helpers.js";

const CLI = join(ROOT, "dist", "cli.js");

function run(...args: string[]) {
  const res = spawnSync("node", [CLI, ...args], { encoding: "utf8" });
  return { status: res.status, stderr: res.stderr, stdout: res.stdout };
}

describe("gsawtrap-figures CLI", () => {
  it("renders every figure kind to a file", () => {
    const dir = mkdtempSync(join(tmpdir(), "figcli-"));
    const cases: Array<[string, string[]]> = [
      ["ladder-dist", [FIXTURES.exactSquare, FIXTURES.exactTriangular]],
      ["bias-sweep", [FIXTURES.sweep]],
      ["infinite-hist", [FIXTURES.simSquare, FIXTURES.simTriangular]],
    ];
    for (const [kind, inputs] of cases) {
      const out = join(dir, `${kind}.svg`);
      const args = ["--kind", kind];
      for (const input of inputs) args.push("--input", input);
      args.push("--output", out);
      const res = run(...args);
      expect(res.status, res.stderr).toBe(0);
      const svg = readFileSync(out, "utf8");
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.endsWith("</svg>\n")).toBe(true);
    }
  });

  it("writes identical bytes on a rerun", () => {
    const dir = mkdtempSync(join(tmpdir(), "figcli-"));
    const a = join(dir, "a.svg");
    const b = join(dir, "b.svg");
    for (const out of [a, b]) {
      const res = run("--kind", "bias-sweep", "--input", FIXTURES.sweep,
                      "--output", out);
      expect(res.status).toBe(0);
    }
    expect(readFileSync(a, "utf8")).toBe(readFileSync(b, "utf8"));
  });

  it("exits 1 on a schema mismatch", () => {
    const dir = mkdtempSync(join(tmpdir(), "figcli-"));
    const doc = JSON.parse(readFileSync(FIXTURES.sweep, "utf8"));
    doc.schemaVersion = "0";
    const bad = join(dir, "bad.json");
    writeFileSync(bad, JSON.stringify(doc));
    const res = run("--kind", "bias-sweep", "--input", bad,
                    "--output", join(dir, "out.svg"));
    expect(res.status).toBe(1);
    expect(res.stderr).toContain("gsawtrap-figures:");
    expect(res.stderr).toContain("schemaVersion");
  });

  it("exits 2 on usage errors", () => {
    const dir = mkdtempSync(join(tmpdir(), "figcli-"));
    const unknownKind = run("--kind", "pie", "--input", FIXTURES.sweep,
                            "--output", join(dir, "x.svg"));
    expect(unknownKind.status).toBe(2);

    const wrongArity = run("--kind", "ladder-dist", "--input",
                           FIXTURES.exactSquare, "--output",
                           join(dir, "y.svg"));
    expect(wrongArity.status).toBe(2);
    expect(wrongArity.stderr).toContain("needs 2 input file(s)");
  });
});
