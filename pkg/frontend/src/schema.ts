import { readFileSync } from "node:fs";
import { z } from "zod";

export const SUPPORTED_SCHEMA_VERSION = "1";

export class SchemaMismatchError extends Error {}

const fractionValue = z.object({
  fraction: z.string(),
  float: z.number(),
});

export const exactDoc = z
  .object({
    schemaVersion: z.literal(SUPPORTED_SCHEMA_VERSION),
    command: z.literal("exact"),
    parameters: z
      .object({
        model: z.string(),
        observable: z.string(),
        nMax: z.number().int(),
      })
      .passthrough(),
    mean: fractionValue,
    variance: fractionValue,
    rows: z.array(
      z.object({
        n: z.number().int().nonnegative(),
        probability: z.string(),
        probabilityFloat: z.number(),
      }),
    ),
  })
  .passthrough();

export const sweepDoc = z
  .object({
    schemaVersion: z.literal(SUPPORTED_SCHEMA_VERSION),
    command: z.literal("sweep-bias"),
    parameters: z.object({ model: z.string() }).passthrough(),
    argmin: z.object({
      C: z.string(),
      CFloat: z.number(),
      mean: z.string(),
      meanFloat: z.number(),
    }),
    rows: z.array(
      z.object({
        C: z.string(),
        CFloat: z.number().positive(),
        mean: z.string(),
        meanFloat: z.number(),
        decayRate: z.number().nullable(),
      }),
    ),
  })
  .passthrough();

export const simulateDoc = z
  .object({
    schemaVersion: z.literal(SUPPORTED_SCHEMA_VERSION),
    command: z.literal("simulate"),
    parameters: z
      .object({
        lattice: z.string(),
        walks: z.number().int().positive(),
        seed: z.number().int(),
      })
      .passthrough(),
    trapped: z.number().int().nonnegative(),
    wallHits: z.number().int().nonnegative(),
    rows: z.array(
      z.object({
        observable: z.enum(["length", "width"]),
        value: z.number().int(),
        count: z.number().int().positive(),
        frequency: z.number(),
      }),
    ),
  })
  .passthrough();

export type ExactDoc = z.infer<typeof exactDoc>;
export type SweepDoc = z.infer<typeof sweepDoc>;
export type SimulateDoc = z.infer<typeof simulateDoc>;

/** "941/48" -> 19.604..., "17" -> 17. The inputs carry exact fractions
 * next to floats; figures parse the fraction so marker positions do not
 * inherit any float rounding from the producer. */
export function fractionToNumber(s: string): number {
  const m = /^(-?\d+)(?:\/(\d+))?$/.exec(s.trim());
  if (!m || m[1] === undefined) {
    throw new SchemaMismatchError(`not a fraction: ${JSON.stringify(s)}`);
  }
  const num = Number(m[1]);
  const den = m[2] === undefined ? 1 : Number(m[2]);
  if (den === 0) throw new SchemaMismatchError(`zero denominator: ${s}`);
  return num / den;
}

function load<T>(path: string, schema: z.ZodType<T>): T {
  let raw: string;
  try {
    raw = readFileSync(path, "utf8");
  } catch (err) {
    throw new SchemaMismatchError(`cannot read ${path}: ${String(err)}`);
  }
  let doc: unknown;
  try {
    doc = JSON.parse(raw);
  } catch {
    throw new SchemaMismatchError(`${path} is not JSON`);
  }
  const parsed = schema.safeParse(doc);
  if (!parsed.success) {
    const issue = parsed.error.issues[0];
    const where = issue ? issue.path.join(".") || "(root)" : "(root)";
    const what = issue ? issue.message : "unknown";
    throw new SchemaMismatchError(`${path}: ${where}: ${what}`);
  }
  return parsed.data;
}

export const loadExact = (path: string) => load(path, exactDoc);
export const loadSweep = (path: string) => load(path, sweepDoc);
export const loadSimulate = (path: string) => load(path, simulateDoc);
