#!/usr/bin/env node
import { writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { renderBiasSweep } from "./figures/biasSweep.js";
import { renderLadderDist } from "./figures/ladderDist.js";
import { renderInfiniteHist } from "./figures/infiniteHist.js";
import {
  loadExact,
  loadSimulate,
  loadSweep,
  SchemaMismatchError,
} from "./schema.js";

const KINDS = ["ladder-dist", "bias-sweep", "infinite-hist"] as const;
type Kind = (typeof KINDS)[number];

const INPUTS_NEEDED: Record<Kind, number> = {
  "ladder-dist": 2,
  "bias-sweep": 1,
  "infinite-hist": 2,
};

class UsageError extends Error {}

function render(kind: Kind, inputs: string[]): string {
  switch (kind) {
    case "ladder-dist":
      return renderLadderDist(inputs.map(loadExact)).svg;
    case "bias-sweep":
      return renderBiasSweep(loadSweep(inputs[0]!)).svg;
    case "infinite-hist":
      return renderInfiniteHist(inputs.map(loadSimulate)).svg;
  }
}

export function main(argv: string[]): number {
  const parser = yargs(argv)
    .scriptName("gsawtrap-figures")
    .usage(
      "$0 --kind <figure> --input file.json [--input file.json] --output out.svg",
    )
    .option("kind", {
      choices: KINDS,
      demandOption: true,
      describe: "which figure to draw",
    })
    .option("input", {
      type: "string",
      array: true,
      demandOption: true,
      describe: "gsawtrap JSON output file(s); order does not matter",
    })
    .option("output", {
      type: "string",
      demandOption: true,
      describe: "where to write the SVG",
    })
    .strict()
    .exitProcess(false)
    .fail((msg, err) => {
      throw err ?? new UsageError(msg ?? "bad arguments");
    });

  let args: { kind: Kind; input: string[]; output: string };
  try {
    args = parser.parseSync() as typeof args;
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`gsawtrap-figures: ${err.message}\n`);
      return 2;
    }
    throw err;
  }

  if (args.input.length !== INPUTS_NEEDED[args.kind]) {
    process.stderr.write(
      `gsawtrap-figures: ${args.kind} needs ` +
        `${INPUTS_NEEDED[args.kind]} input file(s), got ${args.input.length}\n`,
    );
    return 2;
  }

  try {
    writeFileSync(args.output, render(args.kind, args.input), "utf8");
  } catch (err) {
    if (err instanceof SchemaMismatchError) {
      process.stderr.write(`gsawtrap-figures: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  return 0;
}

const isDirectRun = process.argv[1]?.endsWith("cli.js") ?? false;
if (isDirectRun) {
  process.exitCode = main(hideBin(process.argv));
}
