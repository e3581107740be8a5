import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

const here = dirname(fileURLToPath(import.meta.url));

export const ROOT = join(here, "..");

export const FIXTURES = {
  exactSquare: join(ROOT, "fixtures", "exact-square-two-sided.json"),
  exactTriangular: join(ROOT, "fixtures", "exact-triangular-two-sided.json"),
  sweep: join(ROOT, "fixtures", "sweep-bias.json"),
  simSquare: join(ROOT, "fixtures", "simulate-infinite-square.json"),
  simTriangular: join(ROOT, "fixtures", "simulate-infinite-triangular.json"),
};
