import { SchemaMismatchError, SimulateDoc } from "../schema.js";
import { drawFrame, Scale, Svg } from "../svg.js";

export interface InfiniteHistScene {
  svg: string;
  mainXScale: Scale;
  insetYScale: Scale;
}

const SERIES = [
  { lattice: "infinite-square", color: "#1f6fb4", label: "square" },
  { lattice: "infinite-triangular", color: "#c03d2f", label: "triangular" },
];

function lengthRows(doc: SimulateDoc) {
  return doc.rows.filter((r) => r.observable === "length");
}

/** Simulated trapping-length histograms on the infinite lattices. The
 * main panel is linear; the inset repeats both curves on a log axis,
 * where the slower triangular decay shows up as the shallower line. */
export function renderInfiniteHist(docs: SimulateDoc[]): InfiniteHistScene {
  const byLattice = new Map(docs.map((d) => [d.parameters.lattice, d]));
  for (const s of SERIES) {
    if (!byLattice.has(s.lattice)) {
      throw new SchemaMismatchError(
        `missing simulate document for ${s.lattice}`,
      );
    }
  }

  const width = 680;
  const height = 440;
  const svg = new Svg(width, height);

  const xMax = 600; // beyond this the per-n counts are single digits
  const yMax = Math.max(
    ...docs.flatMap((d) => lengthRows(d).map((r) => r.frequency)),
  );
  const frame = drawFrame(
    svg,
    { left: 66, top: 24, right: width - 20, bottom: height - 50 },
    [0, xMax],
    [0, yMax * 1.08],
    { x: "trapping length n", y: "frequency", xTicks: 6, yTicks: 4 },
    { y: (v) => v.toFixed(3) },
  );

  SERIES.forEach((s, i) => {
    const rows = lengthRows(byLattice.get(s.lattice)!).filter(
      (r) => r.value <= xMax,
    );
    svg.polyline(
      rows.map((r) => [frame.x(r.value), frame.y(r.frequency)]),
      { stroke: s.color, "stroke-width": 1 },
    );
    svg
      .line(width - 180, 40 + 16 * i, width - 155, 40 + 16 * i, {
        stroke: s.color,
        "stroke-width": 1.5,
      })
      .text(width - 150, 44 + 16 * i, s.label, { "font-size": 12 });
  });

  // Inset: same data, log10 frequency. Only bins with at least 10
  // events are drawn so the single-event floor does not smear the tail.
  const inset = {
    left: width - 310,
    top: 70,
    right: width - 50,
    bottom: 230,
  };
  svg.rect(
    inset.left - 44,
    inset.top - 14,
    inset.right - inset.left + 58,
    inset.bottom - inset.top + 46,
    { fill: "white", stroke: "#999999", class: "inset" },
  );

  const logRows = SERIES.map((s) => {
    const doc = byLattice.get(s.lattice)!;
    const floor = 10 / doc.trapped;
    return lengthRows(doc)
      .filter((r) => r.value <= xMax && r.frequency >= floor)
      .map((r) => ({ n: r.value, log: Math.log10(r.frequency) }));
  });
  const logs = logRows.flat().map((r) => r.log);
  const ly = Math.min(...logs);
  const hy = Math.max(...logs);
  const iFrame = drawFrame(
    svg,
    inset,
    [0, xMax],
    [ly - 0.2, hy + 0.2],
    { x: "n", y: "log10 frequency", xTicks: 3, yTicks: 3 },
    { x: (v) => v.toFixed(0), y: (v) => v.toFixed(1) },
  );
  SERIES.forEach((s, i) => {
    svg.polyline(
      logRows[i]!.map((r) => [iFrame.x(r.n), iFrame.y(r.log)]),
      { stroke: s.color, "stroke-width": 1 },
    );
  });

  return {
    svg: svg.toString(),
    mainXScale: frame.x,
    insetYScale: iFrame.y,
  };
}
