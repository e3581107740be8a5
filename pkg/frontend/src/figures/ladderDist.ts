import { ExactDoc, fractionToNumber, SchemaMismatchError } from "../schema.js";
import { drawFrame, fmt, Scale, Svg } from "../svg.js";

export interface MeanMarker {
  model: string;
  mean: number;
  x: number;
}

export interface LadderDistScene {
  svg: string;
  markers: MeanMarker[];
  xScale: Scale;
}

const SERIES = [
  { model: "square-two-sided", color: "#1f6fb4", label: "square strip" },
  { model: "triangular-two-sided", color: "#c03d2f", label: "triangular strip" },
];

/** Overlaid exact trapping-length distributions for the two doubly
 * infinite strips, with a dashed vertical line at each mean. The means
 * come from the input documents, nothing is recomputed here. */
export function renderLadderDist(docs: ExactDoc[]): LadderDistScene {
  const byModel = new Map(docs.map((d) => [d.parameters.model, d]));
  for (const s of SERIES) {
    const doc = byModel.get(s.model);
    if (!doc) {
      throw new SchemaMismatchError(`missing exact document for ${s.model}`);
    }
    if (doc.parameters.observable !== "length") {
      throw new SchemaMismatchError(`${s.model}: need the length observable`);
    }
  }

  const width = 640;
  const height = 420;
  const svg = new Svg(width, height);
  const maxN = Math.max(
    ...docs.flatMap((d) => d.rows.map((r) => r.n)),
  );
  const maxP = Math.max(
    ...docs.flatMap((d) => d.rows.map((r) => r.probabilityFloat)),
  );
  const frame = drawFrame(
    svg,
    { left: 62, top: 24, right: width - 20, bottom: height - 50 },
    [0, maxN],
    [0, maxP * 1.08],
    { x: "trapping length n", y: "probability", yTicks: 4 },
    { y: (v) => v.toFixed(3) },
  );

  const markers: MeanMarker[] = [];
  SERIES.forEach((s, i) => {
    const doc = byModel.get(s.model)!;
    const pts: Array<[number, number]> = doc.rows.map((r) => [
      frame.x(r.n),
      frame.y(r.probabilityFloat),
    ]);
    svg.polyline(pts, { stroke: s.color, "stroke-width": 1.5 });
    for (const r of doc.rows) {
      svg.circle(frame.x(r.n), frame.y(r.probabilityFloat), 2, {
        fill: s.color,
      });
    }

    const mean = fractionToNumber(doc.mean.fraction);
    const mx = frame.x(mean);
    svg.line(mx, frame.bottom, mx, frame.top, {
      stroke: s.color,
      "stroke-width": 1,
      "stroke-dasharray": "5 3",
      class: "mean-marker",
    });
    svg.text(mx + 4, frame.top + 14 + 14 * i, `mean ${mean.toFixed(3)}`, {
      fill: s.color,
      "font-size": 12,
    });
    markers.push({ model: s.model, mean, x: mx });

    svg
      .line(width - 190, 30 + 16 * i, width - 165, 30 + 16 * i, {
        stroke: s.color,
        "stroke-width": 1.5,
      })
      .text(width - 160, 34 + 16 * i, s.label, { "font-size": 12 });
  });

  return { svg: svg.toString(), markers, xScale: frame.x };
}

export function meanMarkerPositions(scene: LadderDistScene): string {
  return scene.markers
    .map((m) => `${m.model}: x=${fmt(m.x)} mean=${m.mean.toFixed(3)}`)
    .join("; ");
}
