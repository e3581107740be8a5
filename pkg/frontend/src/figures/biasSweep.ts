import { SweepDoc } from "../schema.js";
import { drawFrame, Scale, Svg } from "../svg.js";

export interface BiasSweepScene {
  svg: string;
  argminX: number;
  argminC: number;
  xScale: Scale;
}

/** Mean trapping length against the attraction strength, with the grid
 * minimum (taken from the document's argmin block) marked. */
export function renderBiasSweep(doc: SweepDoc): BiasSweepScene {
  const width = 640;
  const height = 420;
  const svg = new Svg(width, height);

  const cs = doc.rows.map((r) => r.CFloat);
  const means = doc.rows.map((r) => r.meanFloat);
  const yLo = Math.min(...means);
  const yHi = Math.max(...means);
  const pad = (yHi - yLo) * 0.06;
  const frame = drawFrame(
    svg,
    { left: 62, top: 24, right: width - 20, bottom: height - 50 },
    [Math.min(...cs), Math.max(...cs)],
    [yLo - pad, yHi + pad],
    { x: "attraction strength C", y: "mean trapping length", xTicks: 6 },
    { x: (v) => v.toFixed(1), y: (v) => v.toFixed(0) },
  );

  svg.polyline(
    doc.rows.map((r) => [frame.x(r.CFloat), frame.y(r.meanFloat)]),
    { stroke: "#1f6fb4", "stroke-width": 1.5 },
  );

  const ax = frame.x(doc.argmin.CFloat);
  const ay = frame.y(doc.argmin.meanFloat);
  svg.line(ax, frame.bottom, ax, ay, {
    stroke: "#444444",
    "stroke-width": 1,
    "stroke-dasharray": "4 3",
    class: "argmin-marker",
  });
  svg.circle(ax, ay, 3.5, { fill: "#c03d2f" });
  svg.text(ax + 8, ay - 8, `minimum at C = ${doc.argmin.C}`, {
    "font-size": 12,
  });
  svg.text(
    ax + 8,
    ay + 8,
    `mean ${doc.argmin.meanFloat.toFixed(3)}`,
    { "font-size": 11, fill: "#444444" },
  );

  return {
    svg: svg.toString(),
    argminX: ax,
    argminC: doc.argmin.CFloat,
    xScale: frame.x,
  };
}
