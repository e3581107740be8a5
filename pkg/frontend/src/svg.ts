/** Minimal deterministic SVG emitter. Every number goes through fmt, so
 * rendering the same inputs twice yields the same bytes. */

export function fmt(v: number): string {
  if (!Number.isFinite(v)) throw new Error(`non-finite coordinate: ${v}`);
  const s = v.toFixed(6);
  return s.includes(".") ? s.replace(/0+$/, "").replace(/\.$/, "") : s;
}

export interface Scale {
  (v: number): number;
  invert(pixel: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(
  d0: number,
  d1: number,
  r0: number,
  r1: number,
): Scale {
  if (d0 === d1) throw new Error("degenerate scale domain");
  const k = (r1 - r0) / (d1 - d0);
  const scale = ((v: number) => r0 + (v - d0) * k) as Scale;
  scale.invert = (pixel: number) => d0 + (pixel - r0) / k;
  scale.domain = [d0, d1];
  scale.range = [r0, r1];
  return scale;
}

/** Evenly spaced ticks, endpoints included. */
export function ticks(lo: number, hi: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i <= count; i++) out.push(lo + ((hi - lo) * i) / count);
  return out;
}

const escape = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

type Attrs = Record<string, string | number>;

function attrText(attrs: Attrs): string {
  return Object.entries(attrs)
    .map(([k, v]) => ` ${k}="${typeof v === "number" ? fmt(v) : escape(v)}"`)
    .join("");
}

export class Svg {
  private parts: string[] = [];

  constructor(
    readonly width: number,
    readonly height: number,
  ) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${fmt(width)}" ` +
        `height="${fmt(height)}" viewBox="0 0 ${fmt(width)} ${fmt(height)}" ` +
        `font-family="sans-serif">`,
    );
    this.rect(0, 0, width, height, { fill: "white" });
  }

  raw(fragment: string): this {
    this.parts.push(fragment);
    return this;
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs: Attrs): this {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" ` +
        `y2="${fmt(y2)}"${attrText(attrs)}/>`,
    );
    return this;
  }

  rect(x: number, y: number, w: number, h: number, attrs: Attrs): this {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" ` +
        `height="${fmt(h)}"${attrText(attrs)}/>`,
    );
    return this;
  }

  circle(cx: number, cy: number, r: number, attrs: Attrs): this {
    this.parts.push(
      `<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${fmt(r)}"` +
        `${attrText(attrs)}/>`,
    );
    return this;
  }

  polyline(points: Array<[number, number]>, attrs: Attrs): this {
    const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline points="${pts}" fill="none"${attrText(attrs)}/>`,
    );
    return this;
  }

  text(x: number, y: number, content: string, attrs: Attrs = {}): this {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}"${attrText(attrs)}>` +
        `${escape(content)}</text>`,
    );
    return this;
  }

  openGroup(attrs: Attrs = {}): this {
    this.parts.push(`<g${attrText(attrs)}>`);
    return this;
  }

  closeGroup(): this {
    this.parts.push("</g>");
    return this;
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

export interface Frame {
  x: Scale;
  y: Scale;
  left: number;
  top: number;
  right: number;
  bottom: number;
}

/** Plot frame with ticked axes; returns the two scales for the callers
 * and for position checks in the tests. */
export function drawFrame(
  svg: Svg,
  box: { left: number; top: number; right: number; bottom: number },
  xDomain: [number, number],
  yDomain: [number, number],
  labels: { x: string; y: string; xTicks?: number; yTicks?: number },
  tickFmt: { x?: (v: number) => string; y?: (v: number) => string } = {},
): Frame {
  const { left, top, right, bottom } = box;
  const x = linearScale(xDomain[0], xDomain[1], left, right);
  const y = linearScale(yDomain[0], yDomain[1], bottom, top);
  const axis = { stroke: "black", "stroke-width": 1 };

  svg.line(left, bottom, right, bottom, axis);
  svg.line(left, bottom, left, top, axis);

  const fx = tickFmt.x ?? fmt;
  const fy = tickFmt.y ?? fmt;
  for (const t of ticks(xDomain[0], xDomain[1], labels.xTicks ?? 8)) {
    const px = x(t);
    svg.line(px, bottom, px, bottom + 4, axis);
    svg.text(px, bottom + 16, fx(t), {
      "text-anchor": "middle",
      "font-size": 11,
    });
  }
  for (const t of ticks(yDomain[0], yDomain[1], labels.yTicks ?? 5)) {
    const py = y(t);
    svg.line(left - 4, py, left, py, axis);
    svg.text(left - 7, py + 4, fy(t), {
      "text-anchor": "end",
      "font-size": 11,
    });
  }
  svg.text((left + right) / 2, bottom + 34, labels.x, {
    "text-anchor": "middle",
    "font-size": 13,
  });
  svg
    .openGroup({
      transform: `translate(${fmt(left - 36)} ${fmt((top + bottom) / 2)}) rotate(-90)`,
    })
    .text(0, 0, labels.y, { "text-anchor": "middle", "font-size": 13 })
    .closeGroup();

  return { x, y, left, top, right, bottom };
}
