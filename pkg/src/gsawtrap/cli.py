"""Command-line surface over the exact catalog, the enumerator, the
recursions and the simulator.

Every subcommand emits one machine-readable document, as JSON (a single
object, stable key order) or CSV (UTF-8, LF endings, a `# key=value`
preamble carrying the parameter echo and scalar results, then a header
row). Exact probabilities travel as "num/den" strings next to a float
convenience column. Exit status: 0 on success, 1 when a computation is
impossible for the requested combination, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ._version import __version__
from .catalog import (
    MODEL_NAMES,
    LadderModel,
    UnsupportedBiasError,
    UnsupportedObservableError,
    bias_sweep,
    decay_rate,
    exact_distribution,
    exact_moments,
)
from .errata import resolve_all
from .exhaustive import BudgetExceededError, DEFAULT_BUDGET, enumerate_walks
from .lattices import KINDS, LatticeTopology
from .recurrences import builtin_spec, eval_recursion
from .roots import ComplexDominantPoleError, NoRealPoleError
from .simulate import run_walks

SCHEMA_VERSION = "1"

_RECURSION_OF_MODEL = {
    "square-two-sided": "square",
    "triangular-two-sided": "triangular",
}


def _fr(value: Fraction) -> dict:
    return {"fraction": str(value), "float": float(value)}


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _csv_text(doc: dict, header: list[str], rows: list[list]) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict) and set(value) == {"fraction", "float"}:
            lines.append(f"# {key}={value['fraction']}")
            lines.append(f"# {key}Float={value['float']}")
        elif isinstance(value, dict):
            for k, v in value.items():
                lines.append(f"# {key}.{k}={_scalar(v)}")
        elif not isinstance(value, list):
            lines.append(f"# {key}={_scalar(value)}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_scalar(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _write(args, doc: dict, header: list[str] | None, rows) -> None:
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _csv_text(doc, header, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _doc(command: str, parameters: dict) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
    }


def _model(args) -> LadderModel:
    return LadderModel(args.model, C=args.C, wall=args.wall)


def _cmd_exact(args) -> tuple[dict, list[str], list[list]]:
    model = _model(args)
    dist = exact_distribution(model, args.n_max, observable=args.observable)
    moments = exact_moments(model, args.observable)
    doc = _doc("exact", {
        "model": args.model,
        "wall": args.wall,
        "C": str(args.C),
        "nMax": args.n_max,
        "observable": args.observable,
    })
    doc["mean"] = _fr(moments.mean)
    doc["variance"] = _fr(moments.variance)
    doc["decayRate"] = decay_rate(model, args.observable)
    doc["residualMass"] = _fr(dist.residual_mass)
    doc["rows"] = [
        {"n": n, "probability": str(p), "probabilityFloat": float(p)}
        for n, p in sorted(dist.entries.items())
    ]
    rows = [[r["n"], r["probability"], r["probabilityFloat"]]
            for r in doc["rows"]]
    return doc, ["n", "probability", "probabilityFloat"], rows


def _cmd_enumerate(args) -> tuple[dict, list[str], list[list]]:
    model = _model(args)
    result = enumerate_walks(model.topology(), C=model.C, n_max=args.n_max)
    doc = _doc("enumerate", {
        "model": args.model,
        "wall": args.wall,
        "C": str(args.C),
        "nMax": args.n_max,
    })
    doc["aliveMass"] = _fr(result.alive_mass)
    doc["nodes"] = result.nodes
    doc["rows"] = [
        {"length": n, "width": w, "probability": str(p),
         "probabilityFloat": float(p)}
        for (n, w), p in sorted(result.trapped.items())
    ]
    rows = [[r["length"], r["width"], r["probability"], r["probabilityFloat"]]
            for r in doc["rows"]]
    return doc, ["length", "width", "probability", "probabilityFloat"], rows


def _cmd_recur(args) -> tuple[dict, list[str], list[list]]:
    values = eval_recursion(builtin_spec(args.which), args.n_max)
    doc = _doc("recur", {"which": args.which, "nMax": args.n_max})
    doc["partialSum"] = _fr(sum(values, Fraction(0)))
    doc["rows"] = [
        {"n": n, "probability": str(p), "probabilityFloat": float(p)}
        for n, p in enumerate(values)
    ]
    rows = [[r["n"], r["probability"], r["probabilityFloat"]]
            for r in doc["rows"]]
    return doc, ["n", "probability", "probabilityFloat"], rows


def _cmd_simulate(args) -> tuple[dict, list[str], list[list]]:
    topology = LatticeTopology(
        args.lattice, wall=args.wall, box_half_width=args.box_half_width,
        honeycomb_start=args.honeycomb_start)
    summary = run_walks(topology, C=args.C, walks=args.walks, seed=args.seed,
                        streams=args.streams)
    doc = _doc("simulate", {
        "lattice": args.lattice,
        "wall": args.wall,
        "C": str(args.C),
        "walks": args.walks,
        "seed": args.seed,
        "streams": args.streams,
        "boxHalfWidth": args.box_half_width,
        "honeycombStart": args.honeycomb_start,
    })
    doc["trapped"] = summary.trapped
    doc["wallHits"] = summary.wall_hits
    doc["overflow"] = summary.overflow
    doc["meanLength"] = summary.mean_length
    doc["varianceLength"] = summary.variance_length
    doc["meanWidth"] = summary.mean_width
    doc["varianceWidth"] = summary.variance_width
    trapped = summary.trapped
    doc["rows"] = [
        {"observable": obs, "value": v, "count": c, "frequency": c / trapped}
        for obs, table in (("length", summary.lengths),
                           ("width", summary.widths))
        for v, c in sorted(table.items())
    ]
    rows = [[r["observable"], r["value"], r["count"], r["frequency"]]
            for r in doc["rows"]]
    return doc, ["observable", "value", "count", "frequency"], rows


def _route_values(model: LadderModel, n_max: int):
    """Exact P(n) for n <= n_max from every route that covers the model."""
    routes: dict[str, dict[int, Fraction] | None] = {}
    try:
        entries = exact_distribution(model, n_max).entries
        routes["gf"] = {n: entries.get(n, Fraction(0))
                        for n in range(n_max + 1)}
    except UnsupportedBiasError:
        routes["gf"] = None
    which = _RECURSION_OF_MODEL.get(model.lattice)
    if which is not None and model.C == 1 and not model.wall:
        values = eval_recursion(builtin_spec(which), n_max)
        routes["recursion"] = dict(enumerate(values))
    else:
        routes["recursion"] = None
    oracle = enumerate_walks(model.topology(), C=model.C, n_max=n_max,
                             budget=n_max).marginal("length")
    routes["oracle"] = {n: oracle.get(n, Fraction(0))
                       for n in range(n_max + 1)}
    return routes


def _cmd_compare(args) -> tuple[dict, list[str], list[list]]:
    model = _model(args)
    routes = _route_values(model, args.n_max)
    doc = _doc("compare", {
        "model": args.model,
        "wall": args.wall,
        "C": str(args.C),
        "nMax": args.n_max,
    })
    doc["routes"] = {name: vals is not None for name, vals in routes.items()}
    pairs = [("gf", "oracle"), ("recursion", "oracle"), ("gf", "recursion")]
    agreement = True
    out_rows = []
    for n in range(args.n_max + 1):
        row: dict = {"n": n}
        for name in ("gf", "recursion", "oracle"):
            vals = routes[name]
            row[name] = str(vals[n]) if vals is not None else None
        for a, b in pairs:
            key = f"delta{a.capitalize()}{b.capitalize()}"
            if routes[a] is None or routes[b] is None:
                row[key] = None
            else:
                delta = routes[a][n] - routes[b][n]
                row[key] = str(delta)
                if delta != 0:
                    agreement = False
        out_rows.append(row)
    doc["agreement"] = agreement
    doc["rows"] = out_rows
    header = ["n", "gf", "recursion", "oracle", "deltaGfOracle",
              "deltaRecursionOracle", "deltaGfRecursion"]
    rows = [[r["n"], r["gf"], r["recursion"], r["oracle"],
             r["deltaGfOracle"], r["deltaRecursionOracle"],
             r["deltaGfRecursion"]] for r in out_rows]
    return doc, header, rows


def _cmd_sweep_bias(args) -> tuple[dict, list[str], list[list]]:
    if args.c_from <= 0 or args.step <= 0 or args.c_to < args.c_from:
        raise ValueError("need 0 < from <= to and step > 0")
    values = []
    c = args.c_from
    while c <= args.c_to:
        values.append(c)
        c += args.step
    points = bias_sweep(args.model, values, wall=args.wall,
                        include_decay=not args.no_decay)
    best = min(points, key=lambda p: p.mean_length)
    doc = _doc("sweep-bias", {
        "model": args.model,
        "wall": args.wall,
        "from": str(args.c_from),
        "to": str(args.c_to),
        "step": str(args.step),
        "decay": not args.no_decay,
    })
    doc["argmin"] = {"C": str(best.C), "CFloat": float(best.C),
                     "mean": str(best.mean_length),
                     "meanFloat": float(best.mean_length)}
    doc["rows"] = [
        {"C": str(p.C), "CFloat": float(p.C), "mean": str(p.mean_length),
         "meanFloat": float(p.mean_length), "decayRate": p.decay_rate}
        for p in points
    ]
    rows = [[r["C"], r["CFloat"], r["mean"], r["meanFloat"], r["decayRate"]]
            for r in doc["rows"]]
    return doc, ["C", "CFloat", "mean", "meanFloat", "decayRate"], rows


def _cmd_errata(args) -> tuple[dict, None, None]:
    report = resolve_all(n_max=args.n_max, walks=args.walks, seed=args.seed)
    doc = _doc("errata", {
        "nMax": args.n_max,
        "walks": args.walks,
        "seed": args.seed,
    })
    doc.update({k: v for k, v in report.items() if k != "schemaVersion"})
    return doc, None, None


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="json",
                   help="output format (default json)")
    p.add_argument("--out", metavar="PATH",
                   help="write to PATH instead of stdout")


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=MODEL_NAMES, required=True)
    p.add_argument("--C", type=Fraction, default=Fraction(1),
                   help="bias per occupied neighbour, exact (e.g. 2, 1/2, 0.25)")
    p.add_argument("--wall", action="store_true",
                   help="one-sided square ladder with the blocked column")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsawtrap",
        description="trapping statistics of growing self-avoiding walks",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact distribution from the "
                                     "generating functions")
    _add_model_flags(p)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--observable", choices=("length", "width"),
                   default="length")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("enumerate", help="exhaustive joint distribution "
                                         "over all walks")
    _add_model_flags(p)
    p.add_argument("--n-max", type=int, default=12)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("recur", help="distribution from the built-in "
                                     "recursions")
    p.add_argument("--which", choices=("square", "triangular"),
                   required=True)
    p.add_argument("--n-max", type=int, default=40)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_recur)

    p = sub.add_parser("simulate", help="Monte Carlo runs on ladders or "
                                        "infinite lattices")
    p.add_argument("--lattice", choices=KINDS, required=True)
    p.add_argument("--C", type=Fraction, default=Fraction(1))
    p.add_argument("--wall", action="store_true")
    p.add_argument("--walks", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--streams", type=int, default=1)
    p.add_argument("--box-half-width", type=int, default=256)
    p.add_argument("--honeycomb-start", type=int, choices=(0, 1), default=0)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("compare", help="per-n deltas between generating "
                                       "function, recursion and enumerator")
    _add_model_flags(p)
    p.add_argument("--n-max", type=int, default=15)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("sweep-bias", help="exact mean trapping length "
                                          "over a bias grid")
    p.add_argument("--model", choices=MODEL_NAMES,
                   default="square-two-sided")
    p.add_argument("--wall", action="store_true")
    p.add_argument("--from", dest="c_from", type=Fraction,
                   default=Fraction(1, 5))
    p.add_argument("--to", dest="c_to", type=Fraction, default=Fraction(6))
    p.add_argument("--step", type=Fraction, default=Fraction(1, 100))
    p.add_argument("--no-decay", action="store_true",
                   help="skip the per-point decay rate (much faster)")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_sweep_bias)

    p = sub.add_parser("errata", help="recompute the evidence for the "
                                      "known closed-form discrepancies")
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--walks", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=1)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_errata)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and args.n_max > DEFAULT_BUDGET:
        parser.error(f"compare supports --n-max up to {DEFAULT_BUDGET}; "
                     "beyond that the enumeration is intractable")
    if args.command == "errata" and args.format == "csv":
        parser.error("the errata report is nested; use --format json")
    try:
        doc, header, rows = args.handler(args)
    except (UnsupportedBiasError, UnsupportedObservableError,
            BudgetExceededError, NoRealPoleError, ComplexDominantPoleError,
            ValueError) as exc:
        print(f"gsawtrap: {exc}", file=sys.stderr)
        return 1
    _write(args, doc, header, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
