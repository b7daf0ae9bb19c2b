"""Command line front end.

    skewfib rho 240
    skewfib table --max-p 11
    skewfib james H 3
    skewfib admissible C 2 26 --implications
    skewfib verify hopf-neg --pairs 1000 --seed 7
    skewfib project hopf-neg --grid 3 --out lines.json

Results go to stdout as JSON.  Exit status: 0 on success, 1 when a check
fails (the witness is part of the report), 2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import geometry as geo
from .divalg import DivAlgError
from .integrality import (
    IntegralityError,
    admissible,
    cross_field_implications,
    hurwitz_radon,
    james_verdict,
)
from .table import build_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(obj, indent=2))
    out.write("\n")


def parse_map_spec(spec: str) -> geo.FibrationMap:
    if spec == "hopf-neg":
        return geo.hopf_map(-1)
    if spec == "hopf-pos":
        return geo.hopf_map(1)
    if spec.startswith("scaled:"):
        try:
            alpha = float(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad scale in map spec {spec!r}")
        return geo.scaled_hopf(alpha)
    if spec.startswith("file:"):
        path = spec.split(":", 1)[1]
        try:
            return geo.load_tabulated_map(path)
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}")
    raise UsageError(f"unknown map spec {spec!r}; use hopf-neg, hopf-pos, scaled:A or file:PATH")


def _sample_box(B: geo.FibrationMap, extent: float) -> float:
    if B.domain is None:
        return extent
    (a, b), (c, d) = B.domain
    return float(min(extent, abs(a), abs(b), abs(c), abs(d)))


def cmd_rho(args) -> int:
    _emit({"q": args.q, "rho": hurwitz_radon(args.q)})
    return EXIT_OK


def cmd_table(args) -> int:
    rows = build_table(args.max_p, args.fields, args.budget_seconds)
    _emit({"max_p": args.max_p, "fields": list(args.fields),
           "rows": [r.to_json() for r in rows]})
    return EXIT_OK


def cmd_james(args) -> int:
    jv = james_verdict(args.field, args.p)
    _emit({"field": jv.field, "p": jv.p, "period": jv.period})
    return EXIT_OK


def cmd_admissible(args) -> int:
    if args.n <= args.p:
        raise UsageError("need n > p")
    v = admissible(args.field, args.p, args.n)
    out = v.to_dict()
    if args.implications and args.field != "R":
        out["implications"] = [w.to_dict() for w in
                               cross_field_implications(args.field, args.p, args.n)]
    _emit(out)
    return EXIT_OK


def _check(name, fn):
    try:
        detail = fn()
        return {"check": name, "status": "pass", **(detail or {})}
    except geo.FibrationCheckFailure as exc:
        return {"check": name, "status": "fail", "kind": exc.kind,
                "message": str(exc), "witness": exc.witness}
    except geo.NoCapError as exc:
        return {"check": name, "status": "fail", "kind": "no-cap", "message": str(exc)}


def verify_report(B: geo.FibrationMap, pairs: int, seed: int, extent: float,
                  coverage_points: int = 20) -> dict:
    rng = np.random.default_rng(seed)
    box = _sample_box(B, extent)
    ys = rng.uniform(-box, box, size=(pairs, 2, 2))

    def skew():
        sign = geo.orientation_sign(B, ys)
        dets = np.abs(geo.skew_check(B, ys[:, 0], ys[:, 1]))
        return {"orientation": sign, "min_abs_det": float(np.min(dets)),
                "claimed_orientation": B.orientation}

    def circle_field():
        comps = [c for _, c in geo.induced_circle_field(B)]
        return {"min_abs_component": float(np.min(np.abs(comps))), "samples": len(comps)}

    def directions():
        u = geo.direction_field(B, ys.reshape(-1, 2))
        cap = geo.hemisphere_and_circumcenter(u, seed=seed)
        return {"center": cap.center.tolist(), "radius": cap.radius,
                "open_hemisphere": cap.open_hemisphere,
                "note": "sampled evidence, not a proof"}

    def coverage():
        xs = rng.uniform(-box, box, size=(coverage_points, 3))
        worst = 0.0
        for x in xs:
            y = geo.fiber_through_point(B, x)
            r = y + x[2] * B(y) - x[:2]
            worst = max(worst, float(np.linalg.norm(r)))
        return {"points": coverage_points, "max_residual": worst,
                "note": "sampled evidence, not a proof"}

    checks = [_check("skew_pairs", skew), _check("induced_circle_field", circle_field),
              _check("direction_cap", directions), _check("coverage", coverage)]
    ok = all(c["status"] == "pass" for c in checks)
    return {"map": B.name, "approximate": B.approximate, "pairs": pairs, "seed": seed,
            "status": "pass" if ok else "fail", "checks": checks}


def cmd_verify(args) -> int:
    B = parse_map_spec(args.map)
    rep = verify_report(B, args.pairs, args.seed, args.extent)
    _emit(rep)
    if rep["status"] != "pass":
        for c in rep["checks"]:
            if c["status"] == "fail":
                print(f"FAIL {c['check']} [{c['kind']}]: {c['message']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_project(args) -> int:
    B = parse_map_spec(args.map)
    if args.grid < 1:
        raise UsageError("--grid must be >= 1")
    axis = np.linspace(-args.extent, args.extent, args.grid) if args.grid > 1 else np.zeros(1)
    ys = np.array([(a, b) for a in axis for b in axis])
    recs = geo.line_records(B, ys)
    i, j = np.triu_indices(len(ys), k=1)
    dets = np.abs(geo.skew_check(B, ys[i], ys[j])) if len(i) else np.array([np.inf])
    summary = {"map": B.name, "lines": len(recs),
               "pairwise_skew": bool(np.all(dets > geo.UNIT_TOL)),
               "min_abs_det": float(np.min(dets)) if len(i) else None}
    if args.out is None:
        summary["lines_data"] = [{k: r[k] for k in ("y", "u", "v")} for r in recs]
        summary["circles"] = [{k: r[k] for k in ("e", "f")} for r in recs]
        _emit(summary)
        return EXIT_OK
    out = Path(args.out)
    try:
        if out.suffix.lower() == ".csv":
            circles = out.with_name(out.stem + "_circles.csv")
            geo.write_lines_csv(recs, out, circles)
            summary["out"] = [str(out), str(circles)]
        else:
            geo.write_lines_json(recs, out)
            summary["out"] = [str(out)]
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}")
    _emit(summary)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewfib", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", help="Hurwitz-Radon number rho(q)")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("table", help="periods a_p, b_p, c_p")
    p.add_argument("--max-p", type=int, default=8)
    p.add_argument("--fields", default="abc", help="subset of 'abc'")
    p.add_argument("--budget-seconds", type=float, default=300.0)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("james", help="period for one field and p")
    p.add_argument("field", choices=["R", "C", "H"])
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_james)

    p = sub.add_parser("admissible", help="obstruction verdict for an F-(p,n)-fibration")
    p.add_argument("field", choices=["R", "C", "H"])
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--implications", action="store_true")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("verify", help="sampled checks of a map B: R^2 -> R^2")
    p.add_argument("map")
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extent", type=float, default=10.0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("project", help="export lines and their great circles")
    p.add_argument("map")
    p.add_argument("--grid", type=int, default=5)
    p.add_argument("--extent", type=float, default=1.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_project)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, IntegralityError, geo.GeometryError, DivAlgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
