"""Command-line front end.

Subcommands: iterate, preimage, sensitivity, accessibility, transitivity,
periodic, lyapunov, mixing, slice-cert, curves, verify, replay.

Conventions shared by all subcommands:

* vectors are comma-separated floats (``1,0,0``); balls are ``center:radius``
  (chord radius); circle arcs are ``center:half-width`` in exact turns
  (``1/8:1/100``);
* angles accept decimal radians or an exact rational ``p/q`` meaning the
  angle 2*pi*p/q; exact mode requires the rational form;
* CSV floats are printed with 17 significant digits (round-trip exact);
  JSON reports embed the config, seed, tolerances, and horizons used, so
  identical configurations produce byte-identical files;
* exit code 0 on success, 1 on a violated invariant, 2 on a usage error.

The default seed is 0, overridable with the POLEMAP_SEED environment
variable or ``--seed``.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import chaos, curves, plots, verify
from .angles import Angle, angle_orbit, angle_point, parse_angle
from .chaos import CircleArc, OpenBall
from .dynamics import iterate, pole_map, preimage_in_disk, preimage_on_sphere
from .errors import DegenerateConfiguration, PolemapError
from .geometry import as_vector, frame_through
from .verify import render_table, run_checks

POLE_LOAD_TOL = 1e-6


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _default_seed() -> int:
    return int(os.environ.get("POLEMAP_SEED", "0"))


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


def parse_vector(text: str) -> np.ndarray:
    try:
        return as_vector([float(t) for t in text.split(",")])
    except (ValueError, PolemapError) as exc:
        raise UsageError(f"bad vector {text!r}: {exc}") from exc


def parse_ball(text: str, space: str) -> OpenBall:
    try:
        center, radius = text.rsplit(":", 1)
        return OpenBall(parse_vector(center), float(radius), space)
    except UsageError:
        raise
    except (ValueError, PolemapError) as exc:
        raise UsageError(f"bad ball {text!r} (want center:radius): {exc}") from exc


def parse_arc(text: str) -> CircleArc:
    try:
        center, width = text.split(":")
        return CircleArc(Fraction(center), Fraction(width))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad arc {text!r} (want center:half-width in turns): {exc}") from exc


def parse_angle_arg(text: str, exact: bool = False) -> Angle:
    try:
        return parse_angle(text, exact=exact)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad angle {text!r}: {exc}") from exc


def load_pole(text: str, normalize_consent: bool) -> np.ndarray:
    """Parse a pole and normalize it exactly onto the sphere.

    Deviations beyond 1e-6 require the explicit --normalize-pole flag."""
    p = parse_vector(text)
    n = float(np.linalg.norm(p))
    if n == 0.0:
        raise UsageError("pole must be nonzero")
    if abs(n - 1.0) > POLE_LOAD_TOL and not normalize_consent:
        raise UsageError(
            f"pole norm {n:.9f} deviates from 1 by more than {POLE_LOAD_TOL}; "
            "pass --normalize-pole to accept normalization"
        )
    return p / n


def _jsonable(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [float(v) for v in value]
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def write_report(path, config: dict, verdicts: dict, witnesses: list, seed: int) -> None:
    doc = {
        "config": _jsonable(config),
        "verdicts": _jsonable(verdicts),
        "witnesses": _jsonable(witnesses),
        "seed": int(seed),
    }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def write_orbit_csv(path, orbit) -> None:
    dim = orbit.points.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step"] + [f"x{i}" for i in range(dim)] + ["norm_drift", "slice_residual"])
        for k in range(len(orbit.points)):
            writer.writerow([k] + [_fmt(v) for v in orbit.points[k]]
                            + [_fmt(orbit.norm_drift[k]), _fmt(orbit.slice_residual[k])])


def write_exact_orbit_csv(path, angles: list[Angle]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step", "theta", "x0", "x1", "norm_drift", "slice_residual"])
        for k, a in enumerate(angles):
            x = angle_point(a)
            writer.writerow([k, str(a), _fmt(x[0]), _fmt(x[1]), "0", "0"])


def _witness_entry(kind: str, pole: np.ndarray, witness, threshold: float,
                   comparator: str, renormalize: str, extra: dict | None = None) -> dict:
    entry = {
        "kind": kind,
        "pole": pole,
        "points": [pt for pt in witness.points],
        "step": witness.step,
        "separation": witness.separation,
        "threshold": threshold,
        "comparator": comparator,
        "renormalize": renormalize,
    }
    if extra:
        entry.update(extra)
    return entry


# ----------------------------------------------------------------------
# subcommand handlers


def cmd_iterate(args) -> int:
    exact = args.exact or args.mode == "circle-exact"
    if exact:
        if args.alpha is None or args.theta is None:
            raise UsageError("exact iteration needs --alpha and --theta")
        alpha = parse_angle_arg(args.alpha, exact=True)
        theta = parse_angle_arg(args.theta, exact=True)
        angles = angle_orbit(alpha, theta, args.steps)
        if args.out:
            write_exact_orbit_csv(args.out, angles)
        if args.figure:
            plots.save_angle_orbit_figure(angles, args.figure,
                                          title=f"exact orbit, alpha={alpha}")
        print(f"exact orbit of {args.steps} steps from theta={theta} (alpha={alpha})")
        print("  " + " -> ".join(str(a) for a in angles))
        return 0

    if args.alpha is not None:
        p = angle_point(parse_angle_arg(args.alpha))
    elif args.pole is not None:
        p = load_pole(args.pole, args.normalize_pole)
    else:
        raise UsageError("need --pole coordinates or --alpha angle")
    if args.theta is not None:
        x0 = angle_point(parse_angle_arg(args.theta))
    elif args.start is not None:
        x0 = parse_vector(args.start)
    else:
        raise UsageError("need --start coordinates or --theta angle")
    renormalize = args.renormalize or ("off" if args.mode == "disk" else "every-step")
    orbit = iterate(p, x0, args.steps, renormalize=renormalize)
    if args.out:
        write_orbit_csv(args.out, orbit)
    if args.figure:
        n0 = float(np.linalg.norm(x0))
        direction = x0 / n0 if n0 > 1e-9 else p
        plots.save_orbit_slice_figure(orbit, frame_through(p, direction), args.figure,
                                      title=f"{args.mode} orbit, {args.steps} steps")
    print(f"{args.mode} orbit: {args.steps} steps, renormalize={renormalize}")
    print(f"  max norm drift     = {orbit.max_norm_drift:.3e}")
    print(f"  max slice residual = {orbit.max_slice_residual:.3e}")
    return 0


def cmd_preimage(args) -> int:
    p = load_pole(args.pole, args.normalize_pole)
    y = parse_vector(args.target)
    if args.disk:
        x = preimage_in_disk(p, y)
    else:
        x = preimage_on_sphere(p, y)
    error = float(np.linalg.norm(pole_map(p, x) - y))
    print("preimage: " + ",".join(_fmt(v) for v in x))
    print(f"round-trip error = {error:.3e}")
    if args.out:
        config = {"command": "preimage", "pole": p, "target": y, "disk": bool(args.disk),
                  "roundtrip_tol": 1e-10}
        write_report(args.out, config, {"roundtrip_error": error, "passed": error <= 1e-10},
                     [{"kind": "preimage", "pole": p, "points": [x], "step": 1,
                       "separation": error, "threshold": 1e-10, "comparator": "at_most",
                       "renormalize": "off", "target": y}], args.seed)
    if error > 1e-10:
        print("round-trip tolerance exceeded", file=sys.stderr)
        return 1
    return 0


def cmd_sensitivity(args) -> int:
    p = load_pole(args.pole, args.normalize_pole)
    x = parse_vector(args.point)
    if args.space == "disk":
        witness = chaos.disk_sensitivity_witness(p, x, args.delta, args.lam, args.max_k)
        renormalize = "off"
    else:
        witness = chaos.sensitivity_witness(p, x, args.delta, args.lam, args.max_k)
        renormalize = "every-step"
    start_gap = float(np.linalg.norm(witness.points[0] - witness.points[1]))
    print(f"sensitivity witness: k={witness.step}, separation={witness.separation:.6f} "
          f"(> lam={args.lam}), initial distance {start_gap:.3e} <= delta={args.delta}")
    if args.out:
        config = {"command": "sensitivity", "pole": p, "point": x, "delta": args.delta,
                  "lam": args.lam, "max_k": args.max_k, "space": args.space}
        write_report(args.out, config,
                     {"step": witness.step, "separation": witness.separation,
                      "initial_distance": start_gap, "passed": True},
                     [_witness_entry("sensitivity", p, witness, args.lam, "greater",
                                     renormalize, {"delta": args.delta})],
                     args.seed)
    return 0


def cmd_accessibility(args) -> int:
    p = load_pole(args.pole, args.normalize_pole)
    u = parse_ball(args.ball_u, args.space)
    v = parse_ball(args.ball_v, args.space)
    witness = chaos.accessibility_witness(p, u, v, args.lam)
    renormalize = "every-step" if args.space == "sphere" else "off"
    ok = witness.separation <= args.lam
    print(f"accessibility witness: k={witness.step}, separation={witness.separation:.3e} "
          f"({'<=' if ok else '>'} lam={args.lam})")
    if args.out:
        config = {"command": "accessibility", "pole": p,
                  "U": {"center": u.center, "radius": u.radius},
                  "V": {"center": v.center, "radius": v.radius},
                  "lam": args.lam, "space": args.space}
        write_report(args.out, config,
                     {"step": witness.step, "separation": witness.separation, "passed": ok},
                     [_witness_entry("accessibility", p, witness, args.lam, "at_most",
                                     renormalize)],
                     args.seed)
    if not ok:
        print("accessibility target separation not met", file=sys.stderr)
        return 1
    return 0


def cmd_transitivity(args) -> int:
    p = load_pole(args.pole, args.normalize_pole)
    u = parse_ball(args.ball_u, args.space)
    v = parse_ball(args.ball_v, args.space)
    probe = chaos.transitivity_probe(p, u, v, args.max_k, args.samples, seed=args.seed)
    verdicts = {
        "hit": probe.hit,
        "first_hit_step": probe.first_hit_step,
        "max_step": probe.max_step,
        "samples": probe.samples,
    }
    witnesses = []
    if probe.hit:
        print(f"hit: a sample of U reaches V at step {probe.first_hit_step}")
        witnesses.append({"kind": "transitivity-hit", "pole": p,
                          "points": [probe.start_point], "step": probe.first_hit_step,
                          "separation": float(np.linalg.norm(probe.hit_point - v.center)),
                          "threshold": v.radius, "comparator": "at_most",
                          "renormalize": "every-step" if args.space == "sphere" else "off",
                          "target": v.center})
    else:
        print(f"no hit within {probe.max_step} steps over {probe.samples} samples")
        if p.size >= 3:
            try:
                cert = chaos.slice_confinement_certificate(
                    p, u.center, v.center, steps=min(args.max_k, 10000), space=args.space)
                verdicts["confinement"] = {
                    "certified": cert.certified,
                    "max_slice_residual": cert.max_slice_residual,
                    "min_distance_to_ref": cert.min_distance_to_ref,
                    "ref_gap": cert.ref_gap,
                    "steps": cert.steps,
                }
                print("slice confinement: orbits from U stay on their slice "
                      f"(residual {cert.max_slice_residual:.2e}); distance to V's center "
                      f"never drops below {cert.min_distance_to_ref:.3f} "
                      f"(slice gap {cert.ref_gap:.3f})")
            except DegenerateConfiguration:
                verdicts["confinement"] = None
    if args.out:
        config = {"command": "transitivity", "pole": p,
                  "U": {"center": u.center, "radius": u.radius},
                  "V": {"center": v.center, "radius": v.radius},
                  "max_k": args.max_k, "samples": args.samples, "space": args.space}
        write_report(args.out, config, verdicts, witnesses, args.seed)
    return 0


def cmd_periodic(args) -> int:
    alpha = parse_angle_arg(args.alpha, exact=True)
    angles = chaos.periodic_angles(alpha, args.k)
    gap = chaos.max_gap_turns(angles)
    print(f"{len(angles)} angles of period dividing k={args.k}; max gap = {gap} turns")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["index", "theta_turns", "x0", "x1"])
            for i, a in enumerate(angles):
                x = angle_point(a)
                writer.writerow([i, str(a), _fmt(x[0]), _fmt(x[1])])
    if args.figure:
        plots.save_angle_orbit_figure(angles, args.figure,
                                      title=f"period-{args.k} points, alpha={alpha}")
    return 0


def cmd_lyapunov(args) -> int:
    value = chaos.lyapunov_estimate(args.system, args.x0, args.steps)
    print(f"lyapunov estimate ({args.system}, {args.steps} steps): {value:.12f}"
          f"  [ln 2 = {math.log(2.0):.12f}]")
    if args.out:
        config = {"command": "lyapunov", "system": args.system, "x0": args.x0,
                  "steps": args.steps}
        write_report(args.out, config,
                     {"estimate": value, "ln2": math.log(2.0),
                      "deviation_from_ln2": value - math.log(2.0)},
                     [], args.seed)
    return 0


def cmd_mixing(args) -> int:
    alpha = parse_angle_arg(args.alpha, exact=True)
    u = parse_arc(args.arc_u)
    v = parse_arc(args.arc_v)
    result = chaos.mixing_probe(alpha, u, v, args.horizon)
    print(f"mixing: every image from step {result.settle_step} through {result.horizon} "
          f"meets V (coverage step {result.coverage_step})")
    if args.out:
        config = {"command": "mixing", "alpha": str(alpha),
                  "U": {"center": str(u.center), "half_width": str(u.half_width)},
                  "V": {"center": str(v.center), "half_width": str(v.half_width)},
                  "horizon": args.horizon}
        write_report(args.out, config,
                     {"settle_step": result.settle_step,
                      "coverage_step": result.coverage_step,
                      "horizon": result.horizon},
                     [], args.seed)
    return 0


def cmd_slice_cert(args) -> int:
    p = load_pole(args.pole, args.normalize_pole)
    x0 = parse_vector(args.start)
    ref = parse_vector(args.ref)
    cert = chaos.slice_confinement_certificate(p, x0, ref, args.steps, space=args.space)
    status = "certified" if cert.certified else "NOT certified"
    print(f"slice confinement {status}: residual {cert.max_slice_residual:.2e} over "
          f"{cert.steps} steps; min distance to ref {cert.min_distance_to_ref:.6f}, "
          f"ref gap {cert.ref_gap:.6f}")
    if args.figure:
        orbit = iterate(p, x0, min(args.steps, 2000),
                        renormalize="every-step" if args.space == "sphere" else "off")
        plots.save_orbit_slice_figure(orbit, frame_through(p, x0 / np.linalg.norm(x0)),
                                      args.figure, title="confined orbit")
    if args.out:
        config = {"command": "slice-cert", "pole": p, "start": x0, "ref": ref,
                  "steps": args.steps, "residual_tol": cert.residual_tol,
                  "space": args.space}
        write_report(args.out, config,
                     {"certified": cert.certified,
                      "max_slice_residual": cert.max_slice_residual,
                      "min_distance_to_ref": cert.min_distance_to_ref,
                      "ref_gap": cert.ref_gap},
                     [], args.seed)
    return 0 if cert.certified else 1


def _curve_csv_plane(path, samples, pedal, orthotomic) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["s", "x", "y", "nx", "ny", "ped_x", "ped_y", "ort_x", "ort_y"])
        for i, sample in enumerate(samples):
            writer.writerow([_fmt(sample.s)] + [_fmt(v) for v in sample.position]
                            + [_fmt(v) for v in sample.normal]
                            + [_fmt(v) for v in pedal[i]] + [_fmt(v) for v in orthotomic[i]])


def _curve_csv_sphere(path, samples, orthotomic) -> None:
    dim = orthotomic.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["s"] + [f"ped_{i}" for i in range(dim)] + [f"ort_{i}" for i in range(dim)])
        for i, sample in enumerate(samples):
            writer.writerow([_fmt(sample.s)] + [_fmt(v) for v in sample.pedal]
                            + [_fmt(v) for v in orthotomic[i]])


def read_plane_samples(path) -> list[curves.PlaneCurveSample]:
    """CSV columns: s,x,y,nx,ny."""
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(curves.PlaneCurveSample(float(row["s"]),
                                               np.array([float(row["x"]), float(row["y"])]),
                                               np.array([float(row["nx"]), float(row["ny"])])))
    return out


def read_sphere_pedal_samples(path) -> list[curves.SphereCurveSample]:
    """CSV columns: s,x0,...,xn (pedal points)."""
    out = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        coord_cols = [i for i, name in enumerate(header) if name.startswith("x")]
        s_col = header.index("s")
        for row in reader:
            out.append(curves.SphereCurveSample(float(row[s_col]),
                                                np.array([float(row[i]) for i in coord_cols])))
    return out


def cmd_curves(args) -> int:
    if args.infile:
        if args.space == "plane":
            samples = read_plane_samples(args.infile)
            kind = "plane"
        else:
            samples = read_sphere_pedal_samples(args.infile)
            kind = "sphere"
    elif args.curve in ("circle", "line"):
        count = args.samples
        samples = curves.unit_circle_samples(count) if args.curve == "circle" else curves.line_samples(count)
        kind = "plane"
    elif args.curve == "small-circle":
        if args.pole is None:
            raise UsageError("small-circle pedals need --pole")
        p = load_pole(args.pole, args.normalize_pole)
        samples = curves.small_circle_pedal_samples(p, args.colatitude, args.samples)
        kind = "sphere"
    else:
        raise UsageError("need --curve circle|line|small-circle or --in CSV")

    if kind == "plane":
        if args.pole is None:
            raise UsageError("plane curves need --pole (the base point, any 2-vector)")
        p = parse_vector(args.pole)
        if p.size != 2:
            raise UsageError("plane base point must be 2-dimensional")
        pedal = curves.plane_pedal(samples, p)
        orthotomic = curves.plane_orthotomic(samples, p)
        identity_err = float(np.max(np.linalg.norm(orthotomic - curves.double_about(p, pedal), axis=1)))
        print(f"plane curve, {len(samples)} samples: max |ort - (2 ped - p)| = {identity_err:.3e}")
        if args.out:
            _curve_csv_plane(args.out, samples, pedal, orthotomic)
        if args.figure:
            plots.save_plane_curves_figure(samples, pedal, orthotomic, p, args.figure)
    else:
        p = load_pole(args.pole, args.normalize_pole) if args.pole else None
        if p is None:
            raise UsageError("spherical orthotomics need --pole")
        orthotomic = curves.sphere_orthotomic(samples, p)
        ped = np.array([s.pedal for s in samples])
        mid = 0.5 * (orthotomic + p) - (ped @ p)[:, None] * ped
        mid_err = float(np.max(np.linalg.norm(mid, axis=1)))
        print(f"spherical pedal, {len(samples)} samples: max midpoint-identity residual = {mid_err:.3e}")
        if args.out:
            _curve_csv_sphere(args.out, samples, orthotomic)
        if args.figure:
            plots.save_sphere_curves_figure(ped, orthotomic, p, args.figure)
    return 0


def cmd_verify(args) -> int:
    results = run_checks(args.dim, args.seed, args.samples)
    print(render_table(results))
    all_passed = all(r.passed for r in results)
    print(f"\n{'all checks passed' if all_passed else 'SOME CHECKS FAILED'} "
          f"(dim={args.dim}, seed={args.seed}, samples={args.samples})")
    if args.out:
        config = {"command": "verify", "dim": args.dim, "samples": args.samples,
                  "roundtrip_tol": verify.ROUNDTRIP_TOL, "fresh_tol": verify.FRESH_TOL}
        verdicts = {
            r.name: {"passed": r.passed, "max_error": r.max_error,
                     "tolerance": r.tolerance, "samples": r.samples, "note": r.note}
            for r in results
        }
        verdicts["all_passed"] = all_passed
        write_report(args.out, config, verdicts, [], args.seed)
    return 0 if all_passed else 1


def cmd_replay(args) -> int:
    doc = json.loads(Path(args.witness).read_text())
    failures = 0
    for entry in doc.get("witnesses", []):
        pole = np.asarray(entry["pole"], dtype=float)
        points = [np.asarray(pt, dtype=float) for pt in entry["points"]]
        step = int(entry["step"])
        renormalize = entry.get("renormalize", "every-step")
        if entry["kind"] == "transitivity-hit":
            orbit = iterate(pole, points[0], step, renormalize=renormalize)
            achieved = float(np.linalg.norm(orbit.final - np.asarray(entry["target"], dtype=float)))
        elif entry["kind"] == "preimage":
            achieved = float(np.linalg.norm(pole_map(pole, points[0])
                                            - np.asarray(entry["target"], dtype=float)))
        else:
            achieved = float(chaos.replay_separations(pole, points[0], points[1], step,
                                                      renormalize=renormalize)[-1])
        recorded = float(entry["separation"])
        threshold = float(entry["threshold"])
        comparator = entry["comparator"]
        consistent = abs(achieved - recorded) <= 1e-9 * (1.0 + abs(recorded)) + 1e-12
        holds = achieved > threshold if comparator == "greater" else achieved <= threshold
        status = "ok" if (consistent and holds) else "MISMATCH"
        print(f"{entry['kind']}: recorded {recorded:.6e}, replayed {achieved:.6e}, "
              f"{comparator} {threshold:g}: {status}")
        if not (consistent and holds):
            failures += 1
    if not doc.get("witnesses"):
        print("no witnesses in file")
    return 1 if failures else 0


# ----------------------------------------------------------------------
# parser


def _add_common(sp, pole: bool = True):
    sp.add_argument("--seed", type=int, default=_default_seed(), help="RNG seed")
    sp.add_argument("--out", type=Path, default=None, help="output file path")
    if pole:
        sp.add_argument("--pole", "-P", type=str, default=None, help="pole coordinates, comma-separated")
        sp.add_argument("--normalize-pole", action="store_true",
                        help="accept poles further than 1e-6 from unit norm and normalize them")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polemap",
                                     description="Quadratic pole maps on spheres and disks: "
                                                 "orbits, chaos witnesses, and curve companions.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("iterate", help="run an orbit, write CSV and an optional figure")
    _add_common(sp)
    sp.add_argument("--alpha", type=str, help="pole angle (radians or p/q turns)")
    sp.add_argument("--theta", type=str, help="start angle (radians or p/q turns)")
    sp.add_argument("--start", type=str, help="start coordinates, comma-separated")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--exact", action="store_true", help="exact rational angle iteration")
    sp.add_argument("--mode", choices=["sphere", "disk", "circle-exact"], default="sphere")
    sp.add_argument("--renormalize", choices=["off", "every-step"], default=None)
    sp.add_argument("--figure", type=Path, default=None)
    sp.set_defaults(func=cmd_iterate)

    sp = sub.add_parser("preimage", help="closed-form preimage of a target point")
    _add_common(sp)
    sp.add_argument("--target", type=str, required=True)
    sp.add_argument("--disk", action="store_true", help="target lies strictly inside the disk")
    sp.set_defaults(func=cmd_preimage)

    sp = sub.add_parser("sensitivity", help="constructive sensitivity witness")
    _add_common(sp)
    sp.add_argument("--point", type=str, required=True, help="base point")
    sp.add_argument("--delta", type=float, default=1e-6)
    sp.add_argument("--lam", type=float, default=chaos.DEFAULT_SEPARATION)
    sp.add_argument("--max-k", type=int, default=60)
    sp.add_argument("--space", choices=["sphere", "disk"], default="sphere")
    sp.set_defaults(func=cmd_sensitivity)

    sp = sub.add_parser("accessibility", help="constructive accessibility witness")
    _add_common(sp)
    sp.add_argument("--U", dest="ball_u", type=str, required=True, help="ball center:radius")
    sp.add_argument("--V", dest="ball_v", type=str, required=True, help="ball center:radius")
    sp.add_argument("--lam", type=float, default=1e-10)
    sp.add_argument("--space", choices=["sphere", "disk"], default="sphere")
    sp.set_defaults(func=cmd_accessibility)

    sp = sub.add_parser("transitivity", help="seeded sampling probe for f^k(U) meeting V")
    _add_common(sp)
    sp.add_argument("--U", dest="ball_u", type=str, required=True)
    sp.add_argument("--V", dest="ball_v", type=str, required=True)
    sp.add_argument("--max-k", type=int, default=10000)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--space", choices=["sphere", "disk"], default="sphere")
    sp.set_defaults(func=cmd_transitivity)

    sp = sub.add_parser("periodic", help="exact enumeration of periodic angles on the circle")
    _add_common(sp, pole=False)
    sp.add_argument("--alpha", type=str, required=True, help="pole angle, exact p/q turns")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--figure", type=Path, default=None)
    sp.set_defaults(func=cmd_periodic)

    sp = sub.add_parser("lyapunov", help="Birkhoff log-derivative average")
    _add_common(sp, pole=False)
    sp.add_argument("--system", choices=["circle", "logistic", "slice"], required=True)
    sp.add_argument("--x0", type=float, default=0.123)
    sp.add_argument("--steps", type=int, default=100000)
    sp.set_defaults(func=cmd_lyapunov)

    sp = sub.add_parser("mixing", help="exact arc-image mixing check on the circle")
    _add_common(sp, pole=False)
    sp.add_argument("--alpha", type=str, required=True, help="pole angle, exact p/q turns")
    sp.add_argument("--U", dest="arc_u", type=str, required=True, help="arc center:half-width (turns)")
    sp.add_argument("--V", dest="arc_v", type=str, required=True)
    sp.add_argument("--horizon", type=int, required=True)
    sp.set_defaults(func=cmd_mixing)

    sp = sub.add_parser("slice-cert", help="slice-confinement certificate against a reference point")
    _add_common(sp)
    sp.add_argument("--start", type=str, required=True)
    sp.add_argument("--ref", type=str, required=True)
    sp.add_argument("--steps", type=int, default=10000)
    sp.add_argument("--space", choices=["sphere", "disk"], default="sphere")
    sp.add_argument("--figure", type=Path, default=None)
    sp.set_defaults(func=cmd_slice_cert)

    sp = sub.add_parser("curves", help="pedal/orthotomic computation with CSV and figure output")
    _add_common(sp)
    sp.add_argument("--curve", choices=["circle", "line", "small-circle"], default=None)
    sp.add_argument("--in", dest="infile", type=Path, default=None, help="input samples CSV")
    sp.add_argument("--space", choices=["plane", "sphere"], default="plane",
                    help="sample space of the input CSV")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--colatitude", type=float, default=0.6,
                    help="angular radius of the small circle around the pole")
    sp.add_argument("--figure", type=Path, default=None)
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("verify", help="run the verification suite and print a pass/fail table")
    _add_common(sp, pole=False)
    sp.add_argument("--dim", type=int, default=2, help="sphere dimension n (ambient n+1)")
    sp.add_argument("--samples", type=int, default=10000)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("replay", help="re-simulate witnesses from a report file")
    _add_common(sp, pole=False)
    sp.add_argument("--witness", type=Path, required=True, help="report JSON with witnesses")
    sp.set_defaults(func=cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported the offending flag
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PolemapError as exc:
        print(f"invariant failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
