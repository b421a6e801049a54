"""Command-line front end: toy, spiral, rt, sample, bell, sg, measure-demo.

All outputs are deterministic for a fixed seed and flag set: CSV uses '.'
decimals, comma separators and a header row; JSON is pretty-printed with
sorted keys. Angles are radians by default, accept symbolic tokens like
'2pi/3', and switch to degrees with --deg.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import re
import sys
from pathlib import Path

from . import bell as bell_mod
from . import nonmeasurable, spin
from .amplitude import TWO_PI
from .interferometer import CongruenceError, RTGeometry, p_same as rt_p_same, p_same_numeric
from .path_engine import MirrorGeometry, sum_over_paths
from .sampler import BeamsplitterRule, sampler_p_same
from .toy import CANONICAL_SETTINGS, ToySettings, toy_p_same_exact, toy_p_same_mc

_PI_TOKEN = re.compile(r"^(-?\d*\.?\d*)\s*pi\s*(?:/\s*(\d*\.?\d+))?$")


def parse_angle(token: str, degrees: bool = False) -> float:
    """Parse '2pi/3', 'pi/2', '-pi', or a plain number (degrees iff --deg)."""
    s = token.strip().lower().replace(" ", "")
    m = _PI_TOKEN.match(s)
    if m:
        coef = m.group(1)
        num = float(coef) if coef not in ("", "-") else (-1.0 if coef == "-" else 1.0)
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    try:
        value = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unparseable angle: {token!r}")
    return math.radians(value) if degrees else value


def _fmt(x: float) -> str:
    return repr(float(x))


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _asdict(obj):
    if dataclasses.is_dataclass(obj):
        return {k: _asdict(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _asdict(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_asdict(v) for v in obj]
    return obj


def _output_dir(args) -> Path:
    out = args.output_dir or os.environ.get("BELLPATHS_OUTPUT_DIR") or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


# Subcommand handlers ---------------------------------------------------------

def cmd_toy(args) -> int:
    pairs = (
        [(args.alpha, args.beta)]
        if args.alpha is not None
        else [(a, b) for a in CANONICAL_SETTINGS for b in CANONICAL_SETTINGS]
    )
    rows = []
    for a, b in pairs:
        s = ToySettings(a, b)
        exact = toy_p_same_exact(s)
        est, ci = toy_p_same_mc(s, args.n, args.seed, workers=args.workers)
        rows.append([a, b, exact, est, ci, args.n, args.seed])
    out = _output_dir(args) / "toy.csv"
    write_csv(out, ["alpha", "beta", "exact_p_same", "mc_estimate", "ci", "n", "seed"], rows)
    print(f"toy: {len(rows)} settings pair(s), n={args.n} -> {out}")
    return 0


def cmd_spiral(args) -> int:
    geom = MirrorGeometry(wavelength=args.wavelength)
    family = geom.family(args.n)
    trace = sum_over_paths(family)
    mirror_x = [p.vertices[1][0] for p in family.paths]
    rows = [
        [i, mirror_x[i], float(trace.phases[i]), float(trace.partial_sums[i].real),
         float(trace.partial_sums[i].imag)]
        for i in range(trace.n_paths)
    ]
    out = _output_dir(args) / "spiral.csv"
    write_csv(out, ["index", "mirror_x", "phase", "cum_re", "cum_im"], rows)
    res = trace.resultant
    print(f"spiral: n={args.n}, |resultant|={res.magnitude():.6g} -> {out}")
    return 0


def cmd_rt(args) -> int:
    geom = RTGeometry()
    closed = rt_p_same(args.alpha, args.beta)
    numeric = p_same_numeric(geom, args.n, args.alpha, args.beta)
    rows = [[args.alpha, args.beta, closed, numeric.p_same, numeric.congruence_residual]]
    out = _output_dir(args) / "rt.csv"
    write_csv(
        out,
        ["alpha", "beta", "p_same_closed", "p_same_numeric", "congruence_residual"],
        rows,
    )
    print(f"rt: p_same_closed = {closed:.10g}, p_same_numeric = {numeric.p_same:.10g} -> {out}")
    return 0


def cmd_sample(args) -> int:
    pairs = (
        [(args.alpha, args.beta)]
        if args.alpha is not None
        else [(a, b) for a in CANONICAL_SETTINGS for b in CANONICAL_SETTINGS]
    )
    rules = (BeamsplitterRule(args.rotation_a), BeamsplitterRule(args.rotation_b))
    rows = []
    for a, b in pairs:
        est, ci = sampler_p_same(a, b, args.n, args.seed, rules=rules, workers=args.workers)
        rows.append(
            [a, b, est, ci, toy_p_same_exact(ToySettings(a, b)), rt_p_same(a, b),
             args.n, args.seed]
        )
    out = _output_dir(args) / "sample.csv"
    write_csv(
        out,
        ["alpha", "beta", "p_same_sampler", "ci", "p_same_toy_exact", "p_same_qm", "n", "seed"],
        rows,
    )
    print(f"sample: {len(rows)} settings pair(s), n={args.n} -> {out}")
    return 0


def cmd_bell(args) -> int:
    sources = {
        "quantum": bell_mod.quantum_source,
        "toy": bell_mod.toy_source,
        "sampler": bell_mod.make_sampler_source(args.n, args.seed),
    }
    names = list(sources) if args.source == "all" else [args.source]
    out_dir = _output_dir(args)
    payload = {}
    for name in names:
        src = sources[name]
        report = bell_mod.chsh(src)
        m3 = bell_mod.mermin3(src)
        payload[name] = {"chsh": _asdict(report), "mermin3": _asdict(m3)}
        sweep = bell_mod.settings_sweep(src, args.grid_step)
        write_csv(
            out_dir / f"sweep_{name}.csv",
            ["alpha", "beta", "p_same", "ci", "p_same_classical", "p_same_quantum"],
            [[r.alpha, r.beta, r.p_same, r.ci, r.p_same_classical, r.p_same_quantum]
             for r in sweep],
        )
    write_json(out_dir / "bell.json", payload)
    write_csv(
        out_dir / "chsh_summary.csv",
        ["source", "s_value", "ci"],
        [[name, payload[name]["chsh"]["s_value"], payload[name]["chsh"]["ci"]]
         for name in names],
    )
    summary = ", ".join(f"{n}: S = {payload[n]['chsh']['s_value']:.7f}" for n in names)
    print(f"bell: {summary} -> {out_dir / 'bell.json'}")
    return 0


_SG_TOKENS = {"z": 0.0, "x": math.pi / 2.0, "45": math.pi / 4.0}


def parse_sg_sequence(spec: str) -> list[spin.SGDevice]:
    devices = []
    for raw in spec.split(","):
        token = raw.strip()
        modified = token.startswith("M")
        name = token[1:] if modified else token
        if name not in _SG_TOKENS:
            raise argparse.ArgumentTypeError(
                f"unknown device token {token!r}; use z, x, 45, optionally prefixed with M"
            )
        devices.append(spin.SGDevice.planar(_SG_TOKENS[name], modified=modified))
    if not devices:
        raise argparse.ArgumentTypeError("empty device sequence")
    return devices


def cmd_sg(args) -> int:
    devices = parse_sg_sequence(args.sequence)
    empirical = spin.run_sequence(devices, args.n, args.seed)
    oracle = spin.spinor_oracle(devices)
    def keyed(dist):
        return {
            "".join("+" if s > 0 else "-" for s in k): v
            for k, v in sorted(dist.probabilities.items())
        }
    payload = {
        "sequence": args.sequence,
        "n": args.n,
        "seed": args.seed,
        "empirical": keyed(empirical),
        "oracle": keyed(oracle),
    }
    out = _output_dir(args) / "sg.json"
    write_json(out, payload)
    print(f"sg: sequence {args.sequence!r}, {len(payload['oracle'])} outcome classes -> {out}")
    return 0


def cmd_measure_demo(args) -> int:
    report = nonmeasurable.verify_packing(args.n_max, args.r_sharp)
    out = _output_dir(args) / "measure_demo.json"
    write_json(out, _asdict(report))
    status = "all checks pass" if report.all_pass else "CHECK FAILURES"
    print(f"measure-demo: n_max={args.n_max}, {len(report.pairs)} pairs, {status} -> {out}")
    return 0 if report.all_pass else 1


# Parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellpaths",
        description="Numerical laboratory for sum-over-paths models and Bell statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mc=False):
        p.add_argument("--output-dir", default=None,
                       help="artifact directory (default: $BELLPATHS_OUTPUT_DIR or .)")
        if mc:
            p.add_argument("--n", type=int, default=100_000, help="Monte Carlo trial count")
            p.add_argument("--seed", type=int, default=0, help="RNG seed")
            p.add_argument("--workers", type=int, default=1,
                           help="Monte Carlo substream count (1 = bit-reproducible)")

    def angle_args(p, required=False):
        p.add_argument("--deg", action="store_true",
                       help="interpret plain numeric angles as degrees")
        p.add_argument("--alpha", default=None, required=required,
                       help="left setting (radians; tokens like 2pi/3 accepted)")
        p.add_argument("--beta", default=None, required=required,
                       help="right setting")

    p = sub.add_parser("toy", help="classical clock-pointer fork experiment")
    angle_args(p)
    common(p, mc=True)
    p.set_defaults(func=cmd_toy)

    p = sub.add_parser("spiral", help="Cornu spiral from the single-mirror path family")
    p.add_argument("--n", type=int, default=1000, help="paths in the family")
    p.add_argument("--wavelength", type=float, default=MirrorGeometry().wavelength)
    common(p)
    p.set_defaults(func=cmd_spiral)

    p = sub.add_parser("rt", help="two-particle interferometer: closed form vs path sum")
    angle_args(p, required=True)
    p.add_argument("--n", type=int, default=10_000, help="paths per class")
    common(p)
    p.set_defaults(func=cmd_rt)

    p = sub.add_parser("sample", help="side-local per-trial sampler statistics")
    angle_args(p)
    p.add_argument("--rotation-a", type=float, default=0.0,
                   help="left beamsplitter rotation")
    p.add_argument("--rotation-b", type=float, default=0.0,
                   help="right beamsplitter rotation")
    common(p, mc=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("bell", help="CHSH and three-setting reports over a source")
    p.add_argument("--source", choices=["quantum", "toy", "sampler", "all"],
                   default="all")
    p.add_argument("--grid-step", type=float, default=math.pi / 12.0,
                   help="sweep grid step in radians")
    common(p, mc=True)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("sg", help="Stern-Gerlach cascade vs spinor oracle")
    p.add_argument("--sequence", required=True,
                   help="comma list of devices, e.g. z,x,z or z,Mx,z (M = recombining)")
    common(p, mc=True)
    p.set_defaults(func=cmd_sg)

    p = sub.add_parser("measure-demo", help="disjoint-ball packing checks in path space")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--r-sharp", type=float, default=1.0)
    common(p)
    p.set_defaults(func=cmd_measure_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("alpha", "beta"):
        token = getattr(args, name, None)
        if token is not None:
            try:
                setattr(args, name, parse_angle(token, degrees=getattr(args, "deg", False)))
            except argparse.ArgumentTypeError as exc:
                parser.error(str(exc))
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (ValueError, CongruenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
