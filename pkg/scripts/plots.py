#!/usr/bin/env python3
"""Render figures from the bellpaths CLI's CSV artifacts.

Usage: plots.py <figure_kind> <input_csv> <output_image>

Figure kinds and the artifacts they consume:
  spiral       spiral.csv        partial-sum polyline plus the resultant arrow
  correlation  sample.csv        sampled points over both reference curves
  chsh         chsh_summary.csv  bar chart of S per source with the two bounds

The script is read-only on its input and holds no numerical logic of its own;
it draws exactly what the CSV says. A schema mismatch exits nonzero and names
the missing column.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

EXPECTED_COLUMNS = {
    "spiral": ("index", "mirror_x", "phase", "cum_re", "cum_im"),
    "correlation": (
        "alpha",
        "beta",
        "p_same_sampler",
        "ci",
        "p_same_toy_exact",
        "p_same_qm",
        "n",
        "seed",
    ),
    "chsh": ("source", "s_value", "ci"),
}


class SchemaError(ValueError):
    pass


def read_rows(path: str, kind: str) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None:
            raise SchemaError(f"{path}: empty CSV, no header row")
        for col in EXPECTED_COLUMNS[kind]:
            if col not in header:
                raise SchemaError(f"{path}: missing column {col!r} (header: {header})")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def circular_distance(a: float, b: float) -> float:
    d = abs(a - b) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


def render_spiral(rows: list[dict[str, str]], out: str) -> None:
    re = [float(r["cum_re"]) for r in rows]
    im = [float(r["cum_im"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot([0.0] + re, [0.0] + im, lw=0.8, color="tab:blue", label="partial sums")
    ax.annotate(
        "",
        xy=(re[-1], im[-1]),
        xytext=(0.0, 0.0),
        arrowprops=dict(arrowstyle="->", color="tab:red", lw=1.5),
    )
    ax.plot([], [], color="tab:red", lw=1.5, label="resultant")
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.legend(loc="best")
    fig.savefig(out)
    plt.close(fig)


def render_correlation(rows: list[dict[str, str]], out: str) -> None:
    d = [circular_distance(float(r["alpha"]), float(r["beta"])) for r in rows]
    p = [float(r["p_same_sampler"]) for r in rows]
    ci = [float(r["ci"]) for r in rows]
    grid = [math.pi * i / 400.0 for i in range(401)]
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(grid, [1.0 - x / math.pi for x in grid], color="tab:orange", label="1 - d/pi")
    ax.plot(grid, [math.cos(x / 2.0) ** 2 for x in grid], color="tab:green", label="cos^2(d/2)")
    ax.errorbar(d, p, yerr=ci, fmt="o", ms=4, color="tab:blue", label="sampled")
    ax.set_xlabel("setting separation d")
    ax.set_ylabel("P(same)")
    ax.set_ylim(-0.05, 1.05)
    ax.legend(loc="best")
    fig.savefig(out)
    plt.close(fig)


def render_chsh(rows: list[dict[str, str]], out: str) -> None:
    names = [r["source"] for r in rows]
    values = [float(r["s_value"]) for r in rows]
    cis = [float(r["ci"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.bar(names, values, yerr=cis, color="tab:blue", width=0.6)
    ax.axhline(2.0, color="tab:orange", ls="--", label="local bound 2")
    ax.axhline(2.0 * math.sqrt(2.0), color="tab:green", ls="--", label="2*sqrt(2)")
    ax.set_ylabel("S")
    ax.legend(loc="lower right")
    fig.savefig(out)
    plt.close(fig)


RENDERERS = {
    "spiral": render_spiral,
    "correlation": render_correlation,
    "chsh": render_chsh,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("figure_kind", choices=sorted(RENDERERS))
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    args = parser.parse_args(argv)
    try:
        rows = read_rows(args.input_csv, args.figure_kind)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    RENDERERS[args.figure_kind](rows, args.output_image)
    print(f"{args.figure_kind}: {len(rows)} rows -> {args.output_image}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
