"""Command-line front end: run experiments end-to-end and emit artifacts.

Commands
--------
sample        draw one spin matrix, write matrix.csv + run.json
spectrum      eigendecompose a saved matrix under a chosen rescaling
compare       KS distance against the limit law plus defect diagnostics
correlations  exact pair-correlation decay table across sizes
bounds        deterministic resolvent bound margins on a random matrix
figure        histogram + density overlay artifact set (CSV/JSON/SVG)

Exit codes: 0 success, 2 configuration error, 3 numerical error, 4 I/O error.
The environment variable CW_SPECTRA_THREADS caps replica parallelism.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .cw.lowtemp import Magnetization, solve_magnetization
from .cw.params import CWParams, SpinMatrix
from .cw.sampling import (
    make_rng,
    sample_cw_matrix_definetti,
    sample_cw_matrix_metropolis,
)
from .diagnostics import (
    correlation_rate_probe,
    ks_distance,
    resolvent_bounds_check,
    self_consistency_residual,
)
from .errors import ConfigError, NumericalError
from .laws import MarchenkoPastur, Semicircle
from .serialize import (
    SCHEMA_VERSION,
    RunRecord,
    fmt,
    read_spin_matrix,
    write_density_curve_csv,
    write_histogram_csv,
    write_json,
    write_spectrum_csv,
    write_spin_matrix,
)
from .spectra import (
    CovarianceMatrix,
    Spectrum,
    esd,
    histogram,
    rescale_lowtemp,
    rescale_null,
    sample_covariance,
    symmetric_eigenvalues,
)
from .svg import render_figure_svg

RESCALES = ("auto", "none", "null", "lowtemp", "lowtemp-null")
LAWS = ("auto", "mp", "semicircle")
DEFAULT_CORRELATION_SIZES = (256, 512, 1024, 2048, 4096)
DELTA_Z_GRID = (1j, 1.0 + 1j, 2j)


def thread_cap() -> int:
    raw = os.environ.get("CW_SPECTRA_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"CW_SPECTRA_THREADS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"CW_SPECTRA_THREADS must be at least 1, got {value}")
    return value


def resolve_modes(beta: float, law: str, rescale: str, p: int, n: int):
    """Pick the rescaling and reference law for a given temperature.

    At or below the transition the raw covariance matches the
    Marchenko-Pastur law and the identity-centered rescaling matches the
    semicircle; above it the same pair holds after the 1/(1-m^2)
    correction.
    """
    if rescale == "auto":
        if law == "semicircle":
            rescale = "null" if beta <= 1 else "lowtemp-null"
        else:
            rescale = "none" if beta <= 1 else "lowtemp"
    if rescale in ("lowtemp", "lowtemp-null") and beta <= 1:
        raise ConfigError(f"rescale={rescale!r} requires beta > 1, got beta={beta}")
    if law == "auto":
        law = "semicircle" if rescale in ("null", "lowtemp-null") else "mp"
    if law == "mp" and rescale in ("null", "lowtemp-null"):
        raise ConfigError("the MP law pairs with rescale none or lowtemp")
    if law == "semicircle" and rescale in ("none", "lowtemp"):
        raise ConfigError("the semicircle law pairs with rescale null or lowtemp-null")
    law_obj = Semicircle() if law == "semicircle" else MarchenkoPastur(y=p / n)
    m = solve_magnetization(beta) if rescale in ("lowtemp", "lowtemp-null") else None
    return rescale, law_obj, m


def law_json(law_obj) -> dict:
    if law_obj.kind == "mp":
        return {"kind": "mp", "y": law_obj.y, "atom": law_obj.atom}
    return {"kind": "semicircle", "y": None, "atom": 0.0}


def _sample(params: CWParams, sampler: str, sweeps: int, seed: int) -> SpinMatrix:
    if sampler == "definetti":
        return sample_cw_matrix_definetti(params, seed)
    if sampler == "metropolis":
        return sample_cw_matrix_metropolis(params, sweeps, seed)
    raise ConfigError(f"unknown sampler {sampler!r}")


def _rescaled_covariance(
    raw: CovarianceMatrix, rescale: str, p: int, n: int, m: Magnetization | None
) -> CovarianceMatrix:
    if rescale == "none":
        return raw
    if rescale == "null":
        return rescale_null(raw, p, n)
    if rescale == "lowtemp":
        return rescale_lowtemp(raw, m)
    if rescale == "lowtemp-null":
        return rescale_null(rescale_lowtemp(raw, m), p, n)
    raise ConfigError(f"unknown rescale {rescale!r}")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_sample(args) -> int:
    out = _out_dir(args)
    params = CWParams(beta=args.beta, p=args.p, n=args.n)
    matrix = _sample(params, args.sampler, args.sweeps, args.seed)
    sweeps = args.sweeps if args.sampler == "metropolis" else None
    write_spin_matrix(out / "matrix.csv", out / "run.json", matrix, args.sampler, sweeps)
    print(f"wrote {out / 'matrix.csv'} and {out / 'run.json'}")
    return 0


def cmd_spectrum(args) -> int:
    src = Path(args.indir)
    matrix, record = read_spin_matrix(src / "matrix.csv", src / "run.json")
    out = _out_dir(args)
    rescale, _, m = resolve_modes(record.beta, "auto", args.rescale, record.p, record.n)
    cov = _rescaled_covariance(
        sample_covariance(matrix), rescale, record.p, record.n, m
    )
    spectrum = symmetric_eigenvalues(cov, seed=record.seed)
    write_spectrum_csv(out / "eigenvalues.csv", spectrum)
    write_json(
        out / "spectrum.json",
        {
            "schema": SCHEMA_VERSION,
            "normalization": spectrum.normalization,
            "residual": spectrum.residual,
            "seed": record.seed,
            "top_eigenvalue": float(spectrum.eigenvalues[0]),
        },
    )
    print(f"wrote {out / 'eigenvalues.csv'}")
    return 0


def _compare_one(params: CWParams, args, rescale, law_obj, m, seed: int) -> dict:
    matrix = _sample(params, args.sampler, args.sweeps, seed)
    raw = sample_covariance(matrix)
    ks_cov = _rescaled_covariance(raw, rescale, params.p, params.n, m)
    spectrum = symmetric_eigenvalues(ks_cov, seed=seed)
    kept = spectrum.drop_top(args.drop_top)
    ks = ks_distance(esd(kept), law_obj)

    # The defect diagnostics live on the covariance-like matrix (raw, or
    # lowtemp-corrected above the transition), not on the centered one.
    if rescale in ("none", "lowtemp"):
        base_spectrum = spectrum
    elif rescale == "null":
        base_spectrum = symmetric_eigenvalues(raw, seed=seed)
    else:
        base_spectrum = symmetric_eigenvalues(
            rescale_lowtemp(raw, m), seed=seed
        )
    top = float(base_spectrum.eigenvalues[0])
    zero_count = int(
        np.sum(np.abs(spectrum.eigenvalues) <= 1e-9 * max(abs(top), 1e-300))
    )
    delta = [
        {
            "z_re": z.real,
            "z_im": z.imag,
            "abs_delta": abs(
                self_consistency_residual(base_spectrum, params.p, params.n, z)
            ),
        }
        for z in (complex(z) for z in DELTA_Z_GRID)
    ]
    return {
        "seed": seed,
        "ks": ks,
        "top_eigenvalue": top,
        "zero_eigenvalues": zero_count,
        "delta": delta,
        "spectrum": spectrum,
    }


def cmd_compare(args) -> int:
    out = _out_dir(args)
    params = CWParams(beta=args.beta, p=args.p, n=args.n)
    rescale, law_obj, m = resolve_modes(args.beta, args.law, args.rescale, args.p, args.n)
    seeds = args.seed if args.seed else [1]
    workers = min(len(seeds), thread_cap())
    with ThreadPoolExecutor(max_workers=workers) as pool:
        runs = list(
            pool.map(lambda s: _compare_one(params, args, rescale, law_obj, m, s), seeds)
        )
    if "csv" in args.formats:
        for run in runs:
            write_spectrum_csv(out / f"eigenvalues_seed{run['seed']}.csv", run["spectrum"])
    for run in runs:
        run.pop("spectrum")
    report = {
        "schema": SCHEMA_VERSION,
        "beta": args.beta,
        "p": args.p,
        "n": args.n,
        "sampler": args.sampler,
        "rescale": rescale,
        "drop_top": args.drop_top,
        "law": law_json(law_obj),
        "runs": runs,
    }
    write_json(out / "report.json", report)
    print(f"wrote {out / 'report.json'} (ks: {[round(r['ks'], 4) for r in runs]})")
    return 0


def cmd_correlations(args) -> int:
    out = _out_dir(args)
    sizes = args.sizes if args.sizes else list(DEFAULT_CORRELATION_SIZES)
    rows = correlation_rate_probe(args.beta, sizes)
    if "csv" in args.formats:
        lines = ["N,raw,scaled"]
        lines += [f"{r.N},{fmt(r.raw)},{fmt(r.scaled)}" for r in rows]
        (out / "correlations.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    write_json(
        out / "report.json",
        {
            "schema": SCHEMA_VERSION,
            "beta": args.beta,
            "correlations": [
                {"N": r.N, "raw": r.raw, "scaled": r.scaled} for r in rows
            ],
        },
    )
    print(f"wrote {out / 'report.json'} ({len(rows)} sizes)")
    return 0


def cmd_bounds(args) -> int:
    out = _out_dir(args)
    rng = make_rng(args.seed)
    x = np.where(rng.random((args.p, args.n)) < 0.5, 1.0, -1.0)
    entries = []
    all_ok = True
    for z in (1j, 1.0 + 1j, -2.0 + 0.5j):
        report = resolvent_bounds_check(x, z, b=1.0)
        all_ok &= report.all_ok
        for row in report.as_rows():
            row = dict(row)
            row["name"] = f"{row['name']}@z={z.real:g}{z.imag:+g}i"
            entries.append(row)
    write_json(
        out / "bounds.json",
        {
            "schema": SCHEMA_VERSION,
            "p": args.p,
            "n": args.n,
            "seed": args.seed,
            "all_ok": bool(all_ok),
            "bounds": entries,
        },
    )
    print(f"wrote {out / 'bounds.json'} (all_ok={bool(all_ok)})")
    return 0


def cmd_figure(args) -> int:
    out = _out_dir(args)
    params = CWParams(beta=args.beta, p=args.p, n=args.n)
    rescale, law_obj, m = resolve_modes(args.beta, args.law, args.rescale, args.p, args.n)
    matrix = _sample(params, args.sampler, args.sweeps, args.seed)
    raw = sample_covariance(matrix)
    cov = _rescaled_covariance(raw, rescale, args.p, args.n, m)
    spectrum = symmetric_eigenvalues(cov, seed=args.seed)
    kept = spectrum.drop_top(args.drop_top)
    hist = histogram(kept, bins=args.bins)
    lo, hi = law_obj.support
    curve_x = np.linspace(lo, hi, 513)
    curve_y = law_obj.density(curve_x)
    ks = ks_distance(esd(kept), law_obj)

    if "csv" in args.formats:
        write_spectrum_csv(out / "eigenvalues.csv", spectrum)
        write_histogram_csv(out / "histogram.csv", hist)
        write_density_curve_csv(out / "density_curve.csv", curve_x, curve_y)
    if "json" in args.formats:
        write_json(
            out / "report.json",
            {
                "schema": SCHEMA_VERSION,
                "beta": args.beta,
                "p": args.p,
                "n": args.n,
                "seed": args.seed,
                "sampler": args.sampler,
                "sweeps": args.sweeps if args.sampler == "metropolis" else None,
                "rescale": rescale,
                "law": law_json(law_obj),
                "bins": args.bins,
                "drop_top": args.drop_top,
                "ks": ks,
                "top_eigenvalue": float(spectrum.eigenvalues[0]),
                "dropped": [float(v) for v in spectrum.eigenvalues[: args.drop_top]],
                "mixing_draw": matrix.mixing_draw,
                "magnetization": m.m if m is not None else None,
            },
        )
    if "svg" in args.formats:
        title = f"beta={args.beta:g}, p={args.p}, n={args.n}, {rescale}"
        (out / "figure.svg").write_text(
            render_figure_svg(hist, curve_x, curve_y, title=title), encoding="utf-8"
        )
    print(f"wrote figure artifacts to {out} (ks={ks:.4f})")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_shape_flags(sub, p_default=200, n_default=800):
    sub.add_argument("--beta", type=float, default=0.5, help="inverse temperature")
    sub.add_argument("--p", type=int, default=p_default, help="rows (covariates)")
    sub.add_argument("--n", type=int, default=n_default, help="columns (sample size)")


def _add_sampler_flags(sub):
    sub.add_argument(
        "--sampler", choices=("definetti", "metropolis"), default="definetti"
    )
    sub.add_argument(
        "--sweeps", type=int, default=100, help="Metropolis sweeps (N proposals each)"
    )


def _add_mode_flags(sub):
    sub.add_argument("--law", choices=LAWS, default="auto")
    sub.add_argument("--rescale", choices=RESCALES, default="auto")
    sub.add_argument("--drop-top", dest="drop_top", type=int, default=0)


def _add_io_flags(sub, formats=("csv", "json", "svg")):
    sub.add_argument("--out", required=True, help="output directory")
    sub.add_argument(
        "--format",
        dest="formats",
        action="append",
        choices=("csv", "json", "svg"),
        default=None,
        help="artifact kinds to write (repeatable; default: all supported)",
    )
    sub.set_defaults(_default_formats=list(formats))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwspectra",
        description="Spectra of sample covariance matrices with Curie-Weiss entries",
    )
    parser.add_argument("--version", action="version", version=f"cwspectra {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("sample", help="draw one spin matrix")
    _add_shape_flags(s)
    _add_sampler_flags(s)
    s.add_argument("--seed", type=int, default=1)
    _add_io_flags(s, formats=("csv", "json"))
    s.set_defaults(func=cmd_sample)

    s = subs.add_parser("spectrum", help="eigendecompose a saved matrix")
    s.add_argument("--in", dest="indir", required=True, help="directory with matrix.csv + run.json")
    s.add_argument("--rescale", choices=RESCALES, default="auto")
    _add_io_flags(s, formats=("csv", "json"))
    s.set_defaults(func=cmd_spectrum)

    s = subs.add_parser("compare", help="KS distance and defect diagnostics")
    _add_shape_flags(s)
    _add_sampler_flags(s)
    _add_mode_flags(s)
    s.add_argument(
        "--seed", type=int, action="append", default=None, help="seed (repeatable)"
    )
    _add_io_flags(s, formats=("json",))
    s.set_defaults(func=cmd_compare)

    s = subs.add_parser("correlations", help="exact pair-correlation decay table")
    s.add_argument("--beta", type=float, default=0.5)
    s.add_argument(
        "--size", dest="sizes", type=int, action="append", default=None,
        help="spin count N (repeatable; default 256..4096 doubling)",
    )
    _add_io_flags(s, formats=("csv", "json"))
    s.set_defaults(func=cmd_correlations)

    s = subs.add_parser("bounds", help="resolvent bound margins on a random matrix")
    s.add_argument("--p", type=int, default=4)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--seed", type=int, default=1)
    _add_io_flags(s, formats=("json",))
    s.set_defaults(func=cmd_bounds)

    s = subs.add_parser("figure", help="histogram + density overlay artifacts")
    _add_shape_flags(s)
    _add_sampler_flags(s)
    _add_mode_flags(s)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--bins", type=int, default=50)
    _add_io_flags(s)
    s.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "formats", None) is None and hasattr(args, "_default_formats"):
        args.formats = args._default_formats
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
