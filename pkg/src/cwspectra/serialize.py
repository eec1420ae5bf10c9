"""CSV and JSON artifact writers with deterministic, round-trippable output.

Floats are written with 17 significant digits so that files round-trip
exactly and repeated runs with the same seed are byte-identical.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .cw.params import CWParams, SpinMatrix
from .spectra import HistogramTable, Spectrum

SCHEMA_VERSION = 1


def fmt(x: float) -> str:
    return "%.17g" % float(x)


@dataclass
class RunRecord:
    """Provenance of one sampled matrix, stored next to its CSV."""

    beta: float
    p: int
    n: int
    seed: int
    sampler: str
    sweeps: int | None = None
    mixing_draw: float | None = None
    restandardized: bool = False
    schema: int = SCHEMA_VERSION

    @classmethod
    def for_matrix(cls, x: SpinMatrix, sampler: str, sweeps: int | None = None):
        return cls(
            beta=x.params.beta,
            p=x.params.p,
            n=x.params.n,
            seed=x.seed,
            sampler=sampler,
            sweeps=sweeps,
            mixing_draw=x.mixing_draw,
            restandardized=x.restandardized,
        )


def write_json(path: Path | str, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def read_json(path: Path | str) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def write_spin_matrix(csv_path: Path | str, json_path: Path | str, x: SpinMatrix,
                      sampler: str, sweeps: int | None = None) -> RunRecord:
    """Matrix as CSV (ints for raw spins, 17-digit decimals otherwise) plus sidecar."""
    lines = []
    if x.restandardized:
        for row in x.entries:
            lines.append(",".join(fmt(v) for v in row))
    else:
        for row in x.entries:
            lines.append(",".join(str(int(v)) for v in row))
    Path(csv_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    record = RunRecord.for_matrix(x, sampler=sampler, sweeps=sweeps)
    write_json(json_path, asdict(record))
    return record


def read_spin_matrix(csv_path: Path | str, json_path: Path | str) -> tuple[SpinMatrix, RunRecord]:
    meta = read_json(json_path)
    if meta.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported run record schema {meta.get('schema')!r}")
    record = RunRecord(**meta)
    entries = np.loadtxt(csv_path, delimiter=",", dtype=np.float64, ndmin=2)
    params = CWParams(beta=record.beta, p=record.p, n=record.n)
    matrix = SpinMatrix(
        entries=entries,
        params=params,
        seed=record.seed,
        restandardized=record.restandardized,
        mixing_draw=record.mixing_draw,
    )
    return matrix, record


def write_spectrum_csv(path: Path | str, spectrum: Spectrum) -> None:
    """One eigenvalue per line, descending, 17 significant digits."""
    lines = [fmt(v) for v in spectrum.eigenvalues]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_spectrum_csv(path: Path | str) -> np.ndarray:
    return np.loadtxt(path, dtype=np.float64, ndmin=1)


def write_histogram_csv(path: Path | str, hist: HistogramTable) -> None:
    lines = ["bin_left,bin_right,count,density"]
    for left, right, count, dens in zip(
        hist.bin_left, hist.bin_right, hist.counts, hist.density
    ):
        lines.append(f"{fmt(left)},{fmt(right)},{int(count)},{fmt(dens)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_density_curve_csv(path: Path | str, xs: np.ndarray, ys: np.ndarray) -> None:
    lines = ["x,density"]
    for x, yv in zip(xs, ys):
        lines.append(f"{fmt(x)},{fmt(yv)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
