"""Tabular exporters: spectrum sweeps and spin-texture fields.

Floats are serialized with 17 significant digits so CSV output round-trips
double precision exactly.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .. import spectrum
from .config import SuiteConfig

SPECTRUM_HEADER = ("gamma", "beta", "p1", "p2",
                   "lambda_plus", "lambda_minus", "phi_plus", "phi_minus")
TEXTURE_HEADER = ("branch", "gamma", "p1", "p2", "v1", "v2", "v3")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _grid(cfg: SuiteConfig):
    """Momentum grid over the configured ranges, skipping the origin."""
    p1s = np.linspace(*cfg.p1_range, cfg.grid_points)
    p2s = np.linspace(*cfg.p2_range, cfg.grid_points)
    for p1 in p1s:
        for p2 in p2s:
            if np.hypot(p1, p2) > 1e-9:
                yield float(p1), float(p2)


def spectrum_rows(cfg: SuiteConfig):
    for gamma in cfg.gamma_values:
        for beta in cfg.nonzero_betas():
            for p1, p2 in _grid(cfg):
                es = spectrum.eigensystem(gamma, beta, (p1, p2))
                yield (gamma, beta, p1, p2,
                       es.lambda_plus, es.lambda_minus,
                       es.phi_plus, es.phi_minus)


def texture_rows(cfg: SuiteConfig):
    beta = cfg.nonzero_betas()[0]
    for gamma in cfg.gamma_values:
        for p1, p2 in _grid(cfg):
            es = spectrum.eigensystem(gamma, beta, (p1, p2))
            for branch, psi in (("plus", es.psi_plus), ("minus", es.psi_minus)):
                v = spectrum.spin_vector(psi)
                yield (branch, gamma, p1, p2, v[0], v[1], v[2])


def render(header, rows, fmt: str) -> str:
    rows = list(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [c if isinstance(c, str) else _fmt(c) for c in row])
        return buf.getvalue()
    if fmt == "json":
        payload = [
            {k: (c if isinstance(c, str) else float(c))
             for k, c in zip(header, row)}
            for row in rows
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format: {fmt!r}")
