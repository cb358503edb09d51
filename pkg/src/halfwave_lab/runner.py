"""Scenario dispatch and on-disk artifacts (CSV time series, JSON reports).

Floats are serialized with 17 significant digits so drift measurements
survive a round trip; identical config + seed gives bit-identical output.
"""

import json
import os

import numpy as np

from . import chain as chain_mod
from . import evolution, fields, lax, solitons
from .config import ScenarioConfig, build_initial_values


def _fmt(x):
    return f"{float(x):.17g}"


def write_timeseries_csv(path, records, top_q=0, lax_enabled=False):
    """CSV header: t,energy,sx,sy,sz[,trL1..trL4,rank,lam1..lamq],defect."""
    cols = ["t", "energy", "sx", "sy", "sz"]
    if lax_enabled:
        cols += [f"trL{p}" for p in range(1, 5)]
        cols += ["rank"]
        cols += [f"lam{i}" for i in range(1, top_q + 1)]
    cols += ["defect"]
    with open(path, "w") as fh:
        fh.write(",".join(cols) + "\n")
        for r in records:
            row = [_fmt(r.time), _fmt(r.energy)] + [_fmt(v) for v in r.total_spin]
            if lax_enabled:
                for p in range(1, 5):
                    tp = r.trace_powers.get(str(p), 0.0)
                    row.append(_fmt(tp if np.isscalar(tp) else tp[0]))
                row.append(str(r.rank))
                lams = list(r.eigenvalues) + [0.0] * top_q
                row += [_fmt(v) for v in lams[:top_q]]
            row.append(_fmt(r.defect))
            fh.write(",".join(row) + "\n")


def write_chain_csv(path, records):
    with open(path, "w") as fh:
        fh.write("t,H_classical,sx,sy,sz,defect\n")
        for r in records:
            row = [_fmt(r.time), _fmt(r.energy)] + [_fmt(v) for v in r.total_spin]
            row.append(_fmt(r.defect))
            fh.write(",".join(row) + "\n")


def write_compare_csv(path, rows):
    with open(path, "w") as fh:
        fh.write("N,error\n")
        for N, err in rows:
            fh.write(f"{N},{_fmt(err)}\n")


def checkpoint_json(field):
    """Serialize a field state as a JSON array of triples."""
    return json.dumps({
        "time": field.time,
        "target": field.target,
        "values": [[float(v) for v in row] for row in field.values],
    })


def soliton_report(v, zeros):
    """The soliton-check JSON payload for a profile (v, zeros)."""
    profile = solitons.BlaschkeProfile(v, zeros)
    x = np.linspace(-50.0, 50.0, 1001)
    r4 = solitons.rank_four_lax(v)
    return {
        "energy": solitons.profile_energy(profile),
        "residual_max": solitons.profile_residual(profile, x),
        "lax_eigenvalues": sorted(np.linalg.eigvalsh(r4.matrix).tolist()),
        "trace_sq": float(np.sum(np.abs(r4.matrix) ** 2)),
    }


def dispatch(cfg: ScenarioConfig, out_dir=None):
    """Run the scenario described by cfg; writes artifacts into out_dir.

    Returns the list of paths written. Exceptions propagate to the CLI,
    which converts them into a machine-readable error record.
    """
    out_dir = out_dir or cfg.out_dir
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    if cfg.kind in ("evolve-sphere", "evolve-hyperbolic"):
        field = build_initial_values(cfg)
        lax_diag = evolution.LaxDiagnostics(cfg.M, cfg.rank_tolerance) \
            if cfg.M is not None else None
        final, records = evolution.run(field, cfg.dt, cfg.T,
                                       cfg.record_interval, cfg.scheme,
                                       lax_diag)
        csv_path = os.path.join(out_dir, "timeseries.csv")
        write_timeseries_csv(csv_path, records,
                             top_q=lax_diag.top_q if lax_diag else 0,
                             lax_enabled=lax_diag is not None)
        ckpt_path = os.path.join(out_dir, "final_state.json")
        with open(ckpt_path, "w") as fh:
            fh.write(checkpoint_json(final))
        paths += [csv_path, ckpt_path]

    elif cfg.kind == "chain":
        field = build_initial_values(cfg)
        spins = chain_mod.SpinChain(field.values)
        _, records = chain_mod.chain_run(spins, cfg.dt, cfg.T,
                                         cfg.record_interval, cfg.scheme)
        csv_path = os.path.join(out_dir, "chain.csv")
        write_chain_csv(csv_path, records)
        paths.append(csv_path)

    elif cfg.kind == "lax-spectrum":
        field = build_initial_values(cfg)
        M = cfg.M if cfg.M is not None else cfg.N // 4
        report = lax.spectrum(lax.build_L(field, M),
                              rank_tolerance=cfg.rank_tolerance)
        json_path = os.path.join(out_dir, "spectrum.json")
        with open(json_path, "w") as fh:
            fh.write(report.to_json())
        paths.append(json_path)

    elif cfg.kind == "hs-compare":
        a = float(cfg.initial.get("a", 0.6))
        c = float(cfg.initial.get("c", 0.8))
        rows = chain_mod.continuum_compare(
            lambda N: fields.tilted_circle(N, a, c).values,
            lambda N, T: fields.tilted_circle_exact(N, a, c, T).values,
            cfg.N_list, cfg.T)
        csv_path = os.path.join(out_dir, "compare.csv")
        write_compare_csv(csv_path, rows)
        paths.append(csv_path)

    elif cfg.kind == "soliton-check":
        report = soliton_report(cfg.soliton_v, cfg.soliton_zeros)
        json_path = os.path.join(out_dir, "soliton.json")
        with open(json_path, "w") as fh:
            json.dump(report, fh, indent=2)
        paths.append(json_path)

    else:  # pragma: no cover - parse_config already rejects unknown kinds
        raise ValueError(f"unknown scenario kind {cfg.kind!r}")

    return paths
