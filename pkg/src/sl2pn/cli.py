"""Command-line interface: ``sl2pn {reps,chartable,spectrum,schreier,random,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .baseline import complete_inventory, quotient_representations, sl2_irreps
from .config import SCHEMA_VERSION, RunConfig, default_jobs
from .fourier import GroupFunction, fourier_transform, inverse_fourier, plancherel_residual
from .group import SL2Group, TooLarge, group_order
from .modarith import InvalidParams
from .plots import render, schreier_figure, spectrum_figure, sweep_figure
from .reps import Unsupported, character_table, inventory, partial_inventory_n3
from .spectra import (NonRealSpectrum, adjacency_spectrum, cayley_spectrum, multiset_distance,
                      random_pair_experiment, report_rows, schreier_graph)

log = logging.getLogger("sl2pn")

CSV_COLUMNS = ["rep_index", "k", "chi", "delta", "sigma", "eigenvalue", "multiplicity", "monochromatic"]


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------- output helpers


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, complex):
        return [o.real, o.imag]
    raise TypeError(type(o).__name__)


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _write(cfg: RunConfig, stem: str, *, json_obj=None, csv_text=None, svg_text=None) -> list[Path]:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for fmt, payload in (("json", json_obj), ("csv", csv_text), ("svg", svg_text)):
        if payload is None or fmt not in cfg.formats:
            continue
        path = out / f"{stem}.{fmt}"
        text = _dump_json({"schema_version": SCHEMA_VERSION, **payload}) if fmt == "json" else payload
        path.write_text(text)
        written.append(path)
    return written


def _reps_for(cfg: RunConfig):
    pp = cfg.pp
    if pp.n == 1:
        return sl2_irreps(pp, cfg.seed), False
    if pp.n == 2:
        return complete_inventory(pp, cfg.seed), False
    if pp.n == 3:
        return partial_inventory_n3(pp), True
    raise UsageError("n must be 1, 2 or 3")


# --------------------------------------------------------------------------- commands


def cmd_reps(cfg: RunConfig) -> int:
    pp = cfg.pp
    if pp.n == 1:
        nonq, quot, partial = [], sl2_irreps(pp, cfg.seed), False
    elif pp.n == 2:
        nonq, quot, partial = inventory(pp), quotient_representations(pp, cfg.seed), False
    elif pp.n == 3:
        nonq, quot, partial = partial_inventory_n3(pp), [], True
    else:
        raise UsageError("reps supports n <= 3")
    entries = [{"index": i + 1, "label": r.label.short(), "params": r.label.to_dict(), "dim": r.dim}
               for i, r in enumerate(nonq)]
    qentries = [{"index": i + 1, "label": r.label.short(), "dim": r.dim} for i, r in enumerate(quot)]
    payload = {"p": pp.p, "n": pp.n, "order": group_order(pp), "partial": partial,
               "nonquotient": entries, "quotient": qentries}
    print(f"SL2(Z/{pp.modulus}): {len(nonq)} non-quotient, {len(quot)} quotient representations"
          + (" (partial family)" if partial else ""))
    print(f"{'idx':>4} {'label':<14} {'k':>2} {'chi':>5} {'Delta':>5} {'sigma':>5} {'dim':>5}")
    for e in entries:
        prm = e["params"]
        print(f"{e['index']:>4} {e['label']:<14} {prm['k']!s:>2} {prm['chi']!s:>5} {prm['delta']!s:>5} "
              f"{prm['sigma']!s:>5} {e['dim']:>5}")
    for e in qentries:
        print(f"{'q' + str(e['index']):>4} {e['label']:<14} {'':>2} {'':>5} {'':>5} {'':>5} {e['dim']:>5}")
    _write(cfg, f"reps_p{pp.p}_n{pp.n}", json_obj=payload)
    return 0


def cmd_chartable(cfg: RunConfig) -> int:
    pp = cfg.pp
    if pp.n == 1:
        reps = sl2_irreps(pp, cfg.seed)
    elif pp.n == 2:
        reps = inventory(pp)
    else:
        raise UsageError("chartable supports n = 1 or 2")
    G = SL2Group(pp)
    T = character_table(reps, G.conjugacy_classes)
    cols = [lab.short() for lab in T.labels]
    rows = []
    for cl, vals in zip(T.classes, T.values):
        row = {"class": " ".join(map(str, cl.representative.entries)), "size": cl.size}
        row.update({c: _fmt_complex(v) for c, v in zip(cols, vals)})
        rows.append(row)
    csv_text = _csv(rows, ["class", "size", *cols])
    payload = {"p": pp.p, "n": pp.n, "columns": cols,
               "classes": [{"representative": cl.representative.tolist(), "size": cl.size} for cl in T.classes],
               "values": [[[float(v.real), float(v.imag)] for v in r] for r in T.values]}
    print(f"character table: {len(T.classes)} classes x {len(cols)} representations")
    print("dimensions:", " ".join(str(d) for d in T.dims))
    _write(cfg, f"chartable_p{pp.p}_n{pp.n}", json_obj=payload, csv_text=csv_text)
    return 0


def _fmt_complex(z: complex, digits: int = 10) -> str:
    re, im = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0
    return f"{re:.{digits}g}" if im == 0 else f"{re:.{digits}g}{im:+.{digits}g}j"


def cmd_spectrum(cfg: RunConfig) -> int:
    reps, partial = _reps_for(cfg)
    S = cfg.generating_set()
    if not S.is_symmetric():
        log.warning("generating set %s is not closed under inverses", S.name)
    report = cayley_spectrum(S, reps, partial=partial, jobs=cfg.jobs)
    rows = report_rows(report, cfg.tolerances.cluster)
    stem = f"spectrum_{S.name}_p{cfg.p}_n{cfg.n}"
    _write(cfg, stem, json_obj=report.to_dict(cfg.tolerances.cluster), csv_text=_csv(rows, CSV_COLUMNS),
           svg_text=render(spectrum_figure(report)))
    lead = report.labels[report.argmax()].short() if report.argmax() >= 0 else "-"
    bound = " (lower bound)" if partial else ""
    print(f"{S.name} on SL2(Z/{cfg.p}^{cfg.n}): lambda1 = {report.lambda1:.6f}{bound}; "
          f"largest non-quotient eigenvalue in {lead}; Ramanujan 2*sqrt(3) = {report.ramanujan:.6f}")
    return 0


def cmd_schreier(cfg: RunConfig) -> int:
    S = cfg.generating_set()
    g = schreier_graph(S, cfg.pp)
    payload = {"p": cfg.p, "n": cfg.n, "set": S.name, "vertices": g.size, "lambda1": g.lambda1,
               "ramanujan": 2 * 3**0.5, "spectrum": [float(x) for x in g.spectrum]}
    rows = [{"index": i + 1, "eigenvalue": round(float(x), 12)} for i, x in enumerate(g.spectrum)]
    _write(cfg, f"schreier_{S.name}_p{cfg.p}_n{cfg.n}", json_obj=payload, csv_text=_csv(rows, ["index", "eigenvalue"]),
           svg_text=render(schreier_figure(g)))
    print(f"Schreier graph on P^1(Z/{cfg.pp.modulus}) for {S.name}: {g.size} vertices, lambda1 = {g.lambda1:.6f}")
    return 0


def cmd_random(cfg: RunConfig) -> int:
    sweep = random_pair_experiment(cfg.pp, cfg.count, cfg.seed)
    rows = [{"trial": i + 1, "lambda1": round(v, 12), "normalized": round(v / sweep.degree, 12)}
            for i, v in enumerate(sweep.values)]
    _write(cfg, f"random_p{cfg.p}_n{cfg.n}_seed{cfg.seed}", json_obj=sweep.to_dict(),
           csv_text=_csv(rows, ["trial", "lambda1", "normalized"]), svg_text=render(sweep_figure(sweep)))
    print(f"{cfg.count} random generating pairs on P^1(Z/{cfg.pp.modulus}), seed {cfg.seed}: "
          f"mean lambda1 = {sweep.mean:.4f} (Ramanujan {2 * 3**0.5:.4f})")
    return 0


def _homomorphism_error(reps, pp, pairs: int, seed: int) -> float:
    from .group import random_element

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        a, b = random_element(rng, pp), random_element(rng, pp)
        for r in reps:
            worst = max(worst, float(np.abs(r.evaluate(a * b) - r.evaluate(a) @ r.evaluate(b)).max()))
    return worst


def cmd_verify(cfg: RunConfig) -> int:
    pp = cfg.pp
    tol = cfg.tolerances
    if pp.n > 2:
        raise UsageError("verify supports n = 1 or 2")
    G = SL2Group(pp)
    reps = complete_inventory(pp, cfg.seed)
    checks: list[tuple[str, bool, str]] = []

    checks.append(("group order", G.order == group_order(pp), f"|G| = {G.order}"))
    classes = G.conjugacy_classes
    checks.append(("irreducibles = classes", len(reps) == len(classes), f"{len(reps)} vs {len(classes)}"))
    budget = sum(r.dim**2 for r in reps)
    checks.append(("sum of dim^2 = |G|", budget == G.order, f"{budget} vs {G.order}"))

    T = character_table(reps, classes)
    orth = float(np.abs(T.inner_products() - np.eye(len(reps))).max())
    checks.append(("character orthogonality", orth <= tol.orthogonality, f"residual {orth:.2e}"))

    hom = _homomorphism_error(reps, pp, 20, cfg.seed)
    checks.append(("homomorphism", hom <= tol.homomorphism, f"residual {hom:.2e}"))

    f = GroupFunction.random(G, np.random.default_rng(cfg.seed))
    coeffs = fourier_transform(f, reps)
    inv = float(np.abs(inverse_fourier(coeffs, reps, G).values - f.values).max())
    checks.append(("Fourier inversion", inv <= tol.fourier, f"residual {inv:.2e}"))
    pl = plancherel_residual(f, coeffs, reps) / max(1.0, float(np.sum(np.abs(f.values) ** 2)))
    checks.append(("Plancherel (relative)", pl <= tol.fourier, f"residual {pl:.2e}"))

    if G.order <= 5000:
        for name in ("G1", "G2", "G3"):
            S = cfg.with_(set_name=name).generating_set()
            d = multiset_distance(cayley_spectrum(S, reps).union, adjacency_spectrum(S, G))
            checks.append((f"Wedderburn union {name}", d <= tol.wedderburn, f"residual {d:.2e}"))

    ok = True
    for name, passed, detail in checks:
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name:<28} {detail}")
    return 0 if ok else 1


COMMANDS = {
    "reps": cmd_reps,
    "chartable": cmd_chartable,
    "spectrum": cmd_spectrum,
    "schreier": cmd_schreier,
    "random": cmd_random,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl2pn", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--set", dest="set_name", default="G1", help="G1, G2, G3 or random:SEED")
        sp.add_argument("--count", type=int, default=100)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default="out")
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--jobs", type=int, default=default_jobs())
        sp.add_argument("--format", dest="formats", default="csv,json,svg")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(args.p, args.n, args.command, args.set_name, args.count, args.seed, args.out, args.tol,
                        args.jobs, tuple(f.strip() for f in args.formats.split(",") if f.strip()))
        return COMMANDS[cfg.command](cfg)
    except (InvalidParams, UsageError, Unsupported, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonRealSpectrum as exc:
        print(f"numerical error: {exc} (is the generating set symmetric?)", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
