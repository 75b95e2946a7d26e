"""Spectra on the Delta = sigma = 1, chi in {1, 2} spaces (k = 1, 2) of SL2(Z/p^3)."""

import argparse
import json
from pathlib import Path

from sl2pn.group import standard_generators
from sl2pn.modarith import PrimePower
from sl2pn.plots import render, spectrum_figure
from sl2pn.reps import partial_inventory_n3
from sl2pn.spectra import cayley_spectrum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--out", default="out/n3")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    pp = PrimePower(args.p, 3)
    reps = partial_inventory_n3(pp)
    summary = {}
    for name in ("G1", "G2", "G3"):
        rep = cayley_spectrum(standard_generators(name, pp), reps, normalized=True, partial=True)
        (out / f"partial_{name}.svg").write_text(render(spectrum_figure(rep)))
        summary[name] = rep.to_dict()
        tops = ", ".join(f"{lab.short()}: {s[0] * rep.degree:.4f}" for lab, s in zip(rep.labels, rep.spectra))
        print(f"{name}: {tops}")
    (out / "partial.json").write_text(json.dumps(summary, indent=2, sort_keys=True, default=float) + "\n")


if __name__ == "__main__":
    main()
