"""Eigenvalues on the k = 2 pieces of SL2(Z/p^2) for several primes.

Both sigma classes and both characters (four pieces per prime) are plotted
together, one row per prime.

    python3 scripts/k2_spaces.py --primes 3 5 7 11
"""

import argparse
import json
from pathlib import Path

from sl2pn.group import standard_generators
from sl2pn.modarith import PrimePower, canonical_sigmas
from sl2pn.plots import Scatter, render
from sl2pn.reps import k_equals_n_split
from sl2pn.spectra import RAMANUJAN_4, cayley_spectrum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11])
    ap.add_argument("--out", default="out/k2")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    results = {}
    for name in ("G1", "G2", "G3"):
        fig = Scatter(title=f"k = 2 pieces, {name}", xlabel="normalized eigenvalue", ylabel="p",
                      vlines=[(RAMANUJAN_4 / 4, "red"), (-RAMANUJAN_4 / 4, "red")], xlim=(-1.0, 1.0))
        for p in args.primes:
            pp = PrimePower(p, 2)
            pieces = [r for s in canonical_sigmas(p) for r in k_equals_n_split(s, pp)
                      if r.label.kind == "nonquotient"]
            rep = cayley_spectrum(standard_generators(name, pp), pieces, normalized=True)
            fig.points += [(float(v), p) for s in rep.spectra for v in s]
            results.setdefault(name, {})[p] = max(float(s[0]) for s in rep.spectra)
            print(f"{name} p={p}: top normalized eigenvalue on k=2 pieces {results[name][p]:.5f}")
        fig.ylim = (0, max(args.primes) + 2)
        (out / f"k2_{name}.svg").write_text(render(fig))
    (out / "k2.json").write_text(json.dumps(results, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
