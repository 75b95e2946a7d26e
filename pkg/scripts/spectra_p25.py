"""Per-representation Cayley spectra of SL2(Z/25) for G1, G2 and G3.

Writes the full spectra (one point per eigenvalue, representation index on the
y axis) and the second largest eigenvalue of each non-quotient piece.

    python3 scripts/spectra_p25.py --out out/p25
"""

import argparse
import json
from pathlib import Path

from sl2pn.baseline import complete_inventory
from sl2pn.modarith import PrimePower
from sl2pn.plots import Scatter, render, spectrum_figure
from sl2pn.spectra import cayley_spectrum, report_rows, spectrum_for
from sl2pn.group import standard_generators


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--out", default="out/p25")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    pp = PrimePower(args.p, 2)
    reps = complete_inventory(pp)
    nonq = [r for r in reps if r.label.kind == "nonquotient"]
    for name in ("G1", "G2", "G3"):
        S = standard_generators(name, pp)
        full = cayley_spectrum(S, nonq, normalized=True)
        base = spectrum_for(PrimePower(args.p, 1), name, normalized=True)
        (out / f"spectra_{name}.svg").write_text(render(spectrum_figure(full)))

        second = [(float(s[0]), i + 1) for i, s in enumerate(full.spectra)]
        fig = Scatter(title=f"Largest eigenvalue per representation, {name}, SL2(Z/{pp.modulus})",
                      xlabel="normalized eigenvalue", ylabel="representation index", points=second,
                      vlines=[(base.lambda1, "green"), (full.ramanujan, "red"), (full.leading, "black")],
                      xlim=(-1.0, 1.0), ylim=(0, len(second) + 1))
        (out / f"second_{name}.svg").write_text(render(fig))

        whole = cayley_spectrum(S, reps)
        data = {"set": name, "p": pp.p, "n": 2, "lambda1": whole.lambda1,
                "lambda1_level_one": base.lambda1 * base.degree,
                "argmax": whole.labels[whole.argmax()].short(),
                "rows": report_rows(full)}
        (out / f"spectra_{name}.json").write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        print(f"{name}: lambda1 = {whole.lambda1:.5f}, largest non-quotient value in {data['argmax']}")


if __name__ == "__main__":
    main()
