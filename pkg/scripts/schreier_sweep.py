"""Schreier graphs of SL2(Z/p^2) acting on the projective line.

Part (a): lambda_1 for G1, G2, G3 over primes below a bound.
Part (b): 100 random generating pairs for 3 <= p <= 19, with the mean per prime.
"""

import argparse
import json
from pathlib import Path

import numpy as np

from sl2pn.group import standard_generators
from sl2pn.modarith import PrimePower, is_prime
from sl2pn.plots import Scatter, render
from sl2pn.spectra import random_pair_experiment, schreier_graph


def fixed_sets(primes, out: Path):
    colours = {"G1": 0.0, "G2": 0.33, "G3": 0.66}
    fig = Scatter(title="Schreier graphs, fixed generators", xlabel="p", ylabel="normalized lambda1",
                  ylim=(0.5, 1.02))
    data = {}
    for p in primes:
        pp = PrimePower(p, 2)
        for name in colours:
            lam = schreier_graph(standard_generators(name, pp), pp).lambda1 / 4
            data.setdefault(name, {})[p] = lam
            fig.points.append((p + colours[name], lam))
        print(f"p={p}: " + ", ".join(f"{k} {data[k][p]:.4f}" for k in colours))
    (out / "schreier_fixed.svg").write_text(render(fig))
    return data


def random_sets(primes, count, seed, out: Path):
    fig = Scatter(title=f"Schreier graphs, {count} random generating pairs", xlabel="p",
                  ylabel="normalized lambda1", ylim=(0.5, 1.02))
    data = {}
    for p in primes:
        sweep = random_pair_experiment(PrimePower(p, 2), count, seed)
        fig.points += [(p, v) for v in sweep.normalized]
        fig.markers.append((p, sweep.mean / 4))
        data[p] = sweep.to_dict()
        print(f"p={p}: mean lambda1 {sweep.mean:.4f}, spread {np.std(sweep.values):.4f}")
    (out / "schreier_random.svg").write_text(render(fig))
    return data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-prime", type=int, default=50)
    ap.add_argument("--random-max", type=int, default=19)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="out/schreier")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    primes = [p for p in range(3, args.max_prime) if is_prime(p)]
    result = {"fixed": fixed_sets(primes, out),
              "random": random_sets([p for p in primes if p <= args.random_max], args.count, args.seed, out)}
    (out / "schreier.json").write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
