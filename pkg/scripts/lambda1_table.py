"""Second largest Cayley eigenvalue for G1, G2, G3 on SL2(Z/5^n), n = 1, 2, 3.

Values for n = 3 come from a partial family of representations and are lower bounds.
"""

import argparse
import csv
import sys

from sl2pn.spectra import lambda1_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--ns", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args()
    rows = lambda1_table(ps=(args.p,), ns=args.ns)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["set", "p", "n", "lambda1", "lower_bound"])
    for e in rows:
        w.writerow([e.set_name, e.p, e.n, f"{e.value:.5f}", e.lower_bound])


if __name__ == "__main__":
    main()
