"""Character table of the non-quotient irreducibles of SL2(Z/9), compared with the published one.

Prints our table (rounded) and, for each published column, which of our
characters agree with it as a multiset of values.
"""

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from published_table import COLUMNS, TABLE  # noqa: E402

from sl2pn.group import SL2Group  # noqa: E402
from sl2pn.modarith import PrimePower  # noqa: E402
from sl2pn.reps import character_table, inventory  # noqa: E402


def key(col):
    return tuple(sorted((round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0) for z in col))


def main():
    pp = PrimePower(3, 2)
    G = SL2Group(pp)
    reps = inventory(pp)
    T = character_table(reps, G.conjugacy_classes)
    np.set_printoptions(precision=3, suppress=True, linewidth=200)
    print("dims:", T.dims.tolist())
    print("orthonormality residual:", float(np.abs(T.inner_products() - np.eye(len(reps))).max()))
    for j, name in enumerate(COLUMNS):
        hits = [r.label.short() for i, r in enumerate(reps) if key(T.values[:, i]) == key(TABLE[:, j])]
        print(f"{name:<16} -> {', '.join(hits) or 'no match'}")


if __name__ == "__main__":
    main()
