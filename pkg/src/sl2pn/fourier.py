"""Fourier transforms of functions on SL_2(Z/p^n) at explicit irreducibles.

For the representations built from the Weil-type action, the sum over the
group is grouped by Bruhat cell.  An element of the big cell factors as
u(b1) w d(a) u(b2) and one of the small cell as w u(b1) w d(a) u(b2); the u
factors act diagonally with entries zeta^(sigma b nm_i), so the sum over
(b1, b2) for fixed a is a two-dimensional DFT of f restricted to that slice.
One batch of FFTs per function serves every representation; each
representation then only gathers the entries at its norm values and mixes
them with w d(a).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .baseline import LiftedRepresentation, TableRepresentation
from .group import GeneratingSet, SL2Elem, SL2Group
from .reps import RepLabel, Representation, TrivialRepresentation, WeilRepresentation


class IncompleteInventory(ValueError):
    """The representations supplied do not exhaust the irreducibles (sum of dim^2 != |G|)."""


@dataclass
class GroupFunction:
    """A complex function on an enumerated SL_2(Z/p^n), stored in enumeration order."""

    group: SL2Group
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.group.order,):
            raise ValueError(f"expected {self.group.order} values, got shape {self.values.shape}")

    def __call__(self, x: SL2Elem) -> complex:
        return complex(self.values[self.group.index_of(x)])

    @classmethod
    def delta(cls, group: SL2Group, x: SL2Elem | None = None) -> "GroupFunction":
        v = np.zeros(group.order, dtype=complex)
        v[group.identity_index if x is None else group.index_of(x)] = 1
        return cls(group, v)

    @classmethod
    def indicator(cls, group: SL2Group, elems: Iterable[SL2Elem]) -> "GroupFunction":
        """Counting function of a multiset of elements (delta_S)."""
        v = np.zeros(group.order, dtype=complex)
        for x in elems:
            v[group.index_of(x)] += 1
        return cls(group, v)

    @classmethod
    def random(cls, group: SL2Group, rng: np.random.Generator) -> "GroupFunction":
        n = group.order
        return cls(group, rng.standard_normal(n) + 1j * rng.standard_normal(n))

    def convolve(self, other: "GroupFunction") -> "GroupFunction":
        """(f * h)(x) = sum_y f(y) h(y^-1 x), by direct double sum."""
        G = self.group
        out = np.zeros(G.order, dtype=complex)
        for y in np.flatnonzero(self.values):
            out[G.left_mult_perm(G.element(y))] += self.values[y] * other.values
        return GroupFunction(G, out)

    def pushforward(self, quotient: SL2Group) -> "GroupFunction":
        """Sum of f over the fibres of the reduction map."""
        idx = quotient.index_of(self.group.elements % quotient.N)
        v = np.bincount(idx, weights=self.values.real, minlength=quotient.order) \
            + 1j * np.bincount(idx, weights=self.values.imag, minlength=quotient.order)
        return GroupFunction(quotient, v)


@dataclass
class FourierCoefficients:
    labels: list[RepLabel]
    matrices: list[np.ndarray]

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, key) -> np.ndarray:
        if isinstance(key, int):
            return self.matrices[key]
        for lab, m in zip(self.labels, self.matrices):
            if lab == key or lab.short() == key:
                return m
        raise KeyError(key)

    def items(self):
        return zip(self.labels, self.matrices)

    def __sub__(self, other: "FourierCoefficients") -> float:
        return max(float(np.abs(a - b).max()) for a, b in zip(self.matrices, other.matrices))

    def to_dict(self) -> dict:
        return {
            "coefficients": [
                {"label": lab.short(), "params": lab.to_dict(),
                 "matrix": np.stack([m.real, m.imag], axis=-1).tolist()}
                for lab, m in self.items()
            ]
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "FourierCoefficients":
        labels, mats = [], []
        for entry in data["coefficients"]:
            prm = dict(entry["params"])
            chi = prm.get("chi")
            labels.append(RepLabel(prm["kind"], prm.get("k"), tuple(chi) if isinstance(chi, list) else chi,
                                   prm.get("delta"), prm.get("delta_prime"), prm.get("sigma"),
                                   prm.get("sigma_value"), prm.get("name")))
            arr = np.asarray(entry["matrix"], dtype=float)
            mats.append(arr[..., 0] + 1j * arr[..., 1])
        return cls(labels, mats)


# --------------------------------------------------------------------------- Bruhat grid


class BruhatGrid:
    """Index of every group element by (cell, d-argument, b1, b2).

    big cell   (c a unit):      x = u(a/c) w d(c) u(d/c)
    small cell (c = 0 mod p):   x = w u(-c/a) w d(-a) u(b/a)

    ``index[cell][i, b1, b2]`` is the enumeration index of the element with
    d-argument ``units[i]``; small-cell slots with b1 not divisible by p are -1.
    """

    def __init__(self, group: SL2Group):
        self.group = group
        pp = group.pp
        N, p = pp.modulus, pp.p
        r = np.arange(N)
        self.units = r[r % p != 0]
        unit_pos = np.full(N, -1)
        unit_pos[self.units] = np.arange(len(self.units))
        inv = np.zeros(N, dtype=np.int64)
        inv[self.units] = [pow(int(u), -1, N) for u in self.units]

        E = group.elements
        a, b, c, d = E.T
        idx = np.arange(group.order)
        self.index = [np.full((len(self.units), N, N), -1, dtype=np.int64) for _ in range(2)]
        big = c % p != 0
        ci = inv[c[big]]
        self.index[0][unit_pos[c[big]], a[big] * ci % N, d[big] * ci % N] = idx[big]
        sm = ~big
        ai = inv[a[sm]]
        self.index[1][unit_pos[(-a[sm]) % N], (-c[sm] * ai) % N, b[sm] * ai % N] = idx[sm]

    def slices(self, values: np.ndarray) -> list[np.ndarray]:
        """f arranged as two (n_units, N, N) arrays, zero at unused small-cell slots."""
        out = []
        for ind in self.index:
            arr = np.where(ind >= 0, values[np.maximum(ind, 0)], 0)
            out.append(arr)
        return out

    def spectra(self, values: np.ndarray) -> list[np.ndarray]:
        """hat[i, s, t] = sum_{b1, b2} f(cell, units[i], b1, b2) exp(2 pi i (b1 s + b2 t) / N)."""
        N = self.group.N
        return [np.fft.ifft2(s, axes=(1, 2)) * (N * N) for s in self.slices(values)]

    def synthesize(self, hats: Sequence[np.ndarray]) -> np.ndarray:
        """Inverse of ``spectra`` composed with the sign flip: values from sums over (s, t)."""
        out = np.zeros(self.group.order, dtype=complex)
        for ind, H in zip(self.index, hats):
            vals = np.fft.fft2(H, axes=(1, 2))
            mask = ind >= 0
            out[ind[mask]] = vals[mask]
        return out


def _grid(group: SL2Group) -> BruhatGrid:
    g = getattr(group, "_bruhat_grid", None)
    if g is None:
        g = BruhatGrid(group)
        group._bruhat_grid = g
    return g


def _wd(rep: WeilRepresentation, units: np.ndarray) -> np.ndarray:
    W = rep.w
    return np.stack([W @ rep.d(int(a)) for a in units])


def _fast_weil(rep: WeilRepresentation, grid: BruhatGrid, hats) -> np.ndarray:
    N = grid.group.N
    s = (rep.action.sigma * rep.nm) % N
    WD = _wd(rep, grid.units)
    big = np.sum(WD * hats[0][:, s[:, None], s[None, :]], axis=0)
    small = rep.w @ np.sum(WD * hats[1][:, s[:, None], s[None, :]], axis=0)
    return big + small


# --------------------------------------------------------------------------- transforms


def _naive(f: GroupFunction, rep: Representation) -> np.ndarray:
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    G = f.group
    for i in np.flatnonzero(f.values):
        out += f.values[i] * rep.evaluate(G.element(i))
    return out


def _table(values: np.ndarray, rep: TableRepresentation) -> np.ndarray:
    return np.tensordot(values, rep.matrices, axes=1)


def _transform_one(f: GroupFunction, rep: Representation, method: str, cache: dict) -> np.ndarray:
    if method == "naive":
        return _naive(f, rep)
    if isinstance(rep, TrivialRepresentation):
        return np.array([[f.values.sum()]])
    if isinstance(rep, WeilRepresentation):
        if "hats" not in cache:
            grid = _grid(f.group)
            cache["grid"], cache["hats"] = grid, grid.spectra(f.values)
        return _fast_weil(rep, cache["grid"], cache["hats"])
    if isinstance(rep, LiftedRepresentation) and isinstance(rep.base, TableRepresentation):
        key = ("push", rep.base.pp)
        if key not in cache:
            cache[key] = f.pushforward(rep.base.group)
        return _table(cache[key].values, rep.base)
    if isinstance(rep, TableRepresentation) and rep.group is not None and rep.group.pp == f.group.pp:
        return _table(f.values, rep)
    return _naive(f, rep)


def fourier_transform(f: GroupFunction, reps: Sequence[Representation], method: str = "fast",
                      jobs: int = 1) -> FourierCoefficients:
    """hat f(eta) = sum_g f(g) eta(g) for each eta in ``reps``.

    ``method="naive"`` evaluates every group element explicitly and is kept as
    the reference; ``"fast"`` uses the Bruhat-cell grouping where available.
    """
    if method not in ("fast", "naive"):
        raise ValueError(f"unknown method {method!r}")
    cache: dict = {}
    if method == "fast" and any(isinstance(r, WeilRepresentation) for r in reps):
        grid = _grid(f.group)
        cache["grid"], cache["hats"] = grid, grid.spectra(f.values)
    run = lambda r: _transform_one(f, r, method, cache)  # noqa: E731
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            mats = list(ex.map(run, reps))
    else:
        mats = [run(r) for r in reps]
    return FourierCoefficients([r.label for r in reps], mats)


def delta_set_transform(s: GeneratingSet | Sequence[SL2Elem], reps: Sequence[Representation],
                        normalized: bool = False) -> FourierCoefficients:
    """sum over s in S of eta(s); divided by |S| when ``normalized``."""
    elems = list(s)
    if not elems:
        raise ValueError("empty generating set")
    scale = 1 / len(elems) if normalized else 1.0
    mats = [scale * sum(r.evaluate(x) for x in elems) for r in reps]
    return FourierCoefficients([r.label for r in reps], mats)


def check_complete(reps: Sequence[Representation], order: int) -> None:
    total = sum(r.dim**2 for r in reps)
    if total != order:
        raise IncompleteInventory(f"sum of dim^2 = {total}, but |G| = {order}")


def _inverse_weil(rep: WeilRepresentation, X: np.ndarray, grid: BruhatGrid) -> np.ndarray:
    """g -> trace(eta(g)^H X) over the whole group, via the Bruhat grid."""
    N = grid.group.N
    s = (rep.action.sigma * rep.nm) % N
    WD = np.conj(_wd(rep, grid.units))
    flat = (s[:, None] * N + s[None, :]).ravel()
    hats = []
    for Y in (WD * X[None], WD * (rep.w.conj().T @ X)[None]):
        H = np.zeros((len(grid.units), N * N), dtype=complex)
        for i in range(len(grid.units)):
            H[i] = np.bincount(flat, weights=Y[i].real.ravel(), minlength=N * N) \
                + 1j * np.bincount(flat, weights=Y[i].imag.ravel(), minlength=N * N)
        hats.append(H.reshape(len(grid.units), N, N))
    return grid.synthesize(hats)


def _trace_against(rep: Representation, X: np.ndarray, group: SL2Group) -> np.ndarray:
    """g -> trace(eta(g^-1) X) for every g (eta unitary, so eta(g^-1) = eta(g)^H)."""
    if isinstance(rep, TrivialRepresentation):
        return np.full(group.order, X[0, 0], dtype=complex)
    if isinstance(rep, WeilRepresentation):
        return _inverse_weil(rep, X, _grid(group))
    if isinstance(rep, LiftedRepresentation) and isinstance(rep.base, TableRepresentation):
        small = rep.base.group
        vals = np.einsum("gij,ij->g", rep.base.matrices.conj(), X)
        return vals[small.index_of(group.elements % small.N)]
    if isinstance(rep, TableRepresentation) and rep.group is not None:
        return np.einsum("gij,ij->g", rep.matrices.conj(), X)
    return np.array([np.trace(rep.evaluate(group.element(i).inv()) @ X) for i in range(group.order)])


def inverse_fourier(coeffs: FourierCoefficients, reps: Sequence[Representation], group: SL2Group) -> GroupFunction:
    """f(g) = (1/|G|) sum_eta dim(eta) trace(eta(g^-1) hat f(eta))."""
    check_complete(reps, group.order)
    out = np.zeros(group.order, dtype=complex)
    for rep, X in zip(reps, coeffs.matrices):
        out += rep.dim * _trace_against(rep, X, group)
    return GroupFunction(group, out / group.order)


def plancherel_residual(f: GroupFunction, coeffs: FourierCoefficients, reps: Sequence[Representation]) -> float:
    """| sum |f|^2 - (1/|G|) sum dim ||hat f||_F^2 |."""
    check_complete(reps, f.group.order)
    lhs = float(np.sum(np.abs(f.values) ** 2))
    rhs = sum(r.dim * float(np.sum(np.abs(X) ** 2)) for r, X in zip(reps, coeffs.matrices)) / f.group.order
    return abs(lhs - rhs)
