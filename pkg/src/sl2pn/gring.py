"""The ring G(k, Delta) = Z/p^n x Z/p^(n-k) and its norm-one group C.

Elements (g1, g2) are indexed as ``g1 * p^(n-k) + g2`` so that index order is the
lexicographic order on pairs.  Characters of C are kept as exact exponent vectors:
``chi(c) = exp(2 pi i * exps[c] / order)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm

import numpy as np
from scipy import sparse

from .modarith import InvalidParams, PrimePower, is_squarefree


class ParamMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingParams:
    pp: PrimePower
    k: int
    delta_prime: int = 1

    def __post_init__(self):
        p, n = self.pp.p, self.pp.n
        if not 0 <= self.k <= n:
            raise InvalidParams(f"k must lie in [0, {n}], got {self.k}")
        if self.delta_prime <= 0 or self.delta_prime % p == 0 or not is_squarefree(self.delta_prime):
            raise InvalidParams(f"Delta' must be a positive squarefree integer prime to p, got {self.delta_prime}")

    @property
    def N(self) -> int:
        return self.pp.modulus

    @property
    def M2(self) -> int:
        """Modulus of the second coordinate, p^(n-k)."""
        return self.pp.p ** (self.pp.n - self.k)

    @property
    def delta(self) -> int:
        return self.pp.p**self.k * self.delta_prime

    @property
    def size(self) -> int:
        return self.N * self.M2

    def index(self, g1, g2):
        return (np.asarray(g1) % self.N) * self.M2 + np.asarray(g2) % self.M2

    def pair(self, idx):
        idx = np.asarray(idx)
        return idx // self.M2, idx % self.M2

    @cached_property
    def all_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        return self.pair(np.arange(self.size))


@dataclass(frozen=True)
class GElem:
    g1: int
    g2: int
    rp: RingParams

    def __post_init__(self):
        object.__setattr__(self, "g1", self.g1 % self.rp.N)
        object.__setattr__(self, "g2", self.g2 % self.rp.M2)

    def __mul__(self, other: "GElem") -> "GElem":
        return star_mul(self, other, self.rp)

    @property
    def index(self) -> int:
        return int(self.rp.index(self.g1, self.g2))


def _check(g: GElem, rp: RingParams):
    if g.rp != rp:
        raise ParamMismatch("elements belong to different rings")


def star_mul(g: GElem, h: GElem, rp: RingParams) -> GElem:
    _check(g, rp)
    _check(h, rp)
    y1 = g.g1 * h.g1 - g.g2 * h.g2 * rp.delta
    y2 = g.g1 * h.g2 + g.g2 * h.g1
    return GElem(y1, y2, rp)


def norm(g: GElem) -> int:
    return (g.g1 * g.g1 + g.rp.delta * g.g2 * g.g2) % g.rp.N


def trace(g: GElem) -> int:
    return 2 * g.g1 % g.rp.N


def conj(g: GElem) -> GElem:
    return GElem(g.g1, -g.g2, g.rp)


def bilinear(g: GElem, h: GElem) -> int:
    """Tr(g * conj(h)) = 2 (g1 h1 + Delta g2 h2)."""
    return trace(star_mul(g, conj(h), g.rp))


# vectorised versions on index arrays


def star_mul_idx(rp: RingParams, i, j) -> np.ndarray:
    g1, g2 = rp.pair(i)
    h1, h2 = rp.pair(j)
    y1 = (g1 * h1 - (g2 * h2 % rp.N) * rp.delta) % rp.N
    y2 = (g1 * h2 + g2 * h1) % rp.M2
    return y1 * rp.M2 + y2


def norm_idx(rp: RingParams, i) -> np.ndarray:
    g1, g2 = rp.pair(i)
    return (g1 * g1 + (g2 * g2 % rp.N) * rp.delta) % rp.N


# --------------------------------------------------------------------------- the group C


@dataclass(frozen=True)
class CGroup:
    rp: RingParams
    elements: np.ndarray  # ring indices of norm-one elements, ascending
    generators: tuple[int, ...]  # ring indices
    gen_orders: tuple[int, ...]
    coords: np.ndarray  # (|C|, r) exponents of each element in the generators
    congruence: np.ndarray  # boolean mask of C_{n-1}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_cyclic(self) -> bool:
        return len(self.gen_orders) <= 1

    @property
    def exponent(self) -> int:
        return lcm(*self.gen_orders) if self.gen_orders else 1

    @cached_property
    def position(self) -> dict[int, int]:
        return {int(e): i for i, e in enumerate(self.elements)}

    @cached_property
    def mult_table(self) -> np.ndarray:
        """Positions (not ring indices) of products."""
        prod = star_mul_idx(self.rp, self.elements[:, None], self.elements[None, :])
        pos = np.searchsorted(self.elements, prod)
        assert np.all(self.elements[pos] == prod), "C is not closed under *"
        return pos

    @cached_property
    def action(self) -> np.ndarray:
        """action[c, g] = ring index of c * g for every c in C and g in G."""
        return star_mul_idx(self.rp, self.elements[:, None], np.arange(self.rp.size)[None, :])


def _element_order(table: np.ndarray, x: int, e: int) -> int:
    o, y = 1, x
    while y != e:
        y = table[y, x]
        o += 1
    return o


def build_C(rp: RingParams) -> CGroup:
    """Enumerate C = {u : Nm(u) = 1} and decompose it into cyclic factors.

    The first generator is the element of maximal order with the smallest index, so
    for cyclic C it is the canonical generator used to label characters.
    """
    idx = np.arange(rp.size)
    elems = idx[norm_idx(rp, idx) == 1 % rp.N]
    prod = star_mul_idx(rp, elems[:, None], elems[None, :])
    table = np.searchsorted(elems, prod)
    e = int(np.searchsorted(elems, rp.index(1, 0)))
    m = len(elems)
    orders = np.array([_element_order(table, x, e) for x in range(m)])

    # Standard splitting: take an element of maximal order in the current quotient
    # and correct it by the already chosen subgroup so the sum is direct.
    gens: list[int] = []
    gorders: list[int] = []
    coord = {e: ()}  # position -> exponent tuple over chosen generators
    while len(coord) < m:
        best, best_ord = None, 0
        for x in range(m):
            if x in coord:
                continue
            y, o = x, 1
            while y not in coord:
                y = table[y, x]
                o += 1
            if o > best_ord:
                best, best_ord = x, o
        x = best
        y = x
        for _ in range(best_ord - 1):
            y = table[y, x]
        ts = coord[y]  # x^best_ord = prod g_j^{t_j}
        fix = e
        for g, go, t in zip(gens, gorders, ts):
            assert t % best_ord == 0, "cyclic splitting failed"
            s = (-(t // best_ord)) % go
            for _ in range(s):
                fix = table[fix, g]
        x = table[x, fix]
        new = {}
        for pos, c in coord.items():
            y = pos
            for j in range(best_ord):
                new[y] = c + (j,)
                y = table[y, x]
        coord = new
        gens.append(x)
        gorders.append(best_ord)
    coords = np.array([coord[i] for i in range(m)], dtype=np.int64).reshape(m, len(gens))

    p, n, k = rp.pp.p, rp.pp.n, rp.k
    g1, g2 = rp.pair(elems)
    if k < n:
        cong = (g1 % p ** (n - 1) == 1 % p ** (n - 1)) & (g2 % p ** max(n - 1 - k, 0) == 0)
    else:
        cong = np.zeros(m, dtype=bool)
    return CGroup(rp, elems, tuple(int(elems[g]) for g in gens), tuple(gorders), coords, cong)


# --------------------------------------------------------------------------- characters


@dataclass(frozen=True)
class CCharacter:
    """chi(c_j) = exp(2 pi i * exps[j] / modulus) for the j-th element of C."""

    parent: CGroup
    label: int | tuple[int, ...]
    exps: np.ndarray
    modulus: int

    @cached_property
    def values(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.exps / self.modulus)

    def __call__(self, ring_index: int) -> complex:
        return complex(self.values[self.parent.position[int(ring_index)]])

    @property
    def is_trivial(self) -> bool:
        return not np.any(self.exps % self.modulus)

    @property
    def is_principal(self) -> bool:
        return bool(np.any(self.exps[self.parent.congruence] % self.modulus))

    def inverse_label(self):
        if isinstance(self.label, tuple):
            return tuple((-l) % o for l, o in zip(self.label, self.parent.gen_orders))
        return (-self.label) % self.parent.order


def character(c: CGroup, label) -> CCharacter:
    if c.is_cyclic:
        ell = int(label) if not isinstance(label, tuple) else int(label[0])
        m = max(c.order, 1)
        exps = (ell * c.coords[:, 0]) % m if c.coords.shape[1] else np.zeros(c.order, dtype=np.int64)
        return CCharacter(c, ell % m, exps, m)
    if not isinstance(label, tuple):
        raise ValueError(f"C has invariants {c.gen_orders}; label its characters by a tuple of exponents")
    label = tuple(int(l) for l in label)
    L = c.exponent
    exps = sum((l * (L // o) * c.coords[:, j]) for j, (l, o) in enumerate(zip(label, c.gen_orders))) % L
    return CCharacter(c, label, exps, L)


def characters(c: CGroup, principal_only: bool = False) -> list[CCharacter]:
    if c.is_cyclic:
        labels = range(c.order)
    else:
        labels = np.ndindex(*c.gen_orders)
    out = [character(c, lab) for lab in labels]
    if principal_only:
        out = [x for x in out if x.is_principal]
    return out


# --------------------------------------------------------------------------- Ind(V_chi)


@dataclass(frozen=True)
class Orbit:
    rep: int  # smallest ring index in the orbit
    members: np.ndarray  # ring indices
    stabilizer: np.ndarray  # positions in C


def orbits(c: CGroup) -> list[Orbit]:
    act = c.action
    seen = np.zeros(c.rp.size, dtype=bool)
    out = []
    for g in range(c.rp.size):
        if seen[g]:
            continue
        members = np.unique(act[:, g])
        seen[members] = True
        out.append(Orbit(g, members, np.flatnonzero(act[:, g] == g)))
    return out


@dataclass(frozen=True)
class InducedVector:
    """f = sum_{c in C} chi(c) e_{c * rep}, stored as exact exponents on the orbit."""

    rep: int
    support: np.ndarray  # ring indices
    exps: np.ndarray  # chi exponent per support point
    modulus: int
    multiplicity: int  # |stabilizer|: every coefficient is multiplicity * root of unity

    @property
    def coefficients(self) -> np.ndarray:
        return self.multiplicity * np.exp(2j * np.pi * self.exps / self.modulus)


def orbits_and_induced_basis(chi: CCharacter) -> list[InducedVector]:
    """Non-zero vectors f_i spanning Ind(V_chi), one per C-orbit that survives.

    An orbit contributes zero exactly when chi is non-trivial on its stabiliser; this is
    decided on exponents, without floating point.
    """
    c = chi.parent
    act = c.action
    out = []
    for orb in orbits(c):
        if np.any(chi.exps[orb.stabilizer] % chi.modulus):
            continue
        targets = act[:, orb.rep]
        # first c hitting each target; chi is constant on stabiliser cosets
        order = np.argsort(targets, kind="stable")
        t_sorted = targets[order]
        first = np.concatenate([[True], t_sorted[1:] != t_sorted[:-1]])
        support = t_sorted[first]
        exps = chi.exps[order[first]] % chi.modulus
        out.append(InducedVector(orb.rep, support, exps, chi.modulus, len(orb.stabilizer)))
    return out


def induced_matrix(basis: list[InducedVector], size: int, normalize: bool = True) -> sparse.csc_matrix:
    rows, cols, vals = [], [], []
    for j, f in enumerate(basis):
        v = np.exp(2j * np.pi * f.exps / f.modulus)
        v = v / np.sqrt(len(f.support)) if normalize else v * f.multiplicity
        rows.append(f.support)
        cols.append(np.full(len(f.support), j))
        vals.append(v)
    if not basis:
        return sparse.csc_matrix((size, 0), dtype=complex)
    return sparse.csc_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(size, len(basis))
    )


def principal_count_expected(rp: RingParams) -> int:
    """Number of principal characters predicted by the classification table."""
    from .modarith import legendre

    p, n, k = rp.pp.p, rp.pp.n, rp.k
    if k == 0:
        return p ** (n - 2) * (p - 1) * (p - legendre(-rp.delta_prime, p)) if n >= 2 else 0
    if k < n:
        return 2 * (p ** (n - k) - p ** (n - k - 1))
    return 2


def C_order_expected(rp: RingParams) -> int:
    from .modarith import legendre

    p, n, k = rp.pp.p, rp.pp.n, rp.k
    if k == 0:
        return p ** (n - 1) * (p - legendre(-rp.delta_prime, p))
    if k < n:
        return 2 * p ** (n - k)
    return 2


def dimension_expected(rp: RingParams) -> int:
    from .modarith import legendre

    p, n, k = rp.pp.p, rp.pp.n, rp.k
    if k == 0:
        return p**n + legendre(-rp.delta_prime, p) * p ** (n - 1)
    return p ** (n - 2) * (p * p - 1) // 2

