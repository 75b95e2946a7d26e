"""SL_2(Z/p^n Z): elements, enumeration, Bruhat factors, conjugacy classes, generating sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .modarith import InvalidParams, PrimePower, inv_mod

MAX_ENUMERATION = 10**8


class TooLarge(RuntimeError):
    """Raised when a group is too big to enumerate in memory."""


class BadModulus(ValueError):
    pass


@dataclass(frozen=True)
class SL2Elem:
    """A 2x2 matrix [[a, b], [c, d]] over Z/p^n Z of determinant one."""

    a: int
    b: int
    c: int
    d: int
    pp: PrimePower = field(compare=True, repr=False)

    def __post_init__(self):
        N = self.pp.modulus
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % N)
        if (self.a * self.d - self.b * self.c) % N != 1:
            raise InvalidParams(f"determinant of {self.entries} is not 1 mod {N}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], pp: PrimePower) -> "SL2Elem":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, pp)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def modulus(self) -> int:
        return self.pp.modulus

    def __mul__(self, other: "SL2Elem") -> "SL2Elem":
        if other.pp != self.pp:
            raise BadModulus("elements live over different rings")
        return SL2Elem(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.pp,
        )

    __matmul__ = __mul__

    def inv(self) -> "SL2Elem":
        return SL2Elem(self.d, -self.b, -self.c, self.a, self.pp)

    def trace(self) -> int:
        return (self.a + self.d) % self.modulus

    def tolist(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mul(x: SL2Elem, y: SL2Elem) -> SL2Elem:
    return x * y


def inv(x: SL2Elem) -> SL2Elem:
    return x.inv()


def identity(pp: PrimePower) -> SL2Elem:
    return SL2Elem(1, 0, 0, 1, pp)


def d_elem(a: int, pp: PrimePower) -> SL2Elem:
    return SL2Elem(a, 0, 0, inv_mod(a, pp.modulus, pp.p), pp)


def u_elem(b: int, pp: PrimePower) -> SL2Elem:
    return SL2Elem(1, b, 0, 1, pp)


def w_elem(pp: PrimePower) -> SL2Elem:
    return SL2Elem(0, -1, 1, 0, pp)


def group_order(pp: PrimePower) -> int:
    """|SL_2(Z/p^n)| counted cell by cell from the Bruhat decomposition."""
    p, n = pp.p, pp.n
    q = p**n
    units = q - q // p
    return q * q * units + q * (q // p) * units


# --------------------------------------------------------------------------- Bruhat


@dataclass(frozen=True)
class BruhatFactors:
    """Ordered factors ('u', b), ('w', None), ('d', a) whose product is the source element."""

    case: str  # "gamma_unit" or "gamma_nonunit"
    factors: tuple[tuple[str, int | None], ...]
    pp: PrimePower

    def product(self) -> SL2Elem:
        out = identity(self.pp)
        for kind, arg in self.factors:
            if kind == "u":
                out = out * u_elem(arg, self.pp)
            elif kind == "d":
                out = out * d_elem(arg, self.pp)
            else:
                out = out * w_elem(self.pp)
        return out


def bruhat_decompose(x: SL2Elem) -> BruhatFactors:
    N, p = x.modulus, x.pp.p
    a, b, c, d = x.entries
    if c % p:
        ci = inv_mod(c, N)
        return BruhatFactors(
            "gamma_unit",
            (("u", a * ci % N), ("w", None), ("d", c), ("u", d * ci % N)),
            x.pp,
        )
    if a % p == 0:
        raise AssertionError(f"{x} has both a and c divisible by p")
    ai = inv_mod(a, N)
    return BruhatFactors(
        "gamma_nonunit",
        (("w", None), ("u", -c * ai % N), ("w", None), ("d", -a % N), ("u", b * ai % N)),
        x.pp,
    )


def project(x: SL2Elem, to: PrimePower) -> SL2Elem:
    """Reduce entries modulo a smaller power of the same prime."""
    if to.p != x.pp.p or to.n > x.pp.n:
        raise BadModulus(f"cannot reduce mod {x.pp} to mod {to}")
    return SL2Elem(*x.entries, pp=to)


# --------------------------------------------------------------------------- enumeration


def enumerate_array(pp: PrimePower) -> np.ndarray:
    """All elements as an (|G|, 4) int64 array of (a, b, c, d), sorted lexicographically."""
    order = group_order(pp)
    if order > MAX_ENUMERATION:
        raise TooLarge(f"|SL_2(Z/{pp.modulus})| = {order} exceeds {MAX_ENUMERATION}")
    N, p = pp.modulus, pp.p
    r = np.arange(N, dtype=np.int64)
    units = r[r % p != 0]
    inv_units = np.array([pow(int(u), -1, N) for u in units], dtype=np.int64)
    nonunits = r[r % p == 0]

    # c a unit: a, d free, b = (ad - 1)/c
    A, Ci, D = np.meshgrid(r, np.arange(len(units)), r, indexing="ij")
    C = units[Ci]
    B = (A * D - 1) % N * inv_units[Ci] % N
    cell1 = np.stack([A.ravel(), B.ravel(), C.ravel(), D.ravel()], axis=1)

    # c divisible by p, a a unit: b free, d = (1 + bc)/a
    Ai, B2, C2 = np.meshgrid(np.arange(len(units)), r, nonunits, indexing="ij")
    A2 = units[Ai]
    D2 = (1 + B2 * C2) % N * inv_units[Ai] % N
    cell2 = np.stack([A2.ravel(), B2.ravel(), C2.ravel(), D2.ravel()], axis=1)

    elems = np.concatenate([cell1, cell2])
    return elems[np.argsort(encode(elems, N), kind="stable")]


def encode(elems: np.ndarray, N: int) -> np.ndarray:
    elems = np.asarray(elems, dtype=np.int64)
    return ((elems[..., 0] * N + elems[..., 1]) * N + elems[..., 2]) * N + elems[..., 3]


def enumerate_elements(pp: PrimePower) -> Iterator[SL2Elem]:
    for row in enumerate_array(pp):
        yield SL2Elem(*map(int, row), pp=pp)


def matmul_arrays(x: np.ndarray, y: np.ndarray, N: int) -> np.ndarray:
    """Row-wise products of element arrays (broadcasting)."""
    a = (x[..., 0] * y[..., 0] + x[..., 1] * y[..., 2]) % N
    b = (x[..., 0] * y[..., 1] + x[..., 1] * y[..., 3]) % N
    c = (x[..., 2] * y[..., 0] + x[..., 3] * y[..., 2]) % N
    d = (x[..., 2] * y[..., 1] + x[..., 3] * y[..., 3]) % N
    return np.stack([a, b, c, d], axis=-1)


def inv_arrays(x: np.ndarray, N: int) -> np.ndarray:
    return np.stack([x[..., 3], -x[..., 1] % N, -x[..., 2] % N, x[..., 0]], axis=-1)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: SL2Elem
    size: int
    members: np.ndarray  # indices into SL2Group.elements


class SL2Group:
    """An enumerated copy of SL_2(Z/p^n Z) with index lookups."""

    def __init__(self, pp: PrimePower):
        self.pp = pp
        self.N = pp.modulus
        self.elements = enumerate_array(pp)
        self._codes = encode(self.elements, self.N)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def index_of(self, x) -> int | np.ndarray:
        if isinstance(x, SL2Elem):
            arr = np.array(x.entries, dtype=np.int64)
        else:
            arr = np.asarray(x, dtype=np.int64) % self.N
        codes = encode(arr, self.N)
        idx = np.searchsorted(self._codes, codes)
        if np.any(self._codes[np.minimum(idx, self.order - 1)] != codes):
            raise KeyError("not an element of the group")
        return int(idx) if np.ndim(idx) == 0 else idx

    def element(self, i: int) -> SL2Elem:
        return SL2Elem(*map(int, self.elements[i]), pp=self.pp)

    @cached_property
    def identity_index(self) -> int:
        return self.index_of(identity(self.pp))

    def left_mult_perm(self, g: SL2Elem) -> np.ndarray:
        """perm[i] = index of g * elements[i]."""
        arr = np.array(g.entries, dtype=np.int64)
        return self.index_of(matmul_arrays(arr[None, :], self.elements, self.N))

    def right_mult_perm(self, g: SL2Elem) -> np.ndarray:
        """perm[i] = index of elements[i] * g."""
        arr = np.array(g.entries, dtype=np.int64)
        return self.index_of(matmul_arrays(self.elements, arr[None, :], self.N))

    @cached_property
    def inverse_perm(self) -> np.ndarray:
        return self.index_of(inv_arrays(self.elements, self.N))

    def multiplication_table(self) -> np.ndarray:
        if self.order > 5000:
            raise TooLarge("multiplication table limited to |G| <= 5000")
        prod = matmul_arrays(self.elements[:, None, :], self.elements[None, :, :], self.N)
        return self.index_of(prod)

    @cached_property
    def conjugacy_classes(self) -> list[ConjugacyClass]:
        return conjugacy_classes(self)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for i, cl in enumerate(self.conjugacy_classes):
            out[cl.members] = i
        return out


def conjugacy_classes(G: SL2Group | PrimePower) -> list[ConjugacyClass]:
    """Classes as orbits under conjugation by the generators u_1 and w.

    The identity class comes first; the rest are ordered by their lexicographically
    smallest member, which is also the chosen representative.
    """
    if isinstance(G, PrimePower):
        G = SL2Group(G)
    n = G.order
    rows, cols = [], []
    for g in (u_elem(1, G.pp), w_elem(G.pp)):
        ga = np.array(g.entries, dtype=np.int64)[None, :]
        gi = np.array(g.inv().entries, dtype=np.int64)[None, :]
        conj = G.index_of(matmul_arrays(matmul_arrays(ga, G.elements, G.N), gi, G.N))
        rows.append(np.arange(n))
        cols.append(conj)
    adj = coo_matrix((np.ones(2 * n), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
    _, labels = connected_components(adj, directed=True, connection="weak")
    # elements are sorted lexicographically, so the first index seen is the smallest member
    first = {}
    for i, lab in enumerate(labels):
        first.setdefault(lab, i)
    ident = G.identity_index
    order = sorted(first, key=lambda lab: (lab != labels[ident], first[lab]))
    classes = []
    for lab in order:
        members = np.flatnonzero(labels == lab)
        classes.append(ConjugacyClass(G.element(first[lab]), len(members), members))
    return classes


# --------------------------------------------------------------------------- generating sets


@dataclass(frozen=True)
class GeneratingSet:
    name: str
    elements: tuple[SL2Elem, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_symmetric(self) -> bool:
        s = set(self.elements)
        return all(x.inv() in s for x in self.elements)

    def reduce(self, pp: PrimePower) -> "GeneratingSet":
        return GeneratingSet(self.name, tuple(project(x, pp) for x in self.elements))


_STANDARD = {
    "G1": [((1, 1), (0, 1)), ((1, -1), (0, 1)), ((0, 1), (-1, 0)), ((0, -1), (1, 0))],
    "G2": [((1, 1), (-1, 0)), ((0, -1), (1, 1)), ((0, 1), (-1, 0)), ((0, -1), (1, 0))],
    "G3": [((1, 2), (0, 1)), ((1, -2), (0, 1)), ((1, 0), (-2, 1)), ((1, 0), (2, 1))],
}


def standard_generators(name: str, pp: PrimePower) -> GeneratingSet:
    try:
        rows = _STANDARD[name.upper()]
    except KeyError:
        raise ValueError(f"unknown generating set {name!r}; expected G1, G2 or G3") from None
    return GeneratingSet(name.upper(), tuple(SL2Elem.from_rows(r, pp) for r in rows))


def random_element(rng: np.random.Generator, pp: PrimePower) -> SL2Elem:
    """Uniform element by rejection sampling 4-tuples with determinant one."""
    N = pp.modulus
    while True:
        a, b, c, d = (int(v) for v in rng.integers(0, N, size=4))
        if (a * d - b * c) % N == 1:
            return SL2Elem(a, b, c, d, pp)


def random_generator_pair(pp: PrimePower, seed: int | np.random.Generator) -> GeneratingSet:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    s = random_element(rng, pp)
    t = random_element(rng, pp)
    return GeneratingSet("random", (s, s.inv(), t, t.inv()))
