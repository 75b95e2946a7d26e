"""Irreducible representations of a small finite group from its multiplication table.

The character table comes from Dixon's variant of Burnside's method: the class
structure constants define commuting matrices whose common eigenvectors are
the central characters.  Each irreducible is then cut out of the regular
representation with its central idempotent, and one copy is isolated inside
the isotypic block by diagonalising a random Hermitian element of the
commutant (right multiplications).

This supplies the quotient representations of SL_2(Z/p^n), i.e. those pulled
back from SL_2(Z/p^(n-1)).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .group import BadModulus, SL2Elem, SL2Group, TooLarge, project
from .modarith import PrimePower
from .reps import RepLabel, Representation, inventory

log = logging.getLogger(__name__)

MAX_ORDER = 2000
MAX_RETRIES = 5


class NumericalFailure(RuntimeError):
    """Eigenspace splitting degenerated (a random choice was unlucky)."""


@dataclass
class GroupTable:
    """A finite group given by index-based tables; element 0 need not be the identity."""

    mult: np.ndarray  # mult[i, j] = index of g_i g_j
    inverse: np.ndarray
    identity: int
    classes: list[np.ndarray] = field(default_factory=list)

    def __post_init__(self):
        self.mult = np.asarray(self.mult, dtype=np.int64)
        self.inverse = np.asarray(self.inverse, dtype=np.int64)
        if not self.classes:
            self.classes = _classes_from_table(self.mult, self.inverse, self.identity)

    @property
    def order(self) -> int:
        return self.mult.shape[0]

    @property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for r, members in enumerate(self.classes):
            out[members] = r
        return out

    def check(self, samples: int = 200, seed: int = 0) -> bool:
        """Spot-check associativity and the identity/inverse tables."""
        n = self.order
        e = self.identity
        idx = np.arange(n)
        if not (np.array_equal(self.mult[e], idx) and np.array_equal(self.mult[:, e], idx)):
            return False
        if not np.all(self.mult[idx, self.inverse] == e):
            return False
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        return bool(np.all(self.mult[self.mult[a, b], c] == self.mult[a, self.mult[b, c]]))

    @classmethod
    def cyclic(cls, m: int) -> "GroupTable":
        i = np.arange(m)
        return cls((i[:, None] + i[None, :]) % m, (-i) % m, 0)

    @classmethod
    def from_sl2(cls, G: SL2Group | PrimePower) -> "GroupTable":
        if isinstance(G, PrimePower):
            G = SL2Group(G)
        if G.order > MAX_ORDER:
            raise TooLarge(f"|G| = {G.order} exceeds {MAX_ORDER}")
        classes = [c.members for c in G.conjugacy_classes]
        return cls(G.multiplication_table(), G.inverse_perm, G.identity_index, classes)


def _classes_from_table(mult, inverse, identity) -> list[np.ndarray]:
    n = mult.shape[0]
    seen = np.zeros(n, dtype=bool)
    classes = [np.array([identity])]
    seen[identity] = True
    g = np.arange(n)
    for x in range(n):
        if seen[x]:
            continue
        members = np.unique(mult[mult[g, x], inverse[g]])
        seen[members] = True
        classes.append(members)
    return classes


def structure_constants(gt: GroupTable) -> np.ndarray:
    """A[r, s, t] = #{x in C_r : x^-1 z_t in C_s} for a fixed z_t in C_t."""
    h = len(gt.classes)
    cls = gt.class_of
    reps = np.array([c[0] for c in gt.classes])
    A = np.zeros((h, h, h))
    for r, members in enumerate(gt.classes):
        # class of x^-1 z for every x in C_r and every class representative z
        y = gt.mult[gt.inverse[members][:, None], reps[None, :]]
        s_idx = cls[y]
        for t in range(h):
            A[r, :, t] = np.bincount(s_idx[:, t], minlength=h)
    return A


def character_table_dixon(gt: GroupTable, seed: int = 0) -> np.ndarray:
    """Return the (n_irreps, n_classes) character table of ``gt``.

    Rows are sorted by degree and then by the rounded character values, so the
    output is deterministic.  Retries with a fresh seed when the random
    combination of class matrices has a repeated eigenvalue.
    """
    sizes = np.array([len(c) for c in gt.classes], dtype=float)
    A = structure_constants(gt)
    h = len(sizes)
    for attempt in range(MAX_RETRIES):
        rng = np.random.default_rng(seed + attempt)
        M = np.tensordot(rng.standard_normal(h), A, axes=1)
        vals, vecs = np.linalg.eig(M)
        gaps = np.abs(vals[:, None] - vals[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 1e-6:
            log.debug("repeated eigenvalue in class-sum combination (attempt %d)", attempt)
            continue
        omega = vecs / vecs[0]  # central characters, normalised at the identity class
        deg2 = gt.order / np.sum(np.abs(omega) ** 2 / sizes[:, None], axis=0)
        deg = np.sqrt(deg2)
        chars = (omega * deg / sizes[:, None]).T
        if np.max(np.abs(deg - np.round(deg))) > 1e-6:
            continue
        key = [(round(d), *np.round(c.real, 6), *np.round(c.imag, 6)) for d, c in zip(deg, chars)]
        return chars[np.lexsort(np.array(key).T[::-1])]
    raise NumericalFailure("could not separate the central characters")


class TableRepresentation(Representation):
    """A representation stored as one matrix per group element."""

    def __init__(self, label: RepLabel, matrices: np.ndarray, pp: PrimePower | None = None,
                 group: SL2Group | None = None):
        self.label = label
        self.matrices = matrices
        self.dim = matrices.shape[1]
        self.pp = pp
        self.group = group

    def at(self, i: int) -> np.ndarray:
        return self.matrices[i]

    def evaluate(self, x) -> np.ndarray:
        if isinstance(x, SL2Elem):
            x = self.group.index_of(x)
        return self.matrices[x]


def _right_regular_element(gt: GroupTable, rng) -> np.ndarray:
    """Hermitian sum of right translations with random coefficients."""
    n = gt.order
    c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    R = np.zeros((n, n), dtype=complex)
    R[gt.mult, np.arange(n)[:, None]] = c[None, :]
    return R + R.conj().T


def _split_isotypic(gt: GroupTable, chi_elem: np.ndarray, d: int, H: np.ndarray, rng) -> np.ndarray:
    """Orthonormal basis (|G| x d) of one irreducible piece of the regular rep."""
    n = gt.order
    # Left-regular image of the central idempotent: P[i, j] = (d/|G|) conj chi(g_i g_j^-1)
    P = (d / n) * np.conj(chi_elem[gt.mult[:, gt.inverse]])
    X = rng.standard_normal((n, d * d)) + 1j * rng.standard_normal((n, d * d))
    Q, _ = np.linalg.qr(P @ X)
    if np.abs(P @ Q - Q).max() > 1e-8:
        raise NumericalFailure("random range finder missed part of the isotypic block")
    if d == 1:
        return Q
    # H commutes with every left translation, so on the block it acts as I_d (x) K
    ev, U = np.linalg.eigh(Q.conj().T @ H @ Q)
    if np.max(np.abs(ev[:d] - ev[0])) > 1e-7 or (ev[d] - ev[d - 1]) < 1e-6:
        raise NumericalFailure("commutant element failed to split the isotypic block")
    return Q @ U[:, :d]


def generic_irreps(gt: GroupTable, seed: int = 0, pp: PrimePower | None = None,
                   group: SL2Group | None = None) -> list[TableRepresentation]:
    """All irreducible representations of ``gt`` as unitary matrices, one per class."""
    if gt.order > MAX_ORDER:
        raise TooLarge(f"|G| = {gt.order} exceeds {MAX_ORDER}")
    table = character_table_dixon(gt, seed)
    cls = gt.class_of
    n = gt.order
    left = gt.mult  # left[g, x] = g x
    H = None
    out = []
    for i, row in enumerate(table):
        d = int(round(row[0].real))
        chi_elem = row[cls]
        for attempt in range(MAX_RETRIES):
            rng = np.random.default_rng([seed, i, attempt])
            if attempt or H is None:
                H = _right_regular_element(gt, rng)
            try:
                U = _split_isotypic(gt, chi_elem, d, H, rng)
                break
            except NumericalFailure as exc:
                log.debug("irrep %d attempt %d: %s", i, attempt, exc)
        else:
            raise NumericalFailure(f"could not isolate irreducible {i} of degree {d}")
        # rho(g) = U^H L(g) U with L(g) e_x = e_{gx}, i.e. (L(g) U)[y] = U[g^-1 y]
        mats = np.einsum("xa,gxb->gab", U.conj(), U[left[gt.inverse]], optimize=True)
        label = RepLabel("quotient", name=f"rho{i + 1}")
        out.append(TableRepresentation(label, mats, pp, group))
    return out


def sl2_irreps(pp: PrimePower, seed: int = 0) -> list[TableRepresentation]:
    """Baseline irreducibles of SL_2(Z/p^n) itself (small groups only)."""
    G = SL2Group(pp)
    return generic_irreps(GroupTable.from_sl2(G), seed=seed, pp=pp, group=G)


class LiftedRepresentation(Representation):
    """rho composed with the reduction map SL_2(Z/p^n) -> SL_2(Z/p^m), m < n."""

    def __init__(self, base: Representation, pp: PrimePower):
        self.base = base
        self.pp = pp
        self.dim = base.dim
        self.label = base.label

    def evaluate(self, x: SL2Elem) -> np.ndarray:
        return self.base.evaluate(project(x, self.base.pp))


def lift_quotient(rep: Representation, pp: PrimePower) -> LiftedRepresentation:
    src = rep.pp
    if src is None or src.p != pp.p or src.n >= pp.n:
        raise BadModulus(f"cannot lift a representation mod {src} to mod {pp}")
    return LiftedRepresentation(rep, pp)


def quotient_representations(pp: PrimePower, seed: int = 0) -> list[LiftedRepresentation]:
    return [lift_quotient(r, pp) for r in sl2_irreps(pp.lower(), seed)]


def complete_inventory(pp: PrimePower, seed: int = 0, **kw) -> list[Representation]:
    """Every irreducible of SL_2(Z/p^n) for n <= 2: non-quotient first, then lifted quotients."""
    if pp.n == 1:
        return list(sl2_irreps(pp, seed))
    return inventory(pp, **kw) + quotient_representations(pp, seed)


def dimension_budget(reps: Sequence[Representation]) -> int:
    return sum(r.dim**2 for r in reps)
