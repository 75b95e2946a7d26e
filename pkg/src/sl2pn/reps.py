"""Weil-type representations R_k(Delta, sigma), their irreducible pieces, and inventories."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np
from scipy import sparse

from .group import SL2Elem, bruhat_decompose, identity
from .gring import (
    CCharacter,
    RingParams,
    build_C,
    character,
    induced_matrix,
    norm_idx,
    orbits_and_induced_basis,
)
from .modarith import (
    InvalidParams,
    PrimePower,
    action_constant,
    canonical_delta_primes,
    canonical_sigmas,
    inv_mod,
    legendre,
)

# Sign of the exponent in the Weyl action: zeta^(TR_SIGN * Tr(g * conj h)).
# -1 reproduces the displayed action; the homomorphism tests pin it.
TR_SIGN = -1


class NotPrincipal(ValueError):
    pass


class Unsupported(NotImplementedError):
    pass


@dataclass(frozen=True)
class RepLabel:
    """Parameters of an irreducible; ``delta_index``/``sigma_index`` are the Legendre classes (1 or 2)."""

    kind: str  # "nonquotient" | "quotient" | "trivial"
    k: int | None = None
    chi: int | tuple | None = None
    delta_index: int | None = None
    delta_prime: int | None = None
    sigma_index: int | None = None
    sigma: int | None = None
    name: str | None = None

    def short(self) -> str:
        if self.kind == "quotient":
            return self.name or "quotient"
        if self.kind == "trivial":
            return "trivial"
        return f"R{self.k}({self.chi},{self.delta_index},{self.sigma_index})"

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "k": self.k,
            "chi": list(self.chi) if isinstance(self.chi, tuple) else self.chi,
            "delta": self.delta_index,
            "delta_prime": self.delta_prime,
            "sigma": self.sigma_index,
            "sigma_value": self.sigma,
        }
        if self.name is not None:
            d["name"] = self.name
        return d


# --------------------------------------------------------------------------- the big space


class BigAction:
    """The action of d_a, u_b and w on C[G] defining R_k(Delta, sigma).

    T(d_a) e_g = (a/p)^k e_{g a^-1},  T(u_b) e_g = zeta^(b Nm g) e_g,
    T(w) e_g = c * sum_h zeta^(-Tr(g * conj h)) e_h.
    """

    def __init__(self, rp: RingParams, sigma: int, even_sign: str = "legendre", tr_sign: int = TR_SIGN):
        if sigma % rp.pp.p == 0:
            raise InvalidParams(f"sigma must be prime to p, got {sigma}")
        self.rp = rp
        self.sigma = sigma
        self.tr_sign = tr_sign
        self.c = action_constant(rp.k, rp.delta_prime, sigma, rp.pp, even_sign)
        self.nm = norm_idx(rp, np.arange(rp.size))

    @property
    def size(self) -> int:
        return self.rp.size

    def eps(self, a: int) -> int:
        return legendre(a, self.rp.pp.p) ** self.rp.k

    def scale_index(self, a: int) -> np.ndarray:
        """Ring index of a*g for every g."""
        g1, g2 = self.rp.all_pairs
        return self.rp.index(a * g1, a * g2)

    def d_perm(self, a: int) -> np.ndarray:
        """T(d_a) e_g = eps(a) e_{perm[g]}."""
        return self.scale_index(inv_mod(a, self.rp.N, self.rp.pp.p))

    def u_diag(self, b: int) -> np.ndarray:
        return np.exp(2j * np.pi * ((self.sigma * b * self.nm) % self.rp.N) / self.rp.N)

    def w_apply(self, X: np.ndarray) -> np.ndarray:
        """T(w) X for a (|G|, m) block of coefficient vectors, via a 2-D FFT."""
        rp = self.rp
        X = np.asarray(X, dtype=complex)
        squeeze = X.ndim == 1
        if squeeze:
            X = X[:, None]
        Y = np.fft.fft2(X.reshape(rp.N, rp.M2, -1), axes=(0, 1))
        h1, h2 = rp.all_pairs
        s = -self.tr_sign
        out = Y[(s * 2 * self.sigma * h1) % rp.N, (s * 2 * self.sigma * rp.delta_prime * h2) % rp.M2]
        out = self.c * out
        return out[:, 0] if squeeze else out

    # dense forms for small spaces and tests
    def d_dense(self, a: int) -> np.ndarray:
        M = np.zeros((self.size, self.size), dtype=complex)
        M[self.d_perm(a), np.arange(self.size)] = self.eps(a)
        return M

    def u_dense(self, b: int) -> np.ndarray:
        return np.diag(self.u_diag(b))

    def w_dense(self) -> np.ndarray:
        if self.size > 4096:
            raise MemoryError("dense Weyl matrix limited to |G| <= 4096")
        return self.w_apply(np.eye(self.size))

    def evaluate_dense(self, x: SL2Elem) -> np.ndarray:
        out = np.eye(self.size, dtype=complex)
        for kind, arg in bruhat_decompose(x).factors:
            if kind == "u":
                out = out * self.u_diag(arg)[None, :]
            elif kind == "d":
                out = out @ self.d_dense(arg)
            else:
                out = out @ self.w_dense()
        return out


def big_action(rp: RingParams, sigma: int, **kw) -> BigAction:
    return BigAction(rp, sigma, **kw)


# --------------------------------------------------------------------------- representations


class Representation:
    """A matrix representation of SL_2(Z/p^n) given by a label, a dimension and an evaluator."""

    label: RepLabel
    dim: int
    pp: PrimePower

    def evaluate(self, x: SL2Elem) -> np.ndarray:
        raise NotImplementedError

    def character(self, x: SL2Elem) -> complex:
        return complex(np.trace(self.evaluate(x)))

    def __repr__(self):
        return f"<{type(self).__name__} {self.label.short()} dim={self.dim} mod {self.pp.modulus}>"


class WeilRepresentation(Representation):
    """Restriction of a BigAction to the span of orthonormal columns ``basis``.

    ``nm[i]`` is the common norm value on the support of column i, so every
    u_b acts diagonally.  Generator images are cached; arbitrary elements are
    multiplied out along their Bruhat factors and memoised.
    """

    def __init__(self, label: RepLabel, action: BigAction, basis, nm: np.ndarray):
        self.label = label
        self.action = action
        self.pp = action.rp.pp
        self.basis = sparse.csc_matrix(basis) if not sparse.issparse(basis) else basis.tocsc()
        self.dim = self.basis.shape[1]
        self.nm = np.asarray(nm, dtype=np.int64) % self.pp.modulus
        self._cache: dict[tuple, np.ndarray] = {}
        self._lock = threading.Lock()
        self._d = lru_cache(maxsize=512)(self._d_uncached)

    @cached_property
    def w(self) -> np.ndarray:
        V = self.basis.toarray()
        return self.basis.conj().T @ self.action.w_apply(V)

    def u_diag(self, b: int) -> np.ndarray:
        N = self.pp.modulus
        return np.exp(2j * np.pi * ((self.action.sigma * b * self.nm) % N) / N)

    def _d_uncached(self, a: int) -> np.ndarray:
        a %= self.pp.modulus
        # (T(d_a) V)[x] = eps * V[x * a]
        PV = self.basis[self.action.scale_index(a), :] * self.action.eps(a)
        return np.asarray((self.basis.conj().T @ PV).todense())

    def d(self, a: int) -> np.ndarray:
        return self._d(int(a) % self.pp.modulus)

    def u(self, b: int) -> np.ndarray:
        return np.diag(self.u_diag(b))

    def generator_image(self, kind: str, arg=None) -> np.ndarray:
        if kind == "u":
            return self.u(arg)
        if kind == "d":
            return self.d(arg)
        return self.w

    def evaluate(self, x: SL2Elem) -> np.ndarray:
        key = x.entries
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = np.eye(self.dim, dtype=complex)
        for kind, arg in bruhat_decompose(x).factors:
            if kind == "u":
                out = out * self.u_diag(arg)[None, :]
            elif kind == "d":
                out = out @ self.d(arg)
            else:
                out = out @ self.w
        with self._lock:
            if len(self._cache) < 200_000:
                self._cache[key] = out
        return out


class TrivialRepresentation(Representation):
    def __init__(self, pp: PrimePower, label: RepLabel | None = None):
        self.pp = pp
        self.dim = 1
        self.label = label or RepLabel("trivial")

    def evaluate(self, x: SL2Elem) -> np.ndarray:
        return np.ones((1, 1), dtype=complex)


# --------------------------------------------------------------------------- k < n


def restrict(action: BigAction, chi: CCharacter, label: RepLabel | None = None) -> WeilRepresentation:
    """The irreducible piece of R_k(Delta, sigma) on Ind(V_chi), in the normalised f_i basis."""
    rp = action.rp
    if rp.k >= rp.pp.n:
        raise Unsupported("use k_equals_n_split for k = n")
    if not chi.is_principal:
        raise NotPrincipal(f"character {chi.label} is not principal")
    vecs = orbits_and_induced_basis(chi)
    V = induced_matrix(vecs, rp.size)
    nm = action.nm[[f.rep for f in vecs]]
    if label is None:
        label = RepLabel("nonquotient", rp.k, chi.label, None, rp.delta_prime, None, action.sigma)
    return WeilRepresentation(label, action, V, nm)


def build_nonquotient(pp: PrimePower, k: int, ell, delta_prime: int, sigma: int, label: RepLabel | None = None,
                      **kw) -> WeilRepresentation:
    rp = RingParams(pp, k, delta_prime)
    C = build_C(rp)
    return restrict(BigAction(rp, sigma, **kw), character(C, ell), label)


# --------------------------------------------------------------------------- k = n


def _orthonormal_by_norm(cands: list[tuple[int, np.ndarray]], size: int, tol=1e-9):
    """Orthonormalise candidate vectors group-wise by their norm value, dropping dependent ones."""
    groups: dict[int, list[np.ndarray]] = {}
    for nmv, v in cands:
        groups.setdefault(nmv, []).append(v)
    cols, nms = [], []
    for nmv in sorted(groups):
        A = np.array(groups[nmv]).T
        U, s, _ = np.linalg.svd(A, full_matrices=False)
        r = int(np.sum(s > tol * max(s.max(), 1.0)))
        cols.append(U[:, :r])
        nms.extend([nmv] * r)
    return np.hstack(cols), np.array(nms, dtype=np.int64)


def k_equals_n_split(sigma: int, pp: PrimePower, **kw) -> list[Representation]:
    """Irreducible pieces of R_n(sigma) on C[Z/p^n] that do not come from R_{n-2}(sigma).

    n = 2: [trivial, R'_2(chi_1, sigma), R_2(chi_-1, sigma)].
    n = 3: [R_3(chi_1, sigma)_1, R_3(chi_-1, sigma)_1].
    Each piece is spanned by unit orbits {x, -x} (symmetric or antisymmetric) and by
    the non-constant Fourier modes along the fibres py + p^(n-1) Z/p.
    """
    p, n = pp.p, pp.n
    if n not in (2, 3):
        raise Unsupported("the k = n split is implemented for n = 2 and n = 3 only")
    rp = RingParams(pp, n, 1)
    action = BigAction(rp, sigma, **kw)
    N = pp.modulus
    zeta_p = np.exp(2j * np.pi * np.arange(p) / p)
    s1, s2 = canonical_sigmas(p)
    sig_idx = 1 if legendre(sigma, p) == 1 else 2

    out: list[Representation] = []
    if n == 2:
        triv = np.zeros(N, dtype=complex)
        triv[np.arange(0, N, p)] = 1 / np.sqrt(p)
        out.append(WeilRepresentation(RepLabel("trivial", n, None, None, None, sig_idx, sigma), action,
                                      triv[:, None], [0]))
    for chi, sgn in ((1, 1), (-1, -1)):
        cands = []
        for x in range(1, (N - 1) // 2 + 1):
            if x % p:
                v = np.zeros(N, dtype=complex)
                v[x] += 1
                v[(-x) % N] += sgn
                cands.append((x * x % N, v))
        for y in range(p ** (n - 2)):
            for kk in range(1, (p - 1) // 2 + 1):
                v = np.zeros(N, dtype=complex)
                for a in range(p):
                    pt = (p * y + a * p ** (n - 1)) % N
                    v[pt] += zeta_p[kk * a % p]
                    v[(-pt) % N] += sgn * zeta_p[kk * a % p]
                cands.append(((p * y) ** 2 % N, v))
        V, nm = _orthonormal_by_norm(cands, N)
        label = RepLabel("nonquotient", n, chi, 1, 1, sig_idx, sigma)
        out.append(WeilRepresentation(label, action, V, nm))
    return out


# --------------------------------------------------------------------------- inventory


def nonquotient_parameters(p: int) -> list[dict]:
    """Parameter list of the inequivalent non-quotient irreducibles of SL_2(Z/p^2), in plot order.

    Delta class 1 has (-Delta'/p) = -1 and Delta class 2 has (-Delta'/p) = +1;
    sigma class 1 is a residue and class 2 a non-residue.
    """
    d1, d2 = canonical_delta_primes(p)
    s1, s2 = canonical_sigmas(p)
    out = []
    for di, dp, top in ((1, d1, p * (p + 1) // 2), (2, d2, p * (p - 1) // 2)):
        for ell in range(1, top):
            if ell % p:
                out.append(dict(k=0, chi=ell, delta_index=di, delta_prime=dp, sigma_index=1, sigma=s1))
    for si, s in ((1, s1), (2, s2)):
        for di, dp in ((1, d1), (2, d2)):
            for ell in range(1, p):
                out.append(dict(k=1, chi=ell, delta_index=di, delta_prime=dp, sigma_index=si, sigma=s))
    for si, s in ((1, s1), (2, s2)):
        for chi in (1, -1):
            out.append(dict(k=2, chi=chi, delta_index=1, delta_prime=1, sigma_index=si, sigma=s))
    return out


def inventory(pp: PrimePower, **kw) -> list[Representation]:
    """One representative per class of non-quotient irreducibles of SL_2(Z/p^2)."""
    if pp.n != 2:
        raise Unsupported("the complete inventory is available for n = 2")
    p = pp.p
    out: list[Representation] = []
    splits: dict[int, dict[int, Representation]] = {}
    Cs: dict[tuple[int, int], object] = {}
    for prm in nonquotient_parameters(p):
        label = RepLabel("nonquotient", prm["k"], prm["chi"], prm["delta_index"], prm["delta_prime"],
                         prm["sigma_index"], prm["sigma"])
        if prm["k"] == 2:
            if prm["sigma"] not in splits:
                pieces = k_equals_n_split(prm["sigma"], pp, **kw)
                splits[prm["sigma"]] = {r.label.chi: r for r in pieces if r.label.kind == "nonquotient"}
            rep = splits[prm["sigma"]][prm["chi"]]
            rep.label = label
            out.append(rep)
            continue
        rp = RingParams(pp, prm["k"], prm["delta_prime"])
        if (rp.k, rp.delta_prime) not in Cs:
            Cs[rp.k, rp.delta_prime] = build_C(rp)
        chi = character(Cs[rp.k, rp.delta_prime], prm["chi"])
        out.append(restrict(BigAction(rp, prm["sigma"], **kw), chi, label))
    return out


def partial_inventory_n3(pp: PrimePower, chis: Sequence[int] = (1, 2), delta_primes: Sequence[int] = (1,),
                         sigmas: Sequence[int] = (1,), include_top: bool = False, **kw) -> list[Representation]:
    """Some non-quotient pieces of SL_2(Z/p^3).

    By default: the k = 1, 2 spaces with Delta' = sigma = 1 and character labels ``chis``.
    ``include_top`` adds the two new irreducibles of each R_3(sigma).
    """
    if pp.n != 3:
        raise Unsupported("partial inventory is for n = 3")
    p = pp.p
    out: list[Representation] = []
    for k in (1, 2):
        for dp in delta_primes:
            rp = RingParams(pp, k, dp)
            C = build_C(rp)
            if not C.is_cyclic:
                raise Unsupported(f"C is not cyclic for k={k}, Delta'={dp} at {pp}; integer labels are ambiguous")
            d_idx = 1 if legendre(-dp, p) == -1 else 2
            for s in sigmas:
                s_idx = 1 if legendre(s, p) == 1 else 2
                for ell in chis:
                    label = RepLabel("nonquotient", k, ell, d_idx, dp, s_idx, s)
                    out.append(restrict(BigAction(rp, s, **kw), character(C, ell), label))
    if include_top:
        for s in sigmas:
            out.extend(k_equals_n_split(s, pp, **kw))
    return out


def wide_inventory_n3(pp: PrimePower, **kw) -> list[Representation]:
    """A wider n = 3 family: k = 1, 2, 3, both Legendre classes of Delta' and sigma,
    character labels 1 and 2."""
    return partial_inventory_n3(pp, (1, 2), canonical_delta_primes(pp.p), canonical_sigmas(pp.p),
                                include_top=True, **kw)


# --------------------------------------------------------------------------- character tables


@dataclass
class CharacterTable:
    classes: list  # ConjugacyClass
    labels: list[RepLabel]
    values: np.ndarray  # (n_classes, n_reps)

    @property
    def dims(self) -> np.ndarray:
        return self.values[0].real.round().astype(int)

    def inner_products(self) -> np.ndarray:
        sizes = np.array([c.size for c in self.classes], dtype=float)
        order = sizes.sum()
        X = self.values
        return (X.conj().T * sizes) @ X / order


def character_table(reps: Sequence[Representation], classes) -> CharacterTable:
    vals = np.array([[r.character(c.representative) for r in reps] for c in classes])
    return CharacterTable(list(classes), [r.label for r in reps], vals)
