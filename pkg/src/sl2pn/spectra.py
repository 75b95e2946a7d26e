"""Cayley and Schreier graph spectra of SL_2(Z/p^n) via Fourier transforms of generating sets.

The adjacency operator of the Cayley graph is block-diagonalised by the
irreducibles, so its spectrum is the union over eta of the spectra of
hat delta_S(eta), each repeated dim(eta) times.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import sparse

from .baseline import complete_inventory
from .fourier import delta_set_transform
from .group import GeneratingSet, SL2Group, TooLarge, random_generator_pair, standard_generators
from .modarith import PrimePower
from .reps import RepLabel, Representation, partial_inventory_n3

RAMANUJAN_4 = 2 * math.sqrt(3)
MAX_DIRECT = 5000


class NonRealSpectrum(ArithmeticError):
    """An eigenvalue had imaginary part above tolerance (asymmetric set or a construction bug)."""


def eigenvalues(m, tol: float = 1e-8) -> np.ndarray:
    """Real eigenvalues of ``m``, sorted descending."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.conj().T).max(initial=0.0) <= 1e-12 * scale:
        return np.sort(np.linalg.eigvalsh(m))[::-1]
    vals = np.linalg.eigvals(m)
    worst = float(np.abs(vals.imag).max(initial=0.0))
    if worst > tol:
        raise NonRealSpectrum(f"eigenvalue with imaginary part {worst:.3e} > {tol:g}")
    return np.sort(vals.real)[::-1]


@dataclass
class SpectrumReport:
    p: int
    n: int
    set_name: str
    labels: list[RepLabel]
    dims: list[int]
    spectra: list[np.ndarray]  # per representation, descending
    normalized: bool = False
    partial: bool = False
    degree: int = 4

    @property
    def union(self) -> np.ndarray:
        """All eigenvalues, each repeated dim(eta) times, descending."""
        if not self.spectra:
            return np.empty(0)
        return np.sort(np.concatenate([np.repeat(s, d) for s, d in zip(self.spectra, self.dims)]))[::-1]

    @property
    def leading(self) -> float:
        return float(max(s.max() for s in self.spectra))

    @property
    def lambda1(self) -> float:
        """Second largest eigenvalue; for partial reports, the largest value seen (a lower bound)."""
        u = self.union
        return float(u[0] if self.partial else u[1])

    @property
    def ramanujan(self) -> float:
        b = 2 * math.sqrt(self.degree - 1)
        return b / self.degree if self.normalized else b

    def argmax(self, kind: str | None = "nonquotient") -> int:
        """Index of the representation holding the largest eigenvalue (optionally among one kind)."""
        best, where = -np.inf, -1
        for i, (lab, s) in enumerate(zip(self.labels, self.spectra)):
            if kind is not None and lab.kind != kind:
                continue
            if s[0] > best:
                best, where = s[0], i
        return where

    def to_dict(self, tol: float = 1e-6) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "set": self.set_name,
            "normalized": self.normalized,
            "partial": self.partial,
            "lambda1": self.lambda1,
            "lambda1_is_lower_bound": self.partial,
            "leading": self.leading,
            "ramanujan": self.ramanujan,
            "representations": [
                {"index": i + 1, "label": lab.short(), "params": lab.to_dict(), "dim": d,
                 "eigenvalues": [float(x) for x in s]}
                for i, (lab, d, s) in enumerate(zip(self.labels, self.dims, self.spectra))
            ],
            "rows": report_rows(self, tol),
        }


def cayley_spectrum(s: GeneratingSet, reps: Sequence[Representation], normalized: bool = False,
                    partial: bool = False, jobs: int = 1) -> SpectrumReport:
    if not reps:
        raise ValueError("no representations supplied")
    pp = reps[0].pp
    coeffs = delta_set_transform(s, reps, normalized=normalized)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            spectra = list(ex.map(eigenvalues, coeffs.matrices))
    else:
        spectra = [eigenvalues(m) for m in coeffs.matrices]
    return SpectrumReport(pp.p, pp.n, getattr(s, "name", "S"), [r.label for r in reps], [r.dim for r in reps],
                          spectra, normalized, partial, degree=len(list(s)))


# --------------------------------------------------------------------------- direct oracle


def cayley_adjacency(s: GeneratingSet, group: SL2Group) -> sparse.csr_matrix:
    """A[x, y] = #{s in S : y = x s}."""
    n = group.order
    rows, cols = [], []
    for g in s:
        rows.append(np.arange(n))
        cols.append(group.right_mult_perm(g))
    data = np.ones(n * len(rows))
    return sparse.csr_matrix((data, (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))


def adjacency_spectrum(s: GeneratingSet, group: SL2Group) -> np.ndarray:
    if group.order > MAX_DIRECT:
        raise TooLarge(f"dense adjacency eigensolve limited to |G| <= {MAX_DIRECT}")
    A = cayley_adjacency(s, group).toarray()
    return np.sort(np.linalg.eigvalsh(A))[::-1]


def multiset_distance(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.sort(a), np.sort(b)
    if a.shape != b.shape:
        return math.inf
    return float(np.abs(a - b).max(initial=0.0))


def is_submultiset(small: np.ndarray, big: np.ndarray, tol: float = 1e-6) -> bool:
    """Greedy matching of sorted values; adequate when clusters are separated by more than tol."""
    big = list(np.sort(big))
    j = 0
    for x in np.sort(small):
        while j < len(big) and big[j] < x - tol:
            j += 1
        if j == len(big) or abs(big[j] - x) > tol:
            return False
        j += 1
    return True


# --------------------------------------------------------------------------- lambda_1 table


@dataclass
class Lambda1Entry:
    set_name: str
    p: int
    n: int
    value: float
    lower_bound: bool


def spectrum_for(pp: PrimePower, set_name: str, normalized: bool = False, jobs: int = 1,
                 reps: Sequence[Representation] | None = None) -> SpectrumReport:
    """Cayley spectrum of a named set: complete inventory for n <= 2, the k = 1, 2 partial family for n = 3."""
    partial = pp.n >= 3
    if reps is None:
        reps = partial_inventory_n3(pp) if partial else complete_inventory(pp)
    return cayley_spectrum(standard_generators(set_name, pp), reps, normalized, partial, jobs)


def lambda1_table(set_names: Sequence[str] = ("G1", "G2", "G3"), ps: Sequence[int] = (5,),
                  ns: Sequence[int] = (1, 2, 3), jobs: int = 1) -> list[Lambda1Entry]:
    out = []
    for p in ps:
        for n in ns:
            pp = PrimePower(p, n)
            reps = partial_inventory_n3(pp) if n >= 3 else complete_inventory(pp)
            for name in set_names:
                rep = spectrum_for(pp, name, jobs=jobs, reps=reps)
                out.append(Lambda1Entry(name, p, n, rep.lambda1, rep.partial))
    return out


# --------------------------------------------------------------------------- monochromatic values


@dataclass
class EigenCluster:
    value: float
    reps: tuple[int, ...]  # indices into the report's labels
    count: int  # occurrences across all per-rep spectra (without dim weighting)

    @property
    def monochromatic(self) -> bool:
        return len(self.reps) == 1


def monochromatic(report: SpectrumReport, tol: float = 1e-6) -> list[EigenCluster]:
    """Cluster all eigenvalues (single linkage at ``tol``) and record which reps each cluster meets."""
    vals = np.concatenate(report.spectra)
    owner = np.concatenate([np.full(len(s), i) for i, s in enumerate(report.spectra)])
    order = np.argsort(vals, kind="stable")[::-1]
    vals, owner = vals[order], owner[order]
    clusters: list[EigenCluster] = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i - 1] - vals[i] > tol:
            seg = slice(start, i)
            clusters.append(EigenCluster(float(vals[seg].mean()), tuple(sorted(set(owner[seg].tolist()))), i - start))
            start = i
    return clusters


def report_rows(report: SpectrumReport, tol: float = 1e-6) -> list[dict]:
    """One row per distinct eigenvalue of each representation (multiplicity within that rep)."""
    mono = monochromatic(report, tol)
    flag = {}
    for cl in mono:
        for r in cl.reps:
            flag.setdefault(r, []).append((cl.value, cl.monochromatic))
    rows = []
    for i, (lab, s) in enumerate(zip(report.labels, report.spectra)):
        j = 0
        while j < len(s):
            k = j
            while k + 1 < len(s) and s[k] - s[k + 1] <= tol:
                k += 1
            v = float(s[j:k + 1].mean())
            is_mono = min(flag.get(i, [(v, False)]), key=lambda t: abs(t[0] - v))[1]
            rows.append({
                "rep_index": i + 1,
                "k": lab.k,
                "chi": lab.chi if lab.kind != "quotient" else lab.name,
                "delta": lab.delta_index,
                "sigma": lab.sigma_index,
                "eigenvalue": round(v, 12),
                "multiplicity": k - j + 1,
                "monochromatic": bool(is_mono),
            })
            j = k + 1
    return rows


# --------------------------------------------------------------------------- Schreier graph on P^1


class ProjectiveLine:
    """P^1(Z/p^n): points (1, t) for t in Z/p^n, then (s, 1) for s in pZ/p^n.

    The coset gB is identified with the point through the first column of g.
    """

    def __init__(self, pp: PrimePower):
        self.pp = pp
        N, p = pp.modulus, pp.p
        self.N = N
        r = np.arange(N)
        inv = np.zeros(N, dtype=np.int64)
        units = r[r % p != 0]
        inv[units] = [pow(int(u), -1, N) for u in units]
        self._inv = inv
        top = np.stack([np.ones(N, dtype=np.int64), r], axis=1)
        low = np.stack([r[::p], np.ones(N // p, dtype=np.int64)], axis=1)
        self.points = np.concatenate([top, low])

    def __len__(self):
        return len(self.points)

    def index(self, x, y) -> np.ndarray:
        """Index of the point [x : y]; at least one coordinate must be a unit."""
        x = np.asarray(x, dtype=np.int64) % self.N
        y = np.asarray(y, dtype=np.int64) % self.N
        p = self.pp.p
        xu = x % p != 0
        if np.any(~xu & (y % p == 0)):
            raise ValueError("not a primitive vector")
        t = y * self._inv[x] % self.N
        s = x * self._inv[y] % self.N
        return np.where(xu, t, self.N + s // p)

    def act(self, g) -> np.ndarray:
        """perm[i] = index of g . point_i."""
        a, b, c, d = g.entries
        X, Y = self.points.T
        return self.index(a * X + b * Y, c * X + d * Y)


@dataclass
class SchreierGraph:
    line: ProjectiveLine
    adjacency: np.ndarray
    spectrum: np.ndarray  # descending
    set_name: str = "S"

    @property
    def size(self) -> int:
        return len(self.line)

    @property
    def lambda1(self) -> float:
        return float(self.spectrum[1])


def schreier_graph(s: GeneratingSet, pp: PrimePower) -> SchreierGraph:
    line = ProjectiveLine(pp)
    m = len(line)
    A = np.zeros((m, m))
    for g in s:
        np.add.at(A, (line.act(g), np.arange(m)), 1)
    if not np.allclose(A, A.T):
        raise NonRealSpectrum("Schreier adjacency is not symmetric; the generating set is not closed under inverses")
    return SchreierGraph(line, A, np.sort(np.linalg.eigvalsh(A))[::-1], getattr(s, "name", "S"))


# --------------------------------------------------------------------------- random sweep


@dataclass
class RandomSweep:
    p: int
    n: int
    seed: int
    values: list[float]  # un-normalised lambda_1 per pair
    degree: int = 4
    pairs: list = field(default_factory=list, repr=False)

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))

    @property
    def normalized(self) -> list[float]:
        return [v / self.degree for v in self.values]

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "seed": self.seed, "count": len(self.values),
                "values": self.values, "normalized": self.normalized, "mean": self.mean,
                "ramanujan": RAMANUJAN_4}


_LEVEL_GROUPS: dict = {}


def generates(s: GeneratingSet, pp: PrimePower) -> bool:
    """Whether ``s`` generates SL_2(Z/p^n).

    Surjectivity mod p lifts to every level when p >= 5, and surjectivity mod 9
    lifts when p = 3, so only that level is checked (by breadth-first closure).
    """
    level = PrimePower(pp.p, min(pp.n, 1 if pp.p >= 5 else 2))
    G = _LEVEL_GROUPS.get(level)
    if G is None:
        G = _LEVEL_GROUPS[level] = SL2Group(level)
    perms = [G.right_mult_perm(g) for g in s.reduce(level)]
    seen = np.zeros(G.order, dtype=bool)
    frontier = np.array([G.identity_index])
    seen[frontier] = True
    while frontier.size:
        nxt = np.unique(np.concatenate([perm[frontier] for perm in perms]))
        frontier = nxt[~seen[nxt]]
        seen[frontier] = True
    return bool(seen.all())


def random_pair_experiment(pp: PrimePower, count: int = 100, seed: int = 0,
                           require_generating: bool = True) -> RandomSweep:
    """lambda_1 of the Schreier graph on P^1 for ``count`` random symmetrised pairs {s, s^-1, t, t^-1}.

    Pairs that do not generate the group are redrawn unless ``require_generating`` is off.
    """
    rng = np.random.default_rng(seed)
    values, pairs = [], []
    while len(values) < count:
        S = random_generator_pair(pp, rng)
        if require_generating and not generates(S, pp):
            continue
        values.append(schreier_graph(S, pp).lambda1)
        pairs.append(tuple(x.entries for x in S.elements[::2]))
    return RandomSweep(pp.p, pp.n, seed, values, pairs=pairs)
