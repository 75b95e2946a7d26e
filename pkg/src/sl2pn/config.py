"""Run configuration shared by the command line and the experiment scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

from .group import GeneratingSet, random_generator_pair, standard_generators
from .modarith import InvalidParams, PrimePower

SCHEMA_VERSION = 1
FORMATS = ("csv", "json", "svg")


@dataclass(frozen=True)
class Tolerances:
    homomorphism: float = 1e-9
    orthogonality: float = 1e-8
    fourier: float = 1e-8
    wedderburn: float = 1e-6
    imaginary: float = 1e-8
    cluster: float = 1e-6

    def override(self, tol: float | None) -> "Tolerances":
        """Replace every tolerance by ``tol`` (used by ``--tol``)."""
        if tol is None:
            return self
        return Tolerances(*(tol,) * 6)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PNH_JOBS", "1")))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    p: int
    n: int
    command: str
    set_name: str = "G1"
    count: int = 100
    seed: int = 0
    out: str = "out"
    tol: float | None = None
    jobs: int = field(default_factory=default_jobs)
    formats: tuple[str, ...] = ("csv", "json", "svg")

    def __post_init__(self):
        PrimePower(self.p, self.n)  # raises InvalidParams
        if self.tol is not None and self.tol < 0:
            raise InvalidParams("tolerance must be non-negative")
        if self.jobs < 1:
            raise InvalidParams("--jobs must be at least 1")
        bad = [f for f in self.formats if f not in FORMATS]
        if bad:
            raise InvalidParams(f"unknown output formats {bad}; choose from {FORMATS}")

    @property
    def pp(self) -> PrimePower:
        return PrimePower(self.p, self.n)

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances().override(self.tol)

    def generating_set(self) -> GeneratingSet:
        """G1/G2/G3 by name, or ``random:SEED`` for a random symmetrised pair."""
        name = self.set_name
        if name.lower().startswith("random"):
            parts = name.split(":")
            seed = int(parts[1]) if len(parts) > 1 and parts[1] else self.seed
            return random_generator_pair(self.pp, seed)
        try:
            return standard_generators(name, self.pp)
        except ValueError as exc:
            raise InvalidParams(str(exc)) from None

    def with_(self, **kw) -> "RunConfig":
        return replace(self, **kw)
