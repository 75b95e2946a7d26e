"""Exact arithmetic in Z/p^n Z and the complex scalars used by the representations."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class NonUnit(ArithmeticError):
    """Raised when inverting a residue divisible by p."""


class InvalidParams(ValueError):
    """Raised when representation parameters violate their constraints."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def is_squarefree(m: int) -> bool:
    m = abs(m)
    if m == 0:
        return False
    f = 2
    while f * f <= m:
        if m % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    """The modulus p^n, with p an odd prime."""

    p: int
    n: int

    def __post_init__(self):
        if not (self.p > 2 and is_prime(self.p)):
            raise InvalidParams(f"p must be an odd prime, got {self.p}")
        if self.n < 1:
            raise InvalidParams(f"n must be >= 1, got {self.n}")

    @property
    def modulus(self) -> int:
        return self.p**self.n

    def lower(self, steps: int = 1) -> "PrimePower":
        return PrimePower(self.p, self.n - steps)

    def __str__(self):
        return f"{self.p}^{self.n}"


@dataclass(frozen=True)
class ModInt:
    value: int
    pp: PrimePower

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.pp.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ModInt):
            if other.pp != self.pp:
                raise ValueError("moduli differ")
            return other.value
        return int(other)

    def __add__(self, other):
        return ModInt(self.value + self._coerce(other), self.pp)

    __radd__ = __add__

    def __sub__(self, other):
        return ModInt(self.value - self._coerce(other), self.pp)

    def __rsub__(self, other):
        return ModInt(self._coerce(other) - self.value, self.pp)

    def __mul__(self, other):
        return ModInt(self.value * self._coerce(other), self.pp)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.pp)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.pp == other.pp and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.pp.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.pp))

    def __int__(self):
        return self.value

    def is_unit(self) -> bool:
        return self.value % self.pp.p != 0

    def inverse(self) -> "ModInt":
        return mod_inv(self)


def inv_mod(a: int, m: int, p: int | None = None) -> int:
    """Inverse of ``a`` modulo ``m``; ``p`` is only used for the error message."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NonUnit(f"{a} is not a unit modulo {m}" + (f" (p={p})" if p else "")) from None


def mod_inv(a: ModInt) -> ModInt:
    return ModInt(inv_mod(a.value, a.pp.modulus, a.pp.p), a.pp)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def root_of_unity(sigma: int, pp: PrimePower | int) -> complex:
    """exp(2 pi i sigma / p^n)."""
    m = pp.modulus if isinstance(pp, PrimePower) else int(pp)
    s = sigma % m
    if s == 0:
        return 1.0 + 0.0j
    return cmath.exp(2j * math.pi * s / m)


def canonical_delta_primes(p: int) -> tuple[int, int]:
    """Return (Delta'_1, Delta'_2): the smallest squarefree positive integers prime to p
    with (-Delta'_1/p) = -1 and (-Delta'_2/p) = +1.

    For p = 3 this is (1, 2).
    """
    found: dict[int, int] = {}
    d = 1
    while len(found) < 2:
        if d % p and is_squarefree(d):
            found.setdefault(legendre(-d, p), d)
        d += 1
    return found[-1], found[1]


def canonical_sigmas(p: int) -> tuple[int, int]:
    """Return (sigma_1, sigma_2) with (sigma_1/p) = 1 and (sigma_2/p) = -1, both minimal."""
    nonres = next(s for s in range(2, p) if legendre(s, p) == -1)
    return 1, nonres


# "-1^n" in the k-even case.  The default reads it as (-1/p)^n, which is the only
# reading that satisfies the group relations at every level; "power" is (-1)^n
# (agrees when p = 3 mod 4) and "literal" is -(1^n) = -1.
EVEN_SIGN_READINGS = ("legendre", "power", "literal")


def even_case_phase(n: int, reading: str = "legendre", p: int | None = None) -> complex:
    if reading == "legendre":
        if p is None:
            raise ValueError("the legendre reading needs p")
        return complex(legendre(-1, p) ** n)
    if reading == "power":
        return complex((-1) ** n)
    if reading == "literal":
        return -1.0 + 0.0j
    raise ValueError(f"unknown reading {reading!r}; expected one of {EVEN_SIGN_READINGS}")


def action_constant(k: int, delta_prime: int, sigma: int, pp: PrimePower, even_sign: str = "legendre") -> complex:
    """Normalising constant c of the Weyl-element action.

    |c| = p^(-n + k/2); the phase is (Delta'/p)^(n-k) (sigma/p)^k e with
    e = 1 or -i for odd k (by (-1/p)) and e = (-1/p)^n for even k.
    """
    p, n = pp.p, pp.n
    if not 0 <= k <= n:
        raise InvalidParams(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    if delta_prime % p == 0 or not is_squarefree(delta_prime):
        raise InvalidParams(f"Delta' must be squarefree and prime to p, got {delta_prime}")
    if sigma % p == 0:
        raise InvalidParams(f"sigma must be prime to p, got {sigma}")
    if k % 2:
        e = 1.0 + 0.0j if legendre(-1, p) == 1 else -1j
    else:
        e = even_case_phase(n, even_sign, p)
    mag = float(p) ** (-n + k / 2)
    return mag * legendre(delta_prime, p) ** (n - k) * legendre(sigma, p) ** k * e
