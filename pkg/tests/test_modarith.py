import pytest
from hypothesis import given, strategies as st

from sl2pn.modarith import (InvalidParams, ModInt, NonUnit, PrimePower, action_constant, canonical_delta_primes,
                            canonical_sigmas, inv_mod, is_prime, is_squarefree, legendre, root_of_unity)

ODD_PRIMES = [3, 5, 7, 11, 13]


def brute_legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_legendre_matches_square_enumeration(p):
    assert [legendre(a, p) for a in range(p)] == [brute_legendre(a, p) for a in range(p)]


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 3), st.integers(-500, 500))
def test_inverse_is_inverse(p, n, a):
    m = p**n
    if a % p == 0:
        with pytest.raises(NonUnit):
            inv_mod(a, m, p)
    else:
        assert a * inv_mod(a, m, p) % m == 1


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_modint_ring_laws(a, b, c):
    pp = PrimePower(5, 2)
    x, y, z = (ModInt(v, pp) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x
    assert int(-x) == (-a) % 25


def test_primepower_validation():
    for p, n in [(2, 1), (9, 2), (5, 0), (1, 1)]:
        with pytest.raises(InvalidParams):
            PrimePower(p, n)
    assert PrimePower(3, 2).modulus == 9
    assert PrimePower(5, 3).lower() == PrimePower(5, 2)


def test_is_prime_and_squarefree():
    assert [m for m in range(30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [m for m in range(1, 13) if not is_squarefree(m)] == [4, 8, 9, 12]


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_canonical_choices(p):
    d1, d2 = canonical_delta_primes(p)
    assert legendre(-d1, p) == -1 and legendre(-d2, p) == 1
    s1, s2 = canonical_sigmas(p)
    assert (legendre(s1, p), legendre(s2, p)) == (1, -1)


def test_canonical_choices_small_primes():
    assert canonical_delta_primes(3) == (1, 2)
    assert canonical_delta_primes(5) == (2, 1)
    assert canonical_sigmas(3) == (1, 2)


def test_root_of_unity():
    pp = PrimePower(3, 2)
    assert root_of_unity(0, pp) == 1
    assert abs(root_of_unity(3, pp) ** 3 - 1) < 1e-12
    assert abs(root_of_unity(9 + 2, pp) - root_of_unity(2, pp)) < 1e-15


@pytest.mark.parametrize("k", [0, 1, 2])
def test_action_constant_magnitude(k):
    pp = PrimePower(5, 2)
    c = action_constant(k, 1, 1, pp)
    assert abs(abs(c) - 5 ** (-2 + k / 2)) < 1e-15


def test_action_constant_rejects_bad_parameters():
    pp = PrimePower(3, 2)
    with pytest.raises(InvalidParams):
        action_constant(3, 1, 1, pp)
    with pytest.raises(InvalidParams):
        action_constant(0, 3, 1, pp)
    with pytest.raises(InvalidParams):
        action_constant(0, 1, 6, pp)
