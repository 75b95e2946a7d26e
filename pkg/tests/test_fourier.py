import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sl2pn.fourier import (FourierCoefficients, GroupFunction, IncompleteInventory, delta_set_transform,
                           fourier_transform, inverse_fourier, plancherel_residual)
from sl2pn.group import SL2Group, standard_generators
from sl2pn.modarith import PrimePower
from sl2pn.reps import inventory

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_inversion_round_trip(G9, full9, seed):
    f = GroupFunction.random(G9, np.random.default_rng(seed))
    back = inverse_fourier(fourier_transform(f, full9), full9, G9)
    assert np.abs(back.values - f.values).max() < 1e-9


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_plancherel(G9, full9, seed):
    f = GroupFunction.random(G9, np.random.default_rng(seed))
    assert plancherel_residual(f, fourier_transform(f, full9), full9) < 1e-8


def test_fast_agrees_with_naive(G9, full9):
    f = GroupFunction.random(G9, np.random.default_rng(4))
    assert fourier_transform(f, full9, "fast") - fourier_transform(f, full9, "naive") < 1e-10


def test_fast_agrees_with_naive_level_25():
    pp = PrimePower(5, 2)
    G = SL2Group(pp)
    reps = [r for r in inventory(pp) if r.label.chi in (1, -1)][:6]
    f = GroupFunction.random(G, np.random.default_rng(0))
    assert fourier_transform(f, reps, "fast") - fourier_transform(f, reps, "naive") < 1e-8


def test_convolution_theorem(G9, full9):
    rng = np.random.default_rng(2)
    f = GroupFunction(G9, np.where(rng.random(G9.order) < 0.05, rng.standard_normal(G9.order), 0))
    h = GroupFunction.random(G9, rng)
    F, H, FH = (fourier_transform(x, full9) for x in (f, h, f.convolve(h)))
    assert max(np.abs(c - a @ b).max() for a, b, c in zip(F.matrices, H.matrices, FH.matrices)) < 1e-9


@given(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
@settings(max_examples=10, deadline=None)
def test_linearity(G9, nonquotient9, z):
    rng = np.random.default_rng(0)
    f, h = GroupFunction.random(G9, rng), GroupFunction.random(G9, rng)
    lhs = fourier_transform(GroupFunction(G9, z * f.values + h.values), nonquotient9)
    F, H = fourier_transform(f, nonquotient9), fourier_transform(h, nonquotient9)
    rhs = FourierCoefficients(F.labels, [z * a + b for a, b in zip(F.matrices, H.matrices)])
    assert lhs - rhs < 1e-9 * (1 + abs(z))


def test_delta_transform_is_the_identity(G9, full9):
    F = fourier_transform(GroupFunction.delta(G9), full9)
    assert all(np.allclose(m, np.eye(m.shape[0])) for m in F.matrices)


def test_delta_set_transform_matches_indicator(G9, full9):
    S = standard_generators("G1", G9.pp)
    A = delta_set_transform(S, full9)
    B = fourier_transform(GroupFunction.indicator(G9, S), full9)
    assert A - B < 1e-10
    N = delta_set_transform(S, full9, normalized=True)
    assert np.allclose(N[0] * 4, A[0])


def test_incomplete_inventory_is_refused(G9, nonquotient9):
    f = GroupFunction.random(G9, np.random.default_rng(0))
    F = fourier_transform(f, nonquotient9)
    with pytest.raises(IncompleteInventory):
        inverse_fourier(F, nonquotient9, G9)
    with pytest.raises(IncompleteInventory):
        plancherel_residual(f, F, nonquotient9)


def test_json_round_trip(G9, nonquotient9):
    F = fourier_transform(GroupFunction.random(G9, np.random.default_rng(1)), nonquotient9[:4])
    G = FourierCoefficients.from_dict(json.loads(F.to_json()))
    assert G.labels == F.labels
    assert F - G == 0
    assert np.array_equal(G["R0(1,1,1)"], F[0])


def test_pushforward_preserves_mass(G9):
    f = GroupFunction.random(G9, np.random.default_rng(3))
    small = SL2Group(PrimePower(3, 1))
    g = f.pushforward(small)
    assert np.isclose(g.values.sum(), f.values.sum())


def test_bad_inputs():
    G = SL2Group(PrimePower(3, 1))
    with pytest.raises(ValueError):
        GroupFunction(G, np.zeros(5))
    with pytest.raises(ValueError):
        fourier_transform(GroupFunction.delta(G), [], method="slow")
    with pytest.raises(ValueError):
        delta_set_transform([], [])
