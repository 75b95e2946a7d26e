from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alignment import align
from published_table import COLUMNS, TABLE
from sl2pn.gring import RingParams
from sl2pn.group import random_element, u_elem, w_elem
from sl2pn.modarith import PrimePower
from sl2pn.reps import (BigAction, Unsupported, build_nonquotient, character_table, inventory, k_equals_n_split,
                        nonquotient_parameters, partial_inventory_n3, wide_inventory_n3)

seeds = st.integers(0, 2**32 - 1)


def hom_error(rep, pp, seed):
    rng = np.random.default_rng(seed)
    a, b = random_element(rng, pp), random_element(rng, pp)
    return np.abs(rep.evaluate(a * b) - rep.evaluate(a) @ rep.evaluate(b)).max()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_homomorphism_p3(nonquotient9, pp9, seed):
    assert max(hom_error(r, pp9, seed) for r in nonquotient9) < 1e-9


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_homomorphism_p7(seed):
    pp = PrimePower(7, 2)
    reps = [r for r in inventory(pp) if r.label.k == 2 or r.label.chi in (1, 3)]
    assert max(hom_error(r, pp, seed) for r in reps) < 1e-9


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_homomorphism_partial_level_three(seed):
    pp = PrimePower(5, 3)
    assert max(hom_error(r, pp, seed) for r in wide_inventory_n3(pp)) < 1e-9


def test_big_space_action_is_unitary_and_faithful_on_generators():
    pp = PrimePower(3, 2)
    act = BigAction(RingParams(pp, 1, 1), 1)
    W = act.w_dense()
    assert np.allclose(W @ W.conj().T, np.eye(act.size))
    assert np.allclose(act.evaluate_dense(w_elem(pp) * u_elem(2, pp)), W @ act.u_dense(2))


def test_literal_even_sign_breaks_the_relations():
    pp = PrimePower(3, 2)
    ok = build_nonquotient(pp, 0, 1, 1, 1)
    bad = build_nonquotient(pp, 0, 1, 1, 1, even_sign="literal")
    assert max(hom_error(ok, pp, s) for s in range(5)) < 1e-9
    assert max(hom_error(bad, pp, s) for s in range(5)) > 1e-3


def test_inventory_dimensions_p3(nonquotient9):
    dims = Counter((r.label.k, r.dim) for r in nonquotient9)
    assert dims == {(0, 6): 4, (0, 12): 2, (1, 4): 8, (2, 4): 4}
    assert sum(r.dim**2 for r in nonquotient9) == 624


@pytest.mark.parametrize("p", [3, 5, 7])
def test_inventory_size_and_budget(p):
    reps = inventory(PrimePower(p, 2))
    assert len(reps) == len(nonquotient_parameters(p)) == p * p + 3 * p
    # squared dimensions fill |SL2(Z/p^2)| minus |SL2(Z/p)|
    assert sum(r.dim**2 for r in reps) == (p**6 - p**4) - (p**3 - p)


def test_characters_orthonormal_by_full_summation(nonquotient9, G9):
    """<chi, chi'> summed over every element, not via classes."""
    chars = np.array([[np.trace(r.evaluate(G9.element(i))) for r in nonquotient9] for i in range(G9.order)])
    gram = chars.conj().T @ chars / G9.order
    assert np.abs(gram - np.eye(len(nonquotient9))).max() < 1e-9


def test_k_equals_n_trivial_piece_is_fixed():
    pp = PrimePower(5, 2)
    triv, plus, minus = k_equals_n_split(1, pp)
    assert triv.dim == 1 and plus.dim == minus.dim == 12
    rng = np.random.default_rng(0)
    for _ in range(10):
        assert np.allclose(triv.evaluate(random_element(rng, pp)), 1)


def test_partial_level_three_family():
    pp = PrimePower(5, 3)
    assert len(partial_inventory_n3(pp)) == 4
    wide = wide_inventory_n3(pp)
    assert len(wide) == 20
    assert {r.label.k for r in wide} == {1, 2, 3}


def test_non_cyclic_C_is_refused():
    with pytest.raises(Unsupported):
        wide_inventory_n3(PrimePower(3, 3))


def test_unsupported_levels():
    with pytest.raises(Unsupported):
        inventory(PrimePower(3, 3))
    with pytest.raises(Unsupported):
        k_equals_n_split(1, PrimePower(3, 4))
    with pytest.raises(Unsupported):
        partial_inventory_n3(PrimePower(3, 2))


def test_published_table_partial_alignment(nonquotient9, G9):
    """The k = 0 and k = 2 published columns match ours under one row/column permutation."""
    T = character_table(nonquotient9, G9.conjugacy_classes)
    keep = [j for j, c in enumerate(COLUMNS) if not c.startswith("R_1")]
    assert len(keep) == 10
    found = align(T.values, TABLE[:, keep])
    assert found is not None
    rows, cols = found
    assert np.abs(T.values[rows][:, cols] - TABLE[:, keep]).max() < 1e-8
    sizes = sorted(G9.conjugacy_classes[r].size for r in rows)
    assert sizes == sorted(c.size for c in G9.conjugacy_classes)


def test_character_table_shape(nonquotient9, G9):
    T = character_table(nonquotient9, G9.conjugacy_classes)
    assert T.values.shape == (25, 18)
    assert list(T.dims) == [r.dim for r in nonquotient9]


def test_even_phase_reading_at_level_three():
    """(-1)^n and (-1/p)^n differ at n = 3 when p = 1 mod 4; only the latter is a homomorphism."""
    pp = PrimePower(5, 3)
    good = build_nonquotient(pp, 2, 1, 1, 1)
    bad = build_nonquotient(pp, 2, 1, 1, 1, even_sign="power")
    assert max(hom_error(good, pp, s) for s in range(8)) < 1e-9
    assert max(hom_error(bad, pp, s) for s in range(8)) > 1e-3
