import itertools

import numpy as np
import pytest

from sl2pn.baseline import (GroupTable, NumericalFailure, character_table_dixon, complete_inventory, dimension_budget,
                            generic_irreps, lift_quotient, quotient_representations, sl2_irreps, structure_constants)
from sl2pn.group import BadModulus, TooLarge, random_element
from sl2pn.modarith import PrimePower


def permutation_group(gens):
    """Closure of permutation tuples, returned as a GroupTable (textbook oracle groups)."""
    n = len(gens[0])
    e = tuple(range(n))
    elems, frontier = {e}, [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(n))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    elems = sorted(elems)
    pos = {x: i for i, x in enumerate(elems)}
    mult = np.array([[pos[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems])
    inverse = np.array([pos[tuple(np.argsort(a))] for a in elems])
    return GroupTable(mult, inverse, pos[e])


S3 = permutation_group([(1, 0, 2), (1, 2, 0)])
D4 = permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])
S4 = permutation_group([(1, 0, 2, 3), (1, 2, 3, 0)])


@pytest.mark.parametrize("gt,degrees", [
    (S3, [1, 1, 2]),
    (D4, [1, 1, 1, 1, 2]),
    (S4, [1, 1, 2, 3, 3]),
    (GroupTable.cyclic(7), [1] * 7),
])
def test_known_degrees(gt, degrees):
    assert gt.check()
    reps = generic_irreps(gt)
    assert sorted(r.dim for r in reps) == degrees
    assert dimension_budget(reps) == gt.order


@pytest.mark.parametrize("gt", [S3, S4, D4], ids=["S3", "S4", "D4"])
def test_table_reps_are_unitary_homomorphisms(gt):
    reps = generic_irreps(gt, seed=3)
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, gt.order, size=(30, 2)):
        for r in reps:
            A, B, AB = r.at(a), r.at(b), r.at(gt.mult[a, b])
            assert np.abs(AB - A @ B).max() < 1e-10
            assert np.abs(A @ A.conj().T - np.eye(r.dim)).max() < 1e-10


def test_cyclic_characters_are_roots_of_unity():
    X = character_table_dixon(GroupTable.cyclic(5))
    roots = np.exp(2j * np.pi * np.arange(5) / 5)
    for row in X:
        assert all(np.min(np.abs(roots - v)) < 1e-10 for v in row)
    assert np.abs(X @ X.conj().T / 5 - np.eye(5)).max() < 1e-10


def test_structure_constants_count_products():
    A = structure_constants(S3)
    sizes = [len(c) for c in S3.classes]
    # sum_t A[r, s, t] |C_t| = |C_r| |C_s|
    for r, s in itertools.product(range(3), repeat=2):
        assert sum(A[r, s, t] * sizes[t] for t in range(3)) == sizes[r] * sizes[s]


def test_sl2_mod3_degrees():
    reps = sl2_irreps(PrimePower(3, 1))
    assert sorted(r.dim for r in reps) == [1, 1, 1, 2, 2, 2, 3]


def test_sl2_mod5_degrees_and_orthogonality():
    reps = sl2_irreps(PrimePower(5, 1))
    assert sorted(r.dim for r in reps) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert dimension_budget(reps) == 120


def test_seeds_give_equivalent_results():
    a = sl2_irreps(PrimePower(3, 1), seed=0)
    b = sl2_irreps(PrimePower(3, 1), seed=9)
    ca = sorted(tuple(np.round([np.trace(m) for m in r.matrices], 8)) for r in a)
    cb = sorted(tuple(np.round([np.trace(m) for m in r.matrices], 8)) for r in b)
    assert ca == cb


def test_lifted_quotients_factor_through_reduction(pp9):
    lifted = quotient_representations(pp9)
    assert len(lifted) == 7
    rng = np.random.default_rng(1)
    x, y = random_element(rng, pp9), random_element(rng, pp9)
    for r in lifted:
        assert np.abs(r.evaluate(x * y) - r.evaluate(x) @ r.evaluate(y)).max() < 1e-10
    with pytest.raises(BadModulus):
        lift_quotient(lifted[0].base, PrimePower(5, 2))


def test_complete_inventory_budget(full9):
    assert len(full9) == 25
    assert dimension_budget(full9) == 648


def test_size_guard():
    with pytest.raises(TooLarge):
        GroupTable.from_sl2(PrimePower(5, 2))


def test_retries_exhaust_into_numerical_failure(monkeypatch):
    import sl2pn.baseline as bl

    calls = []

    def always_fail(*args):
        calls.append(1)
        raise NumericalFailure("forced")

    monkeypatch.setattr(bl, "_split_isotypic", always_fail)
    with pytest.raises(NumericalFailure):
        generic_irreps(S3)
    assert len(calls) == bl.MAX_RETRIES
