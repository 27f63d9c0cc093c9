import random

import numpy as np
import pytest

from conftest import iter_strip_shapes, random_pole
from lrlab import linalg as la
from lrlab.nilmod import (Embedding, NilModule, canonical_module, direct_sum,
                          graded_pole_embedding, hom_dim,
                          invariant_intersection_dim, jordan_type, mu_entries,
                          picket_embedding, picket_dominance_test,
                          picket_hom_profile, realize_picket, realize_pole,
                          realize_tableau, shift_grading, tableau_of_embedding)
from lrlab.poles import Picket, Pole, picket_tableau, pole_tableau, tableau_union
from lrlab.tableaux import LRTableau, Column, Shape, dominance_leq, enumerate_tableaux


def test_nilmodule_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        NilModule(2, np.eye(2, dtype=np.int64))


def test_grading_consistency_checked():
    T = np.zeros((2, 2), dtype=np.int64)
    T[1, 0] = 1
    NilModule(2, T, grading=(0, 1))
    with pytest.raises(ValueError):
        NilModule(2, T, grading=(0, 5))


def test_jordan_type_of_canonical():
    for beta in [(4, 3, 1), (2, 2, 2), (5,), ()]:
        M = canonical_module(beta, 3)
        assert jordan_type(M) == beta


def test_jordan_type_conjugation_invariant():
    rng = np.random.default_rng(2)
    M = canonical_module((4, 2, 1), 3)
    for _ in range(25):
        while True:
            S = rng.integers(0, 3, size=(7, 7))
            if la.rank(S, 3) == 7:
                break
        Sinv = _inverse_mod_p(S, 3)
        T2 = (S @ M.action @ Sinv) % 3
        assert jordan_type(NilModule(3, T2)) == (4, 2, 1)


def _inverse_mod_p(S, p):
    n = S.shape[0]
    aug = np.hstack([S % p, np.eye(n, dtype=np.int64)])
    R, piv = la.rref(aug, p)
    assert piv == list(range(n))
    return R[:, n:]


def test_embedding_closes_generators():
    B = canonical_module((3, 2), 2)
    v = np.zeros(5, dtype=np.int64)
    v[0] = 1
    E = Embedding(B, [v])
    assert E.dim_sub() == 3  # v, Tv, T^2v
    assert E.alpha == (3,)


def test_pole_chain_both_fields():
    pole = Pole((0, 2, 3, 6), (7, 4, 1))
    want = ((6, 2), (6, 2, 1), (6, 3, 1), (6, 4, 1), (7, 4, 1))
    for p in (2, 3):
        E = realize_pole(pole, p)
        assert E.chain() == want
        assert tableau_of_embedding(E) == pole_tableau(pole)


def test_zero_subspace_tableau():
    B = canonical_module((3, 1), 2)
    E = Embedding(B, [])
    t = tableau_of_embedding(E)
    assert t.chain == ((3, 1),)
    assert mu_entries(E, 1, 1) == 0
    assert mu_entries(E, 2, 3) == 0


def test_mu_matches_tableau_counts_random():
    rng = random.Random(19)
    for _ in range(40):
        parts = [realize_pole(random_pole(rng), 2) for _ in range(rng.randint(1, 3))]
        E = direct_sum(*parts)
        t = tableau_of_embedding(E)
        counts = {}
        for c in t.columns:
            for j, e in enumerate(c.entries):
                counts[(e, c.row_of(j))] = counts.get((e, c.row_of(j)), 0) + 1
        top = t.shape.beta[0]
        s = t.shape.alpha[0] if t.shape.alpha else 0
        for ell in range(1, s + 1):
            for r in range(1, top + 1):
                assert mu_entries(E, ell, r) == counts.get((ell, r), 0)


def test_direct_sum_tableau_union():
    rng = random.Random(29)
    for _ in range(40):
        p1, p2 = random_pole(rng), random_pole(rng)
        E = direct_sum(realize_pole(p1, 3), realize_pole(p2, 3))
        assert tableau_of_embedding(E) == tableau_union(pole_tableau(p1),
                                                        pole_tableau(p2))


def test_hom_min_rule_and_identity():
    for ell in range(1, 5):
        for m in range(1, 5):
            E1 = Embedding(canonical_module((ell,), 5), [])
            E2 = Embedding(canonical_module((m,), 5), [])
            assert hom_dim(E1, E2) == min(ell, m)
    E = realize_pole(Pole((0, 2), (3, 1)), 2)
    assert hom_dim(E, E) >= 1


def test_hom_field_mismatch():
    E1 = Embedding(canonical_module((2,), 2), [])
    E2 = Embedding(canonical_module((2,), 3), [])
    with pytest.raises(ValueError):
        hom_dim(E1, E2)


def test_picket_hom_equals_partial_sums():
    pole = Pole((0, 1, 4), (5, 2))
    for p in (2, 3):
        E = realize_pole(pole, p)
        chain = E.chain()
        for i in range(len(chain)):
            for ell in range(1, 6):
                want = sum(min(x, ell) for x in chain[i])
                assert hom_dim(E, picket_embedding(i, ell, p)) == want


def test_picket_dominance_agrees_with_tableaux():
    shape = Shape((2, 1), (4, 3, 2), (3, 2, 1))
    ts = enumerate_tableaux(shape)
    realized = [realize_tableau(t, 2) for t in ts]
    for a, ta in zip(realized, ts):
        for b, tb in zip(realized, ts):
            assert picket_dominance_test(a, b) == dominance_leq(ta, tb)


def test_profile_shape():
    E = realize_picket(3, 2, 2)
    table = picket_hom_profile(E, 2, 3)
    assert len(table) == 3 and all(len(row) == 3 for row in table)
    # row i is entrywise nondecreasing in ell
    for row in table:
        assert all(a <= b for a, b in zip(row, row[1:]))


def test_graded_pole_example():
    t = pole_tableau(Pole((0, 2, 5), (6, 3, 1)))
    E = graded_pole_embedding(t, 2)
    assert E.B.grading == (-3, -2, -1, 0, 1, 2, -1, 0, 1, 0)
    shifted = shift_grading(E, 4)
    assert shifted.B.grading[0] == 1
    with pytest.raises(ValueError):
        graded_pole_embedding(picket_tableau(Picket(3, 2)), 2)


def test_realize_round_trip_exhaustive_small():
    for shape in iter_strip_shapes(8):
        for t in enumerate_tableaux(shape):
            for p in (2, 3):
                E = realize_tableau(t, p)
                assert tableau_of_embedding(E) == t


def test_realize_non_horizontal_cases():
    # picket stacks realize fine
    u = tableau_union(picket_tableau(Picket(4, 3)), picket_tableau(Picket(1, 1)))
    E = realize_tableau(u, 2)
    assert tableau_of_embedding(E) == u
    # the two-generator exceptional tableau has no pole-sum realization
    gx = LRTableau([Column(4, 2, (1, 3)), Column(2, 0, (1, 2))])
    with pytest.raises(ValueError):
        realize_tableau(gx, 2)


def test_chain_pole_split_two_class_shape():
    from lrlab.nilmod import _chain_pole_split

    from lrlab.tableaux import reading_word

    ts = enumerate_tableaux(Shape((3, 1), (4, 3, 1), (3, 1)))
    larger = next(t for t in ts if reading_word(t) == (3, 2, 1, 1))
    pole, rest = _chain_pole_split(larger)
    assert pole.layers == (1, 2, 3) and pole.ambient == (4,)
    assert set(rest.columns) == {Column(3, 3, ()), Column(1, 0, (1,))}


def test_realize_empty_tableau():
    from lrlab.poles import empty_tableau

    t = empty_tableau((3, 1))
    E = realize_tableau(t, 2)
    assert E.dim_sub() == 0
    assert tableau_of_embedding(E) == t


def test_invariant_intersection_examples():
    M12 = direct_sum(realize_pole(Pole((0, 2, 3), (4, 1)), 2),
                     realize_picket(3, 0, 2), realize_picket(2, 1, 2))
    M3 = direct_sum(realize_picket(4, 1, 2), realize_picket(3, 3, 2),
                    realize_picket(2, 0, 2), realize_picket(1, 0, 2))
    assert invariant_intersection_dim(M12, 2, 1) == 1
    assert invariant_intersection_dim(M3, 2, 1) == 2
    assert invariant_intersection_dim(M12, 0, M12.B.dim) == M12.dim_sub()


def test_embedding_json_round_trip():
    E = realize_pole(Pole((0, 2), (3, 1)), 2)
    data = E.to_json()
    E2 = Embedding.from_json(data)
    assert (E2.span == E.span).all()
    assert E2.B.grading == E.B.grading
    assert tableau_of_embedding(E2) == tableau_of_embedding(E)
