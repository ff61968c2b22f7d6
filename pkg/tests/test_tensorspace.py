import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtensor.coeff import ScalarField
from qtensor.dualcheck import (
    check_commuting_actions,
    check_hecke_relations,
    check_quantum_relations,
)
from qtensor.psiphi import build_c_pi
from qtensor.combinatorics import Walk, enumerate_walks
from qtensor.tensorspace import (
    MixedWeightError,
    ShapeMismatchError,
    TensorVector,
    apply_E,
    apply_F,
    apply_generator,
    apply_K,
    apply_T,
    apply_T_factored,
    apply_tK,
    bilinear,
    prepend,
    weight_of,
)

GEN = ScalarField.generic()


def basis(idx, n=2):
    return TensorVector.basis(GEN, n, idx)


def test_single_factor_actions():
    assert apply_E(1, basis((2,))) == basis((1,))
    assert apply_F(1, basis((1,))) == basis((2,))
    assert apply_E(1, basis((1,))).is_zero
    assert apply_F(1, basis((2,))).is_zero


def test_coproduct_actions():
    got = apply_F(1, basis((1, 1)))
    expected = TensorVector(GEN, 2, 2, {(2, 1): GEN.q_power(-1), (1, 2): GEN.one()})
    assert got == expected
    assert apply_K(1, basis((1, 2))) == basis((1, 2)).scale(GEN.q_power(1))
    assert apply_E(1, basis((1, 2))) == basis((1, 1)).scale(GEN.q_power(1))
    assert apply_generator("tKinv", 1, basis((1, 1))) == basis((1, 1)).scale(GEN.q_power(-2))
    with pytest.raises(ValueError):
        apply_E(2, basis((1,)))
    with pytest.raises(ValueError):
        apply_generator("bogus", 1, basis((1,)))


def test_weight_of():
    assert weight_of(basis((1, 2))) == (1, 1)
    c = TensorVector(GEN, 2, 2, {(2, 1): GEN.one(), (1, 2): -GEN.q_power(-1)})
    assert weight_of(c) == (1, 1)
    with pytest.raises(MixedWeightError):
        weight_of(basis((1, 1)) + basis((1, 2)))
    with pytest.raises(ValueError):
        weight_of(TensorVector.zero(GEN, 2, 2))


def test_hecke_three_cases():
    assert apply_T(1, basis((1, 1))) == basis((1, 1)).scale(GEN.q_power(1))
    assert apply_T(1, basis((2, 1))) == basis((1, 2))
    qdiff = GEN.q_power(1) - GEN.q_power(-1)
    assert apply_T(1, basis((1, 2))) == basis((2, 1)) + basis((1, 2)).scale(qdiff)
    with pytest.raises(ValueError):
        apply_T(2, basis((1, 1)))


def test_hecke_factored_cross_check():
    for idx in itertools.product((1, 2, 3), repeat=4):
        v = TensorVector.basis(GEN, 3, idx)
        for i in (1, 2, 3):
            assert apply_T(i, v) == apply_T_factored(i, v)


def test_bilinear_examples():
    v12, v21 = basis((1, 2)), basis((2, 1))
    assert bilinear(v12, v12) == GEN.one()
    assert not bilinear(v12, v21)
    c = v21 - v12.scale(GEN.q_power(-1))
    assert bilinear(c, c) == GEN.one() + GEN.q_power(-2)
    with pytest.raises(ShapeMismatchError):
        bilinear(v12, basis((1,)))


def test_zero_results_keep_shape():
    z = apply_E(1, basis((1, 1)))
    assert z.is_zero and z.n == 2 and z.r == 2
    assert z == TensorVector.zero(GEN, 2, 2)


def test_prepend():
    v = prepend(3, TensorVector.basis(GEN, 3, (1, 2)))
    assert v == TensorVector.basis(GEN, 3, (3, 1, 2))
    with pytest.raises(ValueError):
        prepend(4, TensorVector.basis(GEN, 3, (1,)))


@pytest.mark.parametrize("n,r", [(2, 3), (3, 2)])
def test_defining_relations_small(n, r):
    for res in check_quantum_relations(n, r, GEN):
        assert res.ok, res.name


@pytest.mark.parametrize("n,r", [(2, 4), (3, 3)])
def test_hecke_relations_small(n, r):
    for res in check_hecke_relations(n, r, GEN):
        assert res.ok, res.name


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3)])
def test_commuting_actions_small(n, r):
    assert check_commuting_actions(n, r, GEN).ok


def test_relations_specialized():
    fq = ScalarField.at(Fraction(3, 2))
    assert all(res.ok for res in check_quantum_relations(2, 3, fq))
    assert all(res.ok for res in check_hecke_relations(2, 3, fq))
    assert check_commuting_actions(2, 3, fq).ok


@st.composite
def weight_vectors(draw, n=3, r=3):
    """Random vector supported on a single letter content."""
    content = tuple(draw(st.integers(min_value=1, max_value=n)) for _ in range(r))
    perms = sorted(set(itertools.permutations(content)))
    chosen = draw(st.lists(st.sampled_from(perms), min_size=1, max_size=4, unique=True))
    coeffs = {}
    for idx in chosen:
        num = draw(st.integers(min_value=-3, max_value=3))
        e = draw(st.integers(min_value=-2, max_value=2))
        coeffs[idx] = GEN.from_int(num) * GEN.q_power(e)
    return TensorVector(GEN, n, r, coeffs)


@given(b=weight_vectors(), bp=weight_vectors(), i=st.integers(min_value=1, max_value=2))
@settings(max_examples=60, deadline=None)
def test_adjointness_on_weight_vectors(b, bp, i):
    # <E_i b, b'> = q^(a_i(wt b)+1) <b, F_i b'>, zero sides included
    if b.is_zero or bp.is_zero:
        return
    lam = weight_of(b)
    a_i = lam[i - 1] - lam[i]
    lhs = bilinear(apply_E(i, b), bp)
    rhs = GEN.q_power(a_i + 1) * bilinear(b, apply_F(i, bp))
    assert lhs == rhs


@given(b=weight_vectors(), bp=weight_vectors())
@settings(max_examples=40, deadline=None)
def test_weight_orthogonality(b, bp):
    if b.is_zero or bp.is_zero:
        return
    if weight_of(b) != weight_of(bp):
        assert not bilinear(b, bp)


def test_contraction_on_maximal_vectors():
    # E_j b = 0 implies E_j F_j b = [a_j] b
    for n, r in [(2, 3), (3, 3), (3, 4)]:
        for walk in enumerate_walks(n, r):
            rec = build_c_pi(walk, GEN, n)
            lam = weight_of(rec.vector)
            for j in range(1, n):
                assert apply_E(j, rec.vector).is_zero
                got = apply_E(j, apply_F(j, rec.vector))
                expect = rec.vector.scale(GEN.qint(lam[j - 1] - lam[j]))
                assert got == expect


def test_shape_validation():
    with pytest.raises(ValueError):
        TensorVector(GEN, 2, 2, {(1, 2, 1): GEN.one()})
    with pytest.raises(ValueError):
        TensorVector(GEN, 2, 2, {(1, 3): GEN.one()})
    with pytest.raises(ShapeMismatchError):
        basis((1, 2)) + TensorVector.basis(GEN, 3, (1, 2))
