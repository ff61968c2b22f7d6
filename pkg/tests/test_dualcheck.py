from fractions import Fraction

import pytest

from qtensor.coeff import ScalarField
from qtensor.combinatorics import Partition, Walk, a_const, c_const, d_const, enumerate_walks, partitions_in
from qtensor.dualcheck import (
    SpechtConsistencyError,
    decomposition_report,
    gram_check,
    invariants_basis,
    maximal_basis,
    norm_predict,
    root_vector_check,
    specht_matrices,
    verify_suite,
    youngs_rule_check,
)
from qtensor.psiphi import apply_neg, build_c_pi, psi
from qtensor.tensorspace import TensorVector, apply_F, bilinear

GEN = ScalarField.generic()
P = Partition


def test_maximal_basis_counts():
    recs = maximal_basis(2, 2, GEN)
    assert len(recs) == 2
    assert [rec.weight.parts for rec in recs] == [(2,), (1, 1)]
    assert len(maximal_basis(3, 3, GEN)) == 4
    recs = maximal_basis(2, 3, GEN)
    assert len(recs) == 3
    assert sorted(rec.weight.parts for rec in recs) == [(2, 1), (2, 1), (3,)]


def test_gram_examples():
    recs = maximal_basis(2, 2, GEN)
    report = gram_check(recs)
    assert report.ok
    assert report.diagonal == [GEN.one(), GEN.one() + GEN.q_power(-2)]
    single = gram_check(recs[:1])
    assert single.ok and len(single.matrix) == 1 and single.diagonal[0]
    report33 = gram_check(maximal_basis(3, 3, GEN))
    assert report33.ok
    for i, row in enumerate(report33.matrix):
        for j, val in enumerate(row):
            assert bool(val) == (i == j)


def test_gram_detects_corruption():
    recs = maximal_basis(2, 2, GEN)
    bad = recs[1].vector + TensorVector.basis(GEN, 2, (1, 1))
    recs[1] = type(recs[1])(walk=recs[1].walk, vector=bad, weight=recs[1].weight)
    report = gram_check(recs)
    assert not report.ok and report.violations


def test_norm_examples():
    assert norm_predict(Walk((1, 1)), GEN) == GEN.one()
    assert norm_predict(Walk((1, 2)), GEN) == GEN.one() + GEN.q_power(-2)
    expected = (GEN.one() + GEN.q_power(-2) * 2 + GEN.q_power(-4) * 2 + GEN.q_power(-6))
    assert norm_predict(Walk((1, 2, 3)), GEN) == expected
    rec = build_c_pi(Walk((1, 2, 3)), GEN, 3)
    assert bilinear(rec.vector, rec.vector) == expected


def test_norms_match_at_moderate_scale():
    for n, r in [(2, 4), (3, 4), (4, 3)]:
        for rec in maximal_basis(n, r, GEN):
            assert norm_predict(rec.walk, GEN) == bilinear(rec.vector, rec.vector)


def test_pairing_reduction_identities():
    # the three interleaved reduction identities, on pairs of walk vectors
    # of equal shape (both equal and distinct pairs)
    for n, r in [(2, 3), (3, 3), (3, 4)]:
        for lam in partitions_in(n, r):
            recs = [build_c_pi(w, GEN, n) for w in enumerate_walks(n, r, lam)]
            a1 = a_const(lam, 1)
            for rb in recs:
                for rbp in recs:
                    b, bp = rb.vector, rbp.vector
                    for j in range(1, n):
                        if a_const(lam, j) == 0:
                            continue
                        pj = apply_neg(psi(j, lam, GEN), b)
                        pjp = apply_neg(psi(j, lam, GEN), bp)
                        sb = apply_neg(psi(j - 1, lam, GEN, shift=1), b)
                        sbp = apply_neg(psi(j - 1, lam, GEN, shift=1), bp)
                        if j == 1:
                            kappa = GEN.q_power(1 - a1) / GEN.qint(d_const(lam, 1))
                        else:
                            kappa = GEN.q_power(-a1) * GEN.qint(c_const(lam, j)) / GEN.qint(d_const(lam, j))
                        assert bilinear(pj, pjp) == kappa * bilinear(sb, sbp)
                        if j >= 2:
                            assert not bilinear(pj, apply_neg(psi(j - 1, lam, GEN, shift=1), apply_F(1, bp)))
                            assert bilinear(pj, apply_F(1, sbp)) == GEN.q_power(-a1) * bilinear(sb, sbp)


def test_specht_one_dimensional():
    data = specht_matrices(P((2,)), 2, 2, GEN)
    assert data.t_matrices == [[[GEN.q_power(1)]]]
    data = specht_matrices(P((1, 1)), 2, 2, GEN)
    assert data.t_matrices == [[[-GEN.q_power(-1)]]]


def _mat_mul(A, B, zero):
    k = len(A)
    return [[sum((A[i][t] * B[t][j] for t in range(k)), zero) for j in range(k)] for i in range(k)]


def _check_specht_relations(data, field):
    zero = field.zero()
    q = field.q_power(1)
    qinv = field.q_power(-1)
    for M in data.t_matrices:
        k = len(M)
        A = [[M[i][j] - (q if i == j else zero) for j in range(k)] for i in range(k)]
        B = [[M[i][j] + (qinv if i == j else zero) for j in range(k)] for i in range(k)]
        Z = _mat_mul(A, B, zero)
        assert all(not Z[i][j] for i in range(k) for j in range(k))
    for i in range(len(data.t_matrices) - 1):
        M1, M2 = data.t_matrices[i], data.t_matrices[i + 1]
        assert _mat_mul(_mat_mul(M1, M2, zero), M1, zero) == _mat_mul(_mat_mul(M2, M1, zero), M2, zero)
    for i in range(len(data.t_matrices)):
        for j in range(i + 2, len(data.t_matrices)):
            Mi, Mj = data.t_matrices[i], data.t_matrices[j]
            assert _mat_mul(Mi, Mj, zero) == _mat_mul(Mj, Mi, zero)


def test_specht_two_dimensional():
    data = specht_matrices(P((2, 1)), 3, 3, GEN)
    assert len(data.basis) == 2
    assert all(len(M) == 2 for M in data.t_matrices)
    _check_specht_relations(data, GEN)


def test_specht_larger_blocks():
    for lam, n, r in [(P((2, 1, 1)), 4, 4), (P((2, 2)), 3, 4), (P((3, 1)), 2, 4)]:
        data = specht_matrices(lam, n, r, GEN)
        assert len(data.basis) == len(data.gram_diagonal)
        assert all(v for v in data.gram_diagonal)
        _check_specht_relations(data, GEN)


def test_specht_invalid_shape():
    with pytest.raises(ValueError):
        specht_matrices(P((3, 1)), 3, 3, GEN)


def test_youngs_rule_examples():
    rep = youngs_rule_check(P((1,)), 2)
    assert rep.ok and rep.lhs == 4 and sorted(d for _, _, d in rep.contributions) == [1, 3]
    rep = youngs_rule_check(P((1,)), 3)
    assert rep.ok and rep.lhs == 9 and sorted(d for _, _, d in rep.contributions) == [3, 6]
    rep = youngs_rule_check(P((2, 2)), 2)
    assert rep.ok and rep.lhs == 2 and [d for _, _, d in rep.contributions] == [2]


def test_youngs_rule_sweep():
    for n in (2, 3, 4):
        for r in range(0, 6):
            for lam in partitions_in(n, r):
                assert youngs_rule_check(lam, n).ok


def test_invariants_examples():
    recs = invariants_basis(2, 2, GEN)
    assert len(recs) == 1
    expected = TensorVector(GEN, 2, 2, {(2, 1): GEN.one(), (1, 2): -GEN.q_power(-1)})
    assert recs[0].vector == expected
    assert invariants_basis(2, 3, GEN) == []
    recs = invariants_basis(3, 3, GEN)
    assert len(recs) == 1 and len(recs[0].vector.coeffs) == 6
    # degree 0: the unit spans the invariants
    assert len(invariants_basis(3, 0, GEN)) == 1
    # multiplicity of the rectangle grows with degree
    assert len(invariants_basis(2, 4, GEN)) == 2


def test_decomposition_examples():
    rep = decomposition_report(2, 2, GEN)
    assert rep.identity_ok and rep.total == 4
    assert [(r.shape.parts, r.weyl_dim, r.f) for r in rep.rows] == [((2,), 3, 1), ((1, 1), 1, 1)]
    rep = decomposition_report(3, 3, GEN)
    assert rep.identity_ok and rep.total == 27
    assert [(r.shape.parts, r.weyl_dim, r.f) for r in rep.rows] == [
        ((3,), 10, 1), ((2, 1), 8, 2), ((1, 1, 1), 1, 1)]
    rep = decomposition_report(2, 4, GEN)
    assert rep.identity_ok and rep.total == 16
    assert [(r.shape.parts, r.weyl_dim, r.f) for r in rep.rows] == [
        ((4,), 5, 1), ((3, 1), 3, 3), ((2, 2), 1, 2)]
    d = rep.to_json_dict()
    assert d["total"] == 16 and d["identity_ok"] is True
    assert d["shapes"][0] == {
        "shape": [4], "weyl_dim": 5, "f": 1, "walks": 1,
        "all_maximal": True, "gram_diagonal": True}


def test_root_vector_reports():
    rep = root_vector_check(P((1,)), 2, GEN)
    assert rep.ok and len(rep.entries) == 1
    assert rep.entries[0][2].terms == {(1,): GEN.one()}
    rep = root_vector_check(P((2, 1, 0)), 3, GEN)
    assert rep.ok
    assert rep.weights == [(-1, 1, 0), (-1, 0, 1), (0, -1, 1)]
    staircase = P((3, 2, 1, 0))
    rep = root_vector_check(staircase, 4, GEN)
    assert rep.ok and len(rep.entries) == 4 * 3 // 2
    with pytest.raises(ValueError):
        root_vector_check(P((2, 2)), 3, GEN)


def test_verify_suite_passes():
    rep = verify_suite(2, 3, GEN)
    assert rep.ok
    names = [c.name for c in rep.checks]
    assert "maximality" in names and "orthogonality" in names
    d = rep.to_json_dict()
    assert d["ok"] is True and len(d["checks"]) == len(rep.checks)


def test_verify_suite_specialized():
    rep = verify_suite(2, 3, ScalarField.at(Fraction(-5)))
    assert rep.ok
