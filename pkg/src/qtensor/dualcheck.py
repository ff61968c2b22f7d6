"""End-to-end verification: full highest-weight bases, Gram diagonality,
closed-form norms, transposition matrices on each isotypic block, the
invariant-vector basis, and the multiplicity decomposition report.

Reports are value objects so the command line and the tests share one code
path; every check is exact (a nonzero residual anywhere is a failure, never
a tolerance question).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .coeff import ScalarField
from .combinatorics import (
    Partition,
    Walk,
    addable_rows,
    count_standard,
    d_const,
    enumerate_walks,
    partitions_in,
    weyl_dim,
)
from .psiphi import MaximalVectorRecord, apply_neg, build_c_pi, is_maximal, xi_map
from .tensorspace import (
    TensorVector,
    apply_E,
    apply_F,
    apply_K,
    apply_T,
    apply_tK,
    bilinear,
    weight_of,
)

__all__ = [
    "GramReport",
    "SpechtData",
    "SpechtConsistencyError",
    "YoungsRuleReport",
    "ShapeRow",
    "DecompositionReport",
    "RootVectorReport",
    "CheckResult",
    "VerifyReport",
    "maximal_basis",
    "gram_check",
    "norm_predict",
    "specht_matrices",
    "youngs_rule_check",
    "invariants_basis",
    "decomposition_report",
    "root_vector_check",
    "check_quantum_relations",
    "check_hecke_relations",
    "check_commuting_actions",
    "verify_suite",
]


def maximal_basis(n: int, r: int, field: ScalarField) -> list[MaximalVectorRecord]:
    """One record per walk, in walk-lexicographic order."""
    return [build_c_pi(w, field, n) for w in enumerate_walks(n, r)]


@dataclass
class GramReport:
    matrix: list[list[object]]
    diagonal: list[object]
    ok: bool
    violations: list[tuple[Walk, Walk]]


def gram_check(records: list[MaximalVectorRecord]) -> GramReport:
    """Full Gram matrix; diagonal must be nonzero, off-diagonal zero."""
    k = len(records)
    matrix = [[None] * k for _ in range(k)]
    violations: list[tuple[Walk, Walk]] = []
    for i in range(k):
        for j in range(i, k):
            val = bilinear(records[i].vector, records[j].vector)
            matrix[i][j] = matrix[j][i] = val
            if i == j and not val:
                violations.append((records[i].walk, records[j].walk))
            if i != j and val:
                violations.append((records[i].walk, records[j].walk))
    return GramReport(
        matrix=matrix,
        diagonal=[matrix[i][i] for i in range(k)],
        ok=not violations,
        violations=violations,
    )


def norm_predict(pi: Walk, field: ScalarField):
    """Closed-form self-pairing of the walk vector: the product over the
    steps of the one-step norm factor at the intermediate weight."""
    lam = Partition()
    acc = field.one()
    for m in pi.rows:
        if m >= 2:
            rho = field.q_power(1 - m)
            for t in range(1, m):
                d = d_const(lam, t, m - 1 - t)
                rho = rho * field.qint(d + 1) / field.qint(d)
            acc = acc * rho
        lam = lam.add_box(m)
    return acc


class SpechtConsistencyError(RuntimeError):
    """A transposition image failed to lie in the span of the walk basis."""


@dataclass
class SpechtData:
    shape: Partition
    basis: list[MaximalVectorRecord]
    gram_diagonal: list[object]
    t_matrices: list[list[list[object]]]


def specht_matrices(lam: Partition, n: int, r: int, field: ScalarField) -> SpechtData:
    """Matrices of the transposition generators on the span of the walk
    vectors ending at the given shape.

    Coordinates come from orthogonal projection (pairing divided by the
    diagonal norm); the residual after projection is asserted to vanish.
    """
    walks = enumerate_walks(n, r, lam)
    if not walks:
        raise ValueError(f"{lam} is not a shape of degree {r} with at most {n} rows")
    records = [build_c_pi(w, field, n) for w in walks]
    norms = [bilinear(rec.vector, rec.vector) for rec in records]
    t_matrices = []
    for i in range(1, r):
        rows = []
        for rec in records:
            image = apply_T(i, rec.vector)
            coords = [bilinear(image, other.vector) / norms[k] for k, other in enumerate(records)]
            residual = image
            for k, other in enumerate(records):
                residual = residual - other.vector.scale(coords[k])
            if not residual.is_zero:
                raise SpechtConsistencyError(
                    f"T_{i} image of walk {rec.walk} leaves the span at shape {lam}")
            rows.append(coords)
        t_matrices.append(rows)
    return SpechtData(shape=lam, basis=records, gram_diagonal=norms, t_matrices=t_matrices)


@dataclass
class YoungsRuleReport:
    shape: Partition
    n: int
    lhs: int
    contributions: list[tuple[int, Partition, int]]
    ok: bool


def youngs_rule_check(lam: Partition, n: int) -> YoungsRuleReport:
    """Dimension identity for tensoring with the vector module: n times the
    dimension equals the sum over addable rows of the grown dimensions."""
    lhs = n * weyl_dim(lam, n)
    contributions = []
    for j in addable_rows(lam, n):
        mu = lam.add_box(j)
        contributions.append((j, mu, weyl_dim(mu, n)))
    return YoungsRuleReport(
        shape=lam, n=n, lhs=lhs, contributions=contributions,
        ok=lhs == sum(d for _, _, d in contributions),
    )


def invariants_basis(n: int, r: int, field: ScalarField) -> list[MaximalVectorRecord]:
    """Walk vectors ending at a rectangular shape with n rows: a basis of the
    invariants of the traceless subalgebra.  Empty unless n divides r."""
    if r % n != 0:
        return []
    shape = Partition((r // n,) * n) if r else Partition()
    records = [build_c_pi(w, field, n) for w in enumerate_walks(n, r, shape)]
    for rec in records:
        v = rec.vector
        for i in range(1, n):
            if not apply_E(i, v).is_zero or not apply_F(i, v).is_zero:
                raise RuntimeError(f"vector for walk {rec.walk} is not invariant")
            if apply_tK(i, v) != v:
                raise RuntimeError(f"vector for walk {rec.walk} is not of trivial coroot weight")
    return records


@dataclass
class ShapeRow:
    shape: Partition
    weyl_dim: int
    f: int
    walks: int
    all_maximal: bool
    gram_diagonal: bool


@dataclass
class DecompositionReport:
    n: int
    r: int
    rows: list[ShapeRow]
    total: int
    identity_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "shapes": [
                {
                    "shape": list(row.shape.parts),
                    "weyl_dim": row.weyl_dim,
                    "f": row.f,
                    "walks": row.walks,
                    "all_maximal": row.all_maximal,
                    "gram_diagonal": row.gram_diagonal,
                }
                for row in self.rows
            ],
            "total": self.total,
            "identity_ok": self.identity_ok,
        }


def decomposition_report(n: int, r: int, field: ScalarField) -> DecompositionReport:
    """Per-shape multiplicity table plus the dimension identity
    sum(weyl_dim * f) = n^r."""
    rows = []
    for lam in partitions_in(n, r):
        walks = enumerate_walks(n, r, lam)
        records = [build_c_pi(w, field, n) for w in walks]
        all_max = all(is_maximal(rec.vector) for rec in records) if records else True
        gram_ok = gram_check(records).ok if records else True
        rows.append(ShapeRow(
            shape=lam,
            weyl_dim=weyl_dim(lam, n),
            f=count_standard(lam),
            walks=len(walks),
            all_maximal=all_max,
            gram_diagonal=gram_ok,
        ))
    total = n**r
    identity_ok = (
        sum(row.weyl_dim * row.f for row in rows) == total
        and all(row.walks == row.f for row in rows)
    )
    return DecompositionReport(n=n, r=r, rows=rows, total=total, identity_ok=identity_ok)


# -- root vectors ---------------------------------------------------------------


def _rank(vectors: list[dict]) -> int:
    """Rank of sparse vectors over an exact field, by elimination with the
    smallest key as pivot."""
    pivots: dict = {}
    rank = 0
    for vec in vectors:
        row = dict(vec)
        while row:
            key = min(row)
            if key not in pivots:
                pivots[key] = row
                rank += 1
                break
            prow = pivots[key]
            factor = row[key] / prow[key]
            for k2, c2 in prow.items():
                cur = row.pop(k2, None)
                val = -(factor * c2) if cur is None else cur - factor * c2
                if val:
                    row[k2] = val
    return rank


@dataclass
class RootVectorReport:
    shape: Partition
    n: int
    entries: list[tuple[int, int, object]]  # (m, j, element)
    weights: list[tuple[int, ...]]
    count_ok: bool
    weights_distinct: bool
    independent: bool
    vanished: list[tuple[int, int]]
    applied_independent: bool

    @property
    def ok(self) -> bool:
        return self.count_ok and self.weights_distinct and self.independent and self.applied_independent


def root_vector_check(lam: Partition, n: int, field: ScalarField) -> RootVectorReport:
    """Collect the lowering elements attached to all rows m = 2..n, check the
    expected count, distinct weights, and linear independence, then apply them
    to a highest-weight vector in tensor space and re-check independence of
    the nonvanishing images."""
    for j in range(1, n):
        if lam.row(j) - lam.row(j + 1) == 0:
            raise ValueError(f"weight {lam} has a vanishing coroot pairing at {j}")
    entries: list[tuple[int, int, object]] = []
    weights: list[tuple[int, ...]] = []
    for m in range(2, n + 1):
        for j, el in xi_map(m, lam, field):
            entries.append((m, j, el))
            wt = [0] * n
            wt[j - 1] -= 1
            wt[m - 1] += 1
            weights.append(tuple(wt))
            # sanity: every support word uses the letters j..m-1 exactly once
            for word in el.terms:
                assert sorted(word) == list(range(j, m)), (m, j, word)
    count_ok = len(entries) == n * (n - 1) // 2
    weights_distinct = len(set(weights)) == len(weights)
    independent = _rank([el.terms for _, _, el in entries]) == len(entries)

    r = lam.size
    base = build_c_pi(enumerate_walks(n, r, lam)[0], field, n).vector
    vanished: list[tuple[int, int]] = []
    images: list[dict] = []
    for m, j, el in entries:
        image = apply_neg(el, base)
        if image.is_zero:
            vanished.append((m, j))
        else:
            images.append(image.coeffs)
    applied_independent = _rank(images) == len(images)
    return RootVectorReport(
        shape=lam, n=n, entries=entries, weights=weights,
        count_ok=count_ok, weights_distinct=weights_distinct,
        independent=independent, vanished=vanished,
        applied_independent=applied_independent,
    )


# -- relation suites --------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _all_indices(n: int, r: int):
    return itertools.product(range(1, n + 1), repeat=r)


def check_quantum_relations(n: int, r: int, field: ScalarField) -> list[CheckResult]:
    """Defining relations of the quantized algebra as operator identities on
    every index basis vector of the degree-r tensor power."""
    results = []
    serre_coeff = field.q_power(1) + field.q_power(-1)

    def vec(idx):
        return TensorVector.basis(field, n, idx)

    ok_u1 = True
    for idx in _all_indices(n, r):
        v = vec(idx)
        for i in range(1, n + 1):
            if apply_K(i, apply_K(i, v, inverse=True)) != v:
                ok_u1 = False
            for j in range(1, n + 1):
                if apply_K(i, apply_K(j, v)) != apply_K(j, apply_K(i, v)):
                    ok_u1 = False
    results.append(CheckResult("U1 grouplike commute/invert", ok_u1))

    ok_u2 = True
    for idx in _all_indices(n, r):
        v = vec(idx)
        content = weight_of(v)
        for i in range(1, n):
            for j in range(1, n):
                lhs = apply_E(i, apply_F(j, v)) - apply_F(j, apply_E(i, v))
                if i == j:
                    rhs = v.scale(field.qint(content[i - 1] - content[i]))
                else:
                    rhs = TensorVector.zero(field, n, r)
                if lhs != rhs:
                    ok_u2 = False
    results.append(CheckResult("U2 raise/lower commutator", ok_u2))

    ok_u3 = True
    for idx in _all_indices(n, r):
        v = vec(idx)
        for i in range(1, n + 1):
            for j in range(1, n):
                h = (1 if i == j else 0) - (1 if i == j + 1 else 0)
                if apply_K(i, apply_E(j, v)) != apply_E(j, apply_K(i, v)).scale(field.q_power(h)):
                    ok_u3 = False
                if apply_K(i, apply_F(j, v)) != apply_F(j, apply_K(i, v)).scale(field.q_power(-h)):
                    ok_u3 = False
    results.append(CheckResult("U3 grouplike conjugation", ok_u3))

    ok_serre_e = True
    ok_serre_f = True
    ok_far_e = True
    ok_far_f = True
    for idx in _all_indices(n, r):
        v = vec(idx)
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) == 1:
                    lhs = (
                        apply_E(i, apply_E(i, apply_E(j, v)))
                        - apply_E(i, apply_E(j, apply_E(i, v))).scale(serre_coeff)
                        + apply_E(j, apply_E(i, apply_E(i, v))))
                    if not lhs.is_zero:
                        ok_serre_e = False
                    lhs = (
                        apply_F(i, apply_F(i, apply_F(j, v)))
                        - apply_F(i, apply_F(j, apply_F(i, v))).scale(serre_coeff)
                        + apply_F(j, apply_F(i, apply_F(i, v))))
                    if not lhs.is_zero:
                        ok_serre_f = False
                elif abs(i - j) > 1:
                    if apply_E(i, apply_E(j, v)) != apply_E(j, apply_E(i, v)):
                        ok_far_e = False
                    if apply_F(i, apply_F(j, v)) != apply_F(j, apply_F(i, v)):
                        ok_far_f = False
    results.append(CheckResult("U4 raising Serre", ok_serre_e))
    results.append(CheckResult("U5 raising far commutation", ok_far_e))
    results.append(CheckResult("U6 lowering Serre", ok_serre_f))
    results.append(CheckResult("U7 lowering far commutation", ok_far_f))
    return results


def check_hecke_relations(n: int, r: int, field: ScalarField) -> list[CheckResult]:
    """Quadratic, braid, and far-commutation relations for the transposition
    generators on every index basis vector."""
    results = []
    qdiff = field.q_power(1) - field.q_power(-1)

    ok_quad = True
    ok_braid = True
    ok_far = True
    for idx in _all_indices(n, r):
        v = TensorVector.basis(field, n, idx)
        for i in range(1, r):
            ti = apply_T(i, v)
            if apply_T(i, ti) - ti.scale(qdiff) - v:
                ok_quad = False
        for i in range(1, r - 1):
            lhs = apply_T(i, apply_T(i + 1, apply_T(i, v)))
            rhs = apply_T(i + 1, apply_T(i, apply_T(i + 1, v)))
            if lhs != rhs:
                ok_braid = False
        for i in range(1, r):
            for j in range(i + 2, r):
                if apply_T(i, apply_T(j, v)) != apply_T(j, apply_T(i, v)):
                    ok_far = False
    results.append(CheckResult("quadratic relation", ok_quad))
    results.append(CheckResult("braid relation", ok_braid))
    results.append(CheckResult("far commutation of transpositions", ok_far))
    return results


def check_commuting_actions(n: int, r: int, field: ScalarField) -> CheckResult:
    """Generator-by-generator commutation of the two actions on every index
    basis vector."""
    ok = True
    gens = [("E", apply_E), ("F", apply_F), ("tK", apply_tK)]
    for idx in _all_indices(n, r):
        v = TensorVector.basis(field, n, idx)
        for i in range(1, r):
            tv = apply_T(i, v)
            for _, fn in gens:
                for j in range(1, n):
                    if fn(j, tv) != apply_T(i, fn(j, v)):
                        ok = False
    return CheckResult("commuting actions", ok)


@dataclass
class VerifyReport:
    n: int
    r: int
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
            "ok": self.ok,
        }


def verify_suite(n: int, r: int, field: ScalarField, map_fn=map) -> VerifyReport:
    """The full battery at one size: highest-weight property, orthogonality,
    norm formula, counting, relation suites, and commuting actions.

    ``map_fn`` lets the caller fan the per-walk work out to a pool.
    """
    report = VerifyReport(n=n, r=r)
    records = maximal_basis(n, r, field)

    flags = list(map_fn(lambda rec: rec.vector.r == 0 or is_maximal(rec.vector), records))
    report.checks.append(CheckResult(
        "maximality", all(flags), f"{len(records)} walk vectors"))

    gram = gram_check(records)
    report.checks.append(CheckResult(
        "orthogonality", gram.ok, f"{len(records)}x{len(records)} Gram matrix"))

    norm_flags = list(map_fn(
        lambda rec: norm_predict(rec.walk, field) == bilinear(rec.vector, rec.vector),
        records))
    report.checks.append(CheckResult("norm formula", all(norm_flags)))

    expected = sum(count_standard(lam) for lam in partitions_in(n, r))
    dim_ok = (
        len(records) == expected
        and sum(weyl_dim(lam, n) * count_standard(lam) for lam in partitions_in(n, r)) == n**r
    )
    report.checks.append(CheckResult("counting", dim_ok, f"{len(records)} = sum of tableau counts"))

    report.checks.extend(check_quantum_relations(n, r, field))
    report.checks.extend(check_hecke_relations(n, r, field))
    report.checks.append(check_commuting_actions(n, r, field))
    return report
