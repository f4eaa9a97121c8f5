from dataclasses import replace
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liepair.algebra import (
    LieAlgebra,
    SubalgebraEmbedding,
    Subspace,
    ValidationError,
    ad_matrix,
    bracket,
    subspace_intersect,
    subspace_rank,
    subspace_sum,
    validate,
)
from liepair.linalg import is_zero_vec, mat_mul, mat_sub

from conftest import commutator, mat_sl

F = Fraction


def vec_of(L, label, coeff=F(1)):
    i = L.basis_labels.index(label)
    v = [F(0)] * L.dim
    v[i] = coeff
    return v


def test_sl2_bracket_H_E(sl2):
    # [H, E] = 2E from the standard structure constants
    assert bracket(sl2, vec_of(sl2, "H1"), vec_of(sl2, "E12")) == \
        [F(0), F(2), F(0)]


def test_sl2_bracket_E_F_matches_matrix_commutator(sl2):
    # oracle: the 2x2 matrix commutator [E, F] = H computed here directly
    labels, mats = mat_sl(2)
    C = commutator(mats[labels.index("E12")], mats[labels.index("E21")])
    assert C == mats[labels.index("H1")]
    assert bracket(sl2, vec_of(sl2, "E12"), vec_of(sl2, "E21")) == \
        vec_of(sl2, "H1")


def test_ad_matrix_sl2_H_diagonal(sl2):
    # column-by-column bracket oracle gives diag(0, 2, -2) in (H, E, F)
    assert ad_matrix(sl2, vec_of(sl2, "H1")) == [
        [F(0), F(0), F(0)], [F(0), F(2), F(0)], [F(0), F(0), F(-2)]]


def test_ad_matrix_of_zero_is_zero(sl3):
    M = ad_matrix(sl3, [F(0)] * sl3.dim)
    assert all(all(x == 0 for x in row) for row in M)


def test_ad_trace_zero_on_sl3(sl3):
    rng = Random(5)
    for _ in range(5):
        y = [F(rng.randint(-4, 4)) for _ in range(sl3.dim)]
        M = ad_matrix(sl3, y)
        assert sum(M[i][i] for i in range(sl3.dim)) == 0


def test_ad_is_homomorphism(sl3):
    # ad([x, y]) = ad(x) ad(y) - ad(y) ad(x) on random rational vectors
    rng = Random(11)
    for _ in range(5):
        x = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(sl3.dim)]
        y = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(sl3.dim)]
        lhs = ad_matrix(sl3, bracket(sl3, x, y))
        ax, ay = ad_matrix(sl3, x), ad_matrix(sl3, y)
        rhs = mat_sub(mat_mul(ax, ay), mat_mul(ay, ax))
        assert lhs == rhs


def test_bracket_dimension_mismatch(sl2):
    with pytest.raises(ValidationError):
        bracket(sl2, [F(1)], vec_of(sl2, "H1"))


def test_validate_catalog_sl3_ok(sl3):
    rep = validate(sl3, jacobi=True)
    assert rep.ok and not rep.problems


def test_validate_detects_antisymmetry_violation(sl2):
    structure = [[list(v) for v in row] for row in sl2.structure]
    structure[0][1][0] += 1  # now c[1][2] != -c[2][1]
    bad = LieAlgebra(dim=3, basis_labels=sl2.basis_labels,
                     structure=tuple(tuple(tuple(v) for v in row)
                                     for row in structure))
    rep = validate(bad)
    assert not rep.ok
    assert "antisymmetry" in rep.first_problem and "(1, 2)" in rep.first_problem


def test_validate_detects_perturbed_realization(sl2):
    mats = [[list(r) for r in M] for M in sl2.matrix_realization]
    mats[1][0][0] += 1
    bad = replace(sl2, matrix_realization=tuple(
        tuple(tuple(x for x in r) for r in M) for M in mats))
    rep = validate(bad)
    assert not rep.ok
    assert any("realization" in p for p in rep.problems)


def test_validate_detects_jacobi_violation():
    # [e1,e2] = e3, [e1,e3] = e1: the cyclic sum at (1,2,3) is e3, not 0
    table = {(0, 1): {2: F(1)}, (0, 2): {0: F(1)}}
    bad = LieAlgebra.from_structure(["a", "b", "c"], table)
    rep = validate(bad)
    assert not rep.ok
    assert "Jacobi" in rep.first_problem and "(1, 2, 3)" in rep.first_problem


def test_subspace_trivial_sum_and_intersection():
    A = Subspace.from_rows(2, [[F(1), F(0)]])
    B = Subspace.from_rows(2, [[F(0), F(1)]])
    assert subspace_sum(A, B).dim == 2
    assert subspace_intersect(A, B).dim == 0
    assert subspace_rank(A, B) == 2


def test_subspace_equal_operands():
    A = Subspace.from_rows(3, [[F(1), F(2), F(0)], [F(0), F(0), F(1)]])
    assert subspace_sum(A, A) == A
    assert subspace_intersect(A, A) == A


def test_subspace_ambient_mismatch():
    A = Subspace.from_rows(2, [[F(1), F(0)]])
    B = Subspace.from_rows(3, [[F(1), F(0), F(0)]])
    with pytest.raises(ValidationError):
        subspace_sum(A, B)


@pytest.mark.parametrize("ambient", [3, 8, 16])
def test_subspace_dimension_formula_bulk(ambient):
    # 100 random instances per ambient dimension, exactly
    rng = Random(100 + ambient)
    for _ in range(100):
        ra = rng.randint(0, ambient)
        rb = rng.randint(0, ambient)
        A = Subspace.from_rows(ambient, [
            [F(rng.randint(-3, 3)) for _ in range(ambient)] for _ in range(ra)])
        B = Subspace.from_rows(ambient, [
            [F(rng.randint(-3, 3)) for _ in range(ambient)] for _ in range(rb)])
        s = subspace_sum(A, B)
        i = subspace_intersect(A, B)
        assert s.dim == A.dim + B.dim - i.dim
        assert subspace_sum(A, B) == subspace_sum(B, A)
        assert subspace_intersect(A, B) == subspace_intersect(B, A)
        assert subspace_sum(s, A) == s
        assert subspace_intersect(i, A) == i


def test_subalgebra_closure_error_names_rows(sl2):
    # span(H, E + F) is not closed: [H, E+F] = 2E - 2F is outside
    with pytest.raises(ValidationError, match=r"row 1, row 2"):
        SubalgebraEmbedding.create(sl2, [[F(1), F(0), F(0)],
                                         [F(0), F(1), F(1)]])


def test_subalgebra_dependent_rows(sl2):
    with pytest.raises(ValidationError, match="dependent"):
        SubalgebraEmbedding.create(sl2, [[F(1), F(0), F(0)],
                                         [F(2), F(0), F(0)]])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2),
                min_size=3, max_size=3))
def test_bracket_antisymmetric_on_diagonal(x):
    from liepair.catalog import base_algebra
    L = base_algebra("sl2").algebra
    assert is_zero_vec(bracket(L, list(x), list(x)))
