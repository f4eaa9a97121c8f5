from fractions import Fraction

import pytest

from liepair.algebra import SubalgebraEmbedding, validate
from liepair.catalog import (
    UnsupportedParams,
    base_algebra,
    build_fixture,
    construct,
    construct_from_spec,
    fixture_names,
    pair_diagonal,
    pair_symmetric,
    pair_whittaker,
    so_p_q,
    su_p_q,
)
from liepair.weights import extend_torus_greedily, validate_torus

F = Fraction


def killing_det_nonzero(alg):
    from liepair.algebra import killing_form_matrix
    from liepair.linalg import rank as mrank

    K = killing_form_matrix(alg)
    return mrank(K) == alg.dim


# --- exhaustive validation over the small range ----------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_sl_n_validates(n):
    data = base_algebra(f"sl{n}")
    assert data.algebra.dim == n * n - 1
    assert validate(data.algebra, jacobi=True).ok
    assert killing_det_nonzero(data.algebra)
    validate_torus([list(r) for r in data.split_rows],
                   SubalgebraEmbedding.whole(data.algebra))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(0, 7)
                                 for q in range(0, 7) if 3 <= p + q <= 6])
def test_so_p_q_validates_and_rank(p, q):
    data = so_p_q(p, q)
    n = p + q
    assert data.algebra.dim == n * (n - 1) // 2
    assert validate(data.algebra, jacobi=True).ok
    # real rank is min(p, q)
    t = validate_torus([list(r) for r in data.split_rows],
                       SubalgebraEmbedding.whole(data.algebra))
    assert t.rank == min(p, q)
    if n >= 3:
        assert killing_det_nonzero(data.algebra)
    # split + compact rows together have the absolute rank
    assert len(data.split_rows) + len(data.compact_rows) == n // 2


@pytest.mark.parametrize("p,q", [(p, q) for p in range(0, 7)
                                 for q in range(0, 7) if 2 <= p + q <= 6])
def test_su_p_q_validates_and_rank(p, q):
    data = su_p_q(p, q)
    n = p + q
    assert data.algebra.dim == n * n - 1
    # "auto" runs the full Jacobi check up to dim 24 and falls back to the
    # exactly verified matrix realization above it
    assert validate(data.algebra, jacobi="auto").ok
    assert killing_det_nonzero(data.algebra)
    t = validate_torus([list(r) for r in data.split_rows],
                       SubalgebraEmbedding.whole(data.algebra))
    assert t.rank == min(p, q)


@pytest.mark.parametrize("two_n", [2, 4, 6])
def test_sp_validates(two_n):
    data = base_algebra(f"sp_{two_n}")
    n = two_n // 2
    assert data.algebra.dim == 2 * n * n + n
    assert validate(data.algebra, jacobi=True).ok
    assert killing_det_nonzero(data.algebra)
    t = validate_torus([list(r) for r in data.split_rows],
                       SubalgebraEmbedding.whole(data.algebra))
    assert t.rank == n


def test_complexified_sl2_validates():
    data = base_algebra("sl2C")
    assert data.algebra.dim == 6
    assert validate(data.algebra, jacobi=True).ok
    assert killing_det_nonzero(data.algebra)
    assert data.complex_structure is not None
    t = validate_torus([list(r) for r in data.split_rows],
                       SubalgebraEmbedding.whole(data.algebra))
    assert t.rank == 1  # complex rank of sl2


def test_complexified_compact_so3_has_split_rank_one():
    data = base_algebra("so3C")
    t = validate_torus([list(r) for r in data.split_rows],
                       SubalgebraEmbedding.whole(data.algebra))
    assert t.rank == 1


# --- family constructors ---------------------------------------------------

def test_triple_diagonal_dimensions():
    pair = pair_diagonal("sl2", 3)
    assert pair.g.dim == 9 and pair.h.dim == 3
    assert pair.torus_h.rank == 1 and pair.torus_g.rank == 3


def test_whittaker_sl3_dimensions_and_rank_zero():
    pair = pair_whittaker("sl3")
    assert pair.h.dim == 3
    assert pair.torus_h.rank == 0
    assert any("nilpotent" in n for n in pair.notes)


def test_symmetric_sl3_fixed_points_is_so3():
    pair = pair_symmetric("sl3")
    assert pair.h.dim == 3
    assert pair.torus_h.rank == 0
    # every fixed vector is antisymmetric in the realization
    mats = pair.g.matrix_realization
    for row in pair.h.rows:
        M = [[sum(c * mats[k][i][j] for k, c in enumerate(row))
              for j in range(3)] for i in range(3)]
        assert all(M[i][j] == -M[j][i] for i in range(3) for j in range(3))


def test_designated_tori_are_pool_maximal():
    for name in ("group_sl2", "sl2_split_torus", "sl2c_cartan",
                 "whittaker_sl3"):
        pair = build_fixture(name)
        extended = extend_torus_greedily(pair.torus_h, pair.h,
                                         [list(r) for r in pair.h.rows])
        assert extended.rank == pair.torus_h.rank, name


def test_construct_and_spec_parsing():
    pair = construct("triple_diagonal", ["sl2"])
    assert pair.g.dim == 9
    pair2 = construct_from_spec("triple_diagonal:sl2")
    assert pair2 == pair


def test_unsupported_params():
    with pytest.raises(UnsupportedParams):
        construct("sl_n_R", ["9"])
    with pytest.raises(UnsupportedParams):
        construct("nosuchfamily", [])
    with pytest.raises(UnsupportedParams):
        base_algebra("sl1")
    with pytest.raises(UnsupportedParams):
        base_algebra("so_5_5")


def test_every_fixture_pair_fully_validates():
    for name in fixture_names():
        pair = build_fixture(name)
        assert pair.validate_pair(), name


def test_complexification_attached_where_promised():
    pair = build_fixture("sl2_split_torus")
    comp = pair.complexification
    assert comp is not None
    assert comp.g.dim == 2 * pair.g.dim
    assert comp.h.dim == 2 * pair.h.dim
    # the complexified pair itself validates
    assert comp.validate_pair()
