"""Shared helpers: independent oracles and small algebra builders.

The builders here construct sl(2) and sl(3) directly from explicit matrices
inside the test process, independent of the catalog module, so catalog
output can be checked against them.
"""

from fractions import Fraction

import numpy as np
import pytest

from liepair.algebra import LieAlgebra
from liepair.weights import action_matrix, action_operators, rho_eval

F = Fraction


def mat_sl(n):
    """Basis matrices and labels for sl(n): H_i then E_ij in (i, j) order."""
    mats, labels = [], []
    for i in range(n - 1):
        M = [[F(0)] * n for _ in range(n)]
        M[i][i] = F(1)
        M[i + 1][i + 1] = F(-1)
        mats.append(M)
        labels.append(f"H{i + 1}")
    for i in range(n):
        for j in range(n):
            if i != j:
                M = [[F(0)] * n for _ in range(n)]
                M[i][j] = F(1)
                mats.append(M)
                labels.append(f"E{i + 1}{j + 1}")
    return labels, mats


def commutator(A, B):
    n = len(A)
    out = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = sum((A[i][k] * B[k][j] for k in range(n)), F(0)) \
                - sum((B[i][k] * A[k][j] for k in range(n)), F(0))
    return out


@pytest.fixture(scope="session")
def sl2():
    labels, mats = mat_sl(2)
    return LieAlgebra.from_matrices(labels, mats, name="sl2")


@pytest.fixture(scope="session")
def sl3():
    labels, mats = mat_sl(3)
    return LieAlgebra.from_matrices(labels, mats, name="sl3")


def numeric_rho(torus, space, y_coords):
    """Independent numerical oracle: sum of |Re eigenvalue| of the exact
    action matrix, computed by numpy's eigensolver."""
    ops, _ = action_operators(torus, space)
    M = action_matrix(ops, y_coords)
    if not M:
        return 0.0
    A = np.array([[float(x) for x in row] for row in M], dtype=float)
    return float(np.abs(np.linalg.eigvals(A).real).sum())


def assert_rho_matches_numeric(torus, space, rho, y_coords, rtol=1e-9):
    exact = rho_eval(rho, y_coords)
    numeric = numeric_rho(torus, space, y_coords)
    assert abs(float(exact) - numeric) <= rtol * max(1.0, abs(float(exact))), \
        f"exact {exact} vs numeric {numeric} at {y_coords}"


def random_fraction(rng, num=9, den=9):
    return F(rng.randint(-num, num), rng.randint(1, den))
