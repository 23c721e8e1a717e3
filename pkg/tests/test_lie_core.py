"""Core algebra layer: brackets, Killing forms, subspaces, reductive pairs."""

import io
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopforge.algebras import algebra
from loopforge.lie_core import (AlgebraError, Subspace, bracket,
                                check_reductive_pair, distance_to_span,
                                generated_subalgebra, killing_normalized,
                                killing_normalized_real, load_structure_file,
                                numeric_rank, subspace_equal)

ALGEBRA_NAMES = ("sl2R", "sl2C", "su2", "sl2R+sl2R", "su2+R", "sl2R+R",
                 "sl2:R2", "sl2:R3", "aff2", "su2:R3")

coeff = st.floats(-3.0, 3.0, allow_nan=False)


def _basis(alg):
    return [alg.basis_vector(i) for i in range(alg.dim)]


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_bracket_antisymmetry_on_basis(name):
    alg = algebra(name)
    for x in _basis(alg):
        for y in _basis(alg):
            lhs = bracket(alg, x, y).coeffs
            rhs = bracket(alg, y, x).coeffs
            assert np.abs(lhs + rhs).max() <= 1e-12


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_jacobi_identity_on_basis(name):
    alg = algebra(name)
    basis = _basis(alg)
    for x in basis:
        for y in basis:
            for z in basis:
                acc = (bracket(alg, x, bracket(alg, y, z)).coeffs
                       + bracket(alg, y, bracket(alg, z, x)).coeffs
                       + bracket(alg, z, bracket(alg, x, y)).coeffs)
                assert np.abs(acc).max() <= 1e-10


@settings(max_examples=50, deadline=None)
@given(st.lists(coeff, min_size=6, max_size=6),
       st.lists(coeff, min_size=6, max_size=6),
       st.floats(-2.0, 2.0, allow_nan=False))
def test_bracket_bilinearity(c1, c2, scale):
    alg = algebra("sl2:R3")
    x, y = alg.vector(c1), alg.vector(c2)
    z = alg.vector(np.asarray(c1) * scale)
    lhs = bracket(alg, z, y).coeffs
    rhs = scale * bracket(alg, x, y).coeffs
    assert np.abs(lhs - rhs).max() <= 1e-9 * (1 + np.abs(rhs).max())


def test_killing_values_split_signature():
    # lambda_1^2 + lambda_2^2 - lambda_3^2 in the (K, T, U) coordinates
    alg = algebra("sl2R")
    k, t, u = _basis(alg)
    assert killing_normalized_real(alg, k, k) == pytest.approx(1.0)
    assert killing_normalized_real(alg, t, t) == pytest.approx(1.0)
    assert killing_normalized_real(alg, u, u) == pytest.approx(-1.0)
    assert killing_normalized_real(alg, k, t) == pytest.approx(0.0)


def test_killing_compact_negative_definite():
    alg = algebra("su2")
    for x in _basis(alg):
        assert killing_normalized_real(alg, x, x) == pytest.approx(-1.0)


def test_killing_complex_polarization():
    alg = algebra("sl2C")
    k = algebra("sl2C").vector([1, 0, 0, 0, 0, 0])
    ik = algebra("sl2C").vector([0, 0, 0, 1, 0, 0])
    assert killing_normalized(alg, k, k) == pytest.approx(1.0)
    assert killing_normalized(alg, ik, ik) == pytest.approx(-1.0)
    assert killing_normalized(alg, k, ik) == pytest.approx(1j)


def test_killing_invariance_under_bracket():
    # k([z,x], y) + k(x, [z,y]) = 0
    alg = algebra("sl2R")
    rng = np.random.default_rng(3)
    for _ in range(20):
        x, y, z = (alg.vector(rng.normal(size=3)) for _ in range(3))
        total = (killing_normalized_real(alg, bracket(alg, z, x), y)
                 + killing_normalized_real(alg, x, bracket(alg, z, y)))
        assert abs(total) <= 1e-10


def test_subspace_rank_and_membership():
    alg = algebra("sl2R")
    span = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 1, 0])))
    assert span.dim == 2
    assert span.contains(alg.vector([0.3, -0.7, 0]))
    assert not span.contains(alg.vector([0, 0, 1]))
    assert distance_to_span(span.matrix, np.array([0.0, 0.0, 2.0])) == pytest.approx(2.0)


def test_subspace_equality_is_basis_independent():
    alg = algebra("sl2R")
    a = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 1, 0])))
    b = Subspace(alg, (alg.vector([1, 1, 0]), alg.vector([2, -1, 0])))
    c = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 0, 1])))
    assert subspace_equal(a, b)
    assert not subspace_equal(a, c)


def test_numeric_rank_tolerates_noise():
    mat = np.array([[1.0, 0.0], [1.0, 1e-13]])
    assert numeric_rank(mat) == 1


def test_generated_subalgebra_grows_to_full():
    alg = algebra("sl2R")
    seed = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 1, 0])))
    assert generated_subalgebra(alg, seed).dim == 3


def test_check_reductive_pair_flags():
    alg = algebra("sl2R")
    h = Subspace(alg, (alg.vector([0, 0, 1]),))          # rotation line
    m = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 1, 0])))
    report = check_reductive_pair(alg, h, m)
    assert report.all_true
    bad_m = Subspace(alg, (alg.vector([1, 0, 0]), alg.vector([0, 0, 1])))
    report = check_reductive_pair(alg, h, bad_m)
    assert not report.direct_sum or not report.bracket_condition


def test_check_reductive_pair_rejects_foreign_subspace():
    alg = algebra("sl2R")
    other = algebra("su2")
    h = Subspace(other, (other.vector([1, 0, 0]),))
    m = Subspace(alg, (alg.vector([1, 0, 0]),))
    with pytest.raises(AlgebraError):
        check_reductive_pair(alg, h, m)


def test_load_structure_file_round_trip():
    alg = algebra("sl2R")
    brackets = []
    for i in range(3):
        for j in range(i + 1, 3):
            coeffs = bracket(alg, _basis(alg)[i], _basis(alg)[j]).coeffs
            brackets.append([i, j, list(coeffs)])
    payload = {"dim": 3, "names": list(alg.basis_names), "brackets": brackets}
    loaded = load_structure_file(io.StringIO(json.dumps(payload)))
    for x in range(3):
        for y in range(3):
            got = bracket(loaded, _basis(loaded)[x], _basis(loaded)[y]).coeffs
            want = bracket(alg, _basis(alg)[x], _basis(alg)[y]).coeffs
            assert np.abs(got - want).max() <= 1e-12
