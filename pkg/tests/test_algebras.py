"""Algebra registry: matrix realizations agree with the abstract tables."""

import numpy as np
import pytest

from loopforge.algebras import ALGEBRAS, algebra, algebra_def
from loopforge.lie_core import AlgebraError, bracket

EXPECTED_DIMS = {
    "sl2R": 3, "sl2C": 6, "su2": 3, "sl2R+sl2R": 6, "su2+R": 4,
    "sl2R+R": 4, "sl2:R2": 5, "sl2:R3": 6, "aff2": 6, "su2:R3": 6,
}


def test_registry_names_and_dims():
    assert set(ALGEBRAS) == set(EXPECTED_DIMS)
    for name, dim in EXPECTED_DIMS.items():
        alg = algebra(name)
        assert alg.dim == dim
        assert len(alg.basis_names) == dim


def test_basis_names_match_conventions():
    assert algebra("sl2R").basis_names == ("K", "T", "U")
    assert algebra("su2").basis_names == ("U", "iK", "iT")
    assert algebra("su2:R3").basis_names == ("X", "Y", "Z", "V1", "V2", "V3")


@pytest.mark.parametrize("name", sorted(EXPECTED_DIMS))
def test_abstract_bracket_matches_payload_bracket(name):
    """Structure constants reproduce scale * the realized matrix bracket."""
    adef = algebra_def(name)
    alg = adef.algebra
    rng = np.random.default_rng(7)
    for _ in range(10):
        x = alg.vector(rng.normal(size=alg.dim))
        y = alg.vector(rng.normal(size=alg.dim))
        abstract = bracket(alg, x, y).coeffs
        realized = adef.payload_bracket(adef.payload(x), adef.payload(y))
        recovered = adef.coeffs_from_payload(realized) * adef.bracket_scale
        assert np.abs(abstract - recovered).max() <= 1e-9


@pytest.mark.parametrize("name", sorted(EXPECTED_DIMS))
def test_payload_round_trip(name):
    adef = algebra_def(name)
    alg = adef.algebra
    rng = np.random.default_rng(11)
    coeffs = rng.normal(size=alg.dim)
    x = alg.vector(coeffs)
    back = adef.vector_from_payload(adef.payload(x))
    assert np.abs(back.coeffs - coeffs).max() <= 1e-10


def test_payload_rejects_foreign_vector():
    adef = algebra_def("sl2R")
    other = algebra("su2")
    with pytest.raises(AlgebraError):
        adef.payload(other.vector([1.0, 0.0, 0.0]))


def test_coeffs_from_payload_rejects_outside_span():
    adef = algebra_def("sl2R")
    with pytest.raises(AlgebraError):
        adef.coeffs_from_payload((np.eye(2),))  # not traceless


def test_su2_payloads_are_anti_hermitian():
    adef = algebra_def("su2")
    for (mat,) in adef.basis_payloads:
        assert np.abs(mat + mat.conj().T).max() <= 1e-12
        assert abs(np.trace(mat)) <= 1e-12


def test_semidirect_translation_parts_commute_with_nothing_lost():
    """The two semidirect registries realize the action through the pair rule."""
    for name in ("sl2:R3", "su2:R3"):
        adef = algebra_def(name)
        alg = adef.algebra
        rng = np.random.default_rng(3)
        x = alg.vector(rng.normal(size=6))
        y = alg.vector(rng.normal(size=6))
        a1, w1 = adef.payload(x)
        a2, w2 = adef.payload(y)
        br_a, br_w = adef.payload_bracket((a1, w1), (a2, w2))
        assert np.abs(br_a - (a1 @ a2 - a2 @ a1)).max() <= 1e-12
        expected_w = (w1 @ a2 - a2 @ w1) + (a1 @ w2 - w2 @ a1)
        assert np.abs(br_w - expected_w).max() <= 1e-12
