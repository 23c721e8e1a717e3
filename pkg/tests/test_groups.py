"""Group layer: products, canonical representatives, adjoint action, predicates."""

import numpy as np
import pytest

from loopforge.algebras import algebra
from loopforge.expmaps import exp_in_group
from loopforge.groups import (GROUPS, GroupElement, GroupError, SubgroupSpec,
                              adjoint, element_to_json, equal_mod_center,
                              group_distance, identity, in_subgroup, inverse,
                              multiply, rotation, rotation_angle)
from loopforge.lie_core import bracket

SAMPLED_GROUPS = ("PSL2R", "PSL2C", "PSU2", "PSL2RxRplus", "PSU2xSO2",
                  "SA2", "PSL2R:M2", "AFF2", "PSU2:H2")


def _random_element(tag, rng, radius=0.8):
    alg = algebra(GROUPS[tag].algebra_name)
    return exp_in_group(tag, alg.vector(rng.uniform(-radius, radius, alg.dim)))


@pytest.mark.parametrize("tag", SAMPLED_GROUPS)
def test_group_axioms(tag):
    rng = np.random.default_rng(5)
    e = identity(tag)
    for _ in range(5):
        g = _random_element(tag, rng)
        h = _random_element(tag, rng)
        k = _random_element(tag, rng)
        assert equal_mod_center(multiply(g, e), g)
        assert equal_mod_center(multiply(e, g), g)
        assert equal_mod_center(multiply(g, inverse(g)), e)
        lhs = multiply(multiply(g, h), k)
        rhs = multiply(g, multiply(h, k))
        assert group_distance(lhs, rhs) <= 1e-9


def test_canonical_representative_mod_center():
    mat = np.array([[2.0, 1.0], [1.0, 1.0]])
    g = GroupElement("PSL2R", (mat,))
    neg = GroupElement("PSL2R", (-mat,))
    assert np.abs(g.parts[0] - neg.parts[0]).max() <= 1e-12
    assert equal_mod_center(g, neg)
    assert group_distance(g, neg) == 0.0


def test_rotation_angle_inverts_rotation():
    for t in (-3.0, -0.5, 0.0, 1.2, 3.1):
        assert rotation_angle(rotation(t)) == pytest.approx(
            np.arctan2(np.sin(t), np.cos(t)))


def test_element_part_count_checked():
    with pytest.raises(GroupError):
        GroupElement("PSL2R", (np.eye(2), np.eye(2)))


def test_multiply_rejects_tag_mismatch():
    with pytest.raises(GroupError):
        multiply(identity("PSL2R"), identity("PSU2"))


@pytest.mark.parametrize("tag", ("PSL2R", "PSU2", "SA2", "PSL2R:M2", "PSU2:H2"))
def test_adjoint_is_bracket_automorphism(tag):
    alg = algebra(GROUPS[tag].algebra_name)
    rng = np.random.default_rng(2)
    for _ in range(5):
        g = _random_element(tag, rng)
        x = alg.vector(rng.normal(size=alg.dim))
        y = alg.vector(rng.normal(size=alg.dim))
        lhs = adjoint(g, bracket(alg, x, y)).coeffs
        rhs = bracket(alg, adjoint(g, x), adjoint(g, y)).coeffs
        assert np.abs(lhs - rhs).max() <= 1e-8 * (1 + np.abs(rhs).max())


def test_adjoint_composition_direction():
    # Ad_g(x) = g^{-1} x g, so Ad_{g h} = Ad_h after Ad_g
    alg = algebra("sl2R")
    rng = np.random.default_rng(9)
    g = _random_element("PSL2R", rng)
    h = _random_element("PSL2R", rng)
    x = alg.vector(rng.normal(size=3))
    lhs = adjoint(multiply(g, h), x).coeffs
    rhs = adjoint(h, adjoint(g, x)).coeffs
    assert np.abs(lhs - rhs).max() <= 1e-9


def test_adjoint_fixes_its_own_generator():
    alg = algebra("sl2R")
    x = alg.vector([0.4, -0.2, 0.7])
    g = exp_in_group("PSL2R", x)
    assert np.abs(adjoint(g, x).coeffs - x.coeffs).max() <= 1e-9


def test_in_subgroup_rotation_predicates():
    so2 = SubgroupSpec("PSL2R", "so2_in_psl2r")
    assert in_subgroup(so2, GroupElement("PSL2R", (rotation(0.7),)))
    assert not in_subgroup(so2, GroupElement("PSL2R", (np.diag([2.0, 0.5]),)))

    psu2 = SubgroupSpec("PSL2C", "psu2_in_psl2c")
    unitary = np.array([[np.exp(0.3j), 0], [0, np.exp(-0.3j)]])
    assert in_subgroup(psu2, GroupElement("PSL2C", (unitary,)))
    assert not in_subgroup(psu2, GroupElement("PSL2C", (np.diag([2.0, 0.5]).astype(complex),)))


def test_in_subgroup_diagonal_and_winding():
    diag = SubgroupSpec("PSL2RxPSL2R", "diagonal")
    mat = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert in_subgroup(diag, GroupElement("PSL2RxPSL2R", (mat, mat)))
    assert not in_subgroup(diag, GroupElement("PSL2RxPSL2R", (mat, np.eye(2))))

    h2 = SubgroupSpec("PSL2RxSO2", "h_n", (("n", 2),))
    t = 0.6
    assert in_subgroup(h2, GroupElement("PSL2RxSO2", (rotation(t), rotation(2 * t))))
    # winding 2 absorbs the central half-turn of the first factor
    assert in_subgroup(h2, GroupElement("PSL2RxSO2",
                                        (rotation(t), rotation(2 * (t + np.pi)))))
    assert not in_subgroup(h2, GroupElement("PSL2RxSO2", (rotation(t), rotation(3 * t))))


def test_in_subgroup_translation_free_predicates():
    euc = SubgroupSpec("PSU2:H2", "euc_stab")
    assert in_subgroup(euc, identity("PSU2:H2"))
    moved = GroupElement("PSU2:H2", (np.eye(2, dtype=complex),
                                     np.array([[1.0, 0], [0, -1.0]], dtype=complex)))
    assert not in_subgroup(euc, moved)


def test_element_to_json_shapes():
    g = identity("PSU2:H2")
    doc = element_to_json(g)
    assert doc["group"] == "PSU2:H2"
    assert [p["shape"] for p in doc["parts"]] == [[2, 2], [2, 2]]
    assert all(p["complex"] for p in doc["parts"])
    real = element_to_json(identity("SA2"))
    assert real["parts"][0]["shape"] == [3, 3]
    assert not real["parts"][0]["complex"]
