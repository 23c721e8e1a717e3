"""Catalog entries: reductivity flags, domains, statuses, automorphism maps."""

import numpy as np
import pytest

from loopforge.catalog import (DomainError, automorphism_image,
                               automorphism_matrix, get_entry, instantiate,
                               list_entries, reductivity_report)
from loopforge.lie_core import (Subspace, bracket, check_reductive_pair,
                                distance_to_span, subspace_equal)

ENTRY_IDS = ("C1", "DIAG", "COMPACT", "DIM4-1", "DIM4-2", "DIM4-3", "DIM5",
             "DIM6-i", "DIM6-ii", "C2", "AFF", "EUC", "HYP2")


def test_catalog_inventory():
    entries = list_entries()
    assert tuple(e.id for e in entries) == ENTRY_IDS
    assert len(entries) == 13


def test_get_entry_unknown_raises():
    with pytest.raises(DomainError):
        get_entry("NOPE")


@pytest.mark.parametrize("entry_id", ENTRY_IDS)
def test_reductivity_flags_at_sample_params(entry_id):
    entry = get_entry(entry_id)
    expected = entry.expected_report()
    for params in entry.sample_params:
        report = reductivity_report(entry, params)
        assert report.as_dict() == expected, (entry_id, params)


@pytest.mark.parametrize("entry_id", ENTRY_IDS)
def test_excluded_params_fail_documented_flag(entry_id):
    entry = get_entry(entry_id)
    for params, flag, _note in entry.excluded:
        h = entry.h_subspace()
        m = entry.m_subspace(params)
        report = check_reductive_pair(entry.alg, h, m)
        assert not report.as_dict()[flag], (entry_id, params, flag)


def test_domain_errors():
    entry = get_entry("DIM6-ii")
    with pytest.raises(DomainError):
        entry.check_domain({"a": 0.0})
    with pytest.raises(DomainError):
        entry.check_domain({})
    with pytest.raises(DomainError):
        instantiate(get_entry("EUC"), {"a": 0.0})


def test_status_overrides():
    assert get_entry("C1").status_for({"a": 0.0}) == "global_bruck"
    assert get_entry("C1").status_for({"a": 1.0}) == "global_left_A"
    assert get_entry("C2").status_for({"b1": 2.0, "b2": 0.0}) == "global_bruck"
    assert get_entry("C2").status_for({"b1": 0.0, "b2": 1.0}) == "global_left_A"
    assert get_entry("DIM4-3").status_for({"c": 0.0}) == "global_bol_scheerer"
    assert get_entry("DIM4-3").status_for({"c": 1.0}) == "not_global"
    assert get_entry("HYP2").status_for({}) == "helper"


def test_winding_subgroup_default():
    entry = get_entry("DIM4-3")
    assert entry.subgroup_spec({"c": 0.0}).param("n") == 2
    assert entry.subgroup_spec({"c": 1.0}).param("n") == 1
    assert entry.subgroup_spec({"c": 0.0, "n": 4}).param("n") == 4


def _subspace_gap(image: Subspace, target: Subspace) -> float:
    return max(distance_to_span(target.matrix, v.coeffs) for v in image.basis)


def _assert_automorphism(map_id, params, alg):
    mat = automorphism_matrix(map_id, params, alg)
    rng = np.random.default_rng(1)
    for _ in range(5):
        x = alg.vector(rng.normal(size=alg.dim))
        y = alg.vector(rng.normal(size=alg.dim))
        lhs = mat @ bracket(alg, x, y).coeffs
        rhs = bracket(alg, alg.vector(mat @ x.coeffs),
                      alg.vector(mat @ y.coeffs)).coeffs
        assert np.abs(lhs - rhs).max() <= 1e-9


def _assert_fixes_h(map_id, params, entry):
    mat = automorphism_matrix(map_id, params, entry.alg)
    h = entry.h_subspace()
    images = tuple(entry.alg.vector(mat @ v.coeffs) for v in h.basis)
    assert subspace_equal(h, Subspace(entry.alg, images))


@pytest.mark.parametrize("a", (0.5, -1.3, 2.0))
def test_conj_phi_flips_the_family_parameter(a):
    entry = get_entry("C1")
    pair = instantiate(entry, {"a": a})
    image = automorphism_image("conj_phi", {"a": a}, pair)
    target = instantiate(entry, {"a": -a}).m
    assert _subspace_gap(image, target) <= 1e-10
    _assert_automorphism("conj_phi", {"a": a}, entry.alg)
    _assert_fixes_h("conj_phi", {"a": a}, entry)


@pytest.mark.parametrize("b1,b2", ((0.0, 1.0), (2.0, -0.5), (1.0, 1.0)))
def test_beta_normalizes_the_two_parameter_family(b1, b2):
    entry = get_entry("C2")
    params = {"b1": b1, "b2": b2}
    pair = instantiate(entry, params)
    image = automorphism_image("beta", params, pair)
    target = instantiate(entry, {"b1": 0.0, "b2": 1.0}).m
    assert _subspace_gap(image, target) <= 1e-10
    _assert_automorphism("beta", params, entry.alg)
    _assert_fixes_h("beta", params, entry)


def test_beta_requires_nonzero_b2():
    with pytest.raises(DomainError):
        automorphism_matrix("beta", {"b1": 0.0, "b2": 0.0}, get_entry("C2").alg)


@pytest.mark.parametrize("a", (0.5, 2.0, -0.7))
def test_euc_phi_normalizes_the_translation_tilt(a):
    entry = get_entry("EUC")
    pair = instantiate(entry, {"a": a})
    image = automorphism_image("euc_phi", {"a": a}, pair)
    target = instantiate(entry, {"a": 1.0}).m
    assert _subspace_gap(image, target) <= 1e-10
    _assert_automorphism("euc_phi", {"a": a}, entry.alg)
    _assert_fixes_h("euc_phi", {"a": a}, entry)
