"""Section models: m*h factorization, loop product and both divisions."""

import numpy as np
import pytest

from loopforge.groups import GroupError, group_distance, multiply
from loopforge.sections import (NoConvergence, SolverConfig, decompose,
                                identity_point, left_divide, loop_multiply,
                                model_for, random_group_element, right_divide,
                                section_point)

GLOBAL_MODELS = (
    ("HYP2", {}),
    ("C1", {"a": 0.6}),
    ("C2", {"b1": 0.0, "b2": 1.0}),
    ("DIM4-3", {"c": 0.0}),
)


@pytest.mark.parametrize("entry_id,params", GLOBAL_MODELS)
def test_decompose_reconstructs_the_element(entry_id, params):
    model = model_for(entry_id, params)
    rng = np.random.default_rng(13)
    for _ in range(10):
        g = random_group_element(model, rng, radius=1.0)
        dec = decompose(model, g)
        assert dec.residual <= 1e-8
        recomposed = multiply(model.exp_m(dec.coords), dec.h)
        assert group_distance(recomposed, g) <= 1e-8


@pytest.mark.parametrize("entry_id,params", GLOBAL_MODELS)
def test_decompose_identity_is_trivial(entry_id, params):
    model = model_for(entry_id, params)
    from loopforge.groups import identity
    dec = decompose(model, identity(model.group))
    assert np.abs(dec.coords).max() <= 1e-8


def test_loop_divisions_invert_multiplication():
    model = model_for("C2", {"b1": 0.0, "b2": 1.0})
    rng = np.random.default_rng(21)
    for _ in range(5):
        a = section_point(model, rng.uniform(-0.8, 0.8, 3))
        b = section_point(model, rng.uniform(-0.8, 0.8, 3))
        prod = loop_multiply(model, a, b)
        back = left_divide(model, a, prod)
        assert np.abs(back.coords - b.coords).max() <= 1e-7
        x = right_divide(model, a, prod)
        again = loop_multiply(model, x, a)
        assert np.abs(again.coords - prod.coords).max() <= 1e-6


def test_identity_point_is_neutral():
    model = model_for("HYP2", {})
    e = identity_point(model)
    p = section_point(model, [0.4, -0.3])
    assert np.abs(loop_multiply(model, e, p).coords - p.coords).max() <= 1e-8
    assert np.abs(loop_multiply(model, p, e).coords - p.coords).max() <= 1e-8


def test_odd_winding_product_section_rejected():
    model = model_for("DIM4-3", {"c": 0.0, "n": 3})
    rng = np.random.default_rng(2)
    g = random_group_element(model, rng)
    with pytest.raises(GroupError):
        decompose(model, g)


def test_generic_solver_reports_no_convergence():
    # shrink the solver budget until a non-global section fails visibly
    model = model_for("DIM6-ii", {"a": 1.0},
                      SolverConfig(multistarts=1, max_iter=1, tol=1e-14))
    rng = np.random.default_rng(4)
    g = random_group_element(model, rng, radius=2.0)
    with pytest.raises(NoConvergence):
        decompose(model, g)


def test_decompose_rejects_foreign_group_element():
    model = model_for("HYP2", {})
    from loopforge.groups import identity
    with pytest.raises(GroupError):
        decompose(model, identity("PSU2"))
