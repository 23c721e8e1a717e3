"""Closed-form exponentials for the 2x2 algebras and semidirect products.

The 2x2 closed form is exp X = C(k) I + S(k) X where k is the normalized
Killing value of X (equal to -det X in the matrix picture) and C, S are the
cosh/cos pair, switching to their power series near k = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import algebra_def
from .groups import GroupElement, GROUPS, GroupError
from .lie_core import AlgebraError, AlgebraVector, killing_normalized

DEGENERATE_CUTOFF = 1e-8
SERIES_TOL = 1e-15
SERIES_CAP = 60

_CLOSED_FORM_GROUPS = {"sl2R": "PSL2R", "sl2C": "PSL2C", "su2": "PSU2"}
_SEMIDIRECT_ALGEBRAS = ("sl2:R3", "su2:R3", "sl2:R2")


class RangeError(ValueError):
    """Series truncation cap exceeded (input too large)."""


@dataclass(frozen=True)
class ExpResult:
    element: GroupElement
    branch: str        # hyperbolic | trigonometric | degenerate-series
    killing: object    # real, or complex for sl2C


def _cs_series(k):
    """Power series of C and S in the Killing value (valid for small |k|)."""
    c = 1.0 + k / 2.0 + k * k / 24.0 + k ** 3 / 720.0 + k ** 4 / 40320.0
    s = 1.0 + k / 6.0 + k * k / 120.0 + k ** 3 / 5040.0 + k ** 4 / 362880.0
    return c, s


def cs_values(k):
    """(C(k), S(k), branch) for real or complex k."""
    if abs(k) < DEGENERATE_CUTOFF:
        c, s = _cs_series(k)
        return c, s, "degenerate-series"
    if np.iscomplexobj(np.asarray(k)) and not np.isreal(k):
        root = np.sqrt(complex(k))
        return np.cosh(root), np.sinh(root) / root, _branch_of(float(np.real(k)))
    k = float(np.real(k))
    if k > 0:
        root = np.sqrt(k)
        return float(np.cosh(root)), float(np.sinh(root) / root), "hyperbolic"
    root = np.sqrt(-k)
    return float(np.cos(root)), float(np.sin(root) / root), "trigonometric"


def _branch_of(k_real: float) -> str:
    return "hyperbolic" if k_real > 0 else "trigonometric"


def exp2_matrix(mat: np.ndarray):
    """Closed-form exponential of a traceless 2x2 matrix; returns (exp, branch, k)."""
    k = -np.linalg.det(mat)
    if not np.iscomplexobj(mat):
        k = float(np.real(k))
    elif abs(np.imag(k)) < 1e-14:
        k = complex(k.real, 0.0)
    c, s, branch = cs_values(k)
    return c * np.eye(2, dtype=mat.dtype) + s * mat, branch, k


def exp_closed(alg, x: AlgebraVector) -> ExpResult:
    """exp X = C(k(X)) I + S(k(X)) X on sl2R, sl2C, su2."""
    name = x.algebra.name if alg is None else alg.name
    if name not in _CLOSED_FORM_GROUPS:
        raise AlgebraError(f"exp_closed unsupported for algebra {name!r}")
    adef = algebra_def(name)
    if x.algebra is not adef.algebra:
        raise AlgebraError("vector does not belong to the given algebra")
    k = killing_normalized(adef.algebra, x, x)
    (mat,) = adef.payload(x)
    c, s, branch = cs_values(k)
    result = c * np.eye(2, dtype=mat.dtype) + s * mat
    return ExpResult(GroupElement(_CLOSED_FORM_GROUPS[name], (result,)), branch, k)


def exp_series(rep_dim: int, x_matrix: np.ndarray) -> np.ndarray:
    """Scaling-and-squaring Taylor exponential (independent oracle)."""
    mat = np.asarray(x_matrix)
    if mat.shape != (rep_dim, rep_dim):
        raise AlgebraError("matrix shape does not match rep_dim")
    norm = np.linalg.norm(mat)
    squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0.5 else 0
    scaled = mat / (2 ** squarings)
    term = np.eye(rep_dim, dtype=mat.dtype)
    acc = term.copy()
    for n in range(1, 30):
        term = term @ scaled / n
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def _translation_series(x_mat: np.ndarray, apply_l) -> np.ndarray:
    """gamma(1) = sum_n L^n(x)/(n+1)! for the translation ODE."""
    term = np.array(x_mat, copy=True)
    acc = np.zeros_like(term)
    factorial = 1.0
    for n in range(SERIES_CAP):
        factorial *= (n + 1)
        acc = acc + term / factorial
        if np.abs(term).max() / factorial < SERIES_TOL:
            return acc
        term = apply_l(term)
    raise RangeError("semidirect translation series did not converge (norm too large)")


def exp_semidirect(alg, x: AlgebraVector) -> GroupElement:
    """Exponential in the semidirect-product groups (translation via the ODE series)."""
    name = x.algebra.name if alg is None else alg.name
    if name not in _SEMIDIRECT_ALGEBRAS:
        raise AlgebraError(f"exp_semidirect unsupported for algebra {name!r}")
    adef = algebra_def(name)
    if x.algebra is not adef.algebra:
        raise AlgebraError("vector does not belong to the given algebra")
    if name == "sl2:R2":
        (mat,) = adef.payload(x)
        a = mat[1:, 1:]
        w = mat[0, 1:]
        gamma = _translation_series(w, lambda y: y @ a)
        exp_a, _, _ = exp2_matrix(a)
        out = np.eye(3)
        out[1:, 1:] = exp_a
        out[0, 1:] = gamma
        return GroupElement("SA2", (out,))
    a, xm = adef.payload(x)
    gamma = _translation_series(xm, lambda y: y @ a - a @ y)
    exp_a, _, _ = exp2_matrix(a)
    tag = "PSL2R:M2" if name == "sl2:R3" else "PSU2:H2"
    return GroupElement(tag, (exp_a, gamma))


def rk4_semidirect(alg, x: AlgebraVector, step: float = 1e-3) -> GroupElement:
    """Independent oracle: RK4 integration of the translation ODE to t=1."""
    name = alg.name
    adef = algebra_def(name)
    if name == "sl2:R2":
        (mat,) = adef.payload(x)
        a = mat[1:, 1:]
        w = mat[0, 1:]
        rhs = lambda gamma: w + gamma @ a
        gamma = _rk4(rhs, np.zeros_like(w), step)
        out = np.eye(3)
        out[1:, 1:] = exp_series(2, a)
        out[0, 1:] = gamma
        return GroupElement("SA2", (out,))
    a, xm = adef.payload(x)
    rhs = lambda gamma: xm + (gamma @ a - a @ gamma)
    gamma = _rk4(rhs, np.zeros_like(xm), step)
    tag = "PSL2R:M2" if name == "sl2:R3" else "PSU2:H2"
    return GroupElement(tag, (exp_series(2, a), gamma))


def _rk4(rhs, y0, step):
    steps = int(round(1.0 / step))
    h = 1.0 / steps
    y = y0
    for _ in range(steps):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return y


def exp_direct_product(group_tag: str, x: AlgebraVector) -> GroupElement:
    """Componentwise exponential in a direct-product group."""
    spec = GROUPS[group_tag]
    if spec.kind != "product":
        raise GroupError(f"{group_tag} is not a direct product")
    return exp_in_group(group_tag, x)


def exp_in_group(group_tag: str, x: AlgebraVector) -> GroupElement:
    """Exponential dispatcher: algebra vector -> element of the given group."""
    spec = GROUPS[group_tag]
    adef = algebra_def(spec.algebra_name)
    if x.algebra is not adef.algebra:
        raise GroupError(f"vector algebra does not match group {group_tag}")
    if spec.kind == "semidirect" or group_tag == "SA2":
        return exp_semidirect(adef.algebra, x)
    if spec.kind == "matrix3":
        (mat,) = adef.payload(x)
        return GroupElement(group_tag, (exp_series(3, mat),))
    payload = adef.payload(x)
    parts = []
    for comp, kind in zip(payload, spec.components):
        if kind in ("psl2r", "psl2c", "psu2"):
            mat, _, _ = exp2_matrix(comp)
            parts.append(mat)
        elif kind == "so2":
            from .groups import rotation
            parts.append(rotation(float(comp[0, 0])))
        elif kind == "rplus":
            parts.append(np.array([[np.exp(float(comp[0, 0]))]]))
        else:
            raise GroupError(f"cannot exponentiate component kind {kind!r}")
    return GroupElement(group_tag, tuple(parts))
