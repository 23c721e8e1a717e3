"""Concrete groups: matrix groups, PSL quotients, direct and semidirect products.

Every element is a tuple of matrix components.  Components flagged as
"mod-center" are defined up to a global sign (PSL-style quotients) and are
kept in a canonical representative; equality tests still go through
equal_mod_center as the source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import algebra_def
from .lie_core import AlgebraVector

EQ_TOL = 1e-10


class GroupError(ValueError):
    """Domain error for group-level operations."""


# Component kinds:
#   psl2r  -- 2x2 real, det 1, mod +-I
#   psu2   -- 2x2 complex unitary, det 1, mod +-I
#   so2    -- 2x2 rotation matrix
#   rplus  -- 1x1 positive scalar (multiplicative reals)
#   transl -- translation part of a semidirect pair (2x2 traceless)
#   gl3    -- 3x3 real matrix (affine groups embedded as matrices)

@dataclass(frozen=True)
class GroupSpec:
    tag: str
    kind: str                 # "product" | "semidirect" | "matrix3"
    components: tuple         # component kind per slot
    algebra_name: str

    @property
    def mod_center(self) -> tuple:
        return tuple(kind in _MOD_CENTER_KINDS for kind in self.components)


GROUPS = {
    "PSL2R": GroupSpec("PSL2R", "product", ("psl2r",), "sl2R"),
    "PSL2C": GroupSpec("PSL2C", "product", ("psl2c",), "sl2C"),
    "PSU2": GroupSpec("PSU2", "product", ("psu2",), "su2"),
    "PSL2RxPSL2R": GroupSpec("PSL2RxPSL2R", "product", ("psl2r", "psl2r"), "sl2R+sl2R"),
    "PSU2xSO2": GroupSpec("PSU2xSO2", "product", ("psu2", "so2"), "su2+R"),
    "PSL2RxRplus": GroupSpec("PSL2RxRplus", "product", ("psl2r", "rplus"), "sl2R+R"),
    "PSL2RxSO2": GroupSpec("PSL2RxSO2", "product", ("psl2r", "so2"), "sl2R+R"),
    "SA2": GroupSpec("SA2", "matrix3", ("gl3",), "sl2:R2"),
    "PSL2R:M2": GroupSpec("PSL2R:M2", "semidirect", ("psl2r", "transl"), "sl2:R3"),
    "AFF2": GroupSpec("AFF2", "matrix3", ("gl3",), "aff2"),
    "PSU2:H2": GroupSpec("PSU2:H2", "semidirect", ("psu2", "transl"), "su2:R3"),
}

_MOD_CENTER_KINDS = ("psl2r", "psl2c", "psu2")


def _canonical_part(part: np.ndarray, kind: str) -> np.ndarray:
    if kind not in _MOD_CENTER_KINDS:
        return part
    for entry in part.ravel():
        if abs(entry) > 1e-8:
            re, im = float(np.real(entry)), float(np.imag(entry))
            if re < -1e-12 or (abs(re) <= 1e-12 and im < 0):
                return -part
            return part
    return part


@dataclass(frozen=True)
class GroupElement:
    group: str
    parts: tuple

    def __post_init__(self):
        spec = GROUPS[self.group]
        if len(self.parts) != len(spec.components):
            raise GroupError(f"{self.group}: expected {len(spec.components)} components")
        complex_transl = spec.components[0] == "psu2"
        fixed = []
        for p, k in zip(self.parts, spec.components):
            arr = np.asarray(p)
            if k in ("psl2c", "psu2") or (k == "transl" and complex_transl):
                arr = arr.astype(complex)
            else:
                if np.iscomplexobj(arr):
                    if np.abs(arr.imag).max() > 1e-12:
                        raise GroupError(f"{self.group}: real component has imaginary part")
                    arr = arr.real
                arr = arr.astype(float)
            fixed.append(_canonical_part(arr, k))
        object.__setattr__(self, "parts", tuple(fixed))

    @property
    def spec(self) -> GroupSpec:
        return GROUPS[self.group]


def rotation(t: float) -> np.ndarray:
    """The catalog's rotation convention: rot(t) = [[cos t, sin t], [-sin t, cos t]]."""
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, s], [-s, c]])


def rotation_angle(r: np.ndarray) -> float:
    """Inverse of rotation(); angle in (-pi, pi]."""
    return float(np.arctan2(-r[1, 0], r[0, 0]))


def identity(tag: str) -> GroupElement:
    spec = GROUPS[tag]
    parts = []
    for kind in spec.components:
        if kind == "rplus":
            parts.append(np.eye(1))
        elif kind == "gl3":
            parts.append(np.eye(3))
        elif kind in ("psl2c", "psu2"):
            parts.append(np.eye(2, dtype=complex))
        elif kind == "transl":
            dtype = complex if spec.components[0] == "psu2" else float
            parts.append(np.zeros((2, 2), dtype=dtype))
        else:
            parts.append(np.eye(2))
    return GroupElement(tag, tuple(parts))


def multiply(g1: GroupElement, g2: GroupElement) -> GroupElement:
    if g1.group != g2.group:
        raise GroupError("group tag mismatch")
    spec = g1.spec
    if spec.kind == "semidirect":
        a1, x1 = g1.parts
        a2, x2 = g2.parts
        return GroupElement(g1.group, (a1 @ a2, np.linalg.inv(a2) @ x1 @ a2 + x2))
    return GroupElement(g1.group, tuple(p @ q for p, q in zip(g1.parts, g2.parts)))


def inverse(g: GroupElement) -> GroupElement:
    spec = g.spec
    if spec.kind == "semidirect":
        a, x = g.parts
        return GroupElement(g.group, (np.linalg.inv(a), -a @ x @ np.linalg.inv(a)))
    return GroupElement(g.group, tuple(np.linalg.inv(p) for p in g.parts))


def conjugate(g: GroupElement, x: GroupElement) -> GroupElement:
    """g^{-1} x g."""
    return multiply(multiply(inverse(g), x), g)


def group_distance(g1: GroupElement, g2: GroupElement) -> float:
    """Max-norm distance, minimized over the center on mod-center components."""
    if g1.group != g2.group:
        raise GroupError("group tag mismatch")
    dist = 0.0
    for p, q, modc in zip(g1.parts, g2.parts, g1.spec.mod_center):
        d = float(np.abs(p - q).max())
        if modc:
            d = min(d, float(np.abs(p + q).max()))
        dist = max(dist, d)
    return dist


def equal_mod_center(g1: GroupElement, g2: GroupElement, tol: float = EQ_TOL) -> bool:
    return group_distance(g1, g2) <= tol


def adjoint(g: GroupElement, x: AlgebraVector) -> AlgebraVector:
    """Ad_g(x) = g^{-1} x g, re-expressed in the algebra basis."""
    spec = g.spec
    adef = algebra_def(spec.algebra_name)
    if x.algebra is not adef.algebra:
        raise GroupError(f"vector algebra does not match group {g.group}")
    payload = adef.payload(x)
    if spec.kind == "semidirect":
        a_mat, w = g.parts
        a_inv = np.linalg.inv(a_mat)
        a_alg, x_alg = payload
        conj_a = a_inv @ a_alg @ a_mat
        conj_x = a_inv @ x_alg @ a_mat + (conj_a @ w - w @ conj_a)
        new_payload = (conj_a, conj_x)
    elif spec.kind == "matrix3":
        (mat,) = payload
        (gmat,) = g.parts
        new_payload = (np.linalg.inv(gmat) @ mat @ gmat,)
    else:
        new_parts = []
        for part, gpart, kind in zip(payload, g.parts, spec.components):
            if kind in ("so2", "rplus"):
                new_parts.append(part)  # abelian factor: conjugation is trivial
            else:
                new_parts.append(np.linalg.inv(gpart) @ part @ gpart)
        new_payload = tuple(new_parts)
    try:
        return adef.vector_from_payload(new_payload, tol=1e-10)
    except Exception as exc:
        raise GroupError(f"adjoint image not expressible in the {spec.algebra_name} "
                         f"basis: {exc}") from exc


# --- element serialization ----------------------------------------------------

def element_to_json(g: GroupElement) -> dict:
    parts = []
    for p in g.parts:
        arr = np.asarray(p)
        if np.iscomplexobj(arr):
            parts.append({
                "shape": list(arr.shape),
                "complex": True,
                "entries": [[float(z.real), float(z.imag)] for z in arr.ravel()],
            })
        else:
            parts.append({
                "shape": list(arr.shape),
                "complex": False,
                "entries": [float(v) for v in arr.ravel()],
            })
    return {"group": g.group, "parts": parts}


# --- subgroup predicates ------------------------------------------------------

@dataclass(frozen=True)
class SubgroupSpec:
    group: str
    predicate: str
    params: tuple = ()   # e.g. (("n", 2),)

    def param(self, name, default=None):
        return dict(self.params).get(name, default)


def _is_rotation(mat: np.ndarray, tol: float) -> bool:
    return (np.abs(mat @ mat.T - np.eye(2)).max() <= tol
            and abs(np.linalg.det(mat) - 1.0) <= tol)


def _is_unitary(mat: np.ndarray, tol: float) -> bool:
    return bool(np.abs(mat @ mat.conj().T - np.eye(2)).max() <= tol)


def _real_rotation_angle(mat: np.ndarray, tol: float):
    """Angle of a real rotation matrix viewed inside PSU2, or None; mod pi."""
    if np.abs(np.imag(mat)).max() > tol:
        return None
    real = np.real(mat)
    if not _is_rotation(real, tol):
        return None
    return rotation_angle(real)


def _rotation_mod_center_angle(mat: np.ndarray, tol: float):
    """Angle t (mod pi) with mat = +-rot(t) in PSL2R, or None."""
    if not _is_rotation(mat, tol):
        return None
    return rotation_angle(mat)


def in_subgroup(h: SubgroupSpec, g: GroupElement, tol: float = 1e-8) -> bool:
    if h.group != g.group:
        raise GroupError("group tag mismatch")
    pred = h.predicate
    if pred == "psu2_in_psl2c":
        return _is_unitary(g.parts[0], tol)
    if pred == "so2_in_psl2r":
        return _is_rotation(g.parts[0], tol)
    if pred == "diagonal":
        return group_distance(GroupElement("PSL2R", (g.parts[0],)),
                              GroupElement("PSL2R", (g.parts[1],))) <= tol
    if pred == "c2_stab":
        a_mat, x = g.parts
        return (_is_rotation(a_mat, tol)
                and np.abs(x - x.T).max() <= tol
                and abs(np.trace(x)) <= tol)
    if pred == "euc_stab":
        return bool(np.abs(g.parts[1]).max() <= tol)
    if pred == "h_n":
        n = int(h.param("n"))
        first, second = g.parts
        if g.spec.components[0] == "psu2":
            t1 = _real_rotation_angle(first, tol)
        else:
            t1 = _rotation_mod_center_angle(first, tol)
        if t1 is None:
            return False
        t2 = rotation_angle(second)
        for k in (0, 1):
            if abs(_wrap_angle(n * (t1 + k * np.pi) - t2)) <= 10 * tol:
                return True
        return False
    if pred == "line_exp":
        # one-parameter subgroup {exp(t v)} in PSL2R x Rplus
        from . import expmaps  # local import to avoid a cycle
        coeffs = np.asarray(h.param("direction"), dtype=float)
        adef = algebra_def(g.spec.algebra_name)
        scale = float(coeffs[-1])
        value = float(g.parts[1][0, 0])
        if value <= 0:
            return False
        t = np.log(value) / scale
        model = expmaps.exp_in_group(g.group, adef.algebra.vector(t * coeffs))
        return equal_mod_center(model, g, tol)
    if pred == "dim5_h":
        (m,) = g.parts
        ok = (abs(m[0, 0] - 1) <= tol and abs(m[1, 0]) <= tol and abs(m[2, 0]) <= tol
              and abs(m[0, 2]) <= tol and abs(m[1, 2]) <= tol and abs(m[2, 1]) <= tol)
        return ok and m[1, 1] > 0 and abs(m[1, 1] * m[2, 2] - 1.0) <= tol
    if pred == "aff_h":
        (m,) = g.parts
        ok = (abs(m[0, 0] - 1) <= tol and abs(m[1, 0]) <= tol and abs(m[2, 0]) <= tol
              and abs(m[0, 2]) <= tol and abs(m[1, 2]) <= tol and abs(m[2, 1]) <= tol)
        return ok and m[1, 1] > 0 and m[2, 2] > 0
    if pred == "dim6i_h":
        a_mat, x = g.parts
        diag_ok = abs(a_mat[0, 1]) <= tol and abs(a_mat[1, 0]) <= tol
        anti_ok = abs(x[0, 0]) <= tol and abs(x[1, 1]) <= tol
        return diag_ok and anti_ok
    if pred == "dim6ii_h":
        return bool(np.abs(g.parts[1]).max() <= tol)
    raise GroupError(f"unknown subgroup predicate {pred!r}")


def _wrap_angle(t: float) -> float:
    """Wrap to (-pi, pi]."""
    return float(np.arctan2(np.sin(t), np.cos(t)))
