"""Reproduction suite: the exact computations ruling out global sections.

Each operation re-runs one of the catalog's non-globality witnesses — a
conjugation of a complement element into the stabilizer, or a coset collision
of two distinct section elements — and returns an Evidence record.  The fixed
matrices live in data/suite_constants.json, guarded by a checksum.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import expmaps
from .algebras import algebra
from .catalog import DomainError, get_entry
from .groups import (GroupElement, SubgroupSpec, adjoint, element_to_json,
                     group_distance, identity, in_subgroup, inverse, multiply,
                     rotation)
from .lie_core import AlgebraVector, distance_to_span

CONSTANTS_PATH = Path(__file__).parent / "data" / "suite_constants.json"
CONSTANTS_SHA256 = "b2ae8ec10426bfddef239ed8de147926fed2317550770f092a034d2f8eed61c9"

DEFAULT_TOL = 1e-9
EXACT_TOL = 1e-12


class ChecksumError(RuntimeError):
    """The constants file does not match its recorded checksum."""


def load_constants(path: Path | None = None) -> dict:
    path = CONSTANTS_PATH if path is None else Path(path)
    raw = path.read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != CONSTANTS_SHA256:
        raise ChecksumError(
            f"constants file checksum mismatch: expected {CONSTANTS_SHA256}, "
            f"got {digest}")
    data = json.loads(raw)
    return {k: np.array(v) for k, v in data.items()}


@dataclass(frozen=True)
class Evidence:
    suite_id: str
    case: str
    description: str
    lhs: object
    rhs: object
    residual: float
    verdict: str                 # "confirmed" | "failed"
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "id": self.suite_id,
            "case": self.case,
            "description": self.description,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "verdict": self.verdict,
            "details": self.details,
        }


def _coeffs(alg, **named) -> AlgebraVector:
    c = np.zeros(alg.dim)
    for name, value in named.items():
        c[alg.basis_names.index(name)] += value
    return alg.vector(c)


def _adjoint_oriented(g: GroupElement, vec: AlgebraVector,
                      target: AlgebraVector):
    """Try both conjugation orientations and both signs of the target.

    The sign is irrelevant for the witnesses (they assert that a line of the
    stabilizer algebra is conjugate to a line meeting the complement), so we
    keep whichever combination matches and record it.
    """
    best = None
    for label, el in (("as-displayed", g), ("inverse", inverse(g))):
        image = adjoint(el, vec)
        for sign in (1.0, -1.0):
            res = float(np.abs(image.coeffs - sign * target.coeffs).max())
            if best is None or res < best[0]:
                best = (res, label, sign)
    return best


def _verdict(residual: float, tol: float, extra_ok: bool = True) -> str:
    return "confirmed" if residual <= tol and extra_ok else "failed"


# --- diagonal stabilizer: squared-section coset collision ---------------------

def diagonal_square_section_collision(constants: dict | None = None) -> Evidence:
    """Two distinct squared-section elements share one conjugated-diagonal coset."""
    c = load_constants() if constants is None else constants
    x1, x2, r, d = c["prop8.x1"], c["prop8.x2"], c["prop8.R"], c["prop8.D"]
    d_inv = np.linalg.inv(d)
    residuals = []
    for x in (x1, x2):
        u = d @ (x @ x) @ d_inv
        lhs = GroupElement("PSL2RxPSL2R", (x, x @ x))
        rhs = multiply(GroupElement("PSL2RxPSL2R", (r, np.eye(2))),
                       GroupElement("PSL2RxPSL2R", (u, d_inv @ u @ d)))
        residuals.append(group_distance(lhs, rhs))
    distinct = group_distance(GroupElement("PSL2RxPSL2R", (x1, x1 @ x1)),
                              GroupElement("PSL2RxPSL2R", (x2, x2 @ x2)))
    residual = max(residuals)
    verdict = _verdict(residual, EXACT_TOL, distinct > 1e-6)
    return Evidence("prop8", "", "two section elements in one coset of the "
                    "conjugated diagonal",
                    [element_to_json(GroupElement("PSL2RxPSL2R", (x, x @ x)))
                     for x in (x1, x2)],
                    element_to_json(GroupElement("PSL2RxPSL2R", (r, np.eye(2)))),
                    residual, verdict,
                    {"distinct": bool(distinct > 1e-6), "tol": EXACT_TOL})


# --- compact product: stabilizer conjugated into the complement ---------------

def compact_family_witness(a: float, n: int = 1) -> Evidence:
    """Non-globality witness for the compact-times-circle family."""
    if a == -1:
        raise DomainError("a = -1 is outside the family domain")
    if abs(a + 0.5) < 1e-9:
        raise DomainError("a = -1/2 boundary is unsupported")
    alg = algebra("su2+R")
    entry = get_entry("COMPACT")
    m_span = entry.m_subspace({"a": a})
    if a > -0.5:
        q = a / (1.0 + a)
        k = np.sqrt((1.0 + q) / 2.0)
        vec = _coeffs(alg, U=1, e1=1)
        best = None
        for l in (np.sqrt((1.0 - q) / 2.0), -np.sqrt((1.0 - q) / 2.0)):
            g = GroupElement("PSU2xSO2",
                             (np.diag([k - l * 1j, k + l * 1j]), rotation(0.0)))
            target = _coeffs(alg, iT=-2 * k * l, U=q, e1=1)
            res, orientation, sign = _adjoint_oriented(g, vec, target)
            el = g if orientation == "as-displayed" else inverse(g)
            image = adjoint(el, vec)
            membership = distance_to_span(m_span.matrix, image.coeffs)
            cand = (max(res, membership), l, orientation, sign, image)
            if best is None or cand[0] < best[0]:
                best = cand
        residual, l, orientation, sign, image = best
        verdict = _verdict(residual, 1e-10)
        return Evidence("prop5", f"a={a}", "stabilizer direction conjugated "
                        "into the complement",
                        image.coeffs.tolist(), "member of m_a", residual,
                        verdict, {"k": k, "l": l, "orientation": orientation, "sign": sign,
                                  "tol": 1e-10})
    # a < -1/2: coset collision of two exponential images
    denom = 1.0 + a - n * a
    if abs(denom) <= 1e-6:
        raise DomainError("winding n makes the collision degenerate (1+a = na)")
    l = np.pi * (1.0 + a) / (6.0 * denom)
    x1 = _coeffs(alg, U=np.pi / 6.0, iK=np.sqrt(143.0) / 6.0 * np.pi,
                 e1=np.pi * (1.0 + a) / (6.0 * a))
    x2 = _coeffs(alg, U=l, e1=l * (1.0 + a) / a)
    m1 = expmaps.exp_in_group("PSU2xSO2", x1)
    m2 = expmaps.exp_in_group("PSU2xSO2", x2)
    h = GroupElement("PSU2xSO2",
                     (rotation(-l).astype(complex), rotation(-n * l)))
    collision = group_distance(m1, multiply(m2, h))
    first_central = group_distance(
        GroupElement("PSU2", (m1.parts[0],)),
        GroupElement("PSU2", (np.eye(2, dtype=complex),)))
    stab_ok = in_subgroup(SubgroupSpec("PSU2xSO2", "h_n", (("n", n),)), h)
    distinct = group_distance(m1, m2)
    residual = collision
    verdict = _verdict(residual, DEFAULT_TOL,
                       first_central <= 1e-9 and stab_ok and distinct > 1e-6)
    return Evidence("prop5", f"a={a}", "two exponential images in one "
                    "stabilizer coset",
                    element_to_json(m1), element_to_json(m2), residual, verdict,
                    {"l": l, "n": n, "first_component_central": first_central,
                     "stabilizer_member": stab_ok,
                     "distinct": bool(distinct > 1e-6), "tol": DEFAULT_TOL})


# --- 4-dim families -----------------------------------------------------------

def four_dim_family_witness(case: str, params: dict | None = None) -> Evidence:
    """Non-globality witness for one branch of the 4-dim families."""
    params = dict(params or {})
    alg = algebra("sl2R+R")
    if case == "a":
        a = float(params.get("a", 1.0))
        if a == -1:
            raise DomainError("a = -1 is outside the family domain")
        d = -1.0 / (2.0 * (1.0 + a))
        vec = _coeffs(alg, U=-(1 + d + d * d), T=(-1 + d + d * d),
                      K=a / (1.0 + a), e1=1)
        target = _coeffs(alg, K=1, e1=1)
        g = GroupElement("PSL2RxRplus",
                         (np.array([[1 + d, -1.0], [-d, 1.0]]), np.eye(1)))
        residual, orientation, sign = _adjoint_oriented(g, vec, target)
        m_span = get_entry("DIM4-1").m_subspace({"a": a})
        member = distance_to_span(m_span.matrix, vec.coeffs) <= 1e-10
        return Evidence("prop13", "a", "complement element conjugated into "
                        "the hyperbolic-line stabilizer",
                        vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                        _verdict(residual, DEFAULT_TOL, member),
                        {"a": a, "d": d, "orientation": orientation, "sign": sign,
                         "member_of_m": member, "tol": DEFAULT_TOL})
    if case == "b_pos":
        b = float(params.get("b", 1.0))
        if b <= 0:
            raise DomainError("case b_pos needs b > 0")
        vec = _coeffs(alg, K=1, U=1, e1=2 * b)
        target = _coeffs(alg, U=b, T=b, e1=2 * b)
        root = np.sqrt(2 * b)
        # corrected conjugator: mapping the nilpotent K+U onto the b(U+T) line
        # forces equal bottom-row entries 1/sqrt(2b)
        g = GroupElement("PSL2RxRplus",
                         (np.array([[1.0, 1.0 - root], [1.0 / root, 1.0 / root]]),
                          np.eye(1)))
        residual, orientation, sign = _adjoint_oriented(g, vec, target)
        m_span = get_entry("DIM4-2").m_subspace({"b": b})
        member = distance_to_span(m_span.matrix, vec.coeffs) <= 1e-10
        return Evidence("prop13", "b_pos", "complement element conjugated "
                        "into the parabolic-line stabilizer",
                        vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                        _verdict(residual, DEFAULT_TOL, member),
                        {"b": b, "orientation": orientation, "sign": sign,
                         "member_of_m": member, "tol": DEFAULT_TOL})
    if case == "b_neg":
        b = float(params.get("b", -1.0))
        if b >= 0:
            raise DomainError("case b_neg needs b < 0")
        v1 = _coeffs(alg, U=-3 * np.pi * b, T=-3 * np.pi * b)
        v2 = _coeffs(alg, K=np.sqrt(5.0) * np.pi, U=3 * np.pi,
                     e1=6 * np.pi * b)
        m1 = expmaps.exp_in_group("PSL2RxRplus", v1)
        m2 = expmaps.exp_in_group("PSL2RxRplus", v2)
        h1 = expmaps.exp_in_group(
            "PSL2RxRplus", _coeffs(alg, U=3 * np.pi * b, T=3 * np.pi * b,
                                   e1=6 * np.pi * b))
        displayed_m1 = GroupElement(
            "PSL2RxRplus", (np.array([[1.0, -6 * np.pi * b], [0.0, 1.0]]),
                            np.eye(1)))
        displayed_h1 = GroupElement(
            "PSL2RxRplus", (np.array([[1.0, 6 * np.pi * b], [0.0, 1.0]]),
                            np.array([[np.exp(6 * np.pi * b)]])))
        collision = group_distance(multiply(m1, h1), m2)
        residual = max(collision, group_distance(m1, displayed_m1),
                       group_distance(h1, displayed_h1))
        distinct = group_distance(m1, m2)
        return Evidence("prop13", "b_neg", "two exponential images in one "
                        "stabilizer coset",
                        element_to_json(m1), element_to_json(m2), residual,
                        _verdict(residual, DEFAULT_TOL, distinct > 1e-6),
                        {"b": b, "distinct": bool(distinct > 1e-6),
                         "tol": DEFAULT_TOL})
    if case == "c_neg":
        c = float(params.get("c", -2.0))
        if c >= -1:
            raise DomainError("case c_neg needs c < -1")
        q = c / (1.0 + c)
        e2 = q + np.sqrt(q * q - 1.0)
        x = (1.0 - e2 * e2) / (2.0 * e2)
        vec = _coeffs(alg, T=x, U=q, e1=1)
        target = _coeffs(alg, U=1, e1=1)
        e = np.sqrt(e2)
        g = GroupElement("PSL2RxSO2", (np.diag([1.0 / e, e]), rotation(0.0)))
        residual, orientation, sign = _adjoint_oriented(g, vec, target)
        m_span = get_entry("DIM4-3").m_subspace({"c": c})
        member = distance_to_span(m_span.matrix, vec.coeffs) <= 1e-10
        return Evidence("prop13", "c_neg", "complement element conjugated "
                        "into the elliptic-line stabilizer",
                        vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                        _verdict(residual, DEFAULT_TOL, member),
                        {"c": c, "orientation": orientation, "sign": sign,
                         "member_of_m": member, "tol": DEFAULT_TOL})
    if case == "c_pos":
        c = float(params.get("c", 1.0))
        n = int(params.get("n", 1))
        if c <= -1 or c == 0:
            raise DomainError("case c_pos needs c > -1 and c != 0")
        denom = 1.0 + c - n * c
        if abs(denom) <= 1e-6:
            raise DomainError("winding n makes the collision degenerate")
        bound = 2 * np.pi * (1.0 + c) / abs(denom)
        k = int(np.floor(bound)) + 1
        t_coeff = np.sqrt(k * k * denom * denom / (1.0 + c) ** 2
                          - 4 * np.pi * np.pi)
        v1 = _coeffs(alg, U=k, e1=k * (1.0 + c) / c)
        v2 = _coeffs(alg, T=t_coeff, U=k * denom / (1.0 + c),
                     e1=k * denom / c)
        m1 = expmaps.exp_in_group("PSL2RxSO2", v1)
        m2 = expmaps.exp_in_group("PSL2RxSO2", v2)
        h1 = GroupElement("PSL2RxSO2", (rotation(-k), rotation(-n * k)))
        displayed_m1 = GroupElement(
            "PSL2RxSO2", (rotation(k), rotation(k * (1.0 + c) / c)))
        displayed_m2 = GroupElement(
            "PSL2RxSO2", (np.eye(2), rotation(k * denom / c)))
        collision = group_distance(multiply(m1, h1), m2)
        residual = max(collision, group_distance(m1, displayed_m1),
                       group_distance(m2, displayed_m2))
        stab_ok = in_subgroup(SubgroupSpec("PSL2RxSO2", "h_n", (("n", n),)), h1)
        distinct = group_distance(m1, m2)
        return Evidence("prop13", "c_pos", "two exponential images in one "
                        "winding-stabilizer coset",
                        element_to_json(m1), element_to_json(m2), residual,
                        _verdict(residual, DEFAULT_TOL,
                                 stab_ok and distinct > 1e-6),
                        {"c": c, "n": n, "k": k,
                         "stabilizer_member": stab_ok,
                         "distinct": bool(distinct > 1e-6),
                         "tol": DEFAULT_TOL})
    raise DomainError(f"unknown case {case!r}")


# --- 5-dim special affine -----------------------------------------------------

def special_affine_witness(constants: dict | None = None) -> Evidence:
    """Stabilizer direction conjugate to a complement direction (5-dim)."""
    c = load_constants() if constants is None else constants
    alg = algebra("sl2:R2")
    g = GroupElement("SA2", (c["prop16.g"],))
    vec = _coeffs(alg, e1=1)
    target = _coeffs(alg, e2=1)
    residual, orientation, sign = _adjoint_oriented(g, vec, target)
    inv_res, _, _ = _adjoint_oriented(inverse(g), target, vec)
    entry = get_entry("DIM5")
    h_ok = distance_to_span(entry.h_subspace().matrix, vec.coeffs) <= 1e-12
    m_ok = distance_to_span(entry.m_subspace({"b": 0.0}).matrix,
                            target.coeffs) <= 1e-12
    residual = max(residual, inv_res)
    return Evidence("prop16", "", "translation generator of the stabilizer "
                    "conjugated onto a complement direction",
                    vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                    _verdict(residual, EXACT_TOL, h_ok and m_ok),
                    {"orientation": orientation, "sign": sign, "vec_in_h": h_ok,
                     "target_in_m": m_ok, "tol": EXACT_TOL})


# --- 6-dim motion-type families ----------------------------------------------

def motion_family_witness(case: str, a: float = 1.0,
                          constants: dict | None = None) -> Evidence:
    """Non-globality witness for the two non-global 6-dim families."""
    c = load_constants() if constants is None else constants
    alg = algebra("sl2:R3")
    if case == "i":
        g = GroupElement("PSL2R:M2", (c["prop19i.A"], np.zeros((2, 2))))
        vec = _coeffs(alg, e6=1)
        target = _coeffs(alg, e5=1)
        residual, orientation, sign = _adjoint_oriented(g, vec, target)
        entry = get_entry("DIM6-i")
        h_ok = distance_to_span(entry.h_subspace().matrix, vec.coeffs) <= 1e-12
        m_ok = distance_to_span(
            entry.m_subspace({"b2": 0.0, "b3": 0.0}).matrix,
            target.coeffs) <= 1e-12
        return Evidence("prop19", "i", "stabilizer translation conjugated "
                        "onto a complement direction",
                        vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                        _verdict(residual, 1e-10, h_ok and m_ok),
                        {"orientation": orientation, "sign": sign, "vec_in_h": h_ok,
                         "target_in_m": m_ok, "tol": 1e-10})
    if case == "ii":
        if a == 0:
            raise DomainError("case ii needs a != 0")
        w = np.diag([1.0 / (2 * a), -1.0 / (2 * a)])
        g = GroupElement("PSL2R:M2", (np.eye(2), w))
        vec = _coeffs(alg, e4=a, e3=-a)
        target = _coeffs(alg, e6=1, e3=-a, e1=1, e4=a)
        residual, orientation, sign = _adjoint_oriented(g, vec, target)
        entry = get_entry("DIM6-ii")
        h_ok = distance_to_span(entry.h_subspace().matrix, vec.coeffs) <= 1e-12
        m_ok = distance_to_span(entry.m_subspace({"a": a}).matrix,
                                target.coeffs) <= 1e-12
        return Evidence("prop19", "ii", "stabilizer rotation conjugated onto "
                        "a complement element",
                        vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                        _verdict(residual, 1e-10, h_ok and m_ok),
                        {"a": a, "orientation": orientation, "sign": sign, "vec_in_h": h_ok,
                         "target_in_m": m_ok, "tol": 1e-10})
    raise DomainError(f"unknown case {case!r}")


def affine_witness(constants: dict | None = None) -> Evidence:
    """Non-globality witness for the plane affine group."""
    c = load_constants() if constants is None else constants
    alg = algebra("aff2")
    g = GroupElement("AFF2", (c["prop21.g"],))
    vec = _coeffs(alg, e1=1, e4=-1)
    target = _coeffs(alg, e2=1, e3=1)
    residual, orientation, sign = _adjoint_oriented(g, vec, target)
    entry = get_entry("AFF")
    h_ok = distance_to_span(entry.h_subspace().matrix, vec.coeffs) <= 1e-12
    m_ok = distance_to_span(entry.m_subspace({}).matrix,
                            target.coeffs) <= 1e-12
    return Evidence("prop21", "", "difference of diagonal directions "
                    "conjugated onto a complement element",
                    vec.coeffs.tolist(), target.coeffs.tolist(), residual,
                    _verdict(residual, EXACT_TOL, h_ok and m_ok),
                    {"orientation": orientation, "sign": sign, "vec_in_h": h_ok,
                     "target_in_m": m_ok, "tol": EXACT_TOL})


# --- euclidean motion type: non-injective factorization -----------------------

def _branch_value(x: float) -> float:
    return x * np.sin(x) ** 2


def _displayed_euclidean_section(a: float, b: float, c: float) -> GroupElement:
    """The stated section element of the euclidean-motion family.

    The rotation component is the honest exponential of aZ + bY - cX.  The
    translation component uses the stated closed-form solution of the
    translation equation, r(1) = -c w, s(1) = b w, v(1) = a w with
    w = (e^{i sqrt(k)} - e^{-i sqrt(k)})^2 and k = a^2 + b^2 + c^2; this is
    the formula the non-injectivity argument is built on.  (Solving the
    translation equation from the bracket table instead gives the linear
    value a V1 + b V2 + c V3 along the rotation axis, which is injective;
    see the Evidence details for the gap at the returned witness.)
    """
    alg = algebra("su2:R3")
    vec = _coeffs(alg, Z=a, Y=b, X=-c, V1=a, V2=b, V3=c)
    first = expmaps.exp_in_group("PSU2:H2", vec).parts[0]
    w = -4.0 * np.sin(np.sqrt(a * a + b * b + c * c)) ** 2
    r, s, v = -c * w, b * w, a * w
    second = np.array([[r, v * 1j + s], [-v * 1j + s, -r]], dtype=complex)
    return GroupElement("PSU2:H2", (first, second))


def euclidean_motion_witness() -> Evidence:
    """Two different stated section elements factor the same group element."""
    # the witness function x sin^2 x has overlapping ranges on (0, pi) and
    # (pi, 2 pi); pick the midpoint of the overlap and solve on the two
    # increasing branches
    peak1 = minimize_scalar(lambda x: -_branch_value(x), bounds=(0.1, np.pi),
                            method="bounded")
    peak2 = minimize_scalar(lambda x: -_branch_value(x),
                            bounds=(np.pi, 2 * np.pi), method="bounded")
    max1, max2 = -peak1.fun, -peak2.fun
    target = 0.5 * min(max1, max2)
    a1 = brentq(lambda x: _branch_value(x) - target, 1e-9, peak1.x)
    a2 = brentq(lambda x: _branch_value(x) - target, np.pi + 1e-9, peak2.x)
    common = abs(_branch_value(a1) - _branch_value(a2))
    f = -4.0 * _branch_value(a1)
    g = GroupElement("PSU2:H2",
                     (np.eye(2, dtype=complex),
                      np.array([[0.0, f * 1j], [-f * 1j, 0.0]])))
    residuals, elements, honest_gap = [], [], 0.0
    for a in (a1, a2):
        m_el = _displayed_euclidean_section(a, 0.0, 0.0)
        h_el = GroupElement("PSU2:H2",
                            (np.linalg.inv(m_el.parts[0]),
                             np.zeros((2, 2), dtype=complex)))
        residuals.append(group_distance(multiply(m_el, h_el), g))
        elements.append(m_el)
        honest = expmaps.exp_in_group(
            "PSU2:H2", _coeffs(algebra("su2:R3"), Z=a, V1=a))
        honest_gap = max(honest_gap, group_distance(m_el, honest))
    distinct = group_distance(elements[0], elements[1])
    residual = max(residuals)
    # b or c nonzero leaves a nonzero r(1) or s(1) whenever w != 0, so the
    # reduction of the stated system to a sin^2 is forced
    w1 = -4.0 * np.sin(a1) ** 2
    ok = (abs(a1 - a2) > 0.1 and common <= 1e-10 and distinct > 1e-6
          and abs(w1) > 1e-6)
    return Evidence("prop23", "", "the same group element admits two "
                    "factorizations over stated section elements",
                    element_to_json(elements[0]), element_to_json(elements[1]),
                    residual, _verdict(residual, 1e-8, ok),
                    {"a1": a1, "a2": a2, "common_value_gap": common, "f": f,
                     "distinct": bool(distinct > 1e-6),
                     "reduces_to_a_sin2": bool(abs(w1) > 1e-6),
                     "stated_vs_bracket_table_exponential_gap": honest_gap,
                     "tol": 1e-8})


# --- diagonal stabilizer: power-map angle scan --------------------------------

def power_section_angle_scan(lam: float) -> Evidence:
    """Where the (x, x^lam) circle meets the diagonal, by angle arithmetic."""
    if lam in (0.0, 1.0):
        raise DomainError("lambda must avoid {0, 1}")
    witnesses = []
    # (rot t, rot lam t) is diagonal mod center iff (lam-1) t = 0 mod pi;
    # enumerate the candidates in (0, 2 pi) and keep the non-central ones
    step = np.pi / abs(lam - 1.0)
    k = 1
    while k * step < 2 * np.pi - 1e-12:
        t = k * step
        el = GroupElement("PSL2RxPSL2R", (rotation(t), rotation(lam * t)))
        member = in_subgroup(SubgroupSpec("PSL2RxPSL2R", "diagonal"), el)
        nonidentity = group_distance(el, identity("PSL2RxPSL2R")) > 1e-8
        if member and nonidentity:
            witnesses.append(t)
        k += 1
    # grid confirmation: no diagonal meetings away from the candidates
    grid_hits = []
    for t in np.linspace(0.0, 2 * np.pi, 720, endpoint=False)[1:]:
        el = GroupElement("PSL2RxPSL2R", (rotation(t), rotation(lam * t)))
        if in_subgroup(SubgroupSpec("PSL2RxPSL2R", "diagonal"), el, tol=1e-9):
            if group_distance(el, identity("PSL2RxPSL2R")) > 1e-8:
                grid_hits.append(float(t))
    expected_clear = abs(lam - 2.0) < 1e-12
    found = bool(witnesses)
    consistent = (not found) == (not grid_hits) or found
    verdict = "confirmed" if ((expected_clear and not found and not grid_hits)
                              or (not expected_clear and found)) and consistent \
        else "failed"
    return Evidence("prop7_8_lambda2", f"lambda={lam}",
                    "scan of the power-circle against the diagonal",
                    [float(t) for t in witnesses], "nonidentity intersections",
                    0.0, verdict,
                    {"lambda": lam, "grid_hits": grid_hits[:8],
                     "intersection_free": not found})


# --- registry -----------------------------------------------------------------

def run_suite(only: str | None = None) -> list:
    """Run all reproductions (or the ones matching a suite id)."""
    load_constants()   # checksum gate
    jobs = {
        "prop5": lambda: [compact_family_witness(0.0, 1),
                          compact_family_witness(-0.75, 1)],
        "prop7_8_lambda2": lambda: [power_section_angle_scan(2.0),
                                    power_section_angle_scan(3.0)],
        "prop8": lambda: [diagonal_square_section_collision()],
        "prop13": lambda: [four_dim_family_witness("a", {"a": 1.0}),
                           four_dim_family_witness("b_pos", {"b": 1.0}),
                           four_dim_family_witness("b_neg", {"b": -1.0}),
                           four_dim_family_witness("c_neg", {"c": -2.0}),
                           four_dim_family_witness("c_pos", {"c": 1.0, "n": 1})],
        "prop16": lambda: [special_affine_witness()],
        "prop19": lambda: [motion_family_witness("i"),
                           motion_family_witness("ii", 1.0)],
        "prop21": lambda: [affine_witness()],
        "prop23": lambda: [euclidean_motion_witness()],
    }
    if only is not None:
        if only not in jobs:
            raise DomainError(f"unknown suite id {only!r}")
        return jobs[only]()
    evidences = []
    for key in jobs:
        evidences.extend(jobs[key]())
    return evidences


SUITE_IDS = ("prop5", "prop7_8_lambda2", "prop8", "prop13", "prop16",
             "prop19", "prop21", "prop23")
