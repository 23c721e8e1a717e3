"""Loop-property checks: axioms, left-A, Bol, Bruck tangent, orthogonality."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .catalog import ReductivePair
from .groups import group_distance, identity, multiply
from .lie_core import (AlgebraError, AlgebraVector, bracket,
                       distance_to_span, killing_normalized_real)
from .sections import (NoConvergence, SectionModel, SectionPoint, coords_diff,
                       decompose, identity_point, left_divide, loop_multiply,
                       random_group_element, right_divide, section_point)

EXACT_TOL = 1e-12


@dataclass(frozen=True)
class PropertyReport:
    prop: str
    entry_id: str
    params: dict
    samples: int
    tol: float
    max_residual: float
    verdict: str                    # "pass" | "fail" | "inconclusive"
    witnesses: tuple = ()
    inconclusive: int = 0
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "property": self.prop,
            "entry": self.entry_id,
            "params": self.params,
            "samples": self.samples,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
            "inconclusive": self.inconclusive,
            "details": self.details,
        }


def _verdict(residuals, tol):
    """pass <= tol everywhere; fail needs a clear margin; in between is open."""
    arr = np.asarray(residuals, dtype=float)
    max_res = float(arr.max()) if arr.size else 0.0
    fails = int((arr > 10 * tol).sum())
    gray = int(((arr > tol) & (arr <= 10 * tol)).sum())
    if fails:
        return "fail", max_res, gray
    if gray:
        return "inconclusive", max_res, gray
    return "pass", max_res, 0


def _sample_coords(model: SectionModel, rng, radius: float) -> np.ndarray:
    return rng.uniform(-radius, radius, model.dim_m)


# --- loop axioms --------------------------------------------------------------

def check_loop_axioms(model: SectionModel, samples: int = 200, tol: float = 1e-6,
                      seed: int = 0, radius: float = 1.0) -> PropertyReport:
    """Identity laws, division round trips and sampled sharp transitivity."""
    rng = np.random.default_rng(seed)
    e = identity_point(model)
    residuals, witnesses = [], []
    for _ in range(samples):
        a = section_point(model, _sample_coords(model, rng, radius))
        b = section_point(model, _sample_coords(model, rng, radius))
        try:
            checks = {
                "left_identity": group_distance(
                    loop_multiply(model, e, b).element, b.element),
                "right_identity": group_distance(
                    loop_multiply(model, a, e).element, a.element),
                "left_division": group_distance(
                    loop_multiply(model, a, left_divide(model, a, b)).element,
                    b.element),
                "right_division": group_distance(
                    loop_multiply(model, right_divide(model, a, b), a).element,
                    b.element),
                "transitive": decompose(
                    model, random_group_element(model, rng, radius)).residual,
            }
        except NoConvergence as exc:
            witnesses.append({"a": a.coords.tolist(), "b": b.coords.tolist(),
                              "error": str(exc)})
            residuals.append(np.inf)
            continue
        worst_name = max(checks, key=checks.get)
        worst = checks[worst_name]
        residuals.append(worst)
        if worst > 10 * tol:
            witnesses.append({"a": a.coords.tolist(), "b": b.coords.tolist(),
                              "check": worst_name, "residual": worst})
    verdict, max_res, gray = _verdict(residuals, tol)
    return PropertyReport("loop_axioms", model.entry.id, dict(model.params),
                          samples, tol, max_res, verdict, tuple(witnesses[:5]),
                          gray)


# --- left A-loops -------------------------------------------------------------

def _inner_map(model, x, y, z):
    """lambda_{x,y}(z) = (x*y) \\ (x*(y*z))."""
    xy = loop_multiply(model, x, y)
    xyz = loop_multiply(model, x, loop_multiply(model, y, z))
    return left_divide(model, xy, xyz)


def check_left_A(model: SectionModel, samples: int = 200, tol: float = 1e-6,
                 seed: int = 0, radius: float = 1.0) -> PropertyReport:
    """All inner maps lambda_{x,y} are loop automorphisms (sampled)."""
    rng = np.random.default_rng(seed)
    residuals, witnesses = [], []
    for _ in range(samples):
        x = section_point(model, _sample_coords(model, rng, radius))
        y = section_point(model, _sample_coords(model, rng, radius))
        u = section_point(model, _sample_coords(model, rng, radius))
        v = section_point(model, _sample_coords(model, rng, radius))
        try:
            lhs = _inner_map(model, x, y, loop_multiply(model, u, v))
            rhs = loop_multiply(model, _inner_map(model, x, y, u),
                                _inner_map(model, x, y, v))
        except NoConvergence as exc:
            witnesses.append({"x": x.coords.tolist(), "y": y.coords.tolist(),
                              "error": str(exc)})
            residuals.append(np.inf)
            continue
        res = group_distance(lhs.element, rhs.element)
        residuals.append(res)
        if res > 10 * tol:
            witnesses.append({"x": x.coords.tolist(), "y": y.coords.tolist(),
                              "u": u.coords.tolist(), "v": v.coords.tolist(),
                              "residual": res})
    verdict, max_res, gray = _verdict(residuals, tol)
    details = {"tangent_invariance": _tangent_invariance(model.pair)}
    return PropertyReport("left_A", model.entry.id, dict(model.params),
                          samples, tol, max_res, verdict, tuple(witnesses[:5]),
                          gray, details)


def _tangent_invariance(pair: ReductivePair) -> bool:
    """[h, m] subseteq m (the infinitesimal left-A condition)."""
    for h in pair.h.basis:
        for m in pair.m.basis:
            if distance_to_span(pair.m.matrix, bracket(pair.algebra, h, m).coeffs) > EXACT_TOL:
                return False
    return True


# --- Bol loops ----------------------------------------------------------------

def _bol_residual(model: SectionModel, a: SectionPoint, b: SectionPoint) -> float:
    """Distance of the stabilizer part of a*b*a from the identity."""
    product = multiply(multiply(a.element, b.element), a.element)
    d = decompose(model, product)
    return max(group_distance(d.h, identity(model.group)), d.residual)


def check_bol(model: SectionModel, samples: int = 200, tol: float = 1e-6,
              seed: int = 0, radius: float = 1.0) -> PropertyReport:
    """a b a stays in the section image for section elements a, b."""
    rng = np.random.default_rng(seed)
    residuals, witnesses = [], []
    for _ in range(samples):
        ca = _sample_coords(model, rng, radius)
        cb = _sample_coords(model, rng, radius)
        try:
            res = _bol_residual(model, section_point(model, ca),
                                section_point(model, cb))
        except NoConvergence as exc:
            witnesses.append({"a": ca.tolist(), "b": cb.tolist(),
                              "error": str(exc)})
            residuals.append(np.inf)
            continue
        residuals.append(res)
        if res > 10 * tol and len(witnesses) < 5:
            witnesses.append(_minimize_witness(model, ca, cb, tol))
    verdict, max_res, gray = _verdict(residuals, tol)
    return PropertyReport("bol", model.entry.id, dict(model.params),
                          samples, tol, max_res, verdict, tuple(witnesses),
                          gray)


def _minimize_witness(model, ca, cb, tol) -> dict:
    """Shrink a failing (a, b) pair along its ray to a near-threshold witness."""
    lo, hi = 0.0, 1.0
    for _ in range(25):
        mid = 0.5 * (lo + hi)
        try:
            res = _bol_residual(model, section_point(model, mid * ca),
                                section_point(model, mid * cb))
        except NoConvergence:
            lo = mid
            continue
        if res > 10 * tol:
            hi = mid
        else:
            lo = mid
    res = _bol_residual(model, section_point(model, hi * ca),
                        section_point(model, hi * cb))
    return {"a": (hi * ca).tolist(), "b": (hi * cb).tolist(),
            "scale": hi, "residual": res}


# --- Bruck / Lie triple system ------------------------------------------------

def _component_split(pair: ReductivePair, v: AlgebraVector):
    """Coordinates of v in the (h, m) basis."""
    basis = [b.coeffs for b in pair.h.basis] + [b.coeffs for b in pair.m.basis]
    mat = np.array(basis).T
    sol, *_ = np.linalg.lstsq(mat, v.coeffs, rcond=None)
    resid = float(np.abs(mat @ sol - v.coeffs).max())
    if resid > 1e-9:
        raise AlgebraError("vector outside h + m")
    return sol[:pair.h.dim], sol[pair.h.dim:]


def binary_product(pair: ReductivePair, x: AlgebraVector, y: AlgebraVector):
    """m-component of [x, y] (the binary Lie-triple operation on m)."""
    _, m_part = _component_split(pair, bracket(pair.algebra, x, y))
    return m_part


def ternary_product(pair: ReductivePair, x: AlgebraVector, y: AlgebraVector,
                    z: AlgebraVector) -> AlgebraVector:
    """[[x, y]_h, z] (the ternary Lie-triple operation on m)."""
    h_part, _ = _component_split(pair, bracket(pair.algebra, x, y))
    acc = pair.algebra.zero()
    for c, hb in zip(h_part, pair.h.basis):
        acc = acc + float(c) * hb
    return bracket(pair.algebra, acc, z)


def check_bruck_tangent(pair: ReductivePair, tol: float = EXACT_TOL) -> PropertyReport:
    """m is a Lie triple system: [m, m] subseteq h (exact, basis pairs)."""
    residuals = []
    for i, x in enumerate(pair.m.basis):
        for y in pair.m.basis[i + 1:]:
            residuals.append(float(np.abs(binary_product(pair, x, y)).max()))
    max_res = max(residuals) if residuals else 0.0
    verdict = "pass" if max_res <= tol else "fail"
    ternary_ok = all(
        distance_to_span(pair.m.matrix, ternary_product(pair, x, y, z).coeffs) <= 1e-9
        for x in pair.m.basis for y in pair.m.basis for z in pair.m.basis)
    return PropertyReport("bruck_tangent", pair.entry_id, dict(pair.params),
                          len(residuals), tol, max_res, verdict,
                          details={"ternary_closed": ternary_ok})


def check_killing_orthogonal(pair: ReductivePair, tol: float = EXACT_TOL) -> PropertyReport:
    """m is orthogonal to h for the normalized Killing form."""
    residuals = [abs(killing_normalized_real(pair.algebra, m, h))
                 for m in pair.m.basis for h in pair.h.basis]
    max_res = max(residuals) if residuals else 0.0
    verdict = "pass" if max_res <= tol else "fail"
    return PropertyReport("killing_orthogonal", pair.entry_id, dict(pair.params),
                          len(residuals), tol, max_res, verdict)


# --- strong left alternativity ------------------------------------------------

def check_strong_left_alternative(model: SectionModel, samples: int = 100,
                                  tol: float = 1e-8, seed: int = 0,
                                  radius: float = 1.0) -> PropertyReport:
    """exp(sX) * exp(tX) = exp((s+t)X) along every sampled tangent ray."""
    rng = np.random.default_rng(seed)
    residuals, witnesses = [], []
    for _ in range(samples):
        direction = _sample_coords(model, rng, radius)
        s, t = rng.uniform(-1.2, 1.2, 2)
        try:
            lhs = loop_multiply(model, section_point(model, s * direction),
                                section_point(model, t * direction))
        except NoConvergence as exc:
            witnesses.append({"direction": direction.tolist(), "error": str(exc)})
            residuals.append(np.inf)
            continue
        rhs = section_point(model, (s + t) * direction)
        res = float(np.abs(coords_diff(model, lhs.coords, rhs.coords)).max())
        residuals.append(res)
        if res > 10 * tol:
            witnesses.append({"direction": direction.tolist(),
                              "s": float(s), "t": float(t), "residual": res})
    verdict, max_res, gray = _verdict(residuals, tol)
    return PropertyReport("strong_left_alternative", model.entry.id,
                          dict(model.params), samples, tol, max_res, verdict,
                          tuple(witnesses[:5]), gray)
