"""Section machinery: g = m*h decomposition, loop multiplication, divisions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from . import expmaps
from .catalog import CatalogEntry, ReductivePair, get_entry, instantiate
from .groups import (GroupElement, GroupError, identity, inverse, multiply,
                     group_distance, rotation, rotation_angle, _wrap_angle)
from .lie_core import AlgebraVector, check_reductive_pair


class NoConvergence(RuntimeError):
    """Decomposition solver found no solution from any start."""


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-8
    newton_tol: float = 1e-10
    max_iter: int = 80
    multistarts: int = 12
    radius: float = 2.0
    seed: int = 0


@dataclass(frozen=True)
class SectionModel:
    entry: CatalogEntry
    params: dict
    config: SolverConfig = SolverConfig()
    pair: ReductivePair = field(init=False)

    def __post_init__(self):
        pair = instantiate(self.entry, self.params)
        report = check_reductive_pair(pair.algebra, pair.h, pair.m)
        expected = self.entry.expected_report()
        for flag, value in report.as_dict().items():
            if expected[flag] and not value:
                raise GroupError(
                    f"{self.entry.id}: reductive flag {flag} fails at {self.params}")
        object.__setattr__(self, "pair", pair)

    @property
    def group(self) -> str:
        return self.entry.group

    @property
    def dim_m(self) -> int:
        return self.pair.m.dim

    @property
    def dim_h(self) -> int:
        return self.pair.h.dim

    def m_vector(self, coords) -> AlgebraVector:
        coords = np.asarray(coords, dtype=float)
        acc = self.pair.algebra.zero()
        for c, v in zip(coords, self.pair.m.basis):
            acc = acc + c * v
        return acc

    def h_vector(self, coords) -> AlgebraVector:
        coords = np.asarray(coords, dtype=float)
        acc = self.pair.algebra.zero()
        for c, v in zip(coords, self.pair.h.basis):
            acc = acc + c * v
        return acc

    def exp_m(self, coords) -> GroupElement:
        return expmaps.exp_in_group(self.group, self.m_vector(coords))

    def exp_h(self, coords) -> GroupElement:
        return expmaps.exp_in_group(self.group, self.h_vector(coords))

    def stabilizer_element(self, coords) -> GroupElement:
        """A stabilizer element at the given chart coordinates.

        For winding stabilizers this is the (rot u, rot nu) circle, which can
        differ from exp of the tangent line when the winding is not 1.
        """
        spec = self.entry.subgroup_spec(self.params)
        if spec is not None and spec.predicate == "h_n":
            n = int(spec.param("n", 1))
            u = float(np.asarray(coords).ravel()[0])
            first = rotation(u)
            if self.entry.alg.name.startswith("su2") or "PSU2" in self.group:
                first = first.astype(complex)
            return GroupElement(self.group, (first, rotation(n * u)))
        return self.exp_h(coords)


@dataclass(frozen=True)
class SectionPoint:
    """A point of the section image with its authoritative m-coordinates."""

    coords: np.ndarray
    element: GroupElement


@dataclass(frozen=True)
class Decomposition:
    X: AlgebraVector
    coords: np.ndarray
    h: GroupElement
    residual: float

    def point(self, model: SectionModel) -> SectionPoint:
        return SectionPoint(self.coords, model.exp_m(self.coords))


def section_point(model: SectionModel, coords) -> SectionPoint:
    coords = np.asarray(coords, dtype=float)
    return SectionPoint(coords, model.exp_m(coords))


def identity_point(model: SectionModel) -> SectionPoint:
    return section_point(model, np.zeros(model.dim_m))


# --- linear-algebra helpers ---------------------------------------------------

def _sym_sqrt_2x2(m: np.ndarray) -> np.ndarray:
    """Square root of a positive (Hermitian) 2x2 matrix with det 1."""
    tr = float(np.real(np.trace(m)))
    return (m + np.eye(2, dtype=m.dtype)) / np.sqrt(tr + 2.0)

def _log_spd_2x2(p: np.ndarray) -> np.ndarray:
    """Log of a positive (Hermitian) det-1 2x2 matrix; traceless output."""
    cosh_r = float(np.real(np.trace(p))) / 2.0
    cosh_r = max(cosh_r, 1.0)
    r = np.arccosh(cosh_r)
    if r < 1e-6:
        factor = 1.0 / (1.0 + r * r / 6.0)
    else:
        factor = r / np.sinh(r)
    return (p - cosh_r * np.eye(2, dtype=p.dtype)) * factor


def _flatten_element_diff(g1: GroupElement, g2: GroupElement) -> np.ndarray:
    """Componentwise difference, minimizing over the center sign per component."""
    pieces = []
    for p, q, modc in zip(g1.parts, g2.parts, g1.spec.mod_center):
        d = p - q
        if modc and np.linalg.norm(p + q) < np.linalg.norm(d):
            d = p + q
        arr = np.asarray(d)
        if np.iscomplexobj(arr):
            pieces.extend([arr.real.ravel(), arr.imag.ravel()])
        else:
            pieces.append(arr.astype(float).ravel())
    return np.concatenate(pieces)


def _h_defect(model: SectionModel, h_el: GroupElement) -> float:
    """Numeric distance of a would-be stabilizer element from the stabilizer."""
    spec = model.entry.subgroup_spec(model.params)
    if spec is None:
        return 0.0
    pred = spec.predicate
    if pred == "so2_in_psl2r":
        r = h_el.parts[0]
        return float(np.abs(r @ r.T - np.eye(2)).max())
    if pred == "psu2_in_psl2c":
        a = h_el.parts[0]
        return float(np.abs(a @ a.conj().T - np.eye(2)).max())
    if pred == "c2_stab":
        a, x = h_el.parts
        return max(float(np.abs(a @ a.T - np.eye(2)).max()),
                   float(np.abs(x - x.T).max()),
                   abs(float(np.trace(x))))
    if pred == "h_n":
        n = int(spec.param("n", 1))
        first, second = h_el.parts
        real = np.real(first)
        defect = max(float(np.abs(np.imag(first)).max()),
                     float(np.abs(real @ real.T - np.eye(2)).max()))
        t1 = rotation_angle(real)
        t2 = rotation_angle(second)
        angle = min(abs(_wrap_angle(n * (t1 + k * np.pi) - t2)) for k in (0, 1))
        return max(defect, angle)
    return 0.0


# --- decomposition strategies -------------------------------------------------

def decompose(model: SectionModel, g: GroupElement) -> Decomposition:
    if g.group != model.group:
        raise GroupError("element group does not match the model")
    strategy = model.entry.section_strategy
    if strategy == "hyp2":
        return _decompose_hyp2(model, g)
    if strategy == "c1":
        return _decompose_c1(model, g)
    if strategy == "c2":
        return _decompose_c2(model, g)
    if strategy == "dim4_3" and model.params.get("c") == 0:
        return _decompose_dim43_scheerer(model, g)
    return _decompose_generic(model, g)


def _finish(model: SectionModel, coords, g: GroupElement) -> Decomposition:
    coords = np.asarray(coords, dtype=float)
    x = model.m_vector(coords)
    m_el = model.exp_m(coords)
    h_el = multiply(inverse(m_el), g)
    residual = max(group_distance(multiply(m_el, h_el), g), _h_defect(model, h_el))
    return Decomposition(x, coords, h_el, residual)


def _decompose_hyp2(model: SectionModel, g: GroupElement) -> Decomposition:
    (a,) = g.parts
    p = _sym_sqrt_2x2(a @ a.T)
    hmat = _log_spd_2x2(p)
    coords = np.array([(hmat[0, 0] - hmat[1, 1]) / 2.0, hmat[0, 1]])
    return _finish(model, coords, g)


def _decompose_c1(model: SectionModel, g: GroupElement) -> Decomposition:
    (a,) = g.parts
    p = _sym_sqrt_2x2(a @ a.conj().T)
    hmat = _log_spd_2x2(p)
    # Hermitian traceless H = l1*T + l2*iU + l3*K
    coords = np.array([float(np.real(hmat[0, 1])),
                       float(np.imag(hmat[0, 1])),
                       float(np.real(hmat[0, 0]))])
    return _finish(model, coords, g)


def _decompose_c2(model: SectionModel, g: GroupElement) -> Decomposition:
    a, x = g.parts
    p = _sym_sqrt_2x2(a @ a.T)
    hmat = _log_spd_2x2(p)
    l2 = (hmat[0, 0] - hmat[1, 1]) / 2.0
    l3 = hmat[0, 1]
    # the antisymmetric coefficient of the translation part is affine-linear
    # in the first m-coordinate; solve it from two evaluations
    target_u = (x[0, 1] - x[1, 0]) / 2.0

    def antisym(l1):
        gamma = model.exp_m([l1, l2, l3]).parts[1]
        return (gamma[0, 1] - gamma[1, 0]) / 2.0

    a0 = antisym(0.0)
    slope = antisym(1.0) - a0
    l1 = (target_u - a0) / slope
    return _finish(model, [l1, l2, l3], g)


def _decompose_dim43_scheerer(model: SectionModel, g: GroupElement) -> Decomposition:
    a, second = g.parts
    n = int(model.params.get("n", 2))
    if n % 2:
        raise GroupError(
            "product-section decomposition needs an even winding n: the section "
            "set double-covers the cosets for odd n (odd-winding loops live on "
            "coverings of this group)")
    p = _sym_sqrt_2x2(a @ a.T)
    hmat = _log_spd_2x2(p)
    l1 = (hmat[0, 0] - hmat[1, 1]) / 2.0
    l2 = hmat[0, 1]
    rot_part = np.linalg.inv(p) @ a
    t = rotation_angle(rot_part) % np.pi          # representative in [0, pi)
    theta = rotation_angle(second)
    l3 = _wrap_angle(theta - n * t)
    return _finish(model, [l1, l2, l3], g)


def _decompose_generic(model: SectionModel, g: GroupElement) -> Decomposition:
    cfg = model.config
    dim = model.dim_m + model.dim_h

    def residual(z):
        candidate = multiply(model.exp_m(z[:model.dim_m]),
                             model.exp_h(z[model.dim_m:]))
        return _flatten_element_diff(candidate, g)

    rng = np.random.default_rng(cfg.seed)
    best = None
    starts = [np.zeros(dim)]
    for _ in range(cfg.multistarts - 1):
        starts.append(rng.uniform(-cfg.radius, cfg.radius, dim))
    for start in starts:
        try:
            sol = least_squares(residual, start, xtol=cfg.newton_tol,
                                ftol=cfg.newton_tol, gtol=cfg.newton_tol,
                                max_nfev=cfg.max_iter * (dim + 1))
        except Exception:
            continue
        err = float(np.linalg.norm(residual(sol.x), ord=np.inf))
        if best is None or err < best[0]:
            best = (err, sol.x)
        if err <= cfg.tol:
            break
    if best is None or best[0] > cfg.tol:
        raise NoConvergence(
            f"{model.entry.id}: no decomposition found (best residual "
            f"{best[0] if best else float('inf'):.3e})")
    return _finish(model, best[1][:model.dim_m], g)


# --- loop operations ----------------------------------------------------------

def loop_multiply(model: SectionModel, x: SectionPoint, y: SectionPoint) -> SectionPoint:
    product = multiply(x.element, y.element)
    return decompose(model, product).point(model)


def left_divide(model: SectionModel, a: SectionPoint, b: SectionPoint) -> SectionPoint:
    quotient = multiply(inverse(a.element), b.element)
    return decompose(model, quotient).point(model)


def coords_diff(model: SectionModel, c1, c2) -> np.ndarray:
    """Difference of section coordinates, respecting periodic charts."""
    d = np.asarray(c1, dtype=float) - np.asarray(c2, dtype=float)
    if model.entry.section_strategy == "dim4_3" and model.params.get("c") == 0:
        d[-1] = _wrap_angle(d[-1])
    return d


def right_divide(model: SectionModel, a: SectionPoint, b: SectionPoint) -> SectionPoint:
    """Solve x * a = b in section coordinates (x -> x*a is a diffeomorphism)."""
    cfg = model.config

    def residual(coords):
        product = loop_multiply(model, section_point(model, coords), a)
        return coords_diff(model, product.coords, b.coords)

    rng = np.random.default_rng(cfg.seed)
    best = None
    starts = [coords_diff(model, b.coords, a.coords), np.zeros(model.dim_m),
              np.asarray(b.coords, dtype=float)]
    for _ in range(cfg.multistarts):
        starts.append(rng.uniform(-cfg.radius, cfg.radius, model.dim_m))
    for start in starts:
        try:
            sol = least_squares(residual, start, xtol=cfg.newton_tol,
                                ftol=cfg.newton_tol, gtol=cfg.newton_tol,
                                max_nfev=cfg.max_iter * (model.dim_m + 1))
        except NoConvergence:
            continue
        err = float(np.linalg.norm(residual(sol.x), ord=np.inf))
        if best is None or err < best[0]:
            best = (err, sol.x)
        if err <= cfg.tol:
            break
    if best is None or best[0] > 1e-6:
        raise NoConvergence(f"{model.entry.id}: right division failed")
    return section_point(model, best[1])


def random_group_element(model: SectionModel, rng, radius: float = 1.5) -> GroupElement:
    """g = exp(Y1) exp(Y2), Y1 in m, Y2 in h (the documented sampling scheme)."""
    y1 = rng.uniform(-radius, radius, model.dim_m)
    y2 = rng.uniform(-radius, radius, model.dim_h)
    return multiply(model.exp_m(y1), model.exp_h(y2))


def model_for(entry_id: str, params: dict, config: SolverConfig = SolverConfig()) -> SectionModel:
    return SectionModel(get_entry(entry_id), dict(params), config)
