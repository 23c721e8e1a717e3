"""Curated inventory of reductive pairs, parameter domains and statuses."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import algebra
from .groups import SubgroupSpec
from .lie_core import AlgebraError, AlgebraVector, LieAlgebra, Subspace, check_reductive_pair


class DomainError(AlgebraError):
    """Parameter outside an entry's domain."""


@dataclass(frozen=True)
class ReductivePair:
    entry_id: str
    params: dict
    algebra: LieAlgebra
    h: Subspace
    m: Subspace


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    algebra_name: str
    group: str
    description: str
    h_coeffs: tuple                     # tuples of basis coefficients
    m_family: object                    # params dict -> tuple of coefficient tuples
    param_names: tuple
    constraints: tuple                  # (callable params -> bool, message)
    sample_params: tuple                # in-domain parameter points
    excluded: tuple                     # (params, failing_flag, note)
    expected_status: str
    expected_flags: tuple = ()          # documented deviations from all-true flags
    status_overrides: tuple = ()        # (condition callable, status)
    subgroup: SubgroupSpec | None = None
    section_strategy: str = "generic"
    notes: str = ""

    @property
    def alg(self) -> LieAlgebra:
        return algebra(self.algebra_name)

    def check_domain(self, params: dict):
        for name in self.param_names:
            if name not in params:
                raise DomainError(f"{self.id}: missing parameter {name!r}")
        for cond, message in self.constraints:
            if not cond(params):
                raise DomainError(f"{self.id}: {message}")

    def status_for(self, params: dict) -> str:
        for cond, status in self.status_overrides:
            if cond(params):
                return status
        return self.expected_status

    def expected_report(self) -> dict:
        flags = {"direct_sum": True, "h_subalgebra": True,
                 "bracket_condition": True, "generates": True}
        flags.update(dict(self.expected_flags))
        return flags

    def h_subspace(self) -> Subspace:
        alg = self.alg
        return Subspace(alg, tuple(alg.vector(c) for c in self.h_coeffs))

    def m_subspace(self, params: dict) -> Subspace:
        alg = self.alg
        return Subspace(alg, tuple(alg.vector(c) for c in self.m_family(params)))

    def subgroup_spec(self, params: dict | None = None) -> SubgroupSpec:
        spec = self.subgroup
        if spec is not None and spec.predicate == "h_n" and params is not None:
            # the product-section case realizes the stabilizer with an even
            # winding (x -> x^n is a homomorphism on the rotation circle of
            # the 2x2 quotient group only for even n); odd windings live on
            # coverings of this quotient
            default = 2 if (self.section_strategy == "dim4_3"
                            and params.get("c") == 0) else int(spec.param("n", 1))
            n = int(params.get("n", default))
            return SubgroupSpec(spec.group, "h_n", (("n", n),))
        return spec


def instantiate(entry: CatalogEntry, params: dict) -> ReductivePair:
    entry.check_domain(params)
    return ReductivePair(entry.id, dict(params), entry.alg,
                         entry.h_subspace(), entry.m_subspace(params))


def _coeff(alg_name, **named) -> tuple:
    alg = algebra(alg_name)
    c = np.zeros(alg.dim)
    for name, value in named.items():
        c[alg.basis_names.index(name)] = value
    return tuple(c)


def _build_entries() -> tuple:
    entries = []

    # --- C1: PSL2(C) over the unitary stabilizer ---------------------------
    def m_c1(p):
        a = p["a"]
        return (_coeff("sl2C", T=1, iT=a),
                _coeff("sl2C", iU=1, U=-a),
                _coeff("sl2C", K=1, iK=a))
    entries.append(CatalogEntry(
        id="C1", algebra_name="sl2C", group="PSL2C",
        description="complex 2x2 group over its compact real form; one-parameter "
                    "family of complements",
        h_coeffs=(_coeff("sl2C", U=1), _coeff("sl2C", iT=1), _coeff("sl2C", iK=1)),
        m_family=m_c1, param_names=("a",),
        constraints=(),
        sample_params=({"a": -1.3}, {"a": 0.0}, {"a": 0.6}, {"a": 2.0}, {"a": 5.0}),
        excluded=(),
        expected_status="global_left_A",
        status_overrides=((lambda p: p["a"] == 0, "global_bruck"),),
        subgroup=SubgroupSpec("PSL2C", "psu2_in_psl2c"),
        section_strategy="c1",
    ))

    # --- DIAG: two commuting copies with the diagonal stabilizer -----------
    def m_diag(p):
        lam = p["lambda"]
        return (_coeff("sl2R+sl2R", K1=1, K2=lam),
                _coeff("sl2R+sl2R", T1=1, T2=lam),
                _coeff("sl2R+sl2R", U1=1, U2=lam))
    entries.append(CatalogEntry(
        id="DIAG", algebra_name="sl2R+sl2R", group="PSL2RxPSL2R",
        description="product of two hyperbolic-plane groups over the diagonal",
        h_coeffs=(_coeff("sl2R+sl2R", K1=1, K2=1),
                  _coeff("sl2R+sl2R", T1=1, T2=1),
                  _coeff("sl2R+sl2R", U1=1, U2=1)),
        m_family=m_diag, param_names=("lambda",),
        constraints=((lambda p: p["lambda"] not in (0.0, 1.0), "lambda not in {0, 1}"),),
        sample_params=({"lambda": -1.0}, {"lambda": 0.5}, {"lambda": 2.0},
                       {"lambda": 3.0}, {"lambda": -2.5}),
        excluded=(({"lambda": 0.0}, "generates", "first factor only is generated"),
                  ({"lambda": 1.0}, "direct_sum", "complement equals the stabilizer")),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSL2RxPSL2R", "diagonal"),
    ))

    # --- COMPACT: compact factor times a circle ----------------------------
    def m_compact(p):
        a = p["a"]
        return (_coeff("su2+R", iK=1),
                _coeff("su2+R", iT=1),
                _coeff("su2+R", U=a, e1=1 + a))
    entries.append(CatalogEntry(
        id="COMPACT", algebra_name="su2+R", group="PSU2xSO2",
        description="compact group times a circle over a winding one-parameter "
                    "subgroup",
        h_coeffs=(_coeff("su2+R", U=1, e1=1),),
        m_family=m_compact, param_names=("a",),
        constraints=((lambda p: p["a"] != -1.0, "a != -1"),),
        sample_params=({"a": 0.0}, {"a": 1.0}, {"a": -0.75}, {"a": 2.0}, {"a": -3.0}),
        excluded=(({"a": -1.0}, "generates", "only the compact factor is generated"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSU2xSO2", "h_n", (("n", 1),)),
    ))

    # --- DIM4 families: sl2 + line -----------------------------------------
    def m_dim41(p):
        a = p["a"]
        return (_coeff("sl2R+R", U=1), _coeff("sl2R+R", T=1),
                _coeff("sl2R+R", K=a, e1=1 + a))
    entries.append(CatalogEntry(
        id="DIM4-1", algebra_name="sl2R+R", group="PSL2RxRplus",
        description="4-dim family over the hyperbolic one-parameter subgroup",
        h_coeffs=(_coeff("sl2R+R", K=1, e1=1),),
        m_family=m_dim41, param_names=("a",),
        constraints=((lambda p: p["a"] != -1.0, "a != -1"),),
        sample_params=({"a": 0.0}, {"a": 1.0}, {"a": -0.75}, {"a": 2.0}, {"a": -3.0}),
        excluded=(({"a": -1.0}, "generates", "only the simple factor is generated"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSL2RxRplus", "line_exp",
                              (("direction", (1.0, 0.0, 0.0, 1.0)),)),
    ))

    def m_dim42(p):
        b = p["b"]
        return (_coeff("sl2R+R", U=1, T=1), _coeff("sl2R+R", K=1),
                _coeff("sl2R+R", U=1, e1=2 * b))
    entries.append(CatalogEntry(
        id="DIM4-2", algebra_name="sl2R+R", group="PSL2RxRplus",
        description="4-dim family over the parabolic one-parameter subgroup",
        h_coeffs=(_coeff("sl2R+R", U=1, T=1, e1=2),),
        m_family=m_dim42, param_names=("b",),
        constraints=((lambda p: p["b"] != 0.0, "b != 0"),),
        sample_params=({"b": 1.0}, {"b": -1.0}, {"b": 0.5}, {"b": 2.0}, {"b": -0.3}),
        excluded=(({"b": 0.0}, "generates", "only the simple factor is generated"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSL2RxRplus", "line_exp",
                              (("direction", (0.0, 1.0, 1.0, 2.0)),)),
    ))

    def m_dim43(p):
        c = p["c"]
        return (_coeff("sl2R+R", K=1), _coeff("sl2R+R", T=1),
                _coeff("sl2R+R", U=c, e1=1 + c))
    entries.append(CatalogEntry(
        id="DIM4-3", algebra_name="sl2R+R", group="PSL2RxSO2",
        description="4-dim family over the elliptic winding subgroups; c=0 is the "
                    "globally defined product-section case",
        h_coeffs=(_coeff("sl2R+R", U=1, e1=1),),
        m_family=m_dim43, param_names=("c",),
        constraints=((lambda p: p["c"] != -1.0, "c != -1"),),
        sample_params=({"c": 0.0}, {"c": 1.0}, {"c": -2.0}, {"c": 0.7}, {"c": -0.5}),
        excluded=(({"c": -1.0}, "generates", "only the simple factor is generated"),),
        expected_status="not_global",
        status_overrides=((lambda p: p["c"] == 0, "global_bol_scheerer"),),
        subgroup=SubgroupSpec("PSL2RxSO2", "h_n", (("n", 1),)),
        section_strategy="dim4_3",
    ))

    # --- DIM5: sl2 acting on the plane -------------------------------------
    def m_dim5(p):
        b = p["b"]
        return (_coeff("sl2:R2", e2=1),
                _coeff("sl2:R2", U=1, e1=b),
                _coeff("sl2:R2", T=1, e1=-b))
    entries.append(CatalogEntry(
        id="DIM5", algebra_name="sl2:R2", group="SA2",
        description="5-dim special affine group of the plane; the stated family "
                    "is reductive only at b=0 (the bracket condition fails for "
                    "b != 0 in the honest matrix algebra)",
        h_coeffs=(_coeff("sl2:R2", K=1), _coeff("sl2:R2", e1=1)),
        m_family=m_dim5, param_names=("b",),
        constraints=(),
        sample_params=({"b": 0.0},),
        excluded=(({"b": 1.0}, "bracket_condition",
                   "mixed bracket leaves the complement for b != 0"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("SA2", "dim5_h"),
    ))

    # --- DIM6 families on the motion-type semidirect product ---------------
    def m_dim6i(p):
        b2, b3 = p["b2"], p["b3"]
        return (_coeff("sl2:R3", e5=1),
                _coeff("sl2:R3", e3=1, e1=-b3, e6=-b2),
                _coeff("sl2:R3", e4=1, e1=b2, e6=b3))
    entries.append(CatalogEntry(
        id="DIM6-i", algebra_name="sl2:R3", group="PSL2R:M2",
        description="6-dim family over the hyperbolic-translation stabilizer",
        h_coeffs=(_coeff("sl2:R3", e1=1), _coeff("sl2:R3", e2=1),
                  _coeff("sl2:R3", e6=1)),
        m_family=m_dim6i, param_names=("b2", "b3"),
        constraints=(),
        sample_params=({"b2": 0.0, "b3": 0.0}, {"b2": 1.0, "b3": 0.0},
                       {"b2": 0.0, "b3": 1.0}, {"b2": 2.0, "b3": -0.5},
                       {"b2": -1.0, "b3": 3.0}),
        excluded=(),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSL2R:M2", "dim6i_h"),
    ))

    def m_dim6ii(p):
        a = p["a"]
        return (_coeff("sl2:R3", e1=1, e4=a),
                _coeff("sl2:R3", e6=1, e3=-a),
                _coeff("sl2:R3", e5=1, e2=a))
    entries.append(CatalogEntry(
        id="DIM6-ii", algebra_name="sl2:R3", group="PSL2R:M2",
        description="6-dim family over the simple-factor stabilizer",
        h_coeffs=(_coeff("sl2:R3", e2=1), _coeff("sl2:R3", e3=1),
                  _coeff("sl2:R3", e4=1)),
        m_family=m_dim6ii, param_names=("a",),
        constraints=((lambda p: p["a"] != 0.0, "a != 0"),),
        sample_params=({"a": 1.0}, {"a": -1.0}, {"a": 0.5}, {"a": 2.0}, {"a": -2.0}),
        excluded=(({"a": 0.0}, "generates", "translations only are generated"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSL2R:M2", "dim6ii_h"),
    ))

    # --- C2: global two-parameter family on the same group ------------------
    def m_c2(p):
        b1, b2 = p["b1"], p["b2"]
        return (_coeff("sl2:R3", e1=1),
                _coeff("sl2:R3", e2=1, e6=b1, e5=b2),
                _coeff("sl2:R3", e3=1, e6=-b2, e5=b1))
    entries.append(CatalogEntry(
        id="C2", algebra_name="sl2:R3", group="PSL2R:M2",
        description="two-parameter global family over the rotation-translation "
                    "stabilizer",
        h_coeffs=(_coeff("sl2:R3", e4=1), _coeff("sl2:R3", e5=1),
                  _coeff("sl2:R3", e6=1)),
        m_family=m_c2, param_names=("b1", "b2"),
        constraints=(),
        sample_params=({"b1": 0.0, "b2": 0.0}, {"b1": 0.0, "b2": 1.0},
                       {"b1": 2.0, "b2": -0.5}, {"b1": 1.0, "b2": 1.0},
                       {"b1": -0.5, "b2": 2.0}),
        excluded=(),
        expected_status="global_left_A",
        status_overrides=((lambda p: p["b2"] == 0, "global_bruck"),),
        subgroup=SubgroupSpec("PSL2R:M2", "c2_stab"),
        section_strategy="c2",
    ))

    # --- AFF: affine group of the plane -------------------------------------
    entries.append(CatalogEntry(
        id="AFF", algebra_name="aff2", group="AFF2",
        description="affine group of the plane over the triangular stabilizer; "
                    "the complement closes into the 5-dim unimodular subalgebra, "
                    "so the generation flag is documented false",
        h_coeffs=(_coeff("aff2", e1=1), _coeff("aff2", e4=1), _coeff("aff2", e5=1)),
        m_family=lambda p: (_coeff("aff2", e2=1), _coeff("aff2", e3=1),
                            _coeff("aff2", e6=1)),
        param_names=(), constraints=(), sample_params=({},),
        excluded=(),
        expected_status="not_global",
        expected_flags=(("generates", False),),
        subgroup=SubgroupSpec("AFF2", "aff_h"),
    ))

    # --- EUC: euclidean-motion-type compact semidirect product --------------
    def m_euc(p):
        a = p["a"]
        return (_coeff("su2:R3", V1=1, Z=a),
                _coeff("su2:R3", V2=1, Y=a),
                _coeff("su2:R3", V3=1, X=-a))
    entries.append(CatalogEntry(
        id="EUC", algebra_name="su2:R3", group="PSU2:H2",
        description="compact rotations acting on traceless Hermitian translations",
        h_coeffs=(_coeff("su2:R3", X=1), _coeff("su2:R3", Y=1),
                  _coeff("su2:R3", Z=1)),
        m_family=m_euc, param_names=("a",),
        constraints=((lambda p: p["a"] != 0.0, "a != 0"),),
        sample_params=({"a": 1.0}, {"a": -1.0}, {"a": 0.5}, {"a": 2.0}, {"a": -0.7}),
        excluded=(({"a": 0.0}, "generates", "translations only are generated"),),
        expected_status="not_global",
        subgroup=SubgroupSpec("PSU2:H2", "euc_stab"),
    ))

    # --- HYP2 helper: hyperbolic plane loop ----------------------------------
    entries.append(CatalogEntry(
        id="HYP2", algebra_name="sl2R", group="PSL2R",
        description="hyperbolic plane loop (2-dim helper section reused by the "
                    "global two-parameter family)",
        h_coeffs=(_coeff("sl2R", U=1),),
        m_family=lambda p: (_coeff("sl2R", K=1), _coeff("sl2R", T=1)),
        param_names=(), constraints=(), sample_params=({},),
        excluded=(),
        expected_status="helper",
        subgroup=SubgroupSpec("PSL2R", "so2_in_psl2r"),
        section_strategy="hyp2",
    ))

    return tuple(entries)


_ENTRIES = _build_entries()
_BY_ID = {e.id: e for e in _ENTRIES}


def list_entries() -> list:
    return list(_ENTRIES)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise DomainError(f"unknown catalog entry {entry_id!r}") from None


# --- explicit automorphisms between family members ---------------------------

def automorphism_matrix(map_id: str, params: dict, alg: LieAlgebra) -> np.ndarray:
    """Column i is the image of basis vector i in the algebra basis."""
    names = alg.basis_names
    n = alg.dim
    mat = np.zeros((n, n))

    def set_image(src, **images):
        col = names.index(src)
        for dst, coeff in images.items():
            mat[names.index(dst), col] = coeff

    if map_id == "conj_phi":
        if alg.name != "sl2C":
            raise DomainError("conj_phi acts on the complex 2x2 algebra")
        for nm in names:
            set_image(nm, **{nm: -1.0 if nm.startswith("i") else 1.0})
        return mat

    if map_id == "beta":
        if alg.name != "sl2:R3":
            raise DomainError("beta acts on the 6-dim motion-type algebra")
        b1 = float(params["b1"])
        b2 = float(params["b2"])
        if b2 == 0:
            raise DomainError("beta requires b2 != 0")
        c = params.get("c", 1.0 / b2)
        d = params.get("d", 0.0)
        r = np.hypot(c, d)
        eps = 1.0 if b2 > 0 else -1.0
        if abs(eps * r - 1.0 / b2) > 1e-9:
            raise DomainError("beta parameters must satisfy eps*sqrt(c^2+d^2) = 1/b2")
        set_image("e1", e1=r)
        set_image("e2", e2=c / r, e3=-d / r, e6=-c * b1, e5=d * b1)
        set_image("e3", e3=c / r, e2=d / r, e6=-d * b1, e5=-c * b1)
        set_image("e4", e4=1.0)
        set_image("e5", e5=c, e6=d)
        set_image("e6", e5=-d, e6=c)
        if b2 < 0:
            # the displayed map lands on the b2 = -1 representative; compose
            # with the sign involution (e1, e5, e6) -> -(e1, e5, e6), an
            # automorphism fixing the stabilizer, to reach the b2 = 1 one
            sign = np.diag([-1.0, 1.0, 1.0, 1.0, -1.0, -1.0])
            mat = sign @ mat
        return mat

    if map_id == "euc_phi":
        if alg.name != "su2:R3":
            raise DomainError("euc_phi acts on the compact motion-type algebra")
        a = float(params["a"])
        if a == 0:
            raise DomainError("euc_phi requires a != 0")
        s3 = np.sqrt(3.0) / 2.0
        set_image("X", X=-1.0)
        set_image("Y", Y=-0.5, Z=s3)
        set_image("Z", Y=s3, Z=0.5)
        set_image("V1", V1=a * 0.5, V2=a * s3)
        set_image("V2", V1=a * s3, V2=-a * 0.5)
        set_image("V3", V3=-a)
        return mat

    raise DomainError(f"unknown automorphism map {map_id!r}")


def automorphism_image(map_id: str, params: dict, pair: ReductivePair) -> Subspace:
    mat = automorphism_matrix(map_id, params, pair.algebra)
    images = tuple(AlgebraVector(pair.algebra, mat @ v.coeffs) for v in pair.m.basis)
    return Subspace(pair.algebra, images)


def reductivity_report(entry: CatalogEntry, params: dict):
    pair = instantiate(entry, params)
    return check_reductive_pair(pair.algebra, pair.h, pair.m)
