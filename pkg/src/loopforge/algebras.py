"""Concrete algebra registry: matrix realizations and structure constants.

Each registered algebra carries a faithful "payload" realization of its basis
(a tuple of matrices per basis vector) next to the abstract structure-constant
table.  Payloads are what the group layer conjugates and exponentiates; the
abstract table is what the bracket/Killing layer uses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lie_core import AlgebraError, AlgebraVector, LieAlgebra

# 2x2 building blocks
K2 = np.array([[1.0, 0.0], [0.0, -1.0]])
T2 = np.array([[0.0, 1.0], [1.0, 0.0]])
U2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
I2 = np.eye(2)

K2C = K2.astype(complex)
T2C = T2.astype(complex)
U2C = U2.astype(complex)

ZERO2 = np.zeros((2, 2))
ZERO2C = np.zeros((2, 2), dtype=complex)
SCAL0 = np.zeros((1, 1))


def _scal(t: float) -> np.ndarray:
    return np.array([[float(t)]])


def _e3(i: int, j: int) -> np.ndarray:
    m = np.zeros((3, 3))
    m[i, j] = 1.0
    return m


@dataclass(frozen=True)
class AlgebraDef:
    """An abstract algebra together with its matrix realization."""

    name: str
    algebra: LieAlgebra
    payload_kind: str            # "matrix" | "direct" | "semidirect"
    basis_payloads: tuple        # one payload (tuple of arrays) per basis vector
    bracket_scale: float         # abstract bracket = scale * payload bracket

    def payload(self, x: AlgebraVector):
        """Realize an AlgebraVector as its payload tuple."""
        if x.algebra is not self.algebra:
            raise AlgebraError(f"vector does not belong to {self.name}")
        return payload_combination(self.basis_payloads, x.coeffs)

    def coeffs_from_payload(self, payload, tol: float = 1e-10) -> np.ndarray:
        """Re-express a payload in the algebra basis (least squares + residual check)."""
        rows = np.array([flatten_payload(p) for p in self.basis_payloads])
        target = flatten_payload(payload)
        sol, *_ = np.linalg.lstsq(rows.T, target, rcond=None)
        residual = float(np.linalg.norm(rows.T @ sol - target))
        if residual > tol * max(1.0, float(np.linalg.norm(target))):
            raise AlgebraError(
                f"payload outside the realized span of {self.name} (residual {residual:.3e})")
        return sol

    def vector_from_payload(self, payload, tol: float = 1e-10) -> AlgebraVector:
        return AlgebraVector(self.algebra, self.coeffs_from_payload(payload, tol))

    def payload_bracket(self, p1, p2):
        return payload_bracket(self.payload_kind, p1, p2)


def payload_combination(basis_payloads, coeffs):
    parts = []
    for comp_idx in range(len(basis_payloads[0])):
        acc = np.zeros_like(basis_payloads[0][comp_idx])
        for c, payload in zip(coeffs, basis_payloads):
            acc = acc + c * payload[comp_idx]
        parts.append(acc)
    return tuple(parts)


def flatten_payload(payload) -> np.ndarray:
    pieces = []
    for part in payload:
        arr = np.asarray(part)
        if np.iscomplexobj(arr):
            pieces.extend([arr.real.ravel(), arr.imag.ravel()])
        else:
            pieces.append(arr.astype(float).ravel())
    return np.concatenate(pieces)


def payload_bracket(kind: str, p1, p2):
    """Bracket of realized elements: componentwise or semidirect pair rule."""
    if kind == "matrix":
        (a,), (b,) = p1, p2
        return (a @ b - b @ a,)
    if kind == "direct":
        return tuple(a @ b - b @ a if a.shape[0] > 1 else np.zeros_like(a)
                     for a, b in zip(p1, p2))
    if kind == "semidirect":
        (a1, x1), (a2, x2) = p1, p2
        return (a1 @ a2 - a2 @ a1,
                (x1 @ a2 - a2 @ x1) + (a1 @ x2 - x2 @ a1))
    raise AlgebraError(f"unknown payload kind {kind!r}")


def _structure_from_payloads(name, names, kind, payloads, scale) -> LieAlgebra:
    n = len(names)
    rows = np.array([flatten_payload(p) for p in payloads])
    structure = np.zeros((n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            br = payload_bracket(kind, payloads[i], payloads[j])
            target = flatten_payload(br) * scale
            sol, res, *_ = np.linalg.lstsq(rows.T, target, rcond=None)
            if np.linalg.norm(rows.T @ sol - target) > 1e-10:
                raise AlgebraError(f"{name}: basis brackets do not close")
            snapped = np.round(sol * 2) / 2  # catalog tables are half-integer valued
            if np.abs(snapped - sol).max() > 1e-9:
                raise AlgebraError(f"{name}: non half-integer structure constant")
            sol = snapped
            structure[i, j] = sol
            structure[j, i] = -sol
    return LieAlgebra(name, tuple(names), structure)


def _make(name, names, kind, payloads, scale=1.0) -> AlgebraDef:
    alg = _structure_from_payloads(name, names, kind, payloads, scale)
    return AlgebraDef(name, alg, kind, tuple(payloads), scale)


def _build_registry() -> dict:
    reg = {}

    # sl2(R) with basis K, T, U
    reg["sl2R"] = _make("sl2R", ("K", "T", "U"), "matrix",
                        [(K2,), (T2,), (U2,)])

    # sl2(C) as a real 6-dim algebra: K, T, U, iK, iT, iU
    reg["sl2C"] = _make(
        "sl2C", ("K", "T", "U", "iK", "iT", "iU"), "matrix",
        [(K2C,), (T2C,), (U2C,), (1j * K2C,), (1j * T2C,), (1j * U2C,)])

    # su2 with basis U, iK, iT (anti-Hermitian traceless)
    reg["su2"] = _make("su2", ("U", "iK", "iT"), "matrix",
                       [(U2C,), (1j * K2C,), (1j * T2C,)])

    # sl2 + sl2 (two commuting copies)
    reg["sl2R+sl2R"] = _make(
        "sl2R+sl2R", ("K1", "T1", "U1", "K2", "T2", "U2"), "direct",
        [(K2, ZERO2), (T2, ZERO2), (U2, ZERO2),
         (ZERO2, K2), (ZERO2, T2), (ZERO2, U2)])

    # su2 + R (compact factor with a central line)
    reg["su2+R"] = _make(
        "su2+R", ("U", "iK", "iT", "e1"), "direct",
        [(U2C, SCAL0), (1j * K2C, SCAL0), (1j * T2C, SCAL0), (ZERO2C, _scal(1.0))])

    # sl2 + R
    reg["sl2R+R"] = _make(
        "sl2R+R", ("K", "T", "U", "e1"), "direct",
        [(K2, SCAL0), (T2, SCAL0), (U2, SCAL0), (ZERO2, _scal(1.0))])

    # sl2 acting on R^2: 3x3 matrices with the plane in the first row
    K5 = np.zeros((3, 3)); K5[1:, 1:] = K2
    T5 = np.zeros((3, 3)); T5[1:, 1:] = T2
    U5 = np.zeros((3, 3)); U5[1:, 1:] = U2
    reg["sl2:R2"] = _make(
        "sl2:R2", ("K", "T", "U", "e1", "e2"), "matrix",
        [(K5,), (T5,), (U5,), (_e3(0, 1),), (_e3(0, 2),)])

    # sl2 acting on its own matrix space (pairs (a, x), x traceless 2x2).
    # The abstract table is normalized to half the matrix-pair bracket.
    reg["sl2:R3"] = _make(
        "sl2:R3", ("e1", "e2", "e3", "e4", "e5", "e6"), "semidirect",
        [(ZERO2, -U2), (K2, ZERO2), (T2, ZERO2), (U2, ZERO2),
         (ZERO2, -K2), (ZERO2, T2)],
        scale=0.5)

    # affine algebra of the plane, 3x3 with the plane in the first row
    reg["aff2"] = _make(
        "aff2", ("e1", "e2", "e3", "e4", "e5", "e6"), "matrix",
        [(_e3(1, 1),), (_e3(1, 2),), (_e3(2, 1),), (_e3(2, 2),),
         (_e3(0, 1),), (_e3(0, 2),)])

    # su2 acting on traceless Hermitian matrices (pairs (a, x)).
    # Normalized to half the matrix-pair bracket, like sl2:R3.
    X6 = 1j * K2C
    Y6 = 1j * T2C
    Z6 = -U2C
    V1 = np.array([[0, 1j], [-1j, 0]])
    V2 = T2C.copy()
    V3 = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
    reg["su2:R3"] = _make(
        "su2:R3", ("X", "Y", "Z", "V1", "V2", "V3"), "semidirect",
        [(X6, ZERO2C), (Y6, ZERO2C), (Z6, ZERO2C),
         (ZERO2C, V1), (ZERO2C, V2), (ZERO2C, V3)],
        scale=0.5)

    return reg


ALGEBRAS: dict = _build_registry()


def algebra(name: str) -> LieAlgebra:
    return ALGEBRAS[name].algebra


def algebra_def(name: str) -> AlgebraDef:
    return ALGEBRAS[name]
