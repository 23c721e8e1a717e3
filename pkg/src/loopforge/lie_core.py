"""Structure-constant Lie algebras: brackets, Killing forms, subspaces, closures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

RANK_TOL = 1e-10
JACOBI_TOL = 1e-12


class AlgebraError(ValueError):
    """Domain error for algebra-level operations."""


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional real Lie algebra given by a named basis and structure constants.

    ``structure[i, j, k]`` is the coefficient of basis vector ``k`` in
    ``[b_i, b_j]``.
    """

    name: str
    basis_names: tuple
    structure: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.structure, dtype=float)
        object.__setattr__(self, "structure", c)
        n = self.dim
        if c.shape != (n, n, n):
            raise AlgebraError(f"structure table must be {n}x{n}x{n}")
        if not np.array_equal(c, -np.swapaxes(c, 0, 1)):
            raise AlgebraError(f"{self.name}: structure constants are not antisymmetric")
        if self.jacobi_residual() > JACOBI_TOL:
            raise AlgebraError(f"{self.name}: Jacobi identity fails "
                               f"(residual {self.jacobi_residual():.3e})")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def jacobi_residual(self) -> float:
        """Max norm of [[x,y],z]+[[y,z],x]+[[z,x],y] over all basis triples."""
        c = self.structure
        # [[b_i, b_j], b_k] = c[i,j,m] c[m,k,l]
        d = np.einsum("ijm,mkl->ijkl", c, c)
        cyc = d + np.transpose(d, (1, 2, 0, 3)) + np.transpose(d, (2, 0, 1, 3))
        return float(np.abs(cyc).max())

    def vector(self, coeffs) -> "AlgebraVector":
        return AlgebraVector(self, np.asarray(coeffs, dtype=float))

    def basis_vector(self, idx_or_name) -> "AlgebraVector":
        if isinstance(idx_or_name, str):
            idx = self.basis_names.index(idx_or_name)
        else:
            idx = idx_or_name
        coeffs = np.zeros(self.dim)
        coeffs[idx] = 1.0
        return AlgebraVector(self, coeffs)

    def zero(self) -> "AlgebraVector":
        return AlgebraVector(self, np.zeros(self.dim))

    def ad(self, x: "AlgebraVector") -> np.ndarray:
        """Matrix of ad_x: y -> [x, y] in the algebra basis."""
        self._check_owner(x)
        return np.einsum("ijk,i->kj", self.structure, x.coeffs)

    def _check_owner(self, *vectors):
        for v in vectors:
            if v.algebra is not self:
                raise AlgebraError("vector does not belong to this algebra")


@dataclass(frozen=True)
class AlgebraVector:
    """Coefficient vector over a LieAlgebra basis."""

    algebra: LieAlgebra
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        object.__setattr__(self, "coeffs", c)
        if c.shape != (self.algebra.dim,):
            raise AlgebraError("coefficient length must equal the algebra dimension")

    def __add__(self, other: "AlgebraVector") -> "AlgebraVector":
        self.algebra._check_owner(other)
        return AlgebraVector(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other: "AlgebraVector") -> "AlgebraVector":
        self.algebra._check_owner(other)
        return AlgebraVector(self.algebra, self.coeffs - other.coeffs)

    def __mul__(self, scalar: float) -> "AlgebraVector":
        return AlgebraVector(self.algebra, self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "AlgebraVector":
        return AlgebraVector(self.algebra, -self.coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of a LieAlgebra spanned by an independent basis."""

    algebra: LieAlgebra
    basis: tuple

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        self.algebra._check_owner(*basis)
        if basis and numeric_rank(self.matrix) != len(basis):
            raise AlgebraError("subspace basis is not linearly independent")

    @property
    def matrix(self) -> np.ndarray:
        """Rows are basis coefficient vectors (shape n_basis x dim)."""
        if not self.basis:
            return np.zeros((0, self.algebra.dim))
        return np.array([v.coeffs for v in self.basis])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: AlgebraVector, tol: float = RANK_TOL) -> bool:
        return distance_to_span(self.matrix, x.coeffs) <= tol * max(1.0, float(np.linalg.norm(x.coeffs)))

    def project_coords(self, x: AlgebraVector) -> np.ndarray:
        """Least-squares coordinates of x in this basis."""
        sol, *_ = np.linalg.lstsq(self.matrix.T, x.coeffs, rcond=None)
        return sol


def numeric_rank(matrix: np.ndarray, tol: float = RANK_TOL) -> int:
    m = np.atleast_2d(np.asarray(matrix, dtype=float))
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def distance_to_span(span_rows: np.ndarray, vec: np.ndarray) -> float:
    """Euclidean distance from vec to the row span of span_rows."""
    if span_rows.size == 0:
        return float(np.linalg.norm(vec))
    sol, *_ = np.linalg.lstsq(span_rows.T, vec, rcond=None)
    return float(np.linalg.norm(span_rows.T @ sol - vec))


def subspace_equal(a: Subspace, b: Subspace, tol: float = RANK_TOL) -> bool:
    """Mutual containment of the spanning sets within tol."""
    if a.algebra is not b.algebra:
        raise AlgebraError("subspaces live in different algebras")
    return (all(b.contains(v, tol) for v in a.basis)
            and all(a.contains(v, tol) for v in b.basis))


def bracket(alg: LieAlgebra, x: AlgebraVector, y: AlgebraVector) -> AlgebraVector:
    """Bilinear extension of the structure table."""
    if x.algebra is not alg or y.algebra is not alg:
        raise AlgebraError("bracket arguments must belong to the given algebra")
    return AlgebraVector(alg, np.einsum("ijk,i,j->k", alg.structure, x.coeffs, y.coeffs))


# --- Normalized Killing forms -------------------------------------------------
#
# The normalized form is (1/8) trace(ad X ad Y) on each simple 2x2-matrix
# algebra.  On sl2R in the (K, T, U) basis this is the quadratic form
# l1*m1 + l2*m2 - l3*m3; on su2 in the (U, iK, iT) basis it is negative
# definite; sl2C carries the complex polarization (real algebra of dim 6,
# coordinates l1..l6 with z_j = l_j + i*l_{3+j}).

_KILLING_SUPPORTED = ("sl2R", "sl2C", "su2")


def killing_normalized(alg: LieAlgebra, x: AlgebraVector, y: AlgebraVector):
    """Normalized Killing form; complex-valued on sl2C, real otherwise."""
    if x.algebra is not alg or y.algebra is not alg:
        raise AlgebraError("arguments must belong to the given algebra")
    if alg.name == "sl2R":
        l, m = x.coeffs, y.coeffs
        return float(l[0] * m[0] + l[1] * m[1] - l[2] * m[2])
    if alg.name == "su2":
        l, m = x.coeffs, y.coeffs
        return float(-(l[0] * m[0] + l[1] * m[1] + l[2] * m[2]))
    if alg.name == "sl2C":
        l, m = x.coeffs, y.coeffs
        zx = l[:3] + 1j * l[3:]
        zy = m[:3] + 1j * m[3:]
        return complex(zx[0] * zy[0] + zx[1] * zy[1] - zx[2] * zy[2])
    raise AlgebraError(f"killing_normalized unsupported for algebra {alg.name!r}")


def killing_normalized_real(alg: LieAlgebra, x: AlgebraVector, y: AlgebraVector) -> float:
    """Real restriction of the normalized Killing form."""
    value = killing_normalized(alg, x, y)
    return float(np.real(value))


def generated_subalgebra(alg: LieAlgebra, s: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing s (rank saturation)."""
    if s.algebra is not alg:
        raise AlgebraError("subspace does not belong to the given algebra")
    rows = [v.coeffs for v in s.basis]
    if not rows:
        return Subspace(alg, ())
    current = _independent_rows(np.array(rows))
    for _ in range(alg.dim + 1):
        vecs = [AlgebraVector(alg, r) for r in current]
        new_rows = list(current)
        for i, x in enumerate(vecs):
            for y in vecs[i + 1:]:
                new_rows.append(bracket(alg, x, y).coeffs)
        nxt = _independent_rows(np.array(new_rows))
        if nxt.shape[0] == current.shape[0]:
            return Subspace(alg, tuple(AlgebraVector(alg, r) for r in current))
        current = nxt
    raise AlgebraError("generation closure did not stabilize (internal error)")


def _independent_rows(rows: np.ndarray) -> np.ndarray:
    """Row-reduce to an independent spanning subset (SVD-based projector chain)."""
    kept = np.zeros((0, rows.shape[1]))
    for r in rows:
        if distance_to_span(kept, r) > RANK_TOL * max(1.0, float(np.linalg.norm(r))):
            kept = np.vstack([kept, r])
    return kept


@dataclass(frozen=True)
class ReductiveReport:
    direct_sum: bool
    h_subalgebra: bool
    bracket_condition: bool
    generates: bool

    @property
    def all_true(self) -> bool:
        return self.direct_sum and self.h_subalgebra and self.bracket_condition and self.generates

    def as_dict(self) -> dict:
        return {
            "direct_sum": self.direct_sum,
            "h_subalgebra": self.h_subalgebra,
            "bracket_condition": self.bracket_condition,
            "generates": self.generates,
        }


def check_reductive_pair(alg: LieAlgebra, h: Subspace, m: Subspace) -> ReductiveReport:
    """Check g = m + h (direct), h a subalgebra, [h, m] in m, and m generating."""
    if h.algebra is not alg or m.algebra is not alg:
        raise AlgebraError("subspaces must belong to the given algebra")
    stacked = np.vstack([h.matrix, m.matrix]) if (h.dim or m.dim) else np.zeros((0, alg.dim))
    direct_sum = (h.dim + m.dim == alg.dim) and numeric_rank(stacked) == alg.dim
    h_subalgebra = all(
        h.contains(bracket(alg, x, y))
        for i, x in enumerate(h.basis) for y in h.basis[i + 1:]
    )
    bracket_condition = all(
        m.contains(bracket(alg, x, y)) for x in h.basis for y in m.basis
    )
    generates = generated_subalgebra(alg, m).dim == alg.dim
    return ReductiveReport(direct_sum, h_subalgebra, bracket_condition, generates)


def load_structure_file(source) -> LieAlgebra:
    """Load a LieAlgebra from the JSON structure-constant format.

    Format: {"name": str (optional), "dim": n, "names": [...],
    "brackets": [[i, j, [coeffs]], ...]} listing only i < j pairs;
    antisymmetry is filled in by this loader.
    """
    if isinstance(source, (str, bytes)):
        with open(source) as fh:
            doc = json.load(fh)
    elif hasattr(source, "read"):
        doc = json.load(source)
    else:
        doc = source
    n = int(doc["dim"])
    names = tuple(doc["names"])
    if len(names) != n:
        raise AlgebraError("names length must equal dim")
    structure = np.zeros((n, n, n))
    for i, j, coeffs in doc.get("brackets", []):
        if not (0 <= i < j < n):
            raise AlgebraError(f"bracket entry ({i}, {j}) must satisfy 0 <= i < j < dim")
        c = np.asarray(coeffs, dtype=float)
        if c.shape != (n,):
            raise AlgebraError("bracket coefficient list has wrong length")
        structure[i, j] = c
        structure[j, i] = -c
    return LieAlgebra(doc.get("name", "custom"), names, structure)
