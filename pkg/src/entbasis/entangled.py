"""Maximally entangled vectors and bases of C^d tensor C^d.

The central tool is the correspondence between vectors and operators: every
vector Phi in C^d tensor C^d is (X tensor I) Omega for a unique d x d matrix
X, where Omega is the canonical maximally entangled vector. Under this map

    <Phi, Psi>            = (1/d) tr(X_Phi^dag X_Psi)
    (X tensor I) Omega    = (I tensor X^T) Omega
    reduced density, left = (1/d) X X^dag
    reduced density, right= (1/d) X^T conj(X)
    Phi maximally entangled  iff  X unitary

so orthonormal bases of maximally entangled vectors are exactly families of
d^2 unitaries orthonormal in the normalized trace inner product. The
shift-and-multiply construction below produces such families from d complex
Hadamard matrices and a Latin square.

All transposes and conjugates are taken in the canonical basis, which is
also the Schmidt basis of Omega; this one global convention makes each
identity above literally testable.
"""

from dataclasses import dataclass, field

import numpy as np

from .hadamard import is_hadamard, validate_latin_square, fourier_hadamard, cyclic_latin_square
from .linalg import StateVector, schmidt

__all__ = [
    "omega",
    "vector_from_operator",
    "operator_from_vector",
    "reduced_density",
    "is_max_entangled",
    "MaxEntanglementReport",
    "UnitaryBasis",
    "EntangledBasis",
    "BasisReport",
    "verify_unitary_basis",
    "verify_entangled_basis",
    "shift_multiply_basis",
    "fourier_basis",
    "basis_matrix",
]


def omega(d):
    """Canonical maximally entangled vector (1/sqrt(d)) sum_a e_a tensor e_a."""
    if d < 1:
        raise ValueError("dimension must be positive")
    amps = np.zeros(d * d, dtype=complex)
    amps[:: d + 1] = 1.0 / np.sqrt(d)
    return StateVector(d, d, amps)


def vector_from_operator(x, d=None):
    """(X tensor I) Omega: amplitudes[i*d+j] = X[i,j]/sqrt(d)."""
    x = np.asarray(x, dtype=complex)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError("operator must be square")
    if d is not None and x.shape[0] != d:
        raise ValueError("operator size %d does not match dimension %d" % (x.shape[0], d))
    d = x.shape[0]
    return StateVector(d, d, x.reshape(-1) / np.sqrt(d))


def operator_from_vector(v):
    """Inverse of vector_from_operator: X[i,j] = sqrt(d) * amplitudes[i*d+j]."""
    if v.dim_left != v.dim_right:
        raise ValueError("vector must live in C^d tensor C^d with equal factors")
    d = v.dim_left
    return np.sqrt(d) * v.reshaped()


def reduced_density(v, side, tol=1e-10):
    """Partial trace of |v><v| over the complementary factor.

    side is "left" (trace out the right factor) or "right". Requires a unit
    vector. For v = (X tensor I) Omega the results are (1/d) X X^dag and
    (1/d) X^T conj(X) respectively.
    """
    if abs(v.norm - 1.0) > tol:
        raise ValueError("reduced density needs a unit vector, norm is %.6g" % v.norm)
    m = v.reshaped()
    if side == "left":
        return m @ m.conj().T
    if side == "right":
        return m.T @ m.conj()
    raise ValueError("side must be 'left' or 'right', got %r" % (side,))


@dataclass(frozen=True)
class MaxEntanglementReport:
    passed: bool
    residual: float
    schmidt_coefficients: np.ndarray = field(repr=False)

    def __bool__(self):
        return self.passed


def is_max_entangled(v, tol=1e-10):
    """Check that both reductions of v are maximally mixed.

    Equivalent to unitarity of the corresponding operator X; the report
    carries the residual ||X^dag X - I||_F and the Schmidt coefficients
    (all equal to 1/sqrt(d) in the passing case).
    """
    x = operator_from_vector(v)
    d = v.dim_left
    residual = float(np.linalg.norm(x.conj().T @ x - np.eye(d)))
    return MaxEntanglementReport(
        passed=residual < tol,
        residual=residual,
        schmidt_coefficients=schmidt(v).coefficients,
    )


@dataclass(frozen=True, eq=False)
class UnitaryBasis:
    """Ordered family of d^2 unitaries orthonormal in (1/d) tr(X^dag Y)."""

    dim: int
    ops: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(x, dtype=complex) for x in self.ops)
        if len(ops) != self.dim * self.dim:
            raise ValueError(
                "need %d operators for dimension %d, got %d"
                % (self.dim * self.dim, self.dim, len(ops))
            )
        for x in ops:
            if x.shape != (self.dim, self.dim):
                raise ValueError("every operator must be %d x %d" % (self.dim, self.dim))
        object.__setattr__(self, "ops", ops)

    def vectors(self):
        return tuple(vector_from_operator(x) for x in self.ops)


@dataclass(frozen=True, eq=False)
class EntangledBasis:
    """Orthonormal basis of d^2 maximally entangled vectors, with reference Omega."""

    dim: int
    vectors: tuple
    reference: StateVector = None

    def __post_init__(self):
        vecs = tuple(self.vectors)
        if len(vecs) != self.dim * self.dim:
            raise ValueError(
                "need %d vectors for dimension %d, got %d"
                % (self.dim * self.dim, self.dim, len(vecs))
            )
        for v in vecs:
            if v.dim_left != self.dim or v.dim_right != self.dim:
                raise ValueError("every vector must live in C^%d tensor C^%d" % (self.dim, self.dim))
        object.__setattr__(self, "vectors", vecs)
        if self.reference is None:
            object.__setattr__(self, "reference", omega(self.dim))

    @classmethod
    def from_unitary_basis(cls, basis):
        return cls(basis.dim, basis.vectors())

    def operators(self):
        return tuple(operator_from_vector(v) for v in self.vectors)


def basis_matrix(basis):
    """d^2 x d^2 matrix whose columns are the basis vector amplitudes."""
    return np.column_stack([v.amplitudes for v in basis.vectors])


@dataclass(frozen=True)
class BasisReport:
    passed: bool
    max_unitarity_residual: float
    max_orthonormality_residual: float
    offending_pair: tuple | None

    def __bool__(self):
        return self.passed


def verify_unitary_basis(basis, tol=1e-10):
    """Check unitarity of each element and (1/d) tr(X_a^dag X_b) = delta_ab.

    The report carries the worst residual of each kind and, on failure, the
    first offending index pair (a, a) for unitarity or (a, b) for
    orthonormality.
    """
    d = basis.dim
    eye = np.eye(d)
    worst_unit = 0.0
    worst_orth = 0.0
    offending = None
    for a, x in enumerate(basis.ops):
        res = float(np.linalg.norm(x.conj().T @ x - eye))
        if res > worst_unit:
            worst_unit = res
            if res >= tol and offending is None:
                offending = (a, a)
    n = len(basis.ops)
    stacked = np.stack(basis.ops)
    gram = np.einsum("aij,bij->ab", stacked.conj(), stacked) / d
    dev = np.abs(gram - np.eye(n))
    worst_orth = float(dev.max())
    if worst_orth >= tol and offending is None:
        idx = np.unravel_index(int(dev.argmax()), dev.shape)
        offending = (int(idx[0]), int(idx[1]))
    return BasisReport(
        passed=(worst_unit < tol and worst_orth < tol),
        max_unitarity_residual=worst_unit,
        max_orthonormality_residual=worst_orth,
        offending_pair=offending,
    )


def verify_entangled_basis(basis, tol=1e-10):
    """Check pairwise orthonormality and maximal entanglement of the vectors."""
    b = basis_matrix(basis)
    n = b.shape[1]
    gram_res = float(np.abs(b.conj().T @ b - np.eye(n)).max())
    worst_ent = 0.0
    offending = None
    for a, v in enumerate(basis.vectors):
        rep = is_max_entangled(v, tol)
        if rep.residual > worst_ent:
            worst_ent = rep.residual
            if not rep and offending is None:
                offending = (a, a)
    return BasisReport(
        passed=(gram_res < tol and worst_ent < tol),
        max_unitarity_residual=worst_ent,
        max_orthonormality_residual=gram_res,
        offending_pair=offending,
    )


def shift_multiply_basis(hadamards, tau, tol=1e-10):
    """Shift-and-multiply family: U^{ij} e_k = H^{(j)}[i,k] e_{tau[k,j]}.

    hadamards is a list of d complex Hadamard matrices (one per column index
    j), tau a d x d Latin square. The d^2 operators are indexed a = i*d + j
    and form a unitary basis; the output is verified before returning.
    """
    tau = np.asarray(tau)
    lat = validate_latin_square(tau)
    d = tau.shape[0]
    if len(hadamards) != d:
        raise ValueError("need %d Hadamard matrices, got %d" % (d, len(hadamards)))
    hs = [np.asarray(h, dtype=complex) for h in hadamards]
    for j, h in enumerate(hs):
        if h.shape != (d, d):
            raise ValueError("Hadamard %d has order %s, expected %d" % (j, h.shape, d))
        rep = is_hadamard(h, tol)
        if not rep:
            raise ValueError(
                "matrix %d fails Hadamard validation: modulus deviation %.3e,"
                " product residual %.3e"
                % (j, rep.max_modulus_deviation, rep.max_product_residual)
            )
    if not lat:
        raise ValueError(
            "invalid Latin square: row %s, column %s" % (lat.bad_row, lat.bad_column)
        )
    ops = []
    for i in range(d):
        for j in range(d):
            u = np.zeros((d, d), dtype=complex)
            u[tau[:, j], np.arange(d)] = hs[j][i, :]
            ops.append(u)
    basis = UnitaryBasis(d, tuple(ops))
    report = verify_unitary_basis(basis, tol)
    if not report:
        # inputs passed validation yet the output is not a basis: numerical breakdown
        raise ValueError(
            "constructed family fails basis verification at pair %s" % (report.offending_pair,)
        )
    return basis


def fourier_basis(d, tol=1e-10):
    """Shift-and-multiply basis from d copies of the Fourier matrix and (k+j) mod d."""
    h = fourier_hadamard(d)
    return shift_multiply_basis([h] * d, cyclic_latin_square(d), tol)
