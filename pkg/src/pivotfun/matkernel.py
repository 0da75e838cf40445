"""Dense complex linear algebra kernel.

Everything upstream (categories, Frobenius monoids, bimodules, UPTs) reduces
to a handful of operations on complex matrices: Kronecker products, adjoints,
dagger-idempotent splitting, polar decomposition and joint-kernel solving.
Matrices are plain ``numpy`` arrays of ``complex128``; this module owns the
tolerance policy and the deterministic ordering conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NonInvertibleError,
    NotAnIdempotentError,
    ShapeMismatchError,
    SizeError,
)

# Largest rows*cols we are willing to materialise.  Desk scale only.
MAX_ENTRIES = 1 << 24

# Documented default seed for every randomised search in the package.
DEFAULT_SEED = 1729


@dataclass(frozen=True)
class Tolerance:
    """Comparison rule: ||a - b||_F <= eps * max(1, ||a||_F, ||b||_F)."""

    eps: float = 1e-9

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("tolerance eps must be positive")

    def residual(self, a: np.ndarray, b: np.ndarray) -> float:
        """Normalised Frobenius distance; b is the reference operand.

        Scaling by max(1, ||b||) makes a failed snake equation with a doubled
        cup report residual exactly 1 regardless of dimension.
        """
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        if a.shape != b.shape:
            raise ShapeMismatchError(f"cannot compare shapes {a.shape} and {b.shape}")
        scale = max(1.0, float(np.linalg.norm(b.ravel())))
        return float(np.linalg.norm((a - b).ravel())) / scale

    def close(self, a: np.ndarray, b: np.ndarray) -> bool:
        return self.residual(a, b) <= self.eps

    def is_zero(self, a: np.ndarray) -> bool:
        return float(np.linalg.norm(a)) <= self.eps


DEFAULT_TOL = Tolerance()


def as_matrix(a) -> np.ndarray:
    """Coerce input to a finite 2-d complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatchError(f"expected a 2-d array, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a, dtype=complex).T)


def kron(a, b) -> np.ndarray:
    """Kronecker product, row-major convention; associative bit-exactly."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[0] * a.shape[1] * b.shape[0] * b.shape[1] > MAX_ENTRIES:
        raise SizeError("kron result exceeds size limit")
    return np.kron(a, b)


def kron_all(*mats) -> np.ndarray:
    out = as_matrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m)
    return out


def _fix_phases(v: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive.

    Pins the phase freedom of eigen/singular vectors so repeated runs emit
    identical reports.
    """
    v = v.copy()
    for j in range(v.shape[1]):
        col = v[:, j]
        k = int(np.argmax(np.abs(col)))
        piv = col[k]
        if abs(piv) > 0:
            v[:, j] = col * (abs(piv) / piv)
    return v


def split_dagger_idempotent(p, tol: Tolerance = DEFAULT_TOL):
    """Split p = V V† with V†V = I.

    Requires p to be Hermitian and idempotent within tolerance; the rank is
    the number of eigenvalues clustered at 1.  Columns of V are ordered by
    descending eigenvalue, ties broken by eigendecomposition output order.
    """
    p = as_matrix(p)
    n, m = p.shape
    if n != m:
        raise ShapeMismatchError("idempotent must be square")
    if tol.residual(p, dagger(p)) > tol.eps:
        raise NotAnIdempotentError("matrix is not Hermitian within tolerance")
    if tol.residual(p @ p, p) > tol.eps:
        raise NotAnIdempotentError("matrix is not idempotent within tolerance")
    evals, evecs = np.linalg.eigh(p)
    scale = max(1.0, float(np.linalg.norm(p)))
    cut = tol.eps * scale
    dist = np.minimum(np.abs(evals), np.abs(evals - 1.0))
    worst = int(np.argmax(dist))
    if dist[worst] > cut:
        raise NotAnIdempotentError(
            f"eigenvalue {evals[worst]:.6g} is farther than tolerance from {{0,1}}"
        )
    order = np.argsort(-evals, kind="stable")
    keep = [int(i) for i in order if evals[i] > 0.5]
    v = _fix_phases(evecs[:, keep]) if keep else np.zeros((n, 0), dtype=complex)
    return v, len(keep)


def polar_unitary(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Unitary factor of the polar decomposition, via SVD."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatchError("polar factor needs a square matrix")
    u, s, vh = np.linalg.svd(a)
    scale = max(1.0, float(np.linalg.norm(a)))
    if a.shape[0] and s[-1] < tol.eps * scale:
        raise NonInvertibleError(
            f"smallest singular value {s[-1]:.3g} below tolerance"
        )
    return u @ vh


def linear_solution_space(constraints, shape, tol: Tolerance = DEFAULT_TOL):
    """Orthonormal basis (Frobenius inner product) of a joint kernel.

    ``constraints`` is a list of callables, each a homogeneous linear map from
    matrices of the given shape to matrices of arbitrary shape.  The basis is
    deterministic given the input order.
    """
    rows, cols = shape
    dim = rows * cols
    if dim == 0:
        return []
    blocks = []
    basis = np.zeros((rows, cols), dtype=complex)
    for c in constraints:
        cols_out = []
        for k in range(dim):
            basis.flat[k] = 1.0
            out = np.asarray(c(basis), dtype=complex)
            cols_out.append(out.reshape(-1))
            basis.flat[k] = 0.0
        blocks.append(np.column_stack(cols_out))
    if blocks:
        system = np.vstack(blocks)
        u, s, vh = np.linalg.svd(system)
        scale = max(1.0, float(s[0]) if s.size else 1.0)
        null_mask = np.ones(dim, dtype=bool)
        null_mask[: s.size] = s <= tol.eps * scale
        kernel = vh.conj().T[:, null_mask]
    else:
        kernel = np.eye(dim, dtype=complex)
    kernel = _fix_phases(kernel)
    return [kernel[:, j].reshape(rows, cols) for j in range(kernel.shape[1])]


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish unitary from a QR decomposition with phase fixing."""
    q, r = np.linalg.qr(random_matrix(rng, n, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": [[float(z.real), float(z.imag)] for z in a.reshape(-1)],
    }


def matrix_from_json(obj) -> np.ndarray:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ShapeMismatchError(f"malformed matrix JSON: {exc}") from exc
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise ShapeMismatchError("matrix JSON entry count does not match rows*cols")
    flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    return as_matrix(flat.reshape(rows, cols))
