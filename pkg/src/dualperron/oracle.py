"""Small-scale independent verification of computed eigenpairs.

The iteration in :mod:`dualperron.solver` is checked against three
independent routes: a dense spectrum of the standard part, the left/right
eigenvector formula for the dual part, and a central finite difference of
the spectral radius along the dual direction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoPositivePerronVector, NotSquare, TooLarge
from .linalg import DualMatrix

__all__ = [
    "SpectrumReport",
    "spectrum",
    "spectral_radius",
    "lambda_d_oracle",
    "fd_check",
    "dual_part_at",
]

SPECTRUM_MAX_N = 200


@dataclass
class SpectrumReport:
    """Dense spectrum of a standard part with its dominant eigenpair.

    ``right_vector`` and ``left_vector`` are strictly positive unit-norm
    real vectors; ``lambda_d_formula`` is filled by
    :func:`lambda_d_oracle`.
    """

    eigenvalues: np.ndarray
    spectral_radius: float
    perron_index: int
    right_vector: np.ndarray
    left_vector: np.ndarray
    lambda_d_formula: float | None = None


def spectral_radius(a_s) -> float:
    """max |mu| over the dense spectrum."""
    return float(np.max(np.abs(np.linalg.eigvals(np.asarray(a_s, dtype=float)))))


def _positive_real_vector(vec: np.ndarray, scale: float) -> np.ndarray:
    if np.max(np.abs(vec.imag)) > 1e-8 * max(1.0, scale):
        raise NoPositivePerronVector("dominant eigenvector is not real")
    v = vec.real.copy()
    v *= np.sign(v[np.argmax(np.abs(v))]) or 1.0
    if v.min() <= 0.0:
        raise NoPositivePerronVector("dominant eigenvector is not strictly positive")
    return v / np.linalg.norm(v)


def _match_index(eigenvalues: np.ndarray, target: complex, scale: float) -> int:
    idx = int(np.argmin(np.abs(eigenvalues - target)))
    if abs(eigenvalues[idx] - target) > 1e-6 * max(1.0, scale):
        raise NoPositivePerronVector(
            f"no eigenvalue near {target}; closest is {eigenvalues[idx]}"
        )
    return idx


def spectrum(a_s) -> SpectrumReport:
    """Dense eigensolve of a real square matrix, n <= 200.

    Identifies the positive simple dominant eigenvalue together with
    strictly positive right and left eigenvectors; raises
    NoPositivePerronVector when the input does not have them (e.g. a
    reducible pattern).
    """
    arr = np.asarray(a_s, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n > SPECTRUM_MAX_N:
        raise TooLarge(f"dense spectrum limited to n <= {SPECTRUM_MAX_N}, got {n}")

    w, v = np.linalg.eig(arr)
    rho = float(np.max(np.abs(w)))
    perron = _match_index(w, rho, rho)
    # The dominant value must be a simple root for the dual part to be
    # well defined.
    others = np.abs(w - w[perron])
    others[perron] = np.inf
    if others.min() <= 1e-7 * max(1.0, rho):
        raise NoPositivePerronVector("dominant eigenvalue is not a simple root")

    right = _positive_real_vector(v[:, perron], rho)
    wl, u = np.linalg.eig(arr.T)
    left = _positive_real_vector(u[:, _match_index(wl, rho, rho)], rho)

    return SpectrumReport(
        eigenvalues=w,
        spectral_radius=rho,
        perron_index=perron,
        right_vector=right,
        left_vector=left,
    )


def lambda_d_oracle(A: DualMatrix, report: SpectrumReport) -> float:
    """Dual part of the dominant eigenvalue: y.(A_d x) / (y.x).

    Invariant under any positive rescaling of the two eigenvectors.
    """
    x, y = report.right_vector, report.left_vector
    value = float(y @ (A.dual @ x)) / float(y @ x)
    report.lambda_d_formula = value
    return value


def _dominant_branch(matrix: np.ndarray, anchor: float) -> float:
    """Real part of the eigenvalue closest to the unperturbed dominant root."""
    w = np.linalg.eigvals(matrix)
    return float(w[np.argmin(np.abs(w - anchor))].real)


def fd_check(A: DualMatrix, report: SpectrumReport, t: float = 1e-6) -> float:
    """|finite difference - eigenvector formula| for the dual part.

    The dual part equals the derivative of the dominant positive root of
    ``A_s + t*A_d`` at t = 0. The root is followed as the eigenvalue
    nearest the unperturbed one: for periodic patterns other eigenvalues
    share its modulus, so a max-modulus spectral radius would fold the
    difference. The default step 1e-6 balances truncation against
    round-off in double precision.
    """
    rho_plus = _dominant_branch(A.standard + t * A.dual, report.spectral_radius)
    rho_minus = _dominant_branch(A.standard - t * A.dual, report.spectral_radius)
    fd = (rho_plus - rho_minus) / (2.0 * t)
    lam_d = report.lambda_d_formula
    if lam_d is None:
        lam_d = lambda_d_oracle(A, report)
    return abs(fd - lam_d)


def dual_part_at(A: DualMatrix, mu_s: complex) -> complex:
    """Dual part paired with the simple eigenvalue of A_s closest to mu_s.

    Uses the bilinear left/right eigenvector quotient y^T A_d x / (y^T x)
    with plain (unconjugated) transposes, which is valid for complex
    simple roots as well.
    """
    arr = A.standard
    w, v = np.linalg.eig(arr)
    scale = float(np.max(np.abs(w)))
    i = _match_index(w, mu_s, scale)
    wl, u = np.linalg.eig(arr.T)
    j = _match_index(wl, w[i], scale)
    x = v[:, i]
    y = u[:, j]
    denom = y @ x
    if abs(denom) <= 1e-12 * max(1.0, scale):
        raise NoPositivePerronVector(f"left/right eigenvectors at {mu_s} are orthogonal")
    return complex((y @ (A.dual @ x)) / denom)
