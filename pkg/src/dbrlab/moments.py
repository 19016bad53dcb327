"""Recovery of an atomic measure from its moment / defect matrix.

The moment matrix M[n][m] = sum_i w_i z_i^n conj(z_i)^m has Vandermonde
column space, so the atoms are recovered from the shift-invariance of that
column space (ESPRIT-style) and the weights by nonnegative least squares
against the rank-one Vandermonde outer products.
"""

from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .dirichlet import PointMassMeasure, dmu_gram
from .operators import Certificate, defect_matrix, numerical_rank

# atoms may stick out of the disk by at most this much before recovery fails;
# smaller excursions are clamped radially to the circle
DISK_EXCURSION = 1e-8
WEIGHT_FLOOR = 1e-12


class RecoveryError(ValueError):
    """Moment data inconsistent with the requested atomic model."""


@dataclass(frozen=True)
class RecoveryResult:
    measure: PointMassMeasure
    residual: float  # Frobenius mismatch of the reconstructed moment matrix
    condition: float  # conditioning of the recovered Vandermonde factor

    def to_json_dict(self):
        d = self.measure.to_json_dict()
        d["residual"] = self.residual
        d["condition"] = self.condition
        return d


def recover_atoms(M, k=None, rank_tol=1e-8):
    """Invert the moment map: locations via shift invariance, weights via NNLS.

    k is the expected atom count; when omitted it is set to the numerical
    rank of M. Requires at least k+1 rows of moments.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise RecoveryError("moment matrix must be square")
    N = M.shape[0]
    rank = numerical_rank(M, rank_tol)
    if k is None:
        k = rank
    k = int(k)
    if k == 0:
        return RecoveryResult(
            measure=PointMassMeasure.empty(),
            residual=float(np.linalg.norm(M)),
            condition=1.0,
        )
    if k > rank:
        raise RecoveryError(f"requested {k} atoms but numerical rank is {rank}")
    if N < k + 1:
        raise RecoveryError(f"need at least {k + 1} moment rows for {k} atoms")

    w_eig, U = np.linalg.eigh((M + M.conj().T) / 2)
    U = U[:, np.argsort(w_eig)[::-1][:k]]

    # column space is Vandermonde: U shifted down one row = U times Phi
    Phi, *_ = np.linalg.lstsq(U[:-1, :], U[1:, :], rcond=None)
    locs = np.linalg.eigvals(Phi)

    clamped = []
    for z in locs:
        r = abs(z)
        if r > 1 + DISK_EXCURSION:
            raise RecoveryError(f"recovered location {z} outside the closed disk")
        clamped.append(z / r if r > 1 else z)
    locs = np.asarray(clamped)

    V = locs[np.newaxis, :] ** np.arange(N)[:, np.newaxis]
    basis = np.stack(
        [np.outer(V[:, i], V[:, i].conj()).ravel() for i in range(k)], axis=1
    )
    A = np.vstack([basis.real, basis.imag])
    rhs = np.concatenate([M.ravel().real, M.ravel().imag])
    weights, _ = scipy.optimize.nnls(A, rhs)
    if np.any(weights <= WEIGHT_FLOOR):
        raise RecoveryError("recovered a nonpositive atom weight")

    residual = float(np.linalg.norm(M - (basis @ weights).reshape(N, N)))
    condition = float(np.linalg.cond(V))
    measure = PointMassMeasure(atoms=tuple(zip(locs, weights)))
    return RecoveryResult(measure=measure, residual=residual, condition=condition)


def match_atoms(expected, recovered):
    """Greedy minimal-distance pairing; returns worst location/weight deviation.

    Deviation is inf when the atom counts differ. Ties in distance are
    broken by descending weight.
    """
    exp = list(expected.atoms)
    rec = list(recovered.atoms)
    if len(exp) != len(rec):
        return float("inf")
    worst = 0.0
    while exp:
        pairs = [
            (abs(ze - zr), -we, i, j)
            for i, (ze, we) in enumerate(exp)
            for j, (zr, wr) in enumerate(rec)
        ]
        dist, _, i, j = min(pairs)
        worst = max(worst, dist, abs(exp[i][1] - rec[j][1]))
        exp.pop(i)
        rec.pop(j)
    return worst


def roundtrip_check(mu, n, tol=1e-8):
    """End-to-end validation: D(mu) Gram -> defect -> recovered measure == mu."""
    n = int(n)
    if n < len(mu) + 1:
        raise ValueError(f"need n >= {len(mu) + 1} for {len(mu)} atoms")
    D = defect_matrix(dmu_gram(mu, n + 1))
    result = recover_atoms(D)
    worst = match_atoms(mu, result.measure)
    return Certificate(
        kind="roundtrip",
        passed=worst <= tol,
        witness=worst,
        tolerance=tol,
        context={
            "atoms": len(mu),
            "recovered": len(result.measure),
            "residual": result.residual,
        },
    )
