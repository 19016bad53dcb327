"""Local Dirichlet integrals and D(mu) inner products for atomic measures.

A measure is a finite list of point masses on the closed unit disk. The
D(mu) norm of a polynomial f is

    ||f||^2 = ||f||_{H^2}^2 + sum_i c_i || (f - f(z_i)) / (z - z_i) ||_{H^2}^2.

Boundary atoms are fully supported: inputs are polynomials, so the
difference quotient always exists.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import hardy

# slack on |location| <= 1 to absorb roundoff in points like e^{i theta}
DISK_TOL = 1e-12


@dataclass(frozen=True)
class PointMassMeasure:
    """mu = sum_i weight_i * delta_{location_i} on the closed unit disk."""

    atoms: tuple  # of (location: complex, weight: float)

    def __post_init__(self):
        atoms = tuple((complex(z), float(w)) for z, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        for z, w in atoms:
            if not (np.isfinite(w) and w > 0):
                raise ValueError(f"atom weight {w} must be positive")
            if abs(z) > 1 + DISK_TOL:
                raise ValueError(f"atom location {z} outside the closed disk")
        locs = [z for z, _ in atoms]
        for i in range(len(locs)):
            for j in range(i + 1, len(locs)):
                if locs[i] == locs[j]:
                    raise ValueError(f"duplicate atom location {locs[i]}")

    def __len__(self):
        return len(self.atoms)

    @classmethod
    def empty(cls):
        return cls(atoms=())

    @classmethod
    def single(cls, location, weight):
        return cls(atoms=((location, weight),))

    def to_json_dict(self):
        return {
            "atoms": [
                {"re": z.real, "im": z.imag, "weight": w} for z, w in self.atoms
            ]
        }

    @classmethod
    def from_json_dict(cls, d):
        return cls(
            atoms=tuple(
                (complex(a["re"], a["im"]), a["weight"]) for a in d["atoms"]
            )
        )

    def dumps(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def loads(cls, s):
        return cls.from_json_dict(json.loads(s))


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian matrix of monomial inner products in a designated space."""

    space_tag: str
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=complex))

    @property
    def size(self):
        return self.entries.shape[0]

    def validate(self, herm_tol=1e-12, psd_tol=1e-10):
        """Check the Gram invariants; raises on violation."""
        G = self.entries
        scale = max(1.0, float(np.abs(G).max()))
        if np.abs(G - G.conj().T).max() > herm_tol * scale:
            raise ValueError(f"{self.space_tag}: Gram matrix not Hermitian")
        w = np.linalg.eigvalsh((G + G.conj().T) / 2)
        if w[0] < -psd_tol * scale:
            raise ValueError(f"{self.space_tag}: Gram matrix not PSD ({w[0]})")
        d = np.diag(G)
        if np.abs(d.imag).max() > herm_tol * scale or d.real.min() < 1 - herm_tol * scale:
            raise ValueError(f"{self.space_tag}: Gram diagonal must be real and >= 1")


def local_dirichlet(f, zeta):
    """|| (f - f(zeta)) / (z - zeta) ||^2 in H^2; local smoothness of f at zeta."""
    q = hardy.difference_quotient(f, zeta)
    return float(np.real(hardy.h2_inner(q, q)))


def dmu_inner(f, g, mu):
    """D(mu) inner product of two polynomials."""
    val = hardy.h2_inner(f, g)
    for z, w in mu.atoms:
        qf = hardy.difference_quotient(f, z)
        qg = hardy.difference_quotient(g, z)
        val += w * hardy.h2_inner(qf, qg)
    return val


def _quotient_gram(zeta, n):
    """Gram of difference quotients of monomials z^0 .. z^(n-1) at one atom.

    Row k holds the coefficients of (z^k - zeta^k)/(z - zeta).
    """
    V = np.zeros((n, max(n - 1, 1)), dtype=complex)
    for k in range(1, n):
        V[k, :k] = np.asarray(zeta, dtype=complex) ** np.arange(k - 1, -1, -1)
    return V @ V.conj().T


def dmu_gram(mu, n):
    """Monomial Gram matrix G[i][j] = <z^i, z^j> in D(mu), size n."""
    n = int(n)
    if n < 1:
        raise ValueError("Gram size must be >= 1")
    G = np.eye(n, dtype=complex)
    for z, w in mu.atoms:
        G += w * _quotient_gram(z, n)
    return GramMatrix(space_tag="dmu", entries=G)


def moment_matrix(mu, n):
    """M[i][j] = sum_k w_k z_k^i conj(z_k)^j, size n; Hermitian PSD, rank = #atoms."""
    n = int(n)
    if n < 1:
        raise ValueError("moment matrix size must be >= 1")
    M = np.zeros((n, n), dtype=complex)
    for z, w in mu.atoms:
        p = np.asarray(z, dtype=complex) ** np.arange(n)
        M += w * np.outer(p, p.conj())
    return M


def dmu_cauchy_norm(alpha, lam, w):
    """Closed-form Dirichlet part of the Cauchy kernel norm in D(|alpha|^2 delta_lam).

    Returns |alpha|^2 |w|^2 / (|1 - conj(lam) w|^2 (1 - |w|^2)), the value of
    integral of the local Dirichlet integral of k_w against the measure.
    """
    alpha = complex(alpha)
    lam = complex(lam)
    w = complex(w)
    if abs(w) >= 1:
        raise ValueError(f"|w| = {abs(w)} must be < 1")
    if abs(lam) > 1 + DISK_TOL:
        raise ValueError(f"|lambda| = {abs(lam)} must be <= 1")
    return (
        abs(alpha) ** 2
        * abs(w) ** 2
        / (abs(1 - np.conj(lam) * w) ** 2 * (1 - abs(w) ** 2))
    )


def truncated_cauchy_kernel(w, degree):
    """Taylor coefficients conj(w)^k of k_w(z) = 1/(1 - conj(w) z), k <= degree."""
    return np.conj(complex(w)) ** np.arange(degree + 1)
