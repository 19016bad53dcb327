"""Hyperexpansivity forms, NSD certification, defect matrices and rank checks.

Everything here is driven by a monomial Gram matrix: the order-n
hyperexpansivity form of the shift, compressed to span{1, ..., z^(N-1-n)},
is the alternating binomial sum of shifted Gram blocks. The shift is
n-hyperexpansive on the space exactly when those forms are negative
semidefinite.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import debranges
from .dirichlet import GramMatrix

NSD_TOL = 1e-10
RANK_TOL = 1e-8


def _entries(G):
    if isinstance(G, GramMatrix):
        return G.entries
    return np.asarray(G, dtype=complex)


@dataclass(frozen=True)
class HermitianForm:
    """Compressed quadratic form of a fixed hyperexpansivity order."""

    entries: np.ndarray
    order: int

    def __post_init__(self):
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=complex))

    @property
    def size(self):
        return self.entries.shape[0]


@dataclass(frozen=True)
class Certificate:
    """Outcome of one numerical check: extremal witness against a tolerance."""

    kind: str
    passed: bool
    witness: float
    tolerance: float
    context: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "witness", float(self.witness))
        object.__setattr__(self, "tolerance", float(self.tolerance))

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "pass": self.passed,
            "witness": self.witness,
            "tolerance": self.tolerance,
            "context": self.context,
        }

    def dumps(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)


def hyperexpansive_form(G, n):
    """Order-n alternating binomial form B_n[j][k] = sum_i (-1)^i C(n,i) G[k+i][j+i].

    B_n is the compression of the order-n hyperexpansivity sum of the shift
    to the monomials z^0 .. z^(N-1-n); the binomials are exact integers.
    """
    A = _entries(G)
    N = A.shape[0]
    n = int(n)
    if not 1 <= n <= N - 1:
        raise ValueError(f"order {n} must satisfy 1 <= n <= {N - 1}")
    m = N - n
    B = np.zeros((m, m), dtype=complex)
    for i in range(n + 1):
        B += (-1) ** i * math.comb(n, i) * A[i : i + m, i : i + m].T
    return HermitianForm(entries=B, order=n)


def certify_nsd(B, tol=NSD_TOL):
    """Certify a Hermitian form negative semidefinite; witness is the max eigenvalue."""
    A = B.entries if isinstance(B, HermitianForm) else np.asarray(B, dtype=complex)
    order = B.order if isinstance(B, HermitianForm) else None
    if A.size == 0:
        top = 0.0
    else:
        top = float(np.linalg.eigvalsh((A + A.conj().T) / 2)[-1])
    return Certificate(
        kind="nsd",
        passed=top <= tol,
        witness=top,
        tolerance=tol,
        context={"order": order, "size": int(A.shape[0])},
    )


def defect_matrix(G):
    """D[i][j] = G[i+1][j+1] - G[i][j]: the Gram of the shift defect T*T - I."""
    A = _entries(G)
    if A.shape[0] < 2:
        raise ValueError("need a Gram matrix of size >= 2")
    return A[1:, 1:] - A[:-1, :-1]


def numerical_rank(M, tau=RANK_TOL):
    """Number of singular values above tau * sigma_1; 0 for the zero matrix."""
    if not 0 < tau < 1:
        raise ValueError("relative threshold must lie in (0, 1)")
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] <= 1e-300:
        return 0
    return int(np.count_nonzero(s > tau * s[0]))


def ratio_identity_check(G_b, pair, n_max, tol=1e-8):
    """Verify B_n = r^(n-2) B_2 for 3 <= n <= n_max on a common block.

    r = 1 - |beta - a'(0)/a(0)|^2 = 1 - |sigma/rho|^2 links every
    higher-order hyperexpansivity form of the shift on H(b) to the order-2
    form. All forms are truncated to the largest common block size.
    """
    n_max = int(n_max)
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    A = _entries(G_b)
    m = A.shape[0] - n_max
    if m < 1:
        raise ValueError(f"Gram size {A.shape[0]} too small for n_max = {n_max}")
    r = 1 - abs(pair.sigma / pair.rho) ** 2
    B2 = hyperexpansive_form(A, 2).entries[:m, :m]
    scale = max(1.0, float(np.linalg.norm(B2)))
    worst = 0.0
    for n in range(3, n_max + 1):
        Bn = hyperexpansive_form(A, n).entries[:m, :m]
        worst = max(worst, float(np.linalg.norm(Bn - r ** (n - 2) * B2)))
    return Certificate(
        kind="ratio-identity",
        passed=worst <= tol * scale,
        witness=worst,
        tolerance=tol * scale,
        context={"ratio": r, "n_max": n_max, "block": m},
    )


def rank1_defect_check(G_b, pair, tol=1e-8, rank_tol=RANK_TOL):
    """Verify the H(b) defect is rank 1 with eigenvalue rho^-2 ||S*b||_b^2.

    The defect entries are coefficients against non-orthonormal monomials,
    so the operator eigenvalue is the top generalized eigenvalue of the
    pencil (defect, Gram). It is compared with the independent closed-path
    value rho^-2 ||S*b||_b^2 computed from the truncated shifted symbol.
    """
    A = _entries(G_b)
    D = defect_matrix(A)
    rank = numerical_rank(D, rank_tol)
    sb = debranges.shifted_symbol(pair.b)
    if len(sb) == 0:
        # b constant: zero defect, nothing to compare
        passed = rank == 0
        return Certificate(
            kind="rank1-defect",
            passed=passed,
            witness=float(np.abs(D).max()) if D.size else 0.0,
            tolerance=tol,
            context={"rank": rank, "degenerate": True},
        )
    ref = float(
        np.real(debranges.hb_inner(sb, sb, pair)) / pair.rho**2
    )
    Gsub = A[:-1, :-1]
    theta = float(
        scipy.linalg.eigh(
            (D + D.conj().T) / 2, (Gsub + Gsub.conj().T) / 2, eigvals_only=True
        )[-1]
    )
    rel = abs(theta - ref) / abs(ref)
    return Certificate(
        kind="rank1-defect",
        passed=rank == 1 and rel <= tol,
        witness=rel,
        tolerance=tol,
        context={"rank": rank, "eigenvalue": theta, "reference": ref},
    )


def gram_to_csv_text(G):
    """Row-major CSV dump with 're,im' cell pairs."""
    A = _entries(G)
    lines = []
    for row in A:
        cells = []
        for z in row:
            cells.append(repr(float(z.real)))
            cells.append(repr(float(z.imag)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def gram_from_csv_text(text):
    """Parse the 're,im' pair CSV back into a complex matrix."""
    rows = []
    for line in text.strip().splitlines():
        vals = [float(v) for v in line.split(",")]
        if len(vals) % 2 != 0:
            raise ValueError("expected an even number of columns (re,im pairs)")
        rows.append([complex(vals[2 * i], vals[2 * i + 1]) for i in range(len(vals) // 2)])
    M = np.asarray(rows, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    return M
