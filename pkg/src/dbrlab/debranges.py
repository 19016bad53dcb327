"""Moebius symbols, Pythagorean mates, and H(b) inner products.

The symbol class is b(z) = (c + gamma z)/(1 - beta z) with |beta| < 1 and
||b||_inf <= 1. For nonextreme b the mate a(z) = (rho - sigma z)/(1 - beta z)
satisfies |a|^2 + |b|^2 = 1 on the circle with a(0) = rho > 0, and the H(b)
inner product of polynomials decomposes as

    <f, g>_b = <f, g>_{H^2} + <f+, g+>_{H^2}

where f+ is the unique polynomial with T_conj(a) f+ = T_conj(b) f.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from . import hardy
from .dirichlet import GramMatrix

# tolerance for the exact coefficient feasibility / innerness classification
CLASS_TOL = 1e-12


class SymbolError(ValueError):
    """Invalid or extreme symbol where a nonextreme one is required."""


@dataclass(frozen=True)
class SymbolFlags:
    valid: bool
    nonextreme: bool
    inner: bool


def _s_and_p(c, gamma, beta):
    # on the circle, |1 - beta z|^2 - |c + gamma z|^2 = s - 2 Re((beta + conj(c) gamma) z)
    s = 1 + abs(beta) ** 2 - abs(c) ** 2 - abs(gamma) ** 2
    root = beta + np.conj(c) * gamma
    return s, abs(root) ** 2, root


def validate_symbol(c, gamma, beta):
    """Classify (c, gamma, beta): contractive on the disk, inner, nonextreme.

    Uses the exact coefficient criteria: ||b||_inf <= 1 iff s >= 2 sqrt(p)
    where s = 1 + |beta|^2 - |c|^2 - |gamma|^2 and p = |beta + conj(c) gamma|^2;
    b is inner iff s = 0 and p = 0. A rational contractive symbol is
    nonextreme exactly when it is not inner.
    """
    c, gamma, beta = complex(c), complex(gamma), complex(beta)
    if abs(beta) >= 1:
        return SymbolFlags(valid=False, nonextreme=False, inner=False)
    s, p, _ = _s_and_p(c, gamma, beta)
    valid = s >= 2 * math.sqrt(p) - CLASS_TOL
    inner = valid and abs(s) <= CLASS_TOL and math.sqrt(p) <= CLASS_TOL
    return SymbolFlags(valid=valid, nonextreme=valid and not inner, inner=inner)


@dataclass(frozen=True)
class MoebiusSymbol:
    """b(z) = (c + gamma z)/(1 - beta z); construction enforces validity."""

    c: complex
    gamma: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "gamma", complex(self.gamma))
        object.__setattr__(self, "beta", complex(self.beta))
        if abs(self.beta) >= 1:
            raise SymbolError(f"|beta| = {abs(self.beta)} must be < 1")
        if not validate_symbol(self.c, self.gamma, self.beta).valid:
            raise SymbolError(
                "symbol exceeds the unit ball: need "
                "1 + |beta|^2 - |c|^2 - |gamma|^2 >= 2|beta + conj(c) gamma|"
            )

    def __call__(self, z):
        return (self.c + self.gamma * z) / (1 - self.beta * z)

    def taylor(self, n):
        return hardy.moebius_taylor(self.c, self.gamma, self.beta, n)

    def flags(self):
        return validate_symbol(self.c, self.gamma, self.beta)

    def to_json_dict(self):
        return {
            "c": {"re": self.c.real, "im": self.c.imag},
            "gamma": {"re": self.gamma.real, "im": self.gamma.imag},
            "beta": {"re": self.beta.real, "im": self.beta.imag},
        }

    @classmethod
    def from_json_dict(cls, d):
        return cls(
            c=complex(d["c"]["re"], d["c"]["im"]),
            gamma=complex(d["gamma"]["re"], d["gamma"]["im"]),
            beta=complex(d["beta"]["re"], d["beta"]["im"]),
        )

    def dumps(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def loads(cls, s):
        return cls.from_json_dict(json.loads(s))


@dataclass(frozen=True)
class PythagoreanPair:
    """A nonextreme symbol b with its mate a(z) = (rho - sigma z)/(1 - beta z)."""

    b: MoebiusSymbol
    rho: float
    sigma: complex

    def __post_init__(self):
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "sigma", complex(self.sigma))

    def mate_eval(self, z):
        return (self.rho - self.sigma * z) / (1 - self.b.beta * z)

    def mate_taylor(self, n):
        return hardy.moebius_taylor(self.rho, -self.sigma, self.b.beta, n)

    def smirnov_quotient(self, z):
        """phi(z) = b(z)/a(z); determines the pair up to normalization."""
        return self.b(z) / self.mate_eval(z)

    def unit_circle_deviation(self, samples=64):
        """max | |a|^2 + |b|^2 - 1 | over the sample-th roots of unity."""
        om = np.exp(2j * np.pi * np.arange(samples) / samples)
        vals = np.abs(self.mate_eval(om)) ** 2 + np.abs(self.b(om)) ** 2
        return float(np.abs(vals - 1).max())

    def to_json_dict(self):
        return {
            "rho": self.rho,
            "sigma": {"re": self.sigma.real, "im": self.sigma.imag},
        }


def pythagorean_mate(b):
    """Mate coefficients for a nonextreme Moebius symbol.

    rho^2 is the larger root of t^2 - s t + p = 0 (this is what makes
    rho >= |sigma|) and the phase of sigma is fixed by
    sigma = (beta + conj(c) gamma)/rho with rho real positive.
    """
    flags = b.flags()
    if not flags.valid:
        raise SymbolError("symbol exceeds the unit ball")
    if flags.inner:
        raise SymbolError("inner symbol (extreme): no Pythagorean mate exists")
    s, p, root = _s_and_p(b.c, b.gamma, b.beta)
    rho2 = (s + math.sqrt(max(s * s - 4 * p, 0.0))) / 2
    rho = math.sqrt(rho2)
    sigma = root / rho
    return PythagoreanPair(b=b, rho=rho, sigma=sigma)


def fplus(f, pair):
    """Exact polynomial solution of T_conj(a) f+ = T_conj(b) f.

    Both Toeplitz operators are upper triangular on coefficients with
    geometric symbol tails, so the right-hand side and the
    back-substitution from the top degree down take linear time. The
    diagonal of the system is a(0) = rho > 0.
    """
    f = hardy.normalize(f)
    d = len(f) - 1
    if d < 0:
        return f[:0]
    b = pair.b
    bc = np.conj(b.c)
    btop = np.conj(b.c * b.beta + b.gamma)
    atop = np.conj(pair.rho * b.beta - pair.sigma)
    bb = np.conj(b.beta)
    x = np.empty(d + 1, dtype=complex)
    t = 0j  # running tail sum_{j>i} conj(beta)^(j-i-1) f_j
    s = 0j  # same tail for the solution coefficients
    for i in range(d, -1, -1):
        g_i = bc * f[i] + btop * t
        x[i] = (g_i - atop * s) / pair.rho
        t = f[i] + bb * t
        s = x[i] + bb * s
    return hardy.normalize(x)


def coanalytic_toeplitz_apply(symbol_coeffs, f):
    """Apply T_conj(u) to a polynomial: (T_conj(u) f)_i = sum_{j>=i} conj(u_{j-i}) f_j.

    Generic dense application, used as the independent residual check for
    the triangular solve in fplus.
    """
    u = hardy.as_poly(symbol_coeffs)
    f = hardy.as_poly(f)
    d = len(f) - 1
    out = np.zeros(d + 1, dtype=complex)
    for i in range(d + 1):
        m = min(len(u), d + 1 - i)
        out[i] = np.dot(np.conj(u[:m]), f[i : i + m])
    return out


def hb_inner(f, g, pair):
    """H(b) inner product <f,g> + <f+,g+> of two polynomials."""
    fp = fplus(f, pair)
    gp = fplus(g, pair)
    return hardy.h2_inner(f, g) + hardy.h2_inner(fp, gp)


def hb_gram(pair, n):
    """Monomial Gram matrix G[i][j] = <z^i, z^j> in H(b), size n.

    One triangular solve per column; the cached f+ vectors give the whole
    correction as an outer product.
    """
    n = int(n)
    if n < 1:
        raise ValueError("Gram size must be >= 1")
    P = np.zeros((n, n), dtype=complex)
    for k in range(n):
        fp = fplus(hardy.monomial(k), pair)
        P[k, : len(fp)] = fp
    return GramMatrix(space_tag="hb", entries=np.eye(n) + P @ P.conj().T)


def hb_cauchy_norm(pair, w):
    """Closed-form squared H(b) norm of the Cauchy kernel k_w.

    ||k_w||_b^2 = (1 + |b(w)/a(w)|^2) / (1 - |w|^2).
    """
    w = complex(w)
    if abs(w) >= 1:
        raise ValueError(f"|w| = {abs(w)} must be < 1")
    return (1 + abs(pair.smirnov_quotient(w)) ** 2) / (1 - abs(w) ** 2)


def shifted_symbol(b, tail=1e-16, max_degree=2000):
    """Truncated Taylor coefficients of S*b (the symbol with its constant dropped).

    Truncation degree M is chosen so the geometric coefficient tail
    |beta|^M is at most `tail`.
    """
    if abs(b.beta) < 1e-300:
        m = 2
    else:
        m = min(max_degree, math.ceil(math.log(tail) / math.log(abs(b.beta))))
        m = max(m, 2)
    return hardy.normalize(b.taylor(m + 1)[1:])
