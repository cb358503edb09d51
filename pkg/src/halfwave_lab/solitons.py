"""Blaschke-product traveling-wave profiles on the real line.

A profile of degree m with velocity |v| < 1 is

    Q_v(x) = (alpha_v Re B(x), alpha_v Im B(x), v),  alpha_v = sqrt(1 - v^2),

with B(z) = prod (z - z_k)/(z - conj(z_k)) a finite Blaschke product whose
zeros lie in the upper half-plane. B is unimodular on the real line, its
energy is quantized as (1 - v^2) pi m, and the degree-1 profile has an
explicit rank-4 Lax matrix with spectrum {-2 alpha_v, 0, 0, +2 alpha_v}.

Real-line Hilbert convention: (Hf)(x) = (1/pi) p.v. Integral f(y)/(x-y) dy.
Boundary values of functions analytic and decaying in the upper half-plane
satisfy H f = -i f, which gives |grad| B = -i B' in closed form for every
Blaschke product; the degree-1 case reduces to the classical partial
fractions H[1/(1+x^2)] = x/(1+x^2), H[x/(1+x^2)] = -1/(1+x^2).
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class BlaschkeProfile:
    velocity: float
    zeros: tuple = ()
    alpha: float = field(init=False)

    def __post_init__(self):
        if abs(self.velocity) >= 1.0:
            raise ValueError(
                f"|v| < 1 required for a non-trivial profile, got v={self.velocity}")
        self.zeros = tuple(complex(z) for z in self.zeros)
        if any(z.imag <= 0 for z in self.zeros):
            raise ValueError("all Blaschke zeros must have positive imaginary part")
        self.alpha = float(np.sqrt(1.0 - self.velocity ** 2))

    @property
    def degree(self):
        return len(self.zeros)


def blaschke_eval(profile, x):
    """B(x) = prod (x - z_k)/(x - conj(z_k)); unimodular for real x."""
    x = np.asarray(x, dtype=complex)
    out = np.ones_like(x)
    for z in profile.zeros:
        out *= (x - z) / (x - np.conj(z))
    return out


def blaschke_deriv(profile, x):
    """B'(x) via logarithmic differentiation of the product."""
    x = np.asarray(x, dtype=complex)
    logd = np.zeros_like(x)
    for z in profile.zeros:
        logd += 1.0 / (x - z) - 1.0 / (x - np.conj(z))
    return blaschke_eval(profile, x) * logd


def profile_eval(profile, x):
    """Q_v(x) as an (..., 3) array of unit vectors; third component = v."""
    B = blaschke_eval(profile, x)
    return np.stack([profile.alpha * B.real, profile.alpha * B.imag,
                     np.broadcast_to(profile.velocity, B.shape)], axis=-1)


def profile_deriv(profile, x):
    Bp = blaschke_deriv(profile, x)
    return np.stack([profile.alpha * Bp.real, profile.alpha * Bp.imag,
                     np.zeros_like(Bp.real)], axis=-1)


def profile_halfwave(profile, x):
    """|grad| Q_v in closed form: |grad| B = -i B' by upper-half-plane
    analyticity of B - B(infinity)."""
    u = -1j * blaschke_deriv(profile, x)
    return np.stack([profile.alpha * u.real, profile.alpha * u.imag,
                     np.zeros_like(u.real)], axis=-1)


def profile_energy(profile):
    """Quantized energy (1 - v^2) * pi * m."""
    return (1.0 - profile.velocity ** 2) * np.pi * profile.degree


def profile_energy_quadrature(profile, half_width=200.0, num=2001):
    """Energy by truncated double quadrature of the quadratic form

        E = (1/4pi) Integral Integral |Q(x) - Q(y)|^2 / (x - y)^2 dx dy.

    The diagonal limit |Q'(x)|^2 is inserted analytically. Tails decay
    like 1/x^2, so the truncation error is O(1/half_width).
    """
    x = np.linspace(-half_width, half_width, num)
    h = x[1] - x[0]
    Q = profile_eval(profile, x)
    dQ2 = ((Q[:, None, :] - Q[None, :, :]) ** 2).sum(axis=-1)
    dx2 = (x[:, None] - x[None, :]) ** 2
    np.fill_diagonal(dx2, 1.0)
    G = dQ2 / dx2
    Qp = profile_deriv(profile, x)
    np.fill_diagonal(G, (Qp ** 2).sum(axis=-1))
    return float(G.sum() * h * h / (4.0 * np.pi))


def hilbert_quadrature(f_samples, y, x_eval):
    """Principal-value quadrature of (1/pi) Integral f(y)/(x - y) dy.

    Uniform grid y with samples f_samples, evaluated at points x_eval that
    fall midway between grid points or on them (the singular node is
    dropped; symmetric puncture realizes the p.v.).
    """
    h = y[1] - y[0]
    out = np.empty_like(np.asarray(x_eval, dtype=float))
    for i, xe in enumerate(np.ravel(x_eval)):
        d = xe - y
        near = np.abs(d) < 0.5 * h
        d = np.where(near, 1.0, d)
        vals = np.where(near, 0.0, f_samples / d)
        out.flat[i] = vals.sum() * h / np.pi
    return out


def halfwave_quadrature_line(f, x_eval, half_width=200.0, num=200001):
    """|grad| f on the real line from the singular-integral form

        (|grad| f)(x) = (1/pi) p.v. Integral (f(x) - f(y)) / (x - y)^2 dy

    by punctured trapezoid on [-half_width, half_width]; f is a callable.
    """
    y = np.linspace(-half_width, half_width, num)
    h = y[1] - y[0]
    fy = f(y)
    out = np.empty_like(np.asarray(x_eval, dtype=float))
    for i, xe in enumerate(np.ravel(x_eval)):
        d = xe - y
        near = np.abs(d) < 0.5 * h
        d2 = np.where(near, 1.0, d * d)
        vals = np.where(near, 0.0, (f(xe) - fy) / d2)
        out.flat[i] = vals.sum() * h / np.pi
    return out


def profile_residual(profile, x, method="closed"):
    """Max norm of Q x |grad|Q - v Q' over the sample points.

    Identically zero (to rounding) on the Blaschke family. method
    "closed" uses the analytic |grad|; "quadrature" uses the truncated
    singular-integral evaluation, for fields off the closed-form family.
    """
    x = np.asarray(x, dtype=float)
    Q = profile_eval(profile, x)
    Qp = profile_deriv(profile, x)
    if method == "closed":
        gQ = profile_halfwave(profile, x)
    elif method == "quadrature":
        gQ = np.stack(
            [halfwave_quadrature_line(
                lambda t, i=i: profile_eval(profile, t)[..., i], x)
             for i in range(3)], axis=-1)
    else:
        raise ValueError(f"unknown method {method!r}")
    resid = np.cross(Q, gQ) - profile.velocity * Qp
    return float(np.abs(resid).max())


def field_residual_quadrature(component_fns, deriv_fns, velocity, x,
                              half_width=200.0, num=40001):
    """Traveling-wave residual for an arbitrary sampled unit field given as
    three callables (plus their derivatives); detects non-solutions."""
    x = np.asarray(x, dtype=float)
    Q = np.stack([f(x) for f in component_fns], axis=-1)
    Qp = np.stack([f(x) for f in deriv_fns], axis=-1)
    gQ = np.stack([halfwave_quadrature_line(f, x, half_width, num)
                   for f in component_fns], axis=-1)
    resid = np.cross(Q, gQ) - velocity * Qp
    return float(np.abs(resid).max())


def basis_phi(x):
    """First rank-4 basis function sqrt(2/pi)/(1+x^2); unit L^2 norm."""
    return np.sqrt(2.0 / np.pi) / (1.0 + x ** 2)


def basis_psi(x):
    """Second rank-4 basis function sqrt(1/2pi) * 2x/(1+x^2); unit L^2 norm."""
    return np.sqrt(1.0 / (2.0 * np.pi)) * 2.0 * x / (1.0 + x ** 2)


RANK4_CORE = np.array([
    [0, 0, 1j, 1],
    [0, 0, 1, -1j],
    [-1j, 1, 0, 0],
    [1, 1j, 0, 0],
], dtype=complex)


@dataclass
class RankFourLax:
    matrix: np.ndarray
    velocity: float
    basis = ("phi+0", "psi+0", "0+phi", "0+psi")


def rank_four_lax(v):
    """The 4x4 Lax matrix of the degree-1 profile: alpha_v times a fixed
    Hermitian core; spectrum {-2 alpha_v, 0, 0, +2 alpha_v}, squared
    Hilbert-Schmidt norm 8 alpha_v^2."""
    if abs(v) >= 1.0:
        raise ValueError("|v| < 1 required")
    alpha = np.sqrt(1.0 - v * v)
    return RankFourLax(alpha * RANK4_CORE, v)
