"""Field states on the periodic grid and the named initial-condition families."""

from dataclasses import dataclass, field

import numpy as np

from . import spectral
from .algebra import eta_dot

SPHERE = "sphere"
HYPERBOLIC = "hyperbolic"


class ConstraintError(ValueError):
    """A field violates its pointwise target constraint."""


@dataclass
class SpinField:
    """S^2-valued field: values[k] is the unit spin at x_k = 2*pi*k/N."""

    values: np.ndarray  # (N, 3)
    time: float = 0.0
    target: str = field(default=SPHERE, init=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2 or self.values.shape[1] != 3:
            raise ValueError("values must have shape (N, 3)")
        spectral._check_size(self.values.shape[0])

    @property
    def N(self):
        return self.values.shape[0]

    def defect(self):
        """Max deviation of |S_k| from 1."""
        return float(np.abs(np.linalg.norm(self.values, axis=1) - 1.0).max())

    def renormalized(self):
        norms = np.linalg.norm(self.values, axis=1, keepdims=True)
        return SpinField(self.values / norms, self.time)


@dataclass
class HyperbolicField:
    """H^2-valued field: values[k] on the unit pseudosphere, first component > 0."""

    values: np.ndarray
    time: float = 0.0
    target: str = field(default=HYPERBOLIC, init=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2 or self.values.shape[1] != 3:
            raise ValueError("values must have shape (N, 3)")
        spectral._check_size(self.values.shape[0])

    @property
    def N(self):
        return self.values.shape[0]

    def defect(self):
        """Max deviation of S .eta. S from -1."""
        return float(np.abs(eta_dot(self.values, self.values) + 1.0).max())

    def renormalized(self):
        q = -eta_dot(self.values, self.values)
        if np.any(self.values[:, 0] <= 0.0) or np.any(q <= 0.0):
            raise ConstraintError(
                "pseudosphere renormalization failed: field left the X1 > 0 sheet")
        return HyperbolicField(self.values / np.sqrt(q)[:, None], self.time)


# ---------------------------------------------------------------------------
# Named initial-condition families
# ---------------------------------------------------------------------------

def constant_field(N, direction=(0.0, 0.0, 1.0)):
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    return SpinField(np.tile(d, (N, 1)))


def great_circle(N):
    x = spectral.grid(N)
    return SpinField(np.stack([np.cos(x), np.sin(x), np.zeros(N)], axis=1))


def tilted_circle(N, a, c):
    """(a cos x, a sin x, c) with a^2 + c^2 = 1; rotates with frequency c."""
    if abs(a * a + c * c - 1.0) > 1e-12:
        raise ValueError(f"tilted circle requires a^2 + c^2 = 1, got a={a}, c={c}")
    x = spectral.grid(N)
    return SpinField(np.stack([a * np.cos(x), a * np.sin(x),
                               np.full(N, float(c))], axis=1))


def tilted_circle_exact(N, a, c, t):
    """Exact rotating solution (a cos(x+ct), a sin(x+ct), c) at time t."""
    x = spectral.grid(N) + c * t
    f = SpinField(np.stack([a * np.cos(x), a * np.sin(x),
                            np.full(N, float(c))], axis=1))
    f.time = t
    return f


def hyperbolic_circle(N, a):
    """(b, a cos x, a sin x) with b = sqrt(1 + a^2); rotates with frequency b."""
    b = np.sqrt(1.0 + a * a)
    x = spectral.grid(N)
    return HyperbolicField(np.stack([np.full(N, b), a * np.cos(x),
                                     a * np.sin(x)], axis=1))


def hyperbolic_circle_exact(N, a, t):
    b = np.sqrt(1.0 + a * a)
    x = spectral.grid(N) + b * t
    f = HyperbolicField(np.stack([np.full(N, b), a * np.cos(x),
                                  a * np.sin(x)], axis=1))
    f.time = t
    return f


def random_band_limited(N, bandwidth, seed, amplitude=0.3):
    """Unit field: north pole plus a band-limited perturbation, renormalized.

    The perturbation amplitude keeps the Fourier tail of the normalized
    field decaying fast, which the Lax rank diagnostics rely on.
    """
    rng = np.random.default_rng(seed)
    x = spectral.grid(N)
    vals = np.tile([0.0, 0.0, 1.0], (N, 1))
    for n in range(1, bandwidth + 1):
        amp = rng.standard_normal((3, 2)) * amplitude / bandwidth
        vals += (amp[:, 0] * np.cos(n * x)[:, None]
                 + amp[:, 1] * np.sin(n * x)[:, None])
    return SpinField(vals).renormalized()


def random_rational(N, degree, seed, scale=0.5):
    """Random rational unit field via inverse stereographic projection.

    w(e^{ix}) is a random polynomial of the given degree; the projected
    field S = (2 Re w, 2 Im w, |w|^2 - 1)/(|w|^2 + 1) is exactly unit norm
    and rational in e^{ix}, so its Lax operator has exact finite rank.
    Pointwise renormalization of a trigonometric polynomial would not be
    rational, which is why the rank diagnostics use this family.
    """
    rng = np.random.default_rng(seed)
    c = (rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1))
    c *= scale / (1.0 + np.arange(degree + 1))
    z = np.exp(1j * spectral.grid(N))
    w = np.polyval(c[::-1], z)
    d = np.abs(w) ** 2 + 1.0
    vals = np.stack([2.0 * w.real / d, 2.0 * w.imag / d,
                     (np.abs(w) ** 2 - 1.0) / d], axis=1)
    return SpinField(vals)


def bandwidth_of(values, tol=1e-12):
    """Largest |mode| carrying a Fourier coefficient above tol."""
    coeffs = spectral.fft(np.asarray(values, dtype=float).T)
    mags = np.abs(coeffs).max(axis=0)
    n = np.abs(spectral.modes(mags.shape[0]))
    active = mags > tol * max(mags.max(), 1.0)
    if not active.any():
        return 0
    return int(n[active].max())
