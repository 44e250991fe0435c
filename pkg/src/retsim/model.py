"""Two-surface isomerization model: potentials, grid, initial packet, calibration.

Units: hbar = 1, mass = 1, time in fs, energies and rates in fs^-1, and the
isomerization coordinate x is dimensionless (the mass only rescales x, so
nothing is lost by fixing m = 1).

The model consists of two harmonic diabatic surfaces,

    V1(x) = (1/2) w1^2 x^2                   (ground, cis well at x = 0)
    V2(x) = dE + (1/2) w2^2 (x - dx)^2       (excited, trans well at x = dx)

coupled by a constant electronic matrix element alpha.  The packet starts as
the vibrational ground state of the cis well promoted to the excited surface.
The surface offset dx is not an independent input: it is calibrated so that
the avoided crossing between V1 and V2 reproduces a prescribed Landau-Zener
adiabaticity parameter delta = alpha^2 / (v_c |V1' - V2'|).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .errors import (
    CalibrationError,
    DomainTooSmallError,
    NoCrossingError,
    NormalizationError,
)

SPEED_OF_LIGHT_NM_FS = 299.792458

#: Default adiabaticity coefficient: delta = DELTA_COEFF * alpha^2 (fs^2).
DELTA_COEFF_FS2 = 11.5

#: Expected first-arrival window at the crossing (sanity check, fs).
ARRIVAL_WINDOW_FS = (85.0, 135.0)


@dataclass(frozen=True)
class ModelParams:
    """Physical constants of the two-surface model (fs^-1 units, x dimensionless).

    ``delta_x`` may be ``None`` until :func:`calibrate_offset` has determined it.
    """

    omega1: float = 2.0 * np.pi / 300.0
    omega2: float = 2.0 * np.pi / 600.0
    alpha: float = 0.1
    e_in: float = 2.0 * np.pi * SPEED_OF_LIGHT_NM_FS / 500.0
    delta_e: float = 0.6 * (2.0 * np.pi * SPEED_OF_LIGHT_NM_FS / 500.0)
    delta_x: float | None = None
    mass: float = 1.0

    def __post_init__(self):
        if self.omega1 <= 0 or self.omega2 <= 0:
            raise ValueError("surface frequencies must be positive")
        if self.alpha < 0:
            raise ValueError("electronic coupling must be nonnegative")
        if self.delta_e < 0:
            raise ValueError("surface energy offset must be nonnegative")
        if self.delta_x is not None and self.delta_x <= 0:
            raise ValueError("surface coordinate offset must be positive")
        if self.mass != 1.0:
            raise ValueError("mass is fixed to 1 (it only rescales x)")

    @property
    def sigma_cis(self) -> float:
        """Width of the initial packet, sqrt(1/(2 w1))."""
        return float(np.sqrt(0.5 / self.omega1))

    @property
    def sigma_trans(self) -> float:
        """Ground-state width of the excited well, sqrt(1/(2 w2))."""
        return float(np.sqrt(0.5 / self.omega2))

    def require_offset(self) -> float:
        if self.delta_x is None:
            raise ValueError(
                "delta_x is not set; run calibrate_offset() first "
                "or construct the params with an explicit offset"
            )
        return self.delta_x

    def v1(self, x):
        return 0.5 * self.omega1**2 * np.asarray(x) ** 2

    def v2(self, x):
        dx = self.require_offset()
        return self.delta_e + 0.5 * self.omega2**2 * (np.asarray(x) - dx) ** 2


@dataclass(frozen=True)
class Grid:
    """Uniform, periodic spatial grid with its conjugate momentum lattice.

    Discretized wavefunctions carry sqrt(dx), so plain l2 sums are quadrature
    sums: norm(psi)^2 = sum |psi_i|^2 corresponds to the integral of |psi|^2.
    ``k_values`` follow the standard FFT ordering.
    """

    n_points: int
    x_min: float
    x_max: float

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_points

    @property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n_points)

    @property
    def k_values(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)


@dataclass(frozen=True)
class Hamiltonian:
    """Discretized two-surface Hamiltonian.

    Kinetic energy is diagonal on the momentum lattice (``kinetic_spectrum``),
    both potentials are diagonal on the grid, and the electronic coupling is a
    position-independent scalar on the off-diagonal electronic block.
    """

    grid: Grid
    kinetic_spectrum: np.ndarray
    v1: np.ndarray
    v2: np.ndarray
    coupling: float

    def apply(self, psi: np.ndarray) -> np.ndarray:
        """Apply H to a state of shape (2, n); surface 1 is row 0."""
        out = np.empty_like(psi)
        tpsi = np.fft.ifft(self.kinetic_spectrum * np.fft.fft(psi, axis=1), axis=1)
        out[0] = tpsi[0] + self.v1 * psi[0] + self.coupling * psi[1]
        out[1] = tpsi[1] + self.v2 * psi[1] + self.coupling * psi[0]
        return out

    def kinetic_dense(self) -> np.ndarray:
        """Kinetic operator as a dense (real symmetric) n x n matrix."""
        n = self.grid.n_points
        eye = np.eye(n)
        t = np.fft.ifft(self.kinetic_spectrum[:, None] * np.fft.fft(eye, axis=0), axis=0)
        return t

    def dense(self, w1=None, w2=None) -> np.ndarray:
        """Dense 2n x 2n matrix of H - i W, with optional absorbing profiles."""
        n = self.grid.n_points
        t = self.kinetic_dense()
        h = np.zeros((2 * n, 2 * n), dtype=complex)
        d1 = self.v1 if w1 is None else self.v1 - 1j * w1
        d2 = self.v2 if w2 is None else self.v2 - 1j * w2
        h[:n, :n] = t + np.diag(d1)
        h[n:, n:] = t + np.diag(d2)
        h[:n, n:] = self.coupling * np.eye(n)
        h[n:, :n] = self.coupling * np.eye(n)
        return h


@dataclass(frozen=True)
class CrossingInfo:
    """Geometry of the diabatic crossing first reached from the cis side."""

    x_c: float
    v_c: float
    slope_diff: float
    delta: float
    arrival_time: float


def build_grid(params: ModelParams, n_points: int = 512, padding: float = 2.0) -> Grid:
    """Construct the default simulation grid.

    The base domain is [-4 sigma_cis, delta_x + 4 sigma_trans]; ``padding``
    adds that many additional packet widths on each side.  Raises
    DomainTooSmallError when ``n_points`` cannot resolve the initial packet.
    """
    if n_points < 64 or (n_points & (n_points - 1)) != 0:
        raise ValueError(f"n_points must be a power of two >= 64, got {n_points}")
    if padding < 0:
        raise ValueError("padding must be nonnegative")
    dx_off = params.require_offset()
    x_min = -(4.0 + padding) * params.sigma_cis
    x_max = dx_off + (4.0 + padding) * params.sigma_trans
    grid = Grid(n_points=n_points, x_min=x_min, x_max=x_max)
    if grid.dx > 0.5 * params.sigma_cis:
        raise DomainTooSmallError(
            f"dx = {grid.dx:.3g} does not resolve the initial packet "
            f"(sigma = {params.sigma_cis:.3g}); increase n_points"
        )
    # Largest classically reachable momentum: all the initial potential energy
    # converted to kinetic energy.  Warn when the momentum lattice margin is thin.
    e_tot = params.delta_e + 0.5 * params.omega2**2 * dx_off**2
    k_phys = np.sqrt(2.0 * e_tot)
    k_max = np.pi / grid.dx
    if k_max < 1.3 * k_phys:
        warnings.warn(
            f"momentum lattice margin is thin (k_max = {k_max:.2f}, physical "
            f"k up to {k_phys:.2f}); results may be aliased",
            RuntimeWarning,
            stacklevel=2,
        )
    return grid


def build_hamiltonian(params: ModelParams, grid: Grid) -> Hamiltonian:
    """Evaluate kinetic spectrum and both potentials on the grid."""
    x = grid.x
    return Hamiltonian(
        grid=grid,
        kinetic_spectrum=0.5 * grid.k_values**2,
        v1=params.v1(x),
        v2=params.v2(x),
        coupling=params.alpha,
    )


def initial_state(params: ModelParams, grid: Grid) -> np.ndarray:
    """Vibrational ground state of the cis well, placed on the excited surface.

    Returns a (2, n) complex array in the sqrt(dx) convention; row 0 is the
    ground surface (empty), row 1 the excited surface.
    """
    x = grid.x
    psi = (params.omega1 / np.pi) ** 0.25 * np.exp(-0.5 * params.omega1 * x**2)
    psi = psi * np.sqrt(grid.dx)
    norm2 = float(np.sum(psi**2))
    if abs(norm2 - 1.0) > 1e-10:
        raise NormalizationError(
            f"grid clips the initial packet: quadrature norm^2 = {norm2!r}"
        )
    out = np.zeros((2, grid.n_points), dtype=complex)
    out[1] = psi / np.sqrt(norm2)
    return out


def locate_crossing(params: ModelParams) -> CrossingInfo:
    """Find the diabatic crossing V1(x) = V2(x) first met on the path 0 -> delta_x.

    The packet starts at rest at x = 0 on the excited surface, so its speed at
    the crossing follows from energy conservation on V2 and the arrival time
    from the analytic harmonic trajectory x(t) = delta_x (1 - cos(w2 t)).
    """
    dx_off = params.require_offset()
    a = 0.5 * (params.omega1**2 - params.omega2**2)
    b = params.omega2**2 * dx_off
    c = -0.5 * params.omega2**2 * dx_off**2 - params.delta_e

    if abs(a) < 1e-14 * max(abs(b), 1.0):
        roots = [-c / b] if b != 0 else []
    else:
        disc = b * b - 4.0 * a * c
        if disc < 0:
            roots = []
        else:
            sq = np.sqrt(disc)
            roots = [(-b - sq) / (2 * a), (-b + sq) / (2 * a)]
    inside = sorted(x for x in roots if 0.0 < x < dx_off)
    if not inside:
        raise NoCrossingError(
            f"V1 and V2 do not intersect in (0, {dx_off:.4g}) for these parameters"
        )
    x_c = inside[0]

    v2_start = params.delta_e + 0.5 * params.omega2**2 * dx_off**2
    v2_cross = params.delta_e + 0.5 * params.omega2**2 * (x_c - dx_off) ** 2
    v_c = float(np.sqrt(2.0 * (v2_start - v2_cross)))
    slope_diff = float(abs(params.omega1**2 * x_c - params.omega2**2 * (x_c - dx_off)))
    delta = params.alpha**2 / (v_c * slope_diff)
    arrival = float(np.arccos(1.0 - x_c / dx_off) / params.omega2)
    return CrossingInfo(
        x_c=float(x_c),
        v_c=v_c,
        slope_diff=slope_diff,
        delta=float(delta),
        arrival_time=arrival,
    )


def calibrate_offset(
    params: ModelParams,
    target_delta: float | None = None,
    bracket: tuple[float, float] | None = None,
) -> ModelParams:
    """Solve for the surface offset delta_x that yields the target adiabaticity.

    ``target_delta`` defaults to 11.5 alpha^2.  Bracketed root finding over
    delta_x; the default bracket starts just above the smallest offset for
    which the surfaces still cross and extends far into the weak-coupling
    regime where delta is small.
    """
    if target_delta is None:
        target_delta = DELTA_COEFF_FS2 * params.alpha**2
    if target_delta <= 0:
        raise ValueError("target_delta must be positive")

    def delta_at(dx_off: float) -> float:
        return locate_crossing(replace(params, delta_x=dx_off)).delta

    if bracket is None:
        # Smallest offset with a crossing: V1(delta_x) = delta_e.
        lo = np.sqrt(2.0 * params.delta_e) / params.omega1 * (1.0 + 1e-9)
        hi = 100.0 * np.sqrt(2.0 * params.delta_e) / params.omega1
    else:
        lo, hi = bracket
    f_lo = delta_at(lo) - target_delta
    f_hi = delta_at(hi) - target_delta
    if f_lo * f_hi > 0:
        raise CalibrationError(
            f"no delta_x in [{lo:.4g}, {hi:.4g}] reaches delta = {target_delta:.4g} "
            f"(delta({lo:.4g}) = {f_lo + target_delta:.4g}, "
            f"delta({hi:.4g}) = {f_hi + target_delta:.4g})"
        )
    dx_star = brentq(
        lambda d: delta_at(d) - target_delta, lo, hi, xtol=1e-12, rtol=8.9e-16
    )
    calibrated = replace(params, delta_x=float(dx_star))
    arrival = locate_crossing(calibrated).arrival_time
    if not ARRIVAL_WINDOW_FS[0] <= arrival <= ARRIVAL_WINDOW_FS[1]:
        warnings.warn(
            f"calibrated first arrival {arrival:.1f} fs is outside the expected "
            f"window {ARRIVAL_WINDOW_FS}",
            RuntimeWarning,
            stacklevel=2,
        )
    return calibrated


def rabi_frequency(params: ModelParams) -> float:
    """Characteristic frequency right after excitation, sqrt(e_in^2 + alpha^2)."""
    return float(np.hypot(params.e_in, params.alpha))


def calibrated_params(**overrides) -> ModelParams:
    """Default parameters with delta_x calibrated to delta = 11.5 alpha^2."""
    return calibrate_offset(ModelParams(**overrides))
