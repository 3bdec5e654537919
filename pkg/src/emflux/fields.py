"""Concrete field configurations as finite sets of null-shell Fourier modes.

A mode lives at a reduced frequency xi_bar (the d-1 components excluding the
distinguished coordinate ell) on the null shell, with the ell-component
chi = +sqrt(-Delta_ll xi_bar.xi_bar).  Real fields store only the +chi
branch; the conjugate branch is implied, and every real-space evaluator sums
the hermitian pair as twice the real part.

Frequency convention: modes oscillate as exp(j*2*pi*xi.x) with the metric
dot xi.x = sum_i Delta_ii xi_i x_i, so space-time derivatives act per mode
as multiplication by j*2*pi*xi (wedge or interior as appropriate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from .indices import Signature, enumerate_grade, grade_size, metric_delta
from .multivector import (
    Multivector,
    _delta_diag,
    _interior_matrix,
    dot,
    left_interior,
    lint_coeffs,
    wedge_coeffs,
    zero,
)
from .tensors import odot_comps, owedge_comps

__all__ = [
    "Mode",
    "ModeSet",
    "GaussianPacketSpec",
    "ShellError",
    "DegenerateDirectionError",
    "EmptyFieldError",
    "chi_ell",
    "coulomb_project",
    "admissible_dimension",
    "make_gaussian_packet",
    "make_periodic_modeset",
    "make_offshell",
    "potential_at",
    "field_at",
    "maxwell_residuals",
    "lagrangian_density",
    "lorentz_force",
    "stress_divergence_at",
    "save_modeset",
    "load_modeset",
]

TWO_PI = 2.0 * math.pi
CHI_MIN_FACTOR = 1e-9

FORMAT_VERSION = 1


class ShellError(ValueError):
    """Reduced frequency admits no real null ell-component."""


class DegenerateDirectionError(ValueError):
    """Gauge projection is undefined on the shell boundary (chi = 0)."""


class EmptyFieldError(ValueError):
    """Every candidate mode was dropped."""


class UnsupportedFieldError(ValueError):
    """Operation needs analytic frequency derivatives this set lacks."""


# ---------------------------------------------------------------------------
# shell kinematics
# ---------------------------------------------------------------------------

def reduced_axes(sig: Signature, ell: int) -> tuple[int, ...]:
    """The d-1 coordinate axes orthogonal to ell, ascending."""
    if not 0 <= ell < sig.d:
        raise ValueError(f"ell={ell} out of range for d={sig.d}")
    return tuple(t for t in range(sig.d) if t != ell)


def chi_ell(xi_bar, ell: int, sig: Signature) -> float:
    """Positive null frequency chi = +sqrt(-Delta_ll xi_bar.xi_bar).

    ``xi_bar`` holds the d-1 reduced components in ascending axis order.
    """
    xb = np.asarray(xi_bar, dtype=np.float64)
    axes = reduced_axes(sig, ell)
    if xb.shape != (sig.d - 1,):
        raise ValueError(f"xi_bar needs {sig.d - 1} components")
    deltas = np.array([sig.delta(t) for t in axes], dtype=np.float64)
    quad = -sig.delta(ell) * float(np.sum(deltas * xb * xb))
    if quad < 0:
        raise ShellError(
            f"xi_bar={xb.tolist()} lies outside the null shell for ell={ell}")
    return math.sqrt(quad)


# ---------------------------------------------------------------------------
# gauge projection
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _contraction_rows(k: int, n: int, g: int) -> np.ndarray:
    """E[t] maps grade-g coeffs to coeffs of (e_t _| .); shape (d, low, g)."""
    sig = Signature(k, n)
    d = sig.d
    W = _interior_matrix(k, n, 1, g)          # (d * C(d,g), C(d,g-1))
    nb = grade_size(g, sig)
    return W.reshape(d, nb, -1).transpose(0, 2, 1).copy()


def _constraint_matrix(sig: Signature, r: int, ell: int,
                       xi_bar: np.ndarray) -> np.ndarray:
    """Stacked linear gauge constraints on a grade r-1 amplitude.

    Rows are (e_ell _| a) and (xi_bar _| a); on the e_ell-free subspace the
    latter is equivalent to the full null-frequency condition xi_plus _| a.
    """
    g = r - 1
    if g == 0:
        return np.zeros((0, 1))
    E = _contraction_rows(sig.k, sig.n, g)
    axes = reduced_axes(sig, ell)
    xi_rows = np.tensordot(xi_bar, E[list(axes)], axes=(0, 0))
    return np.vstack([E[ell], xi_rows])


def _projector(sig: Signature, r: int, ell: int, xi_bar: np.ndarray) -> np.ndarray:
    C = _constraint_matrix(sig, r, ell, xi_bar)
    nA = grade_size(r - 1, sig)
    if C.shape[0] == 0:
        return np.eye(nA)
    return np.eye(nA) - np.linalg.pinv(C) @ C


def _projector_with_grad(sig: Signature, r: int, ell: int,
                         xi_bar: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Projector P and its derivatives dP/dxi_t (axis order), rank-constant."""
    g = r - 1
    nA = grade_size(g, sig)
    axes = reduced_axes(sig, ell)
    C = _constraint_matrix(sig, r, ell, xi_bar)
    if C.shape[0] == 0:
        return np.eye(nA), np.zeros((len(axes), nA, nA))
    Cp = np.linalg.pinv(C)
    P = np.eye(nA) - Cp @ C
    E = _contraction_rows(sig.k, sig.n, g)
    nlow = E.shape[1]
    dP = np.empty((len(axes), nA, nA))
    for a, t in enumerate(axes):
        dC = np.vstack([np.zeros((nlow, nA)), E[t]])
        half = Cp @ dC @ P
        dP[a] = -half - half.T
    return P, dP


def coulomb_project(amp: Multivector, xi_plus, ell: int) -> Multivector:
    """Orthogonal projection of an amplitude onto the admissible gauge subspace.

    The physical conditions are e_ell _| amp' = 0 and xi_plus _| amp' = 0;
    the choice of complement is Euclidean on the canonical coefficients.
    ``xi_plus`` is the full d-component null frequency vector.
    """
    sig = amp.sig
    xp = np.asarray(xi_plus, dtype=np.float64)
    if xp.shape != (sig.d,):
        raise ValueError(f"xi_plus needs {sig.d} components")
    if xp[ell] == 0.0:
        raise DegenerateDirectionError("chi = 0: no transverse decomposition")
    axes = reduced_axes(sig, ell)
    xb = xp[list(axes)]
    P = _projector(sig, amp.grade + 1, ell, xb)
    return amp.copy_with(P @ amp.coeffs)


def admissible_dimension(sig: Signature, r: int) -> int:
    """Dimension of the per-component spin subspace, C(k+n-4, r-2).

    Outside the k+n >= 4, r >= 2 regime, falls back to the rank computed
    from an axis-aligned projector (see tests for the rank construction).
    """
    if sig.d >= 4 and r >= 2:
        return math.comb(sig.d - 4, r - 2)
    return spin_subspace_rank(sig, r)


def spin_subspace_rank(sig: Signature, r: int, ell: int = 0,
                       pair: tuple[int, int] | None = None,
                       axis: int | None = None) -> int:
    """Numerical rank of the gauge projector on the lists feeding one
    spin component.

    Columns are the blades eps(i, L) with L disjoint from {i, j, ell}; the
    reduced frequency is aligned with a coordinate axis outside
    {ell, i, j} so the projector diagonalizes over index lists.
    """
    d = sig.d
    if d < 4:
        return 0
    cands = [t for t in range(d) if t != ell]
    if pair is None:
        pair = (cands[0], cands[1])
    i, j = pair
    if axis is None:
        axis = next(t for t in range(d) if t not in {ell, i, j})
    axes = reduced_axes(sig, ell)
    xb = np.zeros(d - 1)
    xb[axes.index(axis)] = 1.0
    P = _projector(sig, r, ell, xb)
    blades = enumerate_grade(r - 1, sig)
    cols = [p for p, K in enumerate(blades)
            if i in K and j not in K and ell not in K]
    if not cols:
        return 0
    sub = P[:, cols]
    svals = np.linalg.svd(sub, compute_uv=False)
    return int(np.sum(svals > 1e-9))


# ---------------------------------------------------------------------------
# mode sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mode:
    """One stored (+chi branch) null-shell mode."""

    xi_bar: np.ndarray
    weight: float
    amp: Multivector


@dataclass(frozen=True)
class ModeGrid:
    """Cartesian structure of a grid-built mode set (dropped cells omitted)."""

    axes: tuple[np.ndarray, ...]          # coordinate values per reduced axis
    flat_index: np.ndarray                # mode -> flat cell in C order


@dataclass
class ModeSet:
    """Immutable-by-convention collection of null-shell modes.

    Arrays are aligned: ``xi_bar`` (M, d-1) in ascending reduced-axis order,
    ``chi`` (M,), ``weight`` (M,), ``amps`` (M, C(d, r-1)) complex.
    ``damps`` holds the analytic frequency derivatives of the amplitudes,
    (M, d-1, C(d, r-1)), when the construction provides them.
    """

    sig: Signature
    r: int
    ell: int
    xi_bar: np.ndarray
    chi: np.ndarray
    weight: np.ndarray
    amps: np.ndarray
    damps: np.ndarray | None = None
    grid: ModeGrid | None = None
    dropped: int = 0
    on_shell: bool = True
    _fc: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        M = self.xi_bar.shape[0]
        nA = grade_size(self.r - 1, self.sig)
        assert self.xi_bar.shape == (M, self.sig.d - 1)
        assert self.chi.shape == (M,) and self.weight.shape == (M,)
        assert self.amps.shape == (M, nA)

    # -- basic views ---------------------------------------------------------
    def __len__(self) -> int:
        return self.xi_bar.shape[0]

    @property
    def axes(self) -> tuple[int, ...]:
        return reduced_axes(self.sig, self.ell)

    def modes(self):
        for m in range(len(self)):
            yield Mode(self.xi_bar[m].copy(), float(self.weight[m]),
                       Multivector(self.sig, self.r - 1, self.amps[m]))

    def xi_full(self) -> np.ndarray:
        """Full d-component frequency vectors of the stored branch, (M, d)."""
        out = np.zeros((len(self), self.sig.d))
        out[:, list(self.axes)] = self.xi_bar
        out[:, self.ell] = self.chi
        return out

    def has_derivatives(self) -> bool:
        return self.damps is not None

    def require_derivatives(self) -> np.ndarray:
        if self.damps is None:
            raise UnsupportedFieldError(
                "mode set lacks analytic frequency derivatives of the "
                "amplitudes (build it with make_gaussian_packet)")
        return self.damps

    # -- cached mode-level field coefficients ---------------------------------
    def field_coeffs(self) -> np.ndarray:
        """Per-mode coefficients of F: j*2pi*(w/(2chi)) xi ^ amp, (M, C(d,r))."""
        if self._fc is None:
            scale = (self.weight / (2.0 * self.chi))[:, None]
            xi_c = self.xi_full().astype(np.complex128)
            self._fc = 1j * TWO_PI * scale * wedge_coeffs(
                self.sig, 1, self.r - 1, xi_c, self.amps)
        return self._fc

    def potential_coeffs(self) -> np.ndarray:
        """Per-mode coefficients of A: (w/(2chi)) amp, (M, C(d,r-1))."""
        return (self.weight / (2.0 * self.chi))[:, None] * self.amps


def make_offshell(ms: ModeSet, chi_factor: float = 1.1) -> ModeSet:
    """Copy with the ell-frequency scaled off the null shell (test input)."""
    return replace(ms, chi=ms.chi * chi_factor, on_shell=False, _fc=None,
                   damps=None, grid=None)


# ---------------------------------------------------------------------------
# packet factories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianPacketSpec:
    """Rectangular reduced-frequency grid with a Gaussian amplitude envelope.

    ``center``: d-1 reduced-frequency components of the envelope peak.
    ``spread``: envelope scale s; the envelope is exp(-|xi-c|^2 / (4 s^2)).
    ``seed``: constant polarization multivector of grade r-1 (r = grade+1).
    ``points``: grid points per axis; ``halfwidth`` defaults to 4 s.
    """

    center: tuple[float, ...]
    spread: float
    seed: Multivector
    points: int = 8
    halfwidth: float | None = None

    def __post_init__(self) -> None:
        if self.spread <= 0:
            raise ValueError("spread must be positive")
        if self.points < 1:
            raise ValueError("need at least one grid point per axis")
        if self.halfwidth is not None and self.halfwidth < 4 * self.spread:
            raise ValueError("grid must cover at least 4 spreads")


def _midpoint_axis(center: float, halfwidth: float, points: int) -> np.ndarray:
    cell = 2.0 * halfwidth / points
    return center - halfwidth + cell * (np.arange(points) + 0.5)


def make_gaussian_packet(spec: GaussianPacketSpec, ell: int) -> ModeSet:
    """Gauge-projected Gaussian packet with analytic frequency derivatives."""
    sig = spec.seed.sig
    r = spec.seed.grade + 1
    d = sig.d
    center = np.asarray(spec.center, dtype=np.float64)
    if center.shape != (d - 1,):
        raise ValueError(f"packet center needs {d - 1} components")
    H = spec.halfwidth if spec.halfwidth is not None else 4.0 * spec.spread
    if spec.points == 1:
        axes_vals = [np.array([c]) for c in center]
        cell_volume = 1.0
    else:
        axes_vals = [_midpoint_axis(c, H, spec.points) for c in center]
        cell_volume = (2.0 * H / spec.points) ** (d - 1)

    grids = np.meshgrid(*axes_vals, indexing="ij")
    xi_all = np.stack([g.ravel() for g in grids], axis=-1)   # (Ncells, d-1)
    ncells = xi_all.shape[0]

    axes = reduced_axes(sig, ell)
    deltas = np.array([sig.delta(t) for t in axes])
    quad = -sig.delta(ell) * np.sum(deltas * xi_all * xi_all, axis=1)
    freq_scale = float(np.max(np.abs(xi_all))) or 1.0
    chi_min = CHI_MIN_FACTOR * freq_scale
    keep = quad > chi_min ** 2
    dropped = int(ncells - np.count_nonzero(keep))
    if not np.any(keep):
        raise EmptyFieldError("all grid points dropped (outside shell or "
                              "too close to its boundary)")

    xi_kept = xi_all[keep]
    chi = np.sqrt(quad[keep])
    M = xi_kept.shape[0]
    nA = grade_size(r - 1, sig)
    s2 = spec.spread * spec.spread
    diff = xi_kept - center
    env = np.exp(-np.sum(diff * diff, axis=1) / (4.0 * s2))
    denv = -(diff / (2.0 * s2)) * env[:, None]               # (M, d-1)

    seed_c = spec.seed.coeffs
    amps = np.empty((M, nA), dtype=np.complex128)
    damps = np.empty((M, d - 1, nA), dtype=np.complex128)
    for m in range(M):
        P, dP = _projector_with_grad(sig, r, ell, xi_kept[m])
        ps = P @ seed_c
        amps[m] = env[m] * ps
        for a in range(d - 1):
            damps[m, a] = denv[m, a] * ps + env[m] * (dP[a] @ seed_c)

    weight = np.full(M, cell_volume)
    flat = np.flatnonzero(keep)
    xi_s, chi_s, w_s, amps_s, damps_s, flat_s, order = _sort_with(
        xi_kept, chi, weight, amps, damps, flat)
    grid = ModeGrid(tuple(axes_vals), flat_s)
    return ModeSet(sig, r, ell, xi_s, chi_s, w_s, amps_s, damps_s,
                   grid=grid, dropped=dropped)


def _sort_with(xi_bar, chi, weight, amps, damps, flat):
    order = np.lexsort(xi_bar.T[::-1])
    return (xi_bar[order], chi[order], weight[order], amps[order],
            None if damps is None else damps[order],
            None if flat is None else flat[order], order)


def make_periodic_modeset(sig: Signature, r: int, ell: int, box: float,
                          orders: int, seed_amp, rng=None,
                          envelope_spread: float | None = None) -> ModeSet:
    """Modes on the reciprocal lattice of a periodic box of side ``box``.

    Frequencies run over integer multiples 1/box with per-axis order up to
    ``orders``; weights are the reciprocal cell volume box^-(d-1).  The
    amplitude is the gauge-projected ``seed_amp`` (a Multivector, or a
    callable xi_bar -> coefficient array, e.g. for rng-driven amplitudes),
    optionally shaped by a Gaussian envelope about the origin.
    """
    d = sig.d
    vals = np.arange(-orders, orders + 1) / box
    grids = np.meshgrid(*([vals] * (d - 1)), indexing="ij")
    xi_all = np.stack([g.ravel() for g in grids], axis=-1)

    axes = reduced_axes(sig, ell)
    deltas = np.array([sig.delta(t) for t in axes])
    quad = -sig.delta(ell) * np.sum(deltas * xi_all * xi_all, axis=1)
    chi_min = CHI_MIN_FACTOR * float(np.max(np.abs(xi_all)))
    keep = quad > chi_min ** 2
    dropped = int(xi_all.shape[0] - np.count_nonzero(keep))
    if not np.any(keep):
        raise EmptyFieldError("all lattice points dropped")
    xi_kept = xi_all[keep]
    chi = np.sqrt(quad[keep])
    M = xi_kept.shape[0]
    nA = grade_size(r - 1, sig)
    amps = np.empty((M, nA), dtype=np.complex128)
    for m in range(M):
        if callable(seed_amp):
            raw = np.asarray(seed_amp(xi_kept[m]), dtype=np.complex128)
        else:
            raw = seed_amp.coeffs
        if envelope_spread is not None:
            raw = raw * np.exp(-np.sum(xi_kept[m] ** 2)
                               / (4.0 * envelope_spread ** 2))
        P = _projector(sig, r, ell, xi_kept[m])
        amps[m] = P @ raw
    weight = np.full(M, box ** -(d - 1))
    flat = np.flatnonzero(keep)
    xi_s, chi_s, w_s, amps_s, _, flat_s, _ = _sort_with(
        xi_kept, chi, weight, amps, None, flat)
    grid = ModeGrid(tuple([vals.copy() for _ in range(d - 1)]), flat_s)
    return ModeSet(sig, r, ell, xi_s, chi_s, w_s, amps_s, grid=grid,
                   dropped=dropped)


# ---------------------------------------------------------------------------
# point evaluators
# ---------------------------------------------------------------------------

def _phases(ms: ModeSet, x: np.ndarray) -> np.ndarray:
    """exp(j*2pi*xi.x) per mode, metric dot, stored branch."""
    deltas = _delta_diag(ms.sig.k, ms.sig.n, 1)
    arg = ms.xi_full() @ (deltas * x)
    return np.exp(1j * TWO_PI * arg)


def _check_point(x, d: int) -> np.ndarray:
    xv = np.asarray(x, dtype=np.float64)
    if xv.shape != (d,):
        raise ValueError(f"space-time point needs {d} coordinates")
    if not np.all(np.isfinite(xv)):
        raise ValueError("space-time point must be finite")
    return xv


def potential_at(ms: ModeSet, x) -> Multivector:
    """A(x) summed over the hermitian pair; real-valued by construction."""
    xv = _check_point(x, ms.sig.d)
    acc = _phases(ms, xv) @ ms.potential_coeffs()
    return Multivector(ms.sig, ms.r - 1, 2.0 * np.real(acc))


def field_at(ms: ModeSet, x) -> Multivector:
    """F(x) = (exterior derivative of A)(x); real-valued."""
    xv = _check_point(x, ms.sig.d)
    acc = _phases(ms, xv) @ ms.field_coeffs()
    return Multivector(ms.sig, ms.r, 2.0 * np.real(acc))


def maxwell_residuals(ms: ModeSet, x) -> tuple[Multivector, Multivector]:
    """(interior derivative of F, exterior derivative of F) at x.

    Both vanish for source-free on-shell gauge-fixed mode sets; the
    exterior residual vanishes structurally for any F = dA field.
    """
    sig = ms.sig
    xv = _check_point(x, sig.d)
    ph = _phases(ms, xv)
    fc = ms.field_coeffs()
    xi_c = ms.xi_full().astype(np.complex128)
    div_c = 1j * TWO_PI * lint_coeffs(sig, 1, ms.r, xi_c, fc)
    div = Multivector(sig, ms.r - 1, 2.0 * np.real(ph @ div_c))
    if ms.r + 1 <= sig.d:
        curl_c = 1j * TWO_PI * wedge_coeffs(sig, 1, ms.r, xi_c, fc)
        curl = Multivector(sig, ms.r + 1, 2.0 * np.real(ph @ curl_c))
    else:
        # grade d+1 does not exist; the exterior residual is identically zero
        curl = zero(sig, 0)
    return div, curl


def lagrangian_density(F: Multivector, A: Multivector, J: Multivector) -> float:
    """Free-field term ((-1)^(r-1)/2) F.F plus the interaction A.J."""
    r = F.grade
    if A.grade != r - 1 or J.grade != r - 1:
        raise ValueError("potential and source must have grade r-1")
    val = 0.5 * (-1.0) ** (r - 1) * dot(F, F) + dot(A, J)
    return float(np.real(val)) if abs(np.imag(val)) < 1e-12 * max(
        1.0, abs(val)) else complex(val)


def lorentz_force(J: Multivector, F: Multivector) -> Multivector:
    """Generalized force density J _| F."""
    if J.grade != F.grade - 1:
        raise ValueError("source grade must be field grade minus one")
    return left_interior(J, F)


def _stress_bilinear(sig: Signature, g: int, u: np.ndarray,
                     v: np.ndarray) -> np.ndarray:
    return -0.5 * (odot_comps(sig, g, u, v) + owedge_comps(sig, g, u, v))


def field_and_gradients_at(ms: ModeSet, x) -> tuple[np.ndarray, np.ndarray]:
    """F(x) coefficients and all coordinate derivatives d_j F(x), analytic."""
    sig = ms.sig
    xv = _check_point(x, sig.d)
    ph = _phases(ms, xv)
    fc = ms.field_coeffs()
    fval = 2.0 * np.real(ph @ fc)
    deltas = _delta_diag(sig.k, sig.n, 1)
    xi = ms.xi_full()
    # d_j of exp(j*2pi*xi.x) multiplies by j*2pi*Delta_jj*xi_j
    fac = 1j * TWO_PI * deltas[None, :] * xi            # (M, d)
    dF = 2.0 * np.real(np.einsum("m,mj,mc->jc", ph, fac, fc))
    return fval, dF


def stress_tensor_gradients_at(ms: ModeSet, x) -> tuple[np.ndarray, np.ndarray]:
    """T(x) components and d_j T(x) for all j, from analytic mode sums."""
    sig = ms.sig
    fval, dF = field_and_gradients_at(ms, x)
    T = _stress_bilinear(sig, ms.r, fval, fval)
    dT = np.empty((sig.d,) + T.shape, dtype=T.dtype)
    for j in range(sig.d):
        dT[j] = (_stress_bilinear(sig, ms.r, dF[j], fval)
                 + _stress_bilinear(sig, ms.r, fval, dF[j]))
    return T, dT


def stress_divergence_at(ms: ModeSet, x) -> Multivector:
    """Interior derivative of the stress tensor at x; zero for free fields."""
    sig = ms.sig
    _, dT = stress_tensor_gradients_at(ms, x)
    # (del _| T)_l = sum_j d_j T_{jl}; the two metric factors cancel.
    div = np.einsum("jjl->l", dT)
    return Multivector(sig, 1, div)


# ---------------------------------------------------------------------------
# serialization: line-oriented text, one mode per record
# ---------------------------------------------------------------------------

def save_modeset(ms: ModeSet, path) -> None:
    """Write the wire format: header ``emflux-modeset <ver> k n r ell`` then
    one line per mode with d-1 frequencies, the weight, and re/im pairs of
    the amplitude coefficients in canonical order."""
    if not ms.on_shell:
        raise ValueError("wire format stores on-shell mode sets only")
    with open(path, "w") as fh:
        fh.write(f"emflux-modeset {FORMAT_VERSION} {ms.sig.k} {ms.sig.n} "
                 f"{ms.r} {ms.ell}\n")
        for m in range(len(ms)):
            parts = [f"{v:.17g}" for v in ms.xi_bar[m]]
            parts.append(f"{ms.weight[m]:.17g}")
            for c in ms.amps[m]:
                parts.append(f"{c.real:.17g}")
                parts.append(f"{c.imag:.17g}")
            fh.write(" ".join(parts) + "\n")


def load_modeset(path) -> ModeSet:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 6 or header[0] != "emflux-modeset":
            raise ValueError(f"{path}: not an emflux mode-set file")
        ver, k, n, r, ell = (int(v) for v in header[1:])
        if ver != FORMAT_VERSION:
            raise ValueError(f"unsupported mode-set format version {ver}")
        sig = Signature(k, n)
        nA = grade_size(r - 1, sig)
        want = (sig.d - 1) + 1 + 2 * nA
        xi, w, amps = [], [], []
        for line_no, line in enumerate(fh, start=2):
            vals = [float(v) for v in line.split()]
            if len(vals) != want:
                raise ValueError(f"{path}:{line_no}: expected {want} fields, "
                                 f"got {len(vals)}")
            xi.append(vals[: sig.d - 1])
            w.append(vals[sig.d - 1])
            re = np.array(vals[sig.d:][0::2])
            im = np.array(vals[sig.d:][1::2])
            amps.append(re + 1j * im)
    xi = np.array(xi).reshape(-1, sig.d - 1)
    chi = np.array([chi_ell(xb, ell, sig) for xb in xi])
    ms = ModeSet(sig, r, ell, xi, chi, np.array(w),
                 np.array(amps, dtype=np.complex128).reshape(-1, nA))
    return ms
