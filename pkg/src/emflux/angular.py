"""Angular-momentum tensor, its divergence identity, and the flux split.

Real space: the flux of the moment tensor across a constant-x_ell surface,
evaluated as a truncated lattice sum.  Frequency space: the same flux
assembled from the normal modes as the energy-momentum part plus
center-of-motion, orbital, and spin bivectors,

    Omega = N + L + S - alpha ^ Pi.

All frequency-space sums run over the stored +chi branch with the hermitian
conjugate branch folded in analytically, so every reported component is
real by construction.  Mode sums are reduced in the canonical (sorted) mode
order with numpy's pairwise summation, independent of threading.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .indices import (
    Signature,
    blade_index,
    complement,
    enumerate_grade,
    epsilon,
    grade_size,
    metric_delta,
    sigma,
)
from .multivector import (
    Multivector,
    _delta_diag,
    _interior_matrix,
    _wedge_matrix,
    basis_blade,
    from_vector,
    lint_coeffs,
    wedge,
    wedge_coeffs,
    zero,
)
from .tensors import (
    Rank2Tensor,
    Rank3MomentTensor,
    boxwedge,
    boxwedge_comps,
    odot_comps,
    stress_comps,
)
from .fields import (
    ModeSet,
    field_at,
    reduced_axes,
    stress_tensor_gradients_at,
)

__all__ = [
    "FluxReport",
    "LatticeSpec",
    "RealSpaceFlux",
    "moment_tensor_at",
    "moment_divergence_at",
    "realspace_omega_flux",
    "pi_flux",
    "nls_flux",
    "l_component",
    "s_component",
    "circular_basis",
    "s_component_circular",
    "l_component_circular",
    "spin_canonical",
    "decompose",
    "fluxreport_records",
]

TWO_PI = 2.0 * math.pi


def _sigma_ell(sig: Signature, ell: int) -> float:
    """Orientation factor sigma(ell, ell^c) of the outward-normal surface."""
    return float(sigma((ell,), complement((ell,), sig)))


def _amp_norm_sq(ms: ModeSet) -> np.ndarray:
    """Metric-weighted squared magnitude of each amplitude, sum_K D_KK |A_K|^2.

    The metric weighting (rather than a plain Euclidean magnitude) is what
    makes the frequency-space energy-momentum flux agree with the real-space
    lattice sum of the stress components when extra temporal axes exist;
    for k = 1 and ell = 0 the two coincide.
    """
    dK = _delta_diag(ms.sig.k, ms.sig.n, ms.r - 1)
    return (np.abs(ms.amps) ** 2) @ dK


# ---------------------------------------------------------------------------
# moment tensor and its divergence
# ---------------------------------------------------------------------------

def moment_tensor_at(ms: ModeSet, x, alpha) -> Rank3MomentTensor:
    """(x - alpha) boxwedge T(x) with the analytic stress tensor."""
    sig = ms.sig
    xv = np.asarray(x, dtype=np.float64)
    av = np.asarray(alpha, dtype=np.float64)
    F = field_at(ms, xv)
    T = Rank2Tensor(sig, stress_comps(sig, ms.r, F.coeffs))
    arm = from_vector(xv - av, sig)
    return boxwedge(arm, T)


def moment_divergence_at(ms: ModeSet, x, alpha) -> Multivector:
    """Matrix divergence of the moment tensor, assembled term by term.

    Uses the Leibniz split into the Kronecker-delta piece and the
    moment-weighted stress gradients; the equality with
    (x - alpha) ^ (del _| T) is exercised by the verification suites.
    """
    sig = ms.sig
    d = sig.d
    xv = np.asarray(x, dtype=np.float64)
    av = np.asarray(alpha, dtype=np.float64)
    T, dT = stress_tensor_gradients_at(ms, x)
    out = np.zeros(grade_size(2, sig), dtype=np.complex128)
    # delta_{ji} term: sums to zero by antisymmetry, kept literal
    for i in range(d):
        for l in range(d):
            if i == l:
                continue
            out[blade_index(epsilon((i,), (l,)), sig)] += (
                sigma((i,), (l,)) * T[i, l])
    # moment-weighted gradient term, one first-slot row per derivative axis
    arm = (xv - av).astype(np.complex128)
    for j in range(d):
        out += boxwedge_comps(sig, arm, dT[j])[j]
    return Multivector(sig, 2, out)


# ---------------------------------------------------------------------------
# frequency-space flux pieces
# ---------------------------------------------------------------------------

def pi_flux(ms: ModeSet) -> Multivector:
    """Energy-momentum flux across the constant-x_ell surface."""
    sig = ms.sig
    pref = 4.0 * math.pi ** 2 * (-1.0) ** ms.r * _sigma_ell(sig, ms.ell)
    mu = ms.weight / (2.0 * ms.chi)
    vec = pref * (ms.xi_full() * (mu * _amp_norm_sq(ms))[:, None]).sum(axis=0)
    return Multivector(sig, 1, vec)


def _mode_gradient_vector(ms: ModeSet) -> np.ndarray:
    """Per-mode d-vector sum_t D_tt e_t ((d_t A)* . A), metric dot; (M, d)."""
    sig = ms.sig
    damps = ms.require_derivatives()
    dK = _delta_diag(sig.k, sig.n, ms.r - 1).astype(np.complex128)
    dots = np.einsum("mtk,k,mk->mt", np.conj(damps), dK, ms.amps)
    axes = list(ms.axes)
    deltas = _delta_diag(sig.k, sig.n, 1)
    out = np.zeros((len(ms), sig.d), dtype=np.complex128)
    out[:, axes] = deltas[axes] * dots
    return out


def nls_flux(ms: ModeSet, x_ell: float, alpha=None
             ) -> tuple[Multivector, Multivector, Multivector]:
    """Center-of-motion, orbital, and spin bivectors of the flux.

    ``alpha`` is accepted for interface symmetry with ``decompose`` but the
    three pieces themselves are origin-independent; the origin enters the
    assembled flux only through -alpha ^ Pi.
    """
    sig = ms.sig
    ell = ms.ell
    sl = _sigma_ell(sig, ell)
    mu = ms.weight / (2.0 * ms.chi)
    nb2 = grade_size(2, sig)

    # spin: -j 2pi s * sum mu (A* (.) A - cc), antisymmetric part as bivector
    Z = odot_comps(sig, ms.r - 1, np.conj(ms.amps), ms.amps)   # (M, d, d)
    Zsum = np.tensordot(mu, Z, axes=(0, 0))
    s_vals = np.zeros(nb2)
    for p, (t, j) in enumerate(enumerate_grade(2, sig)):
        s_vals[p] = 4.0 * math.pi * sl * float(np.imag(Zsum[t, j]))
    S = Multivector(sig, 2, s_vals)

    # orbital and center-of-motion need the analytic frequency derivatives
    gv = _mode_gradient_vector(ms)            # (M, d) complex
    gvi = np.imag(gv)
    pref = -2.0 * math.pi * (-1.0) ** ms.r * sl
    xi_bar_full = ms.xi_full()
    xi_bar_full = xi_bar_full.copy()
    xi_bar_full[:, ell] = 0.0
    l_vals = pref * np.tensordot(
        mu, wedge_coeffs(sig, 1, 1, xi_bar_full, gvi), axes=(0, 0))
    L = Multivector(sig, 2, l_vals)

    el = np.zeros(sig.d)
    el[ell] = 1.0
    n2_vals = pref * np.tensordot(
        mu * ms.chi, wedge_coeffs(sig, 1, 1, np.broadcast_to(
            el, (len(ms), sig.d)).copy(), gvi), axes=(0, 0))
    Pi = pi_flux(ms)
    xln = wedge_coeffs(sig, 1, 1, (x_ell * el).astype(np.complex128),
                       Pi.coeffs)
    N = Multivector(sig, 2, np.real(xln) + n2_vals)
    return N, L, S


# -- per-component forms (independent code paths) ---------------------------

def _check_component(ms: ModeSet, I) -> tuple[int, int]:
    i, j = (int(v) for v in I)
    if ms.ell in (i, j):
        raise ValueError(f"component {I} contains the surface index {ms.ell}")
    if not (0 <= i < ms.sig.d and 0 <= j < ms.sig.d) or i == j:
        raise ValueError(f"invalid bivector component {I}")
    return i, j


@lru_cache(maxsize=None)
def _spin_pair_table(k: int, n: int, r: int, i: int, j: int, skip_ell: int = -1):
    """Signed (eps(i,L), eps(j,L)) coefficient positions over admissible L."""
    sig = Signature(k, n)
    sgn, pi_, pj_ = [], [], []
    for L in enumerate_grade(r - 2, sig):
        if i in L or j in L or (skip_ell >= 0 and skip_ell in L):
            continue
        sgn.append(metric_delta(L, sig) * sigma(L, (i,)) * sigma((j,), L))
        pi_.append(blade_index(epsilon((i,), L), sig))
        pj_.append(blade_index(epsilon((j,), L), sig))
    return np.array(sgn), np.array(pi_, dtype=int), np.array(pj_, dtype=int)


def s_component(ms: ModeSet, I) -> float:
    """Spin component from the explicit sum over lists disjoint from I."""
    i, j = _check_component(ms, I)
    if ms.r < 2:
        raise ValueError("spin needs field grade >= 2")
    sgn, pi_, pj_ = _spin_pair_table(ms.sig.k, ms.sig.n, ms.r, i, j)
    if len(sgn) == 0:
        return 0.0
    mu = ms.weight / (2.0 * ms.chi)
    z = np.einsum("m,l,ml,ml->", mu, sgn,
                  np.conj(ms.amps[:, pi_]), ms.amps[:, pj_])
    # -j*2pi*s*(z - cc) = 4 pi s Im(z)
    return 4.0 * math.pi * _sigma_ell(ms.sig, ms.ell) * float(np.imag(z))


def spin_canonical(ms: ModeSet, I) -> float:
    """Spin component by the canonical potential-pair route.

    Frequency-space form of the integral of A_{eps(i,L)} d_ell A_{eps(j,L)}
    minus its (i,j) transpose; coincides with :func:`s_component`.
    """
    i, j = _check_component(ms, I)
    if ms.r < 2:
        raise ValueError("spin needs field grade >= 2")
    sgn, pi_, pj_ = _spin_pair_table(ms.sig.k, ms.sig.n, ms.r, i, j,
                                     skip_ell=ms.ell)
    if len(sgn) == 0:
        return 0.0
    mu = ms.weight / (2.0 * ms.chi)
    y = np.einsum("m,l,ml,ml->", mu, sgn,
                  ms.amps[:, pi_], np.conj(ms.amps[:, pj_]))
    # +j*2pi*s*(y - cc) = -4 pi s Im(y)
    return -4.0 * math.pi * _sigma_ell(ms.sig, ms.ell) * float(np.imag(y))


def l_component(ms: ModeSet, I) -> float:
    """Orbital component from the explicit coefficient-sum formula."""
    i, j = _check_component(ms, I)
    sig = ms.sig
    damps = ms.require_derivatives()
    axes = list(ms.axes)
    ai, aj = axes.index(i), axes.index(j)
    dK = _delta_diag(sig.k, sig.n, ms.r - 1).astype(np.complex128)
    di = sig.delta(i)
    dj = sig.delta(j)
    mu = ms.weight / (2.0 * ms.chi)
    term = (dj * ms.xi_bar[:, ai]
            * np.einsum("mk,k,mk->m", np.conj(damps[:, aj]), dK, ms.amps)
            - di * ms.xi_bar[:, aj]
            * np.einsum("mk,k,mk->m", np.conj(damps[:, ai]), dK, ms.amps))
    z = np.dot(mu, term)
    # j*pi*(-1)^r*s*(z - cc) = -2 pi (-1)^r s Im(z)
    return (-2.0 * math.pi * (-1.0) ** ms.r
            * _sigma_ell(sig, ms.ell) * float(np.imag(z)))


def circular_basis(I, phi: float, sig: Signature
                   ) -> tuple[Multivector, Multivector]:
    """Right- and left-handed complex basis vectors for the plane of I."""
    i, j = (int(v) for v in I)
    if i == j:
        raise ValueError("circular basis needs two distinct indices")
    di, dj = sig.delta(i), sig.delta(j)
    ei, ej = basis_blade((i,), sig), basis_blade((j,), sig)
    e_plus = math.cos(phi) * di * ei + (-1j) * math.sin(phi) * dj * ej
    e_minus = -math.sin(phi) * di * ei + (-1j) * math.cos(phi) * dj * ej
    return e_plus, e_minus


def _handed_intensity(ms: ModeSet, e_vec: Multivector) -> np.ndarray:
    """(e* _| A*).(A |_ e) per mode; real for any metric signature."""
    g = ms.r - 1
    sig = ms.sig
    u = lint_coeffs(sig, 1, g, e_vec.coeffs, ms.amps)       # (M, nlow)
    dK = _delta_diag(sig.k, sig.n, g - 1).astype(np.complex128)
    flip = (-1.0) ** ms.r
    return flip * np.real(np.einsum("mk,k,mk->m", np.conj(u), dK, u))


def s_component_circular(ms: ModeSet, I) -> float:
    """Spin component as right- minus left-handed intensities (phi = pi/4)."""
    i, j = _check_component(ms, I)
    if ms.r < 2:
        raise ValueError("spin needs field grade >= 2")
    e_plus, e_minus = circular_basis((i, j), math.pi / 4.0, ms.sig)
    mu = ms.weight / (2.0 * ms.chi)
    p_plus = _handed_intensity(ms, e_plus)
    p_minus = _handed_intensity(ms, e_minus)
    return (2.0 * math.pi * _sigma_ell(ms.sig, ms.ell)
            * float(np.dot(mu, p_plus - p_minus)))


def l_component_circular(ms: ModeSet, I) -> float:
    """Orbital component through the circular-polarization change of basis.

    Frequencies and derivatives transform with the Hermitian inverse of the
    basis map.  When the two metric signs of the plane differ the plus and
    minus channels mix; the cross term below restores exact equality with
    :func:`l_component` and vanishes when the signs match.
    """
    i, j = _check_component(ms, I)
    sig = ms.sig
    damps = ms.require_derivatives()
    axes = list(ms.axes)
    ai, aj = axes.index(i), axes.index(j)
    rt2 = math.sqrt(2.0)
    xi_p = (ms.xi_bar[:, ai] - 1j * ms.xi_bar[:, aj]) / rt2
    xi_m = (-ms.xi_bar[:, ai] - 1j * ms.xi_bar[:, aj]) / rt2
    dp = (damps[:, ai] - 1j * damps[:, aj]) / rt2
    dm = (-damps[:, ai] - 1j * damps[:, aj]) / rt2
    dK = _delta_diag(sig.k, sig.n, ms.r - 1).astype(np.complex128)
    Dp = np.einsum("mk,k,mk->m", np.conj(dp), dK, ms.amps)
    Dm = np.einsum("mk,k,mk->m", np.conj(dm), dK, ms.amps)
    di, dj = sig.delta(i), sig.delta(j)
    mu = ms.weight / (2.0 * ms.chi)
    diag = np.dot(mu, np.real(xi_p * Dp - xi_m * Dm))
    cross = np.dot(mu, np.real(xi_p * Dm - xi_m * Dp))
    pref = 2.0 * math.pi * (-1.0) ** ms.r * _sigma_ell(sig, ms.ell)
    return pref * (0.5 * (di + dj) * float(diag)
                   + 0.5 * (dj - di) * float(cross))


# ---------------------------------------------------------------------------
# real-space lattice flux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeSpec:
    """Uniform truncated lattice over the surface coordinates.

    Midpoint lattice of ``points`` cells per axis covering +-``halfwidth``
    around ``center``; ``periodic_box`` instead places ``points`` samples
    over one box period [0, box) per axis, which sums band-limited periodic
    integrands exactly.
    """

    points: int
    halfwidth: float | None = None
    center: float = 0.0
    periodic_box: float | None = None

    def axis(self) -> np.ndarray:
        if self.periodic_box is not None:
            step = self.periodic_box / self.points
            return step * np.arange(self.points)
        if self.halfwidth is None:
            raise ValueError("lattice needs a halfwidth or a periodic box")
        step = 2.0 * self.halfwidth / self.points
        return self.center - self.halfwidth + step * (np.arange(self.points)
                                                      + 0.5)

    def spacing(self) -> float:
        if self.periodic_box is not None:
            return self.periodic_box / self.points
        return 2.0 * self.halfwidth / self.points


@dataclass(frozen=True)
class RealSpaceFlux:
    """Lattice-sum flux with its discretization metadata."""

    omega: Multivector
    pi: Multivector
    x_ell: float
    spacing: float
    extent: float
    points: int
    truncation_warning: bool
    slabs: int


@lru_cache(maxsize=None)
def _stress_row_forms(k: int, n: int, r: int, ell: int) -> np.ndarray:
    """Bilinear forms B[j] with T_{ell j}(F) = F . B[j] . F; (d, nF, nF)."""
    sig = Signature(k, n)
    d = sig.d
    nF = grade_size(r, sig)
    deltas = _delta_diag(k, n, 1)
    Wl = _interior_matrix(k, n, 1, r).reshape(d, nF, -1)
    dlow = _delta_diag(k, n, r - 1)
    out = np.empty((d, nF, nF))
    flip_int = (-1.0) ** (r + 1)
    flip_wedge = (-1.0) ** r
    if r + 1 <= d:
        Wu = _wedge_matrix(k, n, 1, r).reshape(d, nF, -1)
        dup = _delta_diag(k, n, r + 1)
    for j in range(d):
        m_int = flip_int * (Wl[ell] * dlow) @ Wl[j].T
        if r + 1 <= d:
            m_wedge = flip_wedge * (Wu[ell] * dup) @ Wu[j].T
        else:
            m_wedge = 0.0
        out[j] = -0.5 * deltas[ell] * deltas[j] * (m_int + m_wedge)
    return out


def _field_on_grid_axes(ms: ModeSet, x_ell: float,
                        axes_vals: list[np.ndarray],
                        threads: int = 1) -> np.ndarray:
    """Real field coefficients on the Cartesian product of ``axes_vals``.

    Separable per-axis phase contraction when the mode set carries its grid;
    dense mode loop otherwise.  The first axis is split into a fixed number
    of slabs so the reduction order never depends on the thread count.
    """
    sig = ms.sig
    axes = list(ms.axes)
    deltas = _delta_diag(sig.k, sig.n, 1)
    fc = ms.field_coeffs() * np.exp(
        1j * TWO_PI * sig.delta(ms.ell) * ms.chi * x_ell)[:, None]
    shape = tuple(len(v) for v in axes_vals)
    nF = fc.shape[1]

    if ms.grid is not None:
        grid_shape = tuple(len(a) for a in ms.grid.axes)
        G = np.zeros((int(np.prod(grid_shape)), nF), dtype=np.complex128)
        G[ms.grid.flat_index] = fc
        G = G.reshape(grid_shape + (nF,))

        def eval_slab(x_first: np.ndarray) -> np.ndarray:
            acc = G
            for a, (t, xs) in enumerate(zip(axes, axes_vals)):
                vals = x_first if a == 0 else xs
                ph = np.exp(1j * TWO_PI * deltas[t]
                            * np.outer(vals, ms.grid.axes[a]))
                acc = np.moveaxis(np.tensordot(ph, acc, axes=(1, a)), 0, a)
            return acc
    else:
        xi = ms.xi_bar

        def eval_slab(x_first: np.ndarray) -> np.ndarray:
            pts = np.stack(np.meshgrid(x_first, *axes_vals[1:],
                                       indexing="ij"), axis=-1)
            flat = pts.reshape(-1, len(axes))
            w = deltas[axes] * flat
            ph = np.exp(1j * TWO_PI * (w @ xi.T))
            out = ph @ fc
            return out.reshape(pts.shape[:-1] + (nF,))

    nslabs = min(8, shape[0])
    bounds = np.linspace(0, shape[0], nslabs + 1).astype(int)
    slabs = [axes_vals[0][a:b] for a, b in zip(bounds[:-1], bounds[1:])]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(eval_slab, slabs))
    else:
        parts = [eval_slab(s) for s in slabs]
    return 2.0 * np.real(np.concatenate(parts, axis=0))


def realspace_omega_flux(ms: ModeSet, x_ell: float, alpha,
                         lattice: LatticeSpec, threads: int = 1
                         ) -> RealSpaceFlux:
    """Riemann-sum flux of the moment tensor across the x_ell surface.

    Returns both the angular-momentum bivector and the same-lattice
    energy-momentum vector, so origin shifts can be cross-checked exactly
    on matching lattices.
    """
    sig = ms.sig
    ell = ms.ell
    d = sig.d
    av = np.asarray(alpha, dtype=np.float64)
    if av.shape != (d,):
        raise ValueError(f"alpha needs {d} components")
    axes = list(ms.axes)
    axis_vals = [lattice.axis() for _ in axes]
    Fv = _field_on_grid_axes(ms, x_ell, axis_vals, threads=threads)

    forms = _stress_row_forms(sig.k, sig.n, ms.r, ell)
    t_rows = np.einsum("...c,jcd,...d->...j", Fv, forms, Fv)

    cell = lattice.spacing() ** (d - 1)
    sl = _sigma_ell(sig, ell)

    pi_vec = sl * cell * t_rows.reshape(-1, d).sum(axis=0)

    # moment arms per space-time axis on the lattice
    omega = np.zeros(grade_size(2, sig))
    shape = t_rows.shape[:-1]
    moments = np.empty((d, d))          # moments[i, t] = sum (x_i - a_i) T_lt
    for i in range(d):
        if i == ell:
            arm = np.full(shape, x_ell - av[i])
        else:
            a = axes.index(i)
            view = [None] * len(axes)
            view[a] = slice(None)
            arm = np.broadcast_to(
                (axis_vals[a] - av[i])[tuple(view)], shape)
        moments[i] = cell * np.einsum("...,...t->t", arm, t_rows)
    for p, (i, t) in enumerate(enumerate_grade(2, sig)):
        omega[p] = sl * (moments[i, t] - moments[t, i])

    # crude truncation indicator: field energy on the outermost shell of the
    # lattice relative to its maximum
    dens = np.einsum("...c,...c->...", Fv, Fv)
    edge = 0.0
    for a in range(len(axes)):
        sl_lo = [slice(None)] * len(axes)
        sl_lo[a] = 0
        sl_hi = [slice(None)] * len(axes)
        sl_hi[a] = -1
        edge = max(edge, float(np.max(dens[tuple(sl_lo)])),
                   float(np.max(dens[tuple(sl_hi)])))
    peak = float(np.max(dens)) or 1.0
    warn = (lattice.periodic_box is None) and (edge > 1e-4 * peak)

    return RealSpaceFlux(
        omega=Multivector(sig, 2, omega),
        pi=Multivector(sig, 1, pi_vec),
        x_ell=x_ell,
        spacing=lattice.spacing(),
        extent=float(axis_vals[0][-1] - axis_vals[0][0]),
        points=lattice.points,
        truncation_warning=bool(warn),
        slabs=min(8, lattice.points),
    )


# ---------------------------------------------------------------------------
# assembled report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FluxReport:
    """Frequency-space flux decomposition for one scenario."""

    omega: Multivector
    n_part: Multivector
    l_part: Multivector
    s_part: Multivector
    pi_part: Multivector
    alpha: np.ndarray
    x_ell: float
    meta: dict = field(default_factory=dict)


def decompose(ms: ModeSet, x_ell: float, alpha) -> FluxReport:
    """Assemble Pi, N, L, S and Omega = N + L + S - alpha ^ Pi."""
    sig = ms.sig
    av = np.asarray(alpha, dtype=np.float64)
    if av.shape != (sig.d,):
        raise ValueError(f"alpha needs {sig.d} components")
    N, L, S = nls_flux(ms, x_ell)
    Pi = pi_flux(ms)
    shift = wedge(from_vector(av, sig), Pi)
    omega = N + L + S - shift
    meta = {
        "modes": len(ms),
        "dropped_modes": ms.dropped,
        "reduction": "sorted-mode pairwise",
        "k": sig.k, "n": sig.n, "r": ms.r, "ell": ms.ell,
    }
    return FluxReport(omega, N, L, S, Pi, av, float(x_ell), meta)


def fluxreport_records(report: FluxReport) -> list[tuple[str, object]]:
    """Flat (label, value) records in canonical component order."""
    recs: list[tuple[str, object]] = []
    for key, val in sorted(report.meta.items()):
        recs.append((f"meta.{key}", val))
    recs.append(("x_ell", report.x_ell))
    for i, v in enumerate(report.alpha):
        recs.append((f"alpha[{i}]", float(v)))
    for name, mv in (("Pi", report.pi_part),):
        for I, c in zip(mv.blades(), mv.coeffs):
            recs.append((f"{name}[{I[0]}]", float(np.real(c))))
    for name, mv in (("Omega", report.omega), ("N", report.n_part),
                     ("L", report.l_part), ("S", report.s_part)):
        for I, c in zip(mv.blades(), mv.coeffs):
            recs.append((f"{name}[{I[0]},{I[1]}]", float(np.real(c))))
    return recs
