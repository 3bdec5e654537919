"""Rank-2 and rank-3 tensors over the w_ij and w_{i,I} bases.

Holds the two tensor products of same-grade multivectors, the
stress-energy-momentum tensor in its closed form and in its explicit
component form (two deliberately independent code paths, used as mutual
oracles), the moment product pairing a vector with a symmetric rank-2
tensor, and the first-slot contraction used by every flux integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .indices import (
    Signature,
    blade_index,
    enumerate_grade,
    epsilon,
    grade_size,
    metric_delta,
    sigma,
)
from .multivector import (
    Multivector,
    _delta_diag,
    dot_coeffs,
    lint_coeffs,
    wedge_coeffs,
)

__all__ = [
    "Rank2Tensor",
    "Rank3MomentTensor",
    "odot",
    "owedge",
    "stress_tensor",
    "stress_components",
    "boxwedge",
    "contract_first",
]

SYM_TOL = 1e-12


@dataclass(frozen=True)
class Rank2Tensor:
    """All d*d components over w_ij = e_i (x) e_j."""

    sig: Signature
    comps: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        c = np.asarray(self.comps, dtype=np.complex128)
        d = self.sig.d
        if c.shape != (d, d):
            raise ValueError(f"rank-2 tensor in d={d} needs shape ({d},{d})")
        object.__setattr__(self, "comps", c)

    def __add__(self, other: "Rank2Tensor") -> "Rank2Tensor":
        return Rank2Tensor(self.sig, self.comps + other.comps)

    def __mul__(self, scalar) -> "Rank2Tensor":
        return Rank2Tensor(self.sig, self.comps * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "Rank2Tensor":
        return Rank2Tensor(self.sig, -self.comps)

    def transpose(self) -> "Rank2Tensor":
        return Rank2Tensor(self.sig, self.comps.T.copy())

    def asymmetry(self) -> float:
        return float(np.max(np.abs(self.comps - self.comps.T)))


@dataclass(frozen=True)
class Rank3MomentTensor:
    """Components over w_{i,I}, i in [0,d), I a grade-2 blade (ordered)."""

    sig: Signature
    comps: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        c = np.asarray(self.comps, dtype=np.complex128)
        d = self.sig.d
        nbi = grade_size(2, self.sig)
        if c.shape != (d, nbi):
            raise ValueError(f"rank-3 moment tensor needs shape ({d},{nbi})")
        object.__setattr__(self, "comps", c)

    def __add__(self, other: "Rank3MomentTensor") -> "Rank3MomentTensor":
        return Rank3MomentTensor(self.sig, self.comps + other.comps)

    def __mul__(self, scalar) -> "Rank3MomentTensor":
        return Rank3MomentTensor(self.sig, self.comps * scalar)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.comps))


# ---------------------------------------------------------------------------
# the two tensor products
# ---------------------------------------------------------------------------

def _unit_coeff(sig: Signature, i: int) -> np.ndarray:
    c = np.zeros(sig.d, dtype=np.complex128)
    c[i] = 1.0
    return c


def odot_comps(sig: Signature, g: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Raw (..., d, d) components of a (.) b for grade-g coefficient arrays.

    comps[i,j] = (Delta_ii e_i _| a) . (b |_ Delta_jj e_j); broadcasts over
    leading axes of a and b.
    """
    d = sig.d
    delta1 = _delta_diag(sig.k, sig.n, 1)
    # lowered[i] = e_i _| a   for every axis i
    eye = np.eye(d, dtype=np.complex128)
    low_a = np.stack([lint_coeffs(sig, 1, g, eye[i], a) for i in range(d)], axis=-2)
    low_b = np.stack([lint_coeffs(sig, 1, g, eye[j], b) for j in range(d)], axis=-2)
    # b |_ e_j = (-1)^{g+1} e_j _| b  (grade-sign identity, vector contractor)
    low_b = ((-1) ** (g + 1)) * low_b
    dlow = _delta_diag(sig.k, sig.n, g - 1)
    # comps[i,j] = Dii Djj sum_K Delta_KK low_a[i,K] low_b[j,K]
    core = np.einsum("...ik,k,...jk->...ij", low_a, dlow.astype(np.complex128), low_b)
    return delta1[:, None] * delta1[None, :] * core


def owedge_comps(sig: Signature, g: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Raw (..., d, d) components of a (^) b: (Dii e_i ^ a).(b ^ Djj e_j)."""
    d = sig.d
    if g + 1 > d:
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        return np.zeros(shape + (d, d), dtype=np.complex128)
    delta1 = _delta_diag(sig.k, sig.n, 1)
    eye = np.eye(d, dtype=np.complex128)
    up_a = np.stack([wedge_coeffs(sig, 1, g, eye[i], a) for i in range(d)], axis=-2)
    up_b = np.stack([wedge_coeffs(sig, g, 1, b, eye[j]) for j in range(d)], axis=-2)
    dup = _delta_diag(sig.k, sig.n, g + 1)
    core = np.einsum("...ik,k,...jk->...ij", up_a, dup.astype(np.complex128), up_b)
    return delta1[:, None] * delta1[None, :] * core


def odot(a: Multivector, b: Multivector) -> Rank2Tensor:
    _check_pair(a, b)
    return Rank2Tensor(a.sig, odot_comps(a.sig, a.grade, a.coeffs, b.coeffs))


def owedge(a: Multivector, b: Multivector) -> Rank2Tensor:
    _check_pair(a, b)
    return Rank2Tensor(a.sig, owedge_comps(a.sig, a.grade, a.coeffs, b.coeffs))


def _check_pair(a: Multivector, b: Multivector) -> None:
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    if a.grade != b.grade:
        raise ValueError(f"tensor products need equal grades, got "
                         f"{a.grade} and {b.grade}")
    if a.grade < 1:
        raise ValueError("tensor products need grade >= 1")


# ---------------------------------------------------------------------------
# stress-energy-momentum tensor, two independent routes
# ---------------------------------------------------------------------------

def stress_comps(sig: Signature, g: int, f: np.ndarray) -> np.ndarray:
    """Raw closed-form stress components -(F (.) F + F (^) F)/2; batched."""
    return -0.5 * (odot_comps(sig, g, f, f) + owedge_comps(sig, g, f, f))


def stress_tensor(F: Multivector) -> Rank2Tensor:
    """Closed form of the free-field stress tensor."""
    if F.grade < 1:
        raise ValueError("field grade must be >= 1")
    return Rank2Tensor(F.sig, stress_comps(F.sig, F.grade, F.coeffs))


@lru_cache(maxsize=None)
def _stress_component_tables(k: int, n: int, r: int):
    """Index/sign tables for the explicit diagonal and off-diagonal formulas."""
    sig = Signature(k, n)
    d = sig.d
    blades_r = enumerate_grade(r, sig)
    delta_r = _delta_diag(k, n, r)
    # diagonal: per axis i, signed Delta_LL with -1 when i in L
    diag = np.empty((d, len(blades_r)))
    for i in range(d):
        for p, L in enumerate(blades_r):
            diag[i, p] = delta_r[p] * (-1.0 if i in L else 1.0)
    # off-diagonal: for each i<j the contributing (L, signs, positions)
    off: dict[tuple, tuple] = {}
    for i in range(d):
        for j in range(i + 1, d):
            sgn, pi, pj = [], [], []
            for L in enumerate_grade(r - 1, sig):
                if i in L or j in L:
                    continue
                s = metric_delta(L, sig) * sigma(L, (i,)) * sigma((j,), L)
                sgn.append(s)
                pi.append(blade_index(epsilon((i,), L), sig))
                pj.append(blade_index(epsilon((j,), L), sig))
            off[(i, j)] = (np.array(sgn), np.array(pi), np.array(pj))
    return diag, off


def stress_components(F: Multivector) -> Rank2Tensor:
    """Explicit component formulas for the stress tensor.

    Independent of the closed form in :func:`stress_tensor`; the two are
    asserted equal in the verification suites.
    """
    if F.grade < 1:
        raise ValueError("field grade must be >= 1")
    sig, r = F.sig, F.grade
    d = sig.d
    diag, off = _stress_component_tables(sig.k, sig.n, r)
    f = F.coeffs
    out = np.zeros((d, d), dtype=np.complex128)
    pref = 0.5 * (-1.0) ** (r - 1)
    f2 = f * f
    delta1 = _delta_diag(sig.k, sig.n, 1)
    for i in range(d):
        out[i, i] = pref * delta1[i] * (diag[i] @ f2)
    for (i, j), (sgn, pi, pj) in off.items():
        if len(sgn):
            val = -np.sum(sgn * f[pi] * f[pj])
            out[i, j] = val
            out[j, i] = val
    return Rank2Tensor(sig, out)


# ---------------------------------------------------------------------------
# moment product and first-slot contraction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _boxwedge_tables(k: int, n: int):
    """Flat (i, j, l) loops for v (bx) S -> w_{j, eps(i,l)} accumulation."""
    sig = Signature(k, n)
    d = sig.d
    ii, jj, ll, ss, tt = [], [], [], [], []
    for i in range(d):
        for l in range(d):
            s = sigma((i,), (l,)) if i != l else 0
            if s == 0:
                continue
            t = blade_index(epsilon((i,), (l,)), sig)
            for j in range(d):
                ii.append(i); jj.append(j); ll.append(l); ss.append(s); tt.append(t)
    return (np.array(ii), np.array(jj), np.array(ll),
            np.array(ss, dtype=np.float64), np.array(tt))


def boxwedge_comps(sig: Signature, v: np.ndarray, S: np.ndarray) -> np.ndarray:
    """Raw moment-tensor components of v (bx) S; no symmetry check."""
    ii, jj, ll, ss, tt = _boxwedge_tables(sig.k, sig.n)
    vals = v[ii] * S[jj, ll] * ss
    out = np.zeros((sig.d, grade_size(2, sig)), dtype=np.complex128)
    np.add.at(out, (jj, tt), vals)
    return out


def boxwedge(v: Multivector, S: Rank2Tensor) -> Rank3MomentTensor:
    """Moment product of a grade-1 vector with a symmetric rank-2 tensor."""
    if v.grade != 1:
        raise ValueError("moment product needs a grade-1 left factor")
    if v.sig != S.sig:
        raise ValueError("signature mismatch")
    scale = max(1.0, float(np.max(np.abs(S.comps))))
    if S.asymmetry() > SYM_TOL * scale:
        raise ValueError("moment product requires a symmetric rank-2 tensor")
    return Rank3MomentTensor(v.sig, boxwedge_comps(v.sig, v.coeffs, S.comps))


def contract_first(m: int, M: Rank3MomentTensor) -> Multivector:
    """Contract e_m against the first tensor slot: e_m x w_{j,I} = Delta_mj e_I."""
    sig = M.sig
    if not 0 <= m < sig.d:
        raise ValueError(f"index {m} out of range")
    dm = metric_delta((m,), sig)
    return Multivector(sig, 2, dm * M.comps[m])
