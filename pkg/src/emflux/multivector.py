"""Grade-s multivectors with complex coefficients over a (k,n) metric.

Coefficients are dense vectors in the canonical (lexicographic) blade order
of :func:`emflux.indices.enumerate_grade`.  The product conventions on basis
blades are

    e_I ^ e_J   = sigma(I,J) e_{eps(I,J)}            (zero on overlap)
    e_J _| e_I  = Delta_JJ sigma(I\\J, J) e_{I\\J}     (left interior, J in I)
    w |_ v      = (-1)^{gr(v)(gr(w)+gr(v))} v _| w   (right interior)
    a . b       = sum_I Delta_II a_I b_I             (no conjugation)

The left-interior sign convention is the one that satisfies the four
interior/wedge identities used as the acceptance arbiter; see the tests.

All kernels broadcast over leading axes of the coefficient arrays, so the
same tables drive both the scalar `Multivector` API and the batched mode
sums in the field modules.
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

__all__ = [
    "Multivector",
    "wedge",
    "dot",
    "left_interior",
    "right_interior",
    "basis_blade",
    "zero",
    "from_vector",
    "gradient_vector",
]


# ---------------------------------------------------------------------------
# cached kernel tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_diag(k: int, n: int, s: int) -> np.ndarray:
    """Delta_II over the canonical blades of grade s; shape (C(d,s),)."""
    sig = Signature(k, n)
    return np.array([metric_delta(I, sig) for I in enumerate_grade(s, sig)],
                    dtype=np.float64)


@lru_cache(maxsize=None)
def _wedge_matrix(k: int, n: int, ga: int, gb: int) -> np.ndarray:
    """Dense map (C(d,ga)*C(d,gb), C(d,ga+gb)): outer(a,b) -> wedge coeffs."""
    sig = Signature(k, n)
    A = enumerate_grade(ga, sig)
    B = enumerate_grade(gb, sig)
    na, nb = len(A), len(B)
    nout = grade_size(ga + gb, sig)
    W = np.zeros((na * nb, nout))
    for ia, I in enumerate(A):
        for ib, J in enumerate(B):
            s = sigma(I, J)
            if s:
                W[ia * nb + ib, blade_index(epsilon(I, J), sig)] = s
    return W


@lru_cache(maxsize=None)
def _interior_matrix(k: int, n: int, ga: int, gb: int) -> np.ndarray:
    """Dense map for the left interior product of grades (ga, gb), ga <= gb.

    Maps outer(a, b) with a of grade ga, b of grade gb to the coefficients
    of a _| b (grade gb-ga).
    """
    sig = Signature(k, n)
    A = enumerate_grade(ga, sig)
    B = enumerate_grade(gb, sig)
    na, nb = len(A), len(B)
    nout = grade_size(gb - ga, sig)
    W = np.zeros((na * nb, nout))
    for ia, J in enumerate(A):          # contracting blade
        dJJ = metric_delta(J, sig)
        Jset = set(J)
        for ib, I in enumerate(B):      # contracted blade
            if not Jset <= set(I):
                continue
            rest = tuple(i for i in I if i not in Jset)
            W[ia * nb + ib, blade_index(rest, sig)] = dJJ * sigma(rest, J)
    return W


def _pair_apply(W: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Bilinear blade product on coefficient arrays; broadcasts leading axes."""
    outer = a[..., :, None] * b[..., None, :]
    return outer.reshape(*outer.shape[:-2], -1) @ W


# ---------------------------------------------------------------------------
# raw-array kernels (used by the batched mode machinery)
# ---------------------------------------------------------------------------

def wedge_coeffs(sig: Signature, ga: int, gb: int,
                 a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if ga + gb > sig.d:
        raise ValueError(f"wedge grade {ga}+{gb} exceeds d={sig.d}")
    return _pair_apply(_wedge_matrix(sig.k, sig.n, ga, gb), a, b)


def lint_coeffs(sig: Signature, ga: int, gb: int,
                a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if ga > gb:
        raise ValueError(f"left interior needs gr(a) <= gr(b), got {ga} > {gb}")
    return _pair_apply(_interior_matrix(sig.k, sig.n, ga, gb), a, b)


def dot_coeffs(sig: Signature, g: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a * b) @ _delta_diag(sig.k, sig.n, g).astype(a.dtype)


# ---------------------------------------------------------------------------
# public value type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Multivector:
    """Immutable grade-s multivector; coeffs in canonical blade order."""

    sig: Signature
    grade: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        want = grade_size(self.grade, self.sig)
        if c.shape != (want,):
            raise ValueError(
                f"grade-{self.grade} multivector in d={self.sig.d} needs "
                f"{want} coefficients, got shape {c.shape}")
        object.__setattr__(self, "coeffs", c)

    # -- construction helpers ------------------------------------------------
    def copy_with(self, coeffs: np.ndarray) -> "Multivector":
        return Multivector(self.sig, self.grade, coeffs)

    # -- ring-ish operators --------------------------------------------------
    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_peer(other)
        return self.copy_with(self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check_peer(other)
        return self.copy_with(self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "Multivector":
        return self.copy_with(self.coeffs * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "Multivector":
        return self.copy_with(-self.coeffs)

    def conj(self) -> "Multivector":
        return self.copy_with(np.conj(self.coeffs))

    @property
    def real(self) -> "Multivector":
        return self.copy_with(self.coeffs.real.astype(np.complex128))

    def norm(self) -> float:
        """Euclidean magnitude of the coefficient vector."""
        return float(np.linalg.norm(self.coeffs))

    def component(self, I) -> complex:
        return complex(self.coeffs[blade_index(tuple(I), self.sig)])

    def blades(self):
        return enumerate_grade(self.grade, self.sig)

    def _check_peer(self, other: "Multivector") -> None:
        if other.sig != self.sig or other.grade != self.grade:
            raise ValueError("signature/grade mismatch")

    def __repr__(self) -> str:  # compact, test-log friendly
        terms = [f"{c:.6g}*e{list(I)}" for I, c in zip(self.blades(), self.coeffs)
                 if abs(c) > 0]
        body = " + ".join(terms) if terms else "0"
        return f"Multivector(({self.sig.k},{self.sig.n}), gr={self.grade}: {body})"


def zero(sig: Signature, grade: int) -> Multivector:
    return Multivector(sig, grade, np.zeros(grade_size(grade, sig)))


def basis_blade(I, sig: Signature) -> Multivector:
    I = tuple(I)
    c = np.zeros(grade_size(len(I), sig), dtype=np.complex128)
    c[blade_index(I, sig)] = 1.0
    return Multivector(sig, len(I), c)


def from_vector(components, sig: Signature) -> Multivector:
    """Grade-1 multivector from d components."""
    c = np.asarray(components, dtype=np.complex128)
    if c.shape != (sig.d,):
        raise ValueError(f"need {sig.d} components, got {c.shape}")
    return Multivector(sig, 1, c)


def gradient_vector(sig: Signature) -> np.ndarray:
    """Metric factors of the space-time derivative operator, one per axis.

    The derivative acts as sum_i Delta_ii (d/dx_i) e_i; this returns the
    Delta_ii row so mode evaluators can turn derivatives into frequency
    multiplications.
    """
    return _delta_diag(sig.k, sig.n, 1)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product; raises if the result grade would exceed d."""
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    out = wedge_coeffs(a.sig, a.grade, b.grade, a.coeffs, b.coeffs)
    return Multivector(a.sig, a.grade + b.grade, out)


def dot(a: Multivector, b: Multivector) -> complex:
    """Metric dot product; cross-grade pairs give 0 by convention."""
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    if a.grade != b.grade:
        return 0j
    return complex(dot_coeffs(a.sig, a.grade, a.coeffs, b.coeffs))


def left_interior(a: Multivector, b: Multivector) -> Multivector:
    """a _| b, lowering b's grade by gr(a)."""
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    out = lint_coeffs(a.sig, a.grade, b.grade, a.coeffs, b.coeffs)
    return Multivector(a.sig, b.grade - a.grade, out)


def right_interior(a: Multivector, b: Multivector) -> Multivector:
    """a |_ b, defined through the grade-sign identity from the left product."""
    if a.sig != b.sig:
        raise ValueError("signature mismatch")
    if b.grade > a.grade:
        raise ValueError(
            f"right interior needs gr(b) <= gr(a), got {b.grade} > {a.grade}")
    flip = (-1) ** (b.grade * (a.grade + b.grade))
    out = flip * lint_coeffs(a.sig, b.grade, a.grade, b.coeffs, a.coeffs)
    return Multivector(a.sig, a.grade - b.grade, out)
