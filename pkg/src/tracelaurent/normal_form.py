"""Column normalization and the (scale, dilation, angle) normal form.

A 2x2 complex matrix with two nonzero columns reduces, for the purposes of
the whole trace-power family, to three real parameters:

  scale     product of the two column norms,
  dilation  ratio of the two column norms,
  angle     half the arcsine of the column overlap magnitude, in [0, pi/4].

The canonical representative for an angle is the symmetric unit-column matrix
[[cos a, sin a], [sin a, cos a]], obtained as the positive square root of the
Gram matrix of the column-normalized input. The phase of the overlap is
carried along but never affects the trace-power family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, as_matrix

__all__ = [
    "NormalForm",
    "angle_from_overlap",
    "canonical_matrix",
    "column_norms",
    "column_overlap",
    "is_generic",
    "normal_form",
    "normalize_columns",
    "phase_unitary",
    "psd_sqrt",
]

# A column counts as nonzero when its norm exceeds this; no relative threshold.
_MIN_COLUMN_NORM = 1e-300
_QUARTER = math.pi / 4


def _norms(m: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(m) ** 2, axis=0))


def is_generic(mat) -> bool:
    """True when both columns are nonzero in double precision."""
    norms = _norms(as_matrix(mat))
    return bool(norms[0] > _MIN_COLUMN_NORM and norms[1] > _MIN_COLUMN_NORM)


def column_norms(mat) -> tuple[float, float]:
    """Euclidean norms of the two columns of a generic matrix."""
    m = as_matrix(mat)
    norms = _norms(m)
    if not (norms[0] > _MIN_COLUMN_NORM and norms[1] > _MIN_COLUMN_NORM):
        raise DomainError("non-generic matrix: a column is zero")
    return float(norms[0]), float(norms[1])


def normalize_columns(mat) -> tuple[np.ndarray, float, float]:
    """Divide each column by its norm.

    Returns (unit, scale, dilation): the unit-column matrix, the product of
    the column norms, and their ratio first/second.
    """
    m = as_matrix(mat)
    r1, r2 = column_norms(m)
    unit = as_matrix(m / np.array([r1, r2]))
    return unit, r1 * r2, r1 / r2


def column_overlap(mat) -> complex:
    """Inner product <col1, col2> of a unit-column matrix.

    This is the off-diagonal entry of the Gram matrix M* M. Columns must be
    normalized within 1e-9, else the call is a usage error. By the
    Cauchy-Schwarz inequality the magnitude is at most 1 up to rounding.
    """
    m = as_matrix(mat)
    norms = _norms(m)
    if np.max(np.abs(norms - 1.0)) > 1e-9:
        raise ValueError("columns must be unit length (apply normalize_columns first)")
    return complex(np.vdot(m[:, 0], m[:, 1]))


def psd_sqrt(mat) -> np.ndarray:
    """Positive semidefinite square root of a 2x2 Hermitian PSD matrix.

    Uses the closed form (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)),
    which for 2x2 matrices reproduces the eigendecomposition square root
    exactly. Inputs that are non-Hermitian or indefinite beyond a 1e-10
    tolerance are rejected; the zero matrix maps to itself.
    """
    m = as_matrix(mat)
    if np.max(np.abs(m - m.conj().T)) > 1e-10:
        raise DomainError("not PSD: matrix is not Hermitian")
    tr = float((m[0, 0] + m[1, 1]).real)
    det = float((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real)
    disc = max(tr * tr / 4.0 - det, 0.0)
    if tr / 2.0 - math.sqrt(disc) < -1e-10:
        raise DomainError("not PSD: negative eigenvalue")
    root_det = math.sqrt(max(det, 0.0))
    denom_sq = tr + 2.0 * root_det
    if denom_sq <= 0.0:
        return as_matrix(np.zeros((2, 2)))
    return as_matrix((m + root_det * np.eye(2)) / math.sqrt(denom_sq))


def angle_from_overlap(overlap) -> tuple[float, complex]:
    """Angle in [0, pi/4] and unit phase encoding a column overlap.

    The angle is half the arcsine of |overlap|; magnitudes up to 1e-12 above
    1 are clamped (rounding slack), anything larger is a domain error. A zero
    overlap carries the conventional phase 1.
    """
    overlap = complex(overlap)
    mag = abs(overlap)
    if mag > 1.0 + 1e-12:
        raise DomainError(f"overlap magnitude {mag} exceeds 1")
    phase = overlap / mag if mag > 0.0 else 1.0 + 0j
    return 0.5 * math.asin(min(mag, 1.0)), phase


@dataclass(frozen=True)
class NormalForm:
    """Parameter triple (scale, dilation, angle) plus the overlap phase.

    The trace-power family of the original matrix is recovered from the
    canonical matrix of `angle` by value scaling scale**degree and argument
    scaling by `dilation`. `phase` records the unit phase of the overlap; it
    is informational, the family does not depend on it.
    """

    scale: float
    dilation: float
    angle: float
    phase: complex

    def __post_init__(self):
        if not self.scale > 0.0:
            raise ValueError("scale must be positive")
        if not self.dilation > 0.0:
            raise ValueError("dilation must be positive")
        if not 0.0 <= self.angle <= _QUARTER + 1e-12:
            raise ValueError("angle must lie in [0, pi/4]")
        if abs(abs(self.phase) - 1.0) > 1e-12:
            raise ValueError("phase must have unit magnitude")


def normal_form(mat) -> NormalForm:
    """Reduce a generic matrix to its normal form parameters."""
    unit, scale, dilation = normalize_columns(mat)
    angle, phase = angle_from_overlap(column_overlap(unit))
    return NormalForm(scale, dilation, angle, phase)


def canonical_matrix(theta: float, phase=None) -> np.ndarray:
    """Unit-column symmetric representative with column overlap sin(2 theta).

    With the default phase the matrix is real:
    [[cos theta, sin theta], [sin theta, cos theta]]. A unit `phase` rotates
    the off-diagonal pair to [cos, phase*sin; conj(phase)*sin, cos], which is
    the square root of the Gram matrix [[1, g], [conj(g), 1]] with
    g = phase * sin(2 theta).
    """
    theta = float(theta)
    if not 0.0 <= theta <= _QUARTER + 1e-12:
        raise DomainError("angle must lie in [0, pi/4]")
    c, s = math.cos(theta), math.sin(theta)
    if phase is None:
        return as_matrix([[c, s], [s, c]])
    phase = complex(phase)
    if abs(abs(phase) - 1.0) > 1e-12:
        raise ValueError("phase must have unit magnitude")
    return as_matrix([[c, phase * s], [phase.conjugate() * s, c]])


def phase_unitary(a) -> np.ndarray:
    """diag(a, 1) for a unit complex a."""
    a = complex(a)
    if abs(abs(a) - 1.0) > 1e-12:
        raise ValueError("phase must have unit magnitude")
    return as_matrix([[a, 0.0], [0.0, 1.0]])
