"""Shared value types: 2x2 complex matrices and dense Laurent coefficient vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["DomainError", "LaurentPoly", "as_matrix", "laurent_close"]


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


def as_matrix(mat) -> np.ndarray:
    """Coerce an array-like to a read-only 2x2 complex matrix.

    Non-finite entries are rejected; no NaN or Inf is admitted into any
    public constructor.
    """
    out = np.array(mat, dtype=complex)
    if out.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise DomainError("matrix entries must be finite")
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class LaurentPoly:
    """Dense Laurent polynomial sum of coeffs[k] * z**k over k = -n..n.

    `coeffs` holds 2n+1 complex values ordered from exponent -n upward.
    Instances are immutable; the coefficient array is stored read-only, so
    values are safe to share across threads.
    """

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree bound n must be a positive integer")
        arr = np.array(self.coeffs, dtype=complex)
        if arr.shape != (2 * self.n + 1,):
            raise ValueError(
                f"need {2 * self.n + 1} coefficients for degree bound {self.n}, "
                f"got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, complex]) -> "LaurentPoly":
        """Build from a sparse {exponent: coefficient} mapping."""
        coeffs = np.zeros(2 * n + 1, dtype=complex)
        for k, value in terms.items():
            if not -n <= k <= n:
                raise ValueError(f"exponent {k} outside [-{n}, {n}]")
            coeffs[k + n] = value
        return cls(n, coeffs)

    def __getitem__(self, k: int) -> complex:
        """Coefficient at signed exponent k."""
        if not -self.n <= k <= self.n:
            raise ValueError(f"exponent {k} outside [-{self.n}, {self.n}]")
        return complex(self.coeffs[k + self.n])

    def terms(self):
        """Iterate (exponent, coefficient) pairs, exponents ascending."""
        for i, value in enumerate(self.coeffs):
            yield i - self.n, complex(value)

    def eval(self, z) -> complex:
        """Evaluate at a nonzero point.

        Split into a non-negative-power Horner pass in z and a negative-power
        Horner pass in 1/z, so neither large nor small |z| overflows
        artificially.
        """
        z = complex(z)
        if z == 0:
            raise DomainError("Laurent polynomial evaluation requires z != 0")
        c = self.coeffs
        n = self.n
        pos = 0j
        for i in range(2 * n, n - 1, -1):
            pos = pos * z + c[i]
        w = 1 / z
        neg = 0j
        for i in range(0, n):
            neg = neg * w + c[i]
        return pos + neg * w

    def __call__(self, z) -> complex:
        return self.eval(z)


def laurent_close(p: LaurentPoly, q: LaurentPoly, tol: float) -> bool:
    """Max-norm coefficient comparison scaled by the magnitude of p.

    Returns True when max_k |p_k - q_k| <= tol * (1 + max_k |p_k|).
    Both arguments must carry the same degree bound.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.n != q.n:
        raise ValueError(f"degree bounds differ: {p.n} vs {q.n}")
    diff = float(np.max(np.abs(p.coeffs - q.coeffs)))
    return diff <= tol * (1.0 + float(np.max(np.abs(p.coeffs))))
