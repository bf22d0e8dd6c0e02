"""Restriction to the unit circle: cosine polynomials, roots, and the comb map.

On z = exp(it) the canonical family member, divided by 2 cos(2 theta)^n,
becomes the real cosine polynomial T_n(cos t / cos 2 theta). Its modulus is
at most 1 exactly on the periodic interval system

    P = union over integer p of [p pi + 2 theta, (p+1) pi - 2 theta],

and on the open interior of P the composition is cos(n u(t)) for the comb map
u defined here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_eval, cheb_preimage, cheb_roots
from .core import DomainError
from .family import closed_form_coeffs

__all__ = [
    "IntervalSystem",
    "TrigPoly",
    "comb_height",
    "comb_map",
    "interval_system",
    "trig_coeffs",
    "trig_eval",
    "trig_roots",
    "unit_level_roots",
]


def _check_open_angle(theta: float):
    if not 0.0 <= theta < math.pi / 4 - 1e-12:
        raise DomainError("angle must lie in [0, pi/4)")


def _check_degree(n: int):
    if n < 1:
        raise ValueError("degree n must be a positive integer")


def trig_eval(n: int, theta: float, t):
    """T_n(cos t / cos 2 theta); real input gives a float, complex a complex."""
    _check_degree(n)
    _check_open_angle(theta)
    c = math.cos(2.0 * theta)
    if isinstance(t, complex):
        return cheb_eval(n, cmath.cos(t) / c)
    return cheb_eval(n, math.cos(t) / c)


@dataclass(frozen=True)
class TrigPoly:
    """Real cosine polynomial sum of cos_coeffs[k] * cos(k t), k = 0..n."""

    n: int
    cos_coeffs: np.ndarray

    def __post_init__(self):
        _check_degree(self.n)
        arr = np.array(self.cos_coeffs, dtype=float)
        if arr.shape != (self.n + 1,):
            raise ValueError(f"need {self.n + 1} cosine coefficients")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "cos_coeffs", arr)

    def eval(self, t):
        if isinstance(t, complex):
            return sum(
                ck * cmath.cos(k * t) for k, ck in enumerate(self.cos_coeffs)
            )
        t = float(t)
        return float(
            sum(ck * math.cos(k * t) for k, ck in enumerate(self.cos_coeffs))
        )


def trig_coeffs(n: int, theta: float) -> TrigPoly:
    """Cosine coefficients of the circle restriction.

    Dividing the Laurent coefficients p_k by cos(2 theta)^n: the constant
    term is p_0 / (2 c^n) and each k >= 1 coefficient is p_k / c^n, so the
    leading coefficient is exactly 1 / cos(2 theta)^n. Parity zeros carry
    over exactly.
    """
    _check_degree(n)
    _check_open_angle(theta)
    poly = closed_form_coeffs(n, theta)
    scale = math.cos(2.0 * theta) ** n
    cos_coeffs = np.empty(n + 1)
    cos_coeffs[0] = poly[0].real / (2.0 * scale)
    for k in range(1, n + 1):
        cos_coeffs[k] = poly[k].real / scale
    return TrigPoly(n, cos_coeffs)


@dataclass(frozen=True)
class IntervalSystem:
    """The periodic interval system with a materialized index window.

    Membership queries are periodic and hold for any real t; the window
    [p_min, p_max] only selects which intervals `intervals` lists.
    """

    theta: float
    p_min: int
    p_max: int

    def __post_init__(self):
        _check_open_angle(self.theta)
        if self.p_min > self.p_max:
            raise ValueError("p_min must not exceed p_max")

    def intervals(self) -> list[tuple[float, float]]:
        """Closed intervals [p pi + 2 theta, (p+1) pi - 2 theta] in the window."""
        two = 2.0 * self.theta
        return [
            (p * math.pi + two, (p + 1) * math.pi - two)
            for p in range(self.p_min, self.p_max + 1)
        ]

    def contains(self, t: float, open: bool = False) -> bool:
        """Periodic membership; `open` restricts to the interior."""
        r = float(t) % math.pi
        lo, hi = 2.0 * self.theta, math.pi - 2.0 * self.theta
        if open:
            return lo < r < hi
        return lo <= r <= hi

    def boundary_distance(self, t: float) -> float:
        """Distance from t to the nearest interval endpoint, periodic."""
        r = float(t) % math.pi
        out = math.inf
        for endpoint in (2.0 * self.theta, math.pi - 2.0 * self.theta):
            d = abs(r - endpoint)
            out = min(out, d, math.pi - d)
        return out

    def fundamental(self) -> tuple[float, float]:
        """The period-0 interval [2 theta, pi - 2 theta]."""
        return 2.0 * self.theta, math.pi - 2.0 * self.theta


def interval_system(theta: float, p_min: int, p_max: int) -> IntervalSystem:
    """Construct the interval system for a window of periods."""
    return IntervalSystem(theta, p_min, p_max)


def trig_roots(n: int, theta: float) -> np.ndarray:
    """Roots of the cosine polynomial in the fundamental interval, ascending.

    Each Chebyshev root zeta_j pulls back to arccos(cos(2 theta) zeta_j),
    which lies strictly inside (2 theta, pi - 2 theta). All n roots are
    simple.
    """
    _check_degree(n)
    _check_open_angle(theta)
    c = math.cos(2.0 * theta)
    return np.array([math.acos(c * zeta) for zeta in cheb_roots(n)][::-1])


def unit_level_roots(n: int, theta: float) -> list[tuple[float, int, int]]:
    """Roots of (cosine polynomial)^2 = 1 in the fundamental interval.

    Returns (root, level, multiplicity) triples sorted by root, level being
    +1 or -1. Total multiplicity is n per level, 2n per period; multiplicity
    2 occurs only at interior critical points.
    """
    _check_degree(n)
    _check_open_angle(theta)
    c = math.cos(2.0 * theta)
    out = []
    for level in (1, -1):
        for zeta, mult in cheb_preimage(n, float(level)):
            # acos(c * zeta) can land one ulp outside the closed band when
            # zeta = +-1; those hits are exactly the band endpoints.
            if zeta >= 1.0 - 1e-12:
                t = 2.0 * theta
            elif zeta <= -1.0 + 1e-12:
                t = math.pi - 2.0 * theta
            else:
                t = math.acos(c * zeta)
            out.append((t, level, mult))
    out.sort(key=lambda item: item[0])
    return out


def comb_height(theta: float) -> float:
    """Common height arccosh(1 / cos 2 theta) of the comb teeth."""
    _check_open_angle(theta)
    return math.acosh(1.0 / math.cos(2.0 * theta))


def comb_map(t, theta: float) -> complex:
    """The comb coordinate u(t) = i ln(Phi + sqrt(Phi^2 - 1)), Phi = cos t / cos 2 theta.

    Defined on the closed upper half-plane. Branches: principal logarithm,
    square root continuous from above its cut; on real t with |Phi| <= 1 the
    value is computed directly as -arccos(Phi), which is the real branch on
    the interval system. Normalizations realized by this choice:
    u(0) = i * comb_height(theta), and u(t)/t -> 1 up the imaginary axis.
    The defining identity cos(u(t)) = Phi(t) holds for every branch choice,
    since (V + 1/V)/2 is unchanged under V -> 1/V.

    The value depends on t only through Phi, so this realization repeats with
    period 2 pi in Re t; gap segments with Phi < -1 land on the reflected
    side of their slit.
    """
    _check_open_angle(theta)
    c = math.cos(2.0 * theta)
    tc = complex(t)
    if tc.imag < 0.0:
        raise DomainError("comb map is defined for Im t >= 0")
    if tc.imag == 0.0:
        ratio = math.cos(tc.real) / c
        if abs(ratio) <= 1.0:
            return complex(-math.acos(ratio))
        root = math.sqrt(ratio * ratio - 1.0)
        if ratio >= 1.0:
            return 1j * math.log(ratio + root)
        return 1j * cmath.log(complex(ratio + root, 0.0))
    w = cmath.cos(tc) / c
    q = w * w - 1.0
    if q.imag == 0.0:
        q = complex(q.real, 0.0)
    return 1j * cmath.log(w + cmath.sqrt(q))
