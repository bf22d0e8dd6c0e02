"""Laurent polynomials generated by traces of 2x2 matrix powers.

A generic 2x2 complex matrix M defines the pencil S(z) = M diag(z, 1/z) M*,
and tr(S(z)^n) is a Laurent polynomial of exponent range -n..n. This package
computes the family, reduces matrices to a three-parameter normal form,
evaluates the scaled Chebyshev closed form, localizes all roots on
unit-circle arcs, and exposes the circle restriction as cosine polynomials
together with the associated comb map.
"""

from .core import DomainError, LaurentPoly, as_matrix, laurent_close
from .chebyshev import cheb_eval, cheb_preimage, cheb_roots
from .normal_form import (
    NormalForm,
    angle_from_overlap,
    canonical_matrix,
    column_norms,
    column_overlap,
    is_generic,
    normal_form,
    normalize_columns,
    phase_unitary,
    psd_sqrt,
)
from .family import (
    DegreeCapError,
    EigenPair,
    brute_force_coeffs,
    closed_form_coeffs,
    closed_form_eval,
    eigen_split,
    trace_power_coeffs,
    transfer_matrix,
)
from .roots import (
    RootReport,
    arc_membership,
    canonical_roots,
    matrix_roots,
    scaled_joukowski,
    scaled_joukowski_preimage,
)
from .trig import (
    IntervalSystem,
    TrigPoly,
    comb_height,
    comb_map,
    interval_system,
    trig_coeffs,
    trig_eval,
    trig_roots,
    unit_level_roots,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeCapError",
    "DomainError",
    "EigenPair",
    "IntervalSystem",
    "LaurentPoly",
    "NormalForm",
    "RootReport",
    "TrigPoly",
    "angle_from_overlap",
    "arc_membership",
    "as_matrix",
    "brute_force_coeffs",
    "canonical_matrix",
    "canonical_roots",
    "cheb_eval",
    "cheb_preimage",
    "cheb_roots",
    "closed_form_coeffs",
    "closed_form_eval",
    "column_norms",
    "column_overlap",
    "comb_height",
    "comb_map",
    "eigen_split",
    "interval_system",
    "is_generic",
    "laurent_close",
    "matrix_roots",
    "normal_form",
    "normalize_columns",
    "phase_unitary",
    "psd_sqrt",
    "scaled_joukowski",
    "scaled_joukowski_preimage",
    "trace_power_coeffs",
    "transfer_matrix",
    "trig_coeffs",
    "trig_eval",
    "trig_roots",
    "unit_level_roots",
    "__version__",
]
