"""Exact unknotting-number-one obstructions for 3-strand pretzel knots.

Thin convenience layer over the compiled core. All rationals come back as
fractions.Fraction; big integers as Python ints.
"""

from ._core import (
    LimitError,
    UnsupportedError,
    classify,
    cover_correction_terms,
    determinant,
    embedding_certificate,
    lens_correction_terms,
    normalize,
    quotient_module_test,
    signature,
    symmetry_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "LimitError",
    "UnsupportedError",
    "classify",
    "cover_correction_terms",
    "determinant",
    "embedding_certificate",
    "lens_correction_terms",
    "normalize",
    "quotient_module_test",
    "signature",
    "symmetry_sweep",
]
