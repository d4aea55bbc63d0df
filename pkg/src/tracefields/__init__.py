"""Integral trace forms of number fields.

Exact computation of maximal orders, trace and trace-zero forms, local
invariants of quadratic forms, lattice isometry and splitting-type spectra.
"""

__version__ = "0.1.0"

from .errors import TraceFieldsError  # noqa: E402
from .fields import NumberField, are_conjugate, field_from_poly  # noqa: E402
from .traceforms import QuadLattice, trace_gram, trace_zero_gram  # noqa: E402

__all__ = [
    "NumberField",
    "QuadLattice",
    "TraceFieldsError",
    "__version__",
    "are_conjugate",
    "field_from_poly",
    "trace_gram",
    "trace_zero_gram",
]
