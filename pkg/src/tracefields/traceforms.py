"""Integral trace forms and trace-zero forms as integer Gram lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import matrix as mat
from .errors import DegenerateFormError
from .fields import NumberField
from .fields.field import trace_vector


@dataclass(frozen=True)
class QuadLattice:
    """Symmetric integral Gram matrix with a provenance label.

    Equality is literal matrix equality; isometry is a separate question.
    """

    gram: tuple[tuple[int, ...], ...]
    provenance: str = "external"
    det: int = field(init=False, compare=False)

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        if not mat.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")
        if any(Fraction(x) != int(x) for row in self.gram for x in row):
            raise ValueError("Gram matrix must be integral")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "det", int(mat.det(g)))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.gram]

    def transform(self, U: Sequence[Sequence[int]], provenance: str | None = None) -> "QuadLattice":
        """The lattice with Gram U^t G U."""
        return QuadLattice(mat.congruence(self.gram, U), provenance or self.provenance)

    def __str__(self) -> str:
        return "\n".join("  ".join(f"{x:>4}" for x in row) for row in self.gram)


def gram_of_elements(F: NumberField, elements: Sequence[Sequence]) -> list[list[int]]:
    """Gram matrix of the trace pairing on elements given in power-basis coordinates.

    Uses the Hankel matrix of power-sum traces Tr(theta^(i+j)).
    """
    n = F.degree
    s = F.power_traces
    hankel = [[s[i + j] for j in range(n)] for i in range(n)]
    G = mat.matmul(mat.matmul(elements, hankel), mat.transpose(elements))
    return mat.to_int(G)


def trace_gram(F: NumberField, basis: Sequence[Sequence] | None = None) -> QuadLattice:
    """Gram matrix (tr(b_i b_j)) of the integral trace form.

    ``basis`` may pin a specific Z-basis of O_K (rows in power-basis
    coordinates of the defining polynomial); defaults to the computed one.
    """
    B = F.basis if basis is None else basis
    return QuadLattice(gram_of_elements(F, B), f"{F.label or list(F.input_poly)}:full-trace")


def trace_zero_basis(F: NumberField) -> list[list[Fraction]]:
    """Z-basis of the trace-zero module, as power-basis coordinates."""
    kernel = mat.kernel_basis([trace_vector(F)])
    return [F.from_basis(v) for v in kernel]


def trace_zero_coordinates(F: NumberField) -> list[list[int]]:
    """The same basis in integral-basis coordinates."""
    return mat.kernel_basis([trace_vector(F)])


def trace_zero_gram(F: NumberField) -> QuadLattice:
    if F.degree < 2:
        raise ValueError("the trace-zero form of Q is zero-dimensional")
    V = trace_zero_coordinates(F)
    G = mat.congruence(trace_gram(F).gram, mat.transpose(V))
    return QuadLattice(G, f"{F.label or list(F.input_poly)}:trace-zero")


def form_signature(L: QuadLattice | Sequence[Sequence[int]]) -> tuple[int, int]:
    gram = L.gram if isinstance(L, QuadLattice) else L
    diag = mat.diagonalize_symmetric(gram)
    if diag.degenerate or any(d == 0 for d in diag.entries):
        raise DegenerateFormError("form is degenerate")
    pos = sum(1 for d in diag.entries if d > 0)
    return pos, len(diag.entries) - pos


def gram_mod(L: QuadLattice, m: int) -> tuple[list[list[int]], bool]:
    """Entrywise reduction mod m and whether the result is the zero matrix."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    reduced = [[x % m for x in row] for row in L.gram]
    return reduced, not any(any(row) for row in reduced)
