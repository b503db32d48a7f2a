"""
Exact linear algebra over sparse integer matrices.

All reductions go through sympy's DomainMatrix in sparse format over ZZ,
using the fraction-free ``rref_den``; nothing here touches floating point.
"""

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ...logging import get_logger
from .ring import Monomial, SparseVector, WeightVector

SparseRow = Tuple[Tuple[int, int], ...]


def _domain_matrix(rows: Sequence[Mapping[int, int]], num_columns: int) -> DomainMatrix:
    entries = {}
    for r, row in enumerate(rows):
        cleaned = {c: ZZ(v) for c, v in row.items() if v}
        if cleaned:
            entries[r] = cleaned
    return DomainMatrix(entries, (len(rows), num_columns), ZZ)


def matrix_rank(rows: Sequence[Mapping[int, int]], num_columns: int) -> int:
    """Exact rank of a sparse integer matrix given as column -> value rows."""
    if not rows or num_columns == 0:
        return 0
    _, _, pivots = _domain_matrix(rows, num_columns).rref_den()
    return len(pivots)


def reduced_rows(rows: Sequence[Mapping[int, int]], num_columns: int) -> List[SparseRow]:
    """Canonical integer basis of the row space.

    The reduced echelon form is computed fraction-free; each nonzero row is
    then divided by the gcd of its entries so the pivot is the smallest
    positive integer possible. The result depends only on the row space.
    """
    if not rows or num_columns == 0:
        return []
    reduced, _, pivots = _domain_matrix(rows, num_columns).rref_den()
    by_row: Dict[int, Dict[int, int]] = {}
    for (r, c), value in reduced.to_dok().items():
        if r < len(pivots) and value:
            by_row.setdefault(r, {})[c] = int(value)

    canonical = []
    for r in range(len(pivots)):
        row = by_row[r]
        divisor = 0
        for value in row.values():
            divisor = gcd(divisor, value)
        if row[pivots[r]] < 0:
            divisor = -divisor
        canonical.append(tuple(sorted((c, v // divisor) for c, v in row.items())))
    return canonical


@dataclass(frozen=True)
class GradedSubspace:
    """Subspace of the degree-d polynomials with a canonical integer basis.

    ``columns`` lists the ambient monomials (all of degree d, or all of one
    weight when ``weight`` is set) in the fixed monomial order; ``basis``
    rows are sparse (column index, integer) pairs in reduced echelon form.
    """

    degree: int
    columns: Tuple[Monomial, ...]
    basis: Tuple[SparseRow, ...] = ()
    weight: Optional[WeightVector] = None

    @classmethod
    def from_vectors(
        cls,
        degree: int,
        columns: Tuple[Monomial, ...],
        vectors: Iterable[SparseVector],
        weight: Optional[WeightVector] = None,
    ) -> "GradedSubspace":
        index = {monomial: k for k, monomial in enumerate(columns)}
        rows = []
        for vector in vectors:
            try:
                rows.append({index[mon]: c for mon, c in vector.items() if c})
            except KeyError as e:
                raise ValueError(
                    f"Monomial {e.args[0]} is outside the ambient space of degree {degree}"
                ) from e
        basis = tuple(reduced_rows(rows, len(columns)))
        get_logger().debug(
            f"Reduced {len(rows)} vectors of degree {degree} to dimension {len(basis)}"
        )
        return cls(degree, columns, basis, weight)

    @classmethod
    def direct_sum(
        cls, degree: int, columns: Tuple[Monomial, ...], pieces: Iterable["GradedSubspace"]
    ) -> "GradedSubspace":
        """Sum of pieces with disjoint monomial supports (e.g. weight spaces).

        Reduced echelon bases of the pieces merge into a reduced echelon
        basis of the sum once the rows are ordered by pivot column.
        """
        index = {monomial: k for k, monomial in enumerate(columns)}
        rows = []
        for piece in pieces:
            for row in piece.basis:
                rows.append(
                    tuple(sorted((index[piece.columns[c]], v) for c, v in row))
                )
        rows.sort(key=lambda row: row[0][0])
        return cls(degree, columns, tuple(rows))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vectors(self) -> List[SparseVector]:
        return [{self.columns[c]: v for c, v in row} for row in self.basis]

    def contains(self, vector: SparseVector) -> bool:
        """Membership by a rank test: adding the vector must not raise the rank."""
        index = {monomial: k for k, monomial in enumerate(self.columns)}
        if any(mon not in index for mon, c in vector.items() if c):
            return False
        rows = [dict(row) for row in self.basis]
        rows.append({index[mon]: c for mon, c in vector.items() if c})
        return matrix_rank(rows, len(self.columns)) == self.dimension
