"""
The polynomial ring C[z_ij] on an m x n matrix of variables, its monomials
and the torus weights they carry.

Variables are numbered row-major: z_ij has index i * n + j. Monomials are
exponent tuples in that order. Within a degree they are listed in
decreasing lexicographic order (z_11 first), which together with the
grading is the fixed monomial order of the oracle.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.rings import ring as polynomial_ring

from ...partitions import partitions_of

Monomial = Tuple[int, ...]
SparseVector = Dict[Monomial, int]


@dataclass(frozen=True)
class WeightVector:
    """Torus weight (row weight in Z^m, column weight in Z^n)."""

    row: Tuple[int, ...]
    col: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(int(x) for x in self.row))
        object.__setattr__(self, "col", tuple(int(x) for x in self.col))

    @property
    def degree(self) -> int:
        return sum(self.row)

    def is_balanced(self) -> bool:
        return sum(self.row) == sum(self.col)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.row) and all(x >= 0 for x in self.col)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            tuple(x + y for x, y in zip(self.row, other.row)),
            tuple(x + y for x, y in zip(self.col, other.col)),
        )

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            tuple(x - y for x, y in zip(self.row, other.row)),
            tuple(x - y for x, y in zip(self.col, other.col)),
        )

    def is_dominant(self) -> bool:
        return list(self.row) == sorted(self.row, reverse=True) and list(
            self.col
        ) == sorted(self.col, reverse=True)

    def dominant(self) -> Tuple["WeightVector", Tuple[int, ...], Tuple[int, ...]]:
        """The dominant weight in the S_m x S_n orbit and the orders reaching it.

        dominant.row[k] == self.row[row_order[k]], likewise for columns.
        """
        row_order = tuple(sorted(range(len(self.row)), key=lambda k: -self.row[k]))
        col_order = tuple(sorted(range(len(self.col)), key=lambda k: -self.col[k]))
        dominant = WeightVector(
            tuple(self.row[k] for k in row_order), tuple(self.col[k] for k in col_order)
        )
        return dominant, row_order, col_order

    def orbit_size(self) -> int:
        """Number of distinct weights obtained by permuting rows and columns."""

        def arrangements(values):
            return factorial(len(values)) // prod(
                factorial(c) for c in Counter(values).values()
            )

        return arrangements(self.row) * arrangements(self.col)


def _vectors_with_sum(total: int, bounds: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    # decreasing lexicographic order, entry k at most bounds[k]
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_capacity = sum(bounds[1:])
    for first in range(min(total, bounds[0]), -1, -1):
        if total - first > rest_capacity:
            break
        for tail in _vectors_with_sum(total - first, bounds[1:]):
            yield (first,) + tail


class VariableRing:
    """Sym(C^m (x) C^n) with the variables z_ij, backed by a sympy ring."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError(f"Matrix shape must be positive, got {m}x{n}")
        self.m = m
        self.n = n
        names = [f"z{i + 1}_{j + 1}" for i in range(m) for j in range(n)]
        self.ring, *self.generators = polynomial_ring(names, ZZ, "grlex")
        self._monomial_cache: Dict[Tuple, Tuple[Monomial, ...]] = {}

    @property
    def num_variables(self) -> int:
        return self.m * self.n

    def index(self, i: int, j: int) -> int:
        return i * self.n + j

    def variable(self, i: int, j: int):
        return self.generators[self.index(i, j)]

    def variable_position(self, v: int) -> Tuple[int, int]:
        return divmod(v, self.n)

    def variable_weight(self, v: int) -> WeightVector:
        i, j = self.variable_position(v)
        row = [0] * self.m
        col = [0] * self.n
        row[i] = 1
        col[j] = 1
        return WeightVector(tuple(row), tuple(col))

    def subset_weight(self, subset: Sequence[int]) -> WeightVector:
        row = [0] * self.m
        col = [0] * self.n
        for v in subset:
            i, j = self.variable_position(v)
            row[i] += 1
            col[j] += 1
        return WeightVector(tuple(row), tuple(col))

    def monomial_weight(self, monomial: Monomial) -> WeightVector:
        row = [0] * self.m
        col = [0] * self.n
        for v, exponent in enumerate(monomial):
            if exponent:
                i, j = self.variable_position(v)
                row[i] += exponent
                col[j] += exponent
        return WeightVector(tuple(row), tuple(col))

    def monomials(self, degree: int) -> Tuple[Monomial, ...]:
        """All monomials of the given degree, in the fixed monomial order."""
        key = ("degree", degree)
        if key not in self._monomial_cache:
            self._monomial_cache[key] = tuple(
                _vectors_with_sum(degree, [degree] * self.num_variables)
            )
        return self._monomial_cache[key]

    def monomials_of_weight(self, weight: WeightVector) -> Tuple[Monomial, ...]:
        """Monomials of the weight: m x n tables with the given margins."""
        key = ("weight", weight)
        if key not in self._monomial_cache:
            self._monomial_cache[key] = tuple(self._tables(weight))
        return self._monomial_cache[key]

    def _tables(self, weight: WeightVector) -> Iterator[Monomial]:
        if not weight.is_nonnegative() or not weight.is_balanced():
            return

        def fill(i: int, remaining_cols: Tuple[int, ...]):
            if i == self.m:
                if not any(remaining_cols):
                    yield ()
                return
            for row in _vectors_with_sum(weight.row[i], remaining_cols):
                left = tuple(c - x for c, x in zip(remaining_cols, row))
                for tail in fill(i + 1, left):
                    yield row + tail

        yield from fill(0, weight.col)

    def weights_of_degree(self, degree: int, dominant_only: bool = False) -> List[WeightVector]:
        """All (or all dominant) nonnegative weights carried by degree-d monomials."""
        if dominant_only:
            rows = [
                p.parts + (0,) * (self.m - p.length)
                for p in partitions_of(degree, max_length=self.m)
            ]
            cols = [
                p.parts + (0,) * (self.n - p.length)
                for p in partitions_of(degree, max_length=self.n)
            ]
        else:
            rows = list(_vectors_with_sum(degree, [degree] * self.m))
            cols = list(_vectors_with_sum(degree, [degree] * self.n))
        return [WeightVector(row, col) for row in rows for col in cols]

    def to_vector(self, polynomial) -> SparseVector:
        return {tuple(monom): int(coeff) for monom, coeff in polynomial.terms()}

    def from_vector(self, vector: SparseVector):
        return self.ring.from_dict({monom: ZZ(c) for monom, c in vector.items()})

    def permute_monomial(
        self, monomial: Monomial, row_order: Sequence[int], col_order: Sequence[int]
    ) -> Monomial:
        """Move entry (k, l) of the exponent table to (row_order[k], col_order[l])."""
        table = [0] * self.num_variables
        for v, exponent in enumerate(monomial):
            if exponent:
                k, l = self.variable_position(v)
                table[self.index(row_order[k], col_order[l])] = exponent
        return tuple(table)


def multiply_by_variable(vector: SparseVector, v: int) -> SparseVector:
    """z_v * f on exponent tuples."""
    result = {}
    for monomial, coefficient in vector.items():
        shifted = monomial[:v] + (monomial[v] + 1,) + monomial[v + 1 :]
        result[shifted] = coefficient
    return result


def vector_weight(ring: VariableRing, vector: SparseVector) -> WeightVector:
    """Common weight of a weight-homogeneous vector; ValueError otherwise."""
    weights = {ring.monomial_weight(monomial) for monomial in vector}
    if len(weights) != 1:
        raise ValueError(f"Vector is not a torus weight vector ({len(weights)} weights)")
    return weights.pop()


@lru_cache(maxsize=None)
def get_ring(m: int, n: int) -> VariableRing:
    return VariableRing(m, n)
