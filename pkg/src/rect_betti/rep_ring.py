"""
Formal elements of Rep_GL[z, w] for GL = GL_m x GL_n, Schur functor
dimensions, Kostka numbers and evaluation to numeric Betti tables.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .partitions import Partition, partitions_of
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class SchurLabel:
    """The irreducible S_row C^m (x) S_col C^n."""

    row: Partition
    col: Partition

    def transpose(self) -> "SchurLabel":
        """Swap the two factors (used when m and n trade places)."""
        return SchurLabel(self.col, self.row)

    def dimension(self, m: int, n: int) -> int:
        return schur_dim(self.row, m) * schur_dim(self.col, n)

    def sort_key(self):
        return (self.row.sort_key(), self.col.sort_key())

    def __str__(self):
        return f"{self.row}x{self.col}"


TermKey = Tuple[SchurLabel, int, int]


class EquivariantPolynomial:
    """Element of Rep_GL[z, w] with nonnegative multiplicities.

    A term is a key (label, zdeg, wdeg) with a positive multiplicity.
    """

    def __init__(self, terms: Mapping[TermKey, int] = None):
        self._terms: Dict[TermKey, int] = {}
        for (label, zdeg, wdeg), multiplicity in (terms or {}).items():
            self.add_term(label, zdeg, wdeg, multiplicity)

    def add_term(self, label: SchurLabel, zdeg: int, wdeg: int, multiplicity: int = 1):
        if multiplicity < 0 or zdeg < 0 or wdeg < 0:
            raise ValueError(
                f"Invalid term {label} z^{zdeg} w^{wdeg} with multiplicity {multiplicity}"
            )
        if multiplicity == 0:
            return
        key = (label, zdeg, wdeg)
        self._terms[key] = self._terms.get(key, 0) + multiplicity

    def multiplicity(self, label: SchurLabel, zdeg: int, wdeg: int) -> int:
        return self._terms.get((label, zdeg, wdeg), 0)

    def terms(self) -> List[Tuple[SchurLabel, int, int, int]]:
        """(label, zdeg, wdeg, multiplicity) sorted by (wdeg, zdeg, label)."""
        ordered = sorted(
            self._terms.items(), key=lambda item: (item[0][2], item[0][1], item[0][0].sort_key())
        )
        return [(label, z, w, mult) for (label, z, w), mult in ordered]

    def __iter__(self) -> Iterator[Tuple[SchurLabel, int, int, int]]:
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def labels(self) -> set:
        return {label for label, _, _ in self._terms}

    def __add__(self, other: "EquivariantPolynomial") -> "EquivariantPolynomial":
        result = EquivariantPolynomial(self._terms)
        for label, zdeg, wdeg, mult in other:
            result.add_term(label, zdeg, wdeg, mult)
        return result

    def __eq__(self, other):
        if not isinstance(other, EquivariantPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        return f"EquivariantPolynomial({len(self._terms)} terms)"

    def shift_w(self, k: int) -> "EquivariantPolynomial":
        return EquivariantPolynomial(
            {(label, z, w + k): mult for (label, z, w), mult in self._terms.items()}
        )

    def times_w_polynomial(self, factor: IntPolynomial) -> "EquivariantPolynomial":
        """Multiply by a polynomial in w; w^k shifts every wdeg by k."""
        result = EquivariantPolynomial()
        for exponent, coefficient in factor.items():
            if coefficient < 0:
                raise ValueError("Virtual classes are not supported")
            for label, zdeg, wdeg, mult in self:
                result.add_term(label, zdeg, wdeg + exponent, mult * coefficient)
        return result

    def w_slice(self, wdeg: int) -> "EquivariantPolynomial":
        return EquivariantPolynomial(
            {key: mult for key, mult in self._terms.items() if key[2] == wdeg}
        )

    def transpose(self) -> "EquivariantPolynomial":
        return EquivariantPolynomial(
            {
                (label.transpose(), z, w): mult
                for (label, z, w), mult in self._terms.items()
            }
        )

    def restrict(self, m: int, n: int) -> "EquivariantPolynomial":
        """Drop the labels that vanish on C^m (x) C^n."""
        return EquivariantPolynomial(
            {
                key: mult
                for key, mult in self._terms.items()
                if key[0].row.length <= m and key[0].col.length <= n
            }
        )


class BettiTable:
    """(homological degree i, internal degree j) -> nonnegative integer."""

    def __init__(self, entries: Mapping[Tuple[int, int], int] = None):
        self._entries: Dict[Tuple[int, int], int] = {}
        for (i, j), value in (entries or {}).items():
            self.add(i, j, value)

    def add(self, i: int, j: int, value: int):
        if i < 0 or j < 0 or value < 0:
            raise ValueError(f"Invalid Betti entry ({i}, {j}) = {value}")
        if value == 0:
            return
        self._entries[(i, j)] = self._entries.get((i, j), 0) + value

    def get(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._entries.items())

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.items())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"BettiTable({self.as_dict()})"

    def window(self, max_i: int, max_j: int) -> "BettiTable":
        return BettiTable(
            {(i, j): v for (i, j), v in self._entries.items() if i <= max_i and j <= max_j}
        )

    def diff(self, other: "BettiTable") -> List[Tuple[int, int, int, int]]:
        """Entries (i, j, self value, other value) where the two tables differ."""
        keys = sorted(set(self._entries) | set(other._entries))
        return [
            (i, j, self.get(i, j), other.get(i, j))
            for i, j in keys
            if self.get(i, j) != other.get(i, j)
        ]

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self._entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self._entries), default=0)

    def alternating_sum(self, j: int) -> int:
        """sum_i (-1)^i B_{i,j}."""
        return sum(
            (-1) ** i * value for (i, jj), value in self._entries.items() if jj == j
        )


def schur_dim(partition: Partition, n: int) -> int:
    """dim S_partition C^n by the hook-content formula.

    Numerator and denominator are exact integer products; the division is
    exact. Zero when the partition has more than n parts.
    """
    if partition.length > n:
        return 0
    conj = partition.conjugate()
    numerator = prod(n + j - i for i, j in partition.cells())
    hooks = prod(
        (partition[i] - j) + (conj[j] - i) - 1 for i, j in partition.cells()
    )
    return numerator // hooks


def _horizontal_strips(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions inner with outer/inner a horizontal strip of the given size.

    inner interlaces outer: outer[i+1] <= inner[i] <= outer[i].
    """
    bounds = [(outer[i + 1], outer[i]) for i in range(outer.length)]

    def build(index: int, remaining: int):
        if index == len(bounds):
            if remaining == 0:
                yield ()
            return
        low, high = bounds[index]
        for removed in range(0, min(high - low, remaining) + 1):
            for tail in build(index + 1, remaining - removed):
                yield (high - removed,) + tail

    for parts in build(0, size):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _kostka(partition: Partition, content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if partition.size == 0 else 0
    last = content[-1]
    if last > partition.size:
        return 0
    return sum(
        _kostka(inner, content[:-1]) for inner in _horizontal_strips(partition, last)
    )


def kostka(partition: Partition, content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Enumerated by peeling off the horizontal strip filled with the largest
    entry, one entry value at a time.
    """
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content) or sum(content) != partition.size:
        return 0
    return _kostka(partition, content)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All length-``parts`` vectors of nonnegative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def cauchy_degree(m: int, n: int, d: int) -> List[SchurLabel]:
    """Labels (lambda, lambda) of the degree-d part of Sym(C^m (x) C^n)."""
    return [
        SchurLabel(partition, partition)
        for partition in partitions_of(d, max_length=min(m, n))
    ]


def polynomial_ring_dimension(variables: int, degree: int) -> int:
    """dim of the degree-d part of a polynomial ring in the given variables."""
    if degree < 0:
        return 0
    if variables == 0:
        return 1 if degree == 0 else 0
    return comb(variables - 1 + degree, degree)


def evaluate_dimensions(
    polynomial: EquivariantPolynomial, m: int, n: int
) -> BettiTable:
    """Replace each class by its dimension: entry (i, j) collects w^i z^j."""
    table = BettiTable()
    for label, zdeg, wdeg, mult in polynomial:
        table.add(wdeg, zdeg, mult * label.dimension(m, n))
    return table


def evaluate_weight(
    polynomial: EquivariantPolynomial,
    row_weight: Sequence[int],
    col_weight: Sequence[int],
) -> BettiTable:
    """Weight-space dimensions: mult * K(row, row_weight) * K(col, col_weight)."""
    degree = sum(row_weight)
    table = BettiTable()
    for label, zdeg, wdeg, mult in polynomial:
        if zdeg != degree:
            continue
        table.add(
            wdeg,
            zdeg,
            mult * kostka(label.row, row_weight) * kostka(label.col, col_weight),
        )
    return table


def sum_of_kostka(partition: Partition, n: int) -> int:
    """sum over all contents of length n of kostka(partition, content)."""
    return sum(kostka(partition, c) for c in compositions(partition.size, n))


def max_internal_degree(polynomial: EquivariantPolynomial) -> Optional[int]:
    return max((zdeg for _, zdeg, _, _ in polynomial), default=None)
