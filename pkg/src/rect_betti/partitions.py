"""
Partition arithmetic: conjugation, containment, enumeration inside a
rectangle and the shape lambda(r, s; alpha, beta) used by the strand
polynomials.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple


class ShapeError(ValueError):
    def __init__(self, message: str, **data):
        self.data = data
        super().__init__(message)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Trailing zeros are dropped at construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. Indexing past the last part reads 0.
    """

    class InvalidPartition(ValueError):
        def __init__(self, parts):
            self.parts = parts
            super().__init__(f"Not a partition: {parts}")

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            parts = tuple(int(p) for p in self.parts)
        except (TypeError, ValueError) as e:
            raise self.InvalidPartition(self.parts) from e

        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(
            parts[k] < parts[k + 1] for k in range(len(parts) - 1)
        ):
            raise self.InvalidPartition(self.parts)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def rectangle(cls, rows: int, width: int) -> "Partition":
        return cls((width,) * rows if width > 0 else ())

    @classmethod
    def from_json(cls, value: List[int]) -> "Partition":
        return cls(tuple(value))

    def to_json(self) -> List[int]:
        return list(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def __getitem__(self, index: int) -> int:
        if index < 0:
            raise IndexError(index)
        return self.parts[index] if index < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells (row, column) of the Young diagram, row by row."""
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield i, j

    def sort_key(self):
        # graded, then lexicographically decreasing inside a grade
        return (self.size, tuple(-p for p in self.parts))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return contains(self, other)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram: result[j] = #{i : partition[i] >= j+1}."""
    return Partition(
        tuple(
            sum(1 for part in partition.parts if part > j)
            for j in range(partition.width)
        )
    )


def contains(outer: Partition, inner: Partition) -> bool:
    """True when inner[i] <= outer[i] for every i."""
    if inner.length > outer.length:
        return False
    return all(part <= outer[i] for i, part in enumerate(inner.parts))


def _generate(
    total: Optional[int], max_length: int, max_part: int
) -> Iterator[Tuple[int, ...]]:
    # lexicographically decreasing; total=None means any size
    if max_length == 0 or max_part == 0:
        if not total:
            yield ()
        return
    if total == 0:
        yield ()
        return

    top = max_part if total is None else min(max_part, total)
    for first in range(top, 0, -1):
        rest = None if total is None else total - first
        for tail in _generate(rest, max_length - 1, first):
            yield (first,) + tail
    if total is None:
        yield ()


@lru_cache(maxsize=None)
def partitions_of(
    n: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> Tuple[Partition, ...]:
    """Partitions of n, lexicographically decreasing, optionally bounded."""
    if n < 0:
        return ()
    max_length = n if max_length is None else max_length
    max_part = n if max_part is None else max_part
    return tuple(Partition(parts) for parts in _generate(n, max_length, max_part))


@lru_cache(maxsize=None)
def enumerate_in_rectangle(rows: int, width: int) -> Tuple[Partition, ...]:
    """All partitions with at most ``rows`` parts, each at most ``width``.

    Ordered by size, then lexicographically decreasing, e.g. for the 2x2 box:
    (), (1), (2), (1,1), (2,1), (2,2).
    """
    if rows < 0 or width < 0:
        return ()
    found = [Partition(parts) for parts in _generate(None, rows, width)]
    return tuple(sorted(found, key=Partition.sort_key))


def count_in_rectangle(rows: int, width: int, size: int) -> int:
    """P(rows, width; size): partitions of ``size`` inside the rows x width box."""
    if rows < 0 or width < 0 or size < 0 or size > rows * width:
        return 0
    return len(partitions_of(size, max_length=rows, max_part=width))


def _check_shape_input(r: int, s: int, alpha: Partition, beta: Partition):
    if r < 1 or s < 1:
        raise ShapeError(f"Rectangle must be positive, got {r}x{s}", r=r, s=s)
    if alpha.length > r:
        raise ShapeError(
            f"alpha={alpha} has more than r={r} parts", r=r, alpha=alpha.to_json()
        )
    if beta.width > s:
        raise ShapeError(
            f"beta={beta} has a part larger than s={s}", s=s, beta=beta.to_json()
        )


def lambda_rect(r: int, s: int, alpha: Partition, beta: Partition) -> Partition:
    """Attach alpha to the right of the r x s rectangle and beta below it.

    The first r rows have length s + alpha_i and the remaining rows are the
    parts of beta, so lambda_rect(4, 5, (4,2,1), (3,2)) = (9,7,6,5,3,2).
    """
    _check_shape_input(r, s, alpha, beta)
    top = tuple(s + alpha[i] for i in range(r))
    return Partition(top + beta.parts)
