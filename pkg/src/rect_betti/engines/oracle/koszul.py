"""
Tor_i(I, C)_j as the homology of the Koszul complex

    Lambda^{i+1} V (x) I_{j-i-1} -> Lambda^i V (x) I_{j-i} -> Lambda^{i-1} V (x) I_{j-i+1}

with V the span of the variables. The differential
e_{v_1} ^ ... ^ e_{v_i} (x) f  ->  sum_k (-1)^{k+1} e_{v_1} ^ .. (no v_k) .. ^ e_{v_i} (x) z_{v_k} f
preserves torus weights, so every rank is computed one weight block at a time.
"""

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from ...logging import get_logger
from ...rep_ring import BettiTable
from ...settings import DEFAULT_CELL_BUDGET
from ..base.engine import BettiEngine, BettiWindow
from .cache import ResultCache
from .ideal import get_ideal
from .ring import WeightVector, multiply_by_variable
from .subspace import matrix_rank


@lru_cache(maxsize=None)
def wedge_basis(num_variables: int, i: int) -> Tuple[Tuple[int, ...], ...]:
    """Strictly increasing index tuples of length i, lexicographically ordered."""
    if i < 0 or i > num_variables:
        return ()
    return tuple(combinations(range(num_variables), i))


class KoszulEngine(BettiEngine):
    """Exact Betti numbers of I_{a x b} by weight-split Koszul homology."""

    name = "oracle"

    class ResourceBudgetExceeded(Exception):
        def __init__(self, i: int, j: int, cells: int, budget: int):
            self.i = i
            self.j = j
            self.cells = cells
            self.budget = budget
            super().__init__(
                f"Block matrix for (i={i}, j={j}) needs {cells} cells, budget is {budget}"
            )

    def __init__(
        self,
        a: int,
        b: int,
        m: int,
        n: int,
        cell_budget: int = DEFAULT_CELL_BUDGET,
        workers: int = 1,
        use_symmetry: bool = True,
        cache: Optional[ResultCache] = None,
    ):
        super().__init__(a, b, m, n)
        self.cell_budget = cell_budget
        self.workers = max(1, workers)
        self.use_symmetry = use_symmetry
        self.cache = cache
        self.ideal = get_ideal(a, b, m, n)
        self.ring = self.ideal.ring

    # -- chain groups and differentials -------------------------------------------------

    def _chain_blocks(self, i: int, j: int, weight: WeightVector):
        """(subset, basis vectors of I_{j-i}) pairs spanning the weight-w part of C_i."""
        degree = j - i
        blocks = []
        for subset in wedge_basis(self.ring.num_variables, i):
            rest = weight - self.ring.subset_weight(subset)
            if not rest.is_nonnegative():
                continue
            vectors = self.ideal.vectors(degree, rest)
            if vectors:
                blocks.append((subset, vectors))
        return blocks

    def chain_dimension(self, i: int, j: int, weight: WeightVector) -> int:
        if i < 0 or j - i < 0:
            return 0
        return sum(len(vectors) for _, vectors in self._chain_blocks(i, j, weight))

    def _differential_rank(self, i: int, j: int, weight: WeightVector) -> int:
        """Rank of d_i : C_i -> C_{i-1} on the weight-w block (internal degree j)."""
        if i < 1 or j - i < 0:
            return 0
        blocks = self._chain_blocks(i, j, weight)
        if not blocks:
            return 0
        cells = self._block_cells(blocks, weight)
        if cells > self.cell_budget:
            raise self.ResourceBudgetExceeded(i, j, cells, self.cell_budget)

        column_index: Dict[Tuple, int] = {}
        rows: List[Dict[int, int]] = []
        for subset, vectors in blocks:
            for f in vectors:
                row: Dict[int, int] = {}
                for k, v in enumerate(subset):
                    sign = -1 if k % 2 else 1
                    face = subset[:k] + subset[k + 1 :]
                    for monomial, c in multiply_by_variable(f, v).items():
                        key = (face, monomial)
                        if key not in column_index:
                            column_index[key] = len(column_index)
                        col = column_index[key]
                        row[col] = row.get(col, 0) + sign * c
                rows.append(row)
        return matrix_rank(rows, len(column_index))

    def _block_cells(self, blocks, weight: WeightVector) -> int:
        """Rows times an upper bound on the columns of a differential block.

        Columns are (face, monomial) pairs with the monomial of the
        complementary weight of the face.
        """
        num_rows = sum(len(vectors) for _, vectors in blocks)
        faces = {
            subset[:k] + subset[k + 1 :] for subset, _ in blocks for k in range(len(subset))
        }
        num_columns = sum(
            len(self.ring.monomials_of_weight(weight - self.ring.subset_weight(face)))
            for face in faces
        )
        return num_rows * num_columns

    # -- homology -------------------------------------------------------------------

    def weight_refined_betti(self, i: int, j: int, weight: WeightVector) -> int:
        """Dimension of the weight-w part of Tor_i(I, C)_j."""
        if (
            self.ideal.is_zero_ideal
            or i < 0
            or i > self.ring.num_variables
            or j - i < self.ideal.generator_degree
            or len(weight.row) != self.m
            or len(weight.col) != self.n
            or weight.degree != j
            or not weight.is_balanced()
            or not weight.is_nonnegative()
        ):
            return 0
        dimension = self.chain_dimension(i, j, weight)
        if dimension == 0:
            return 0
        outgoing = self._differential_rank(i, j, weight)
        incoming = self._differential_rank(i + 1, j, weight)
        value = dimension - outgoing - incoming
        get_logger().debug(
            f"(i={i}, j={j}) weight {weight.row}|{weight.col}: "
            f"dim {dimension}, ranks {outgoing}/{incoming} -> {value}"
        )
        return value

    def _weights(self, j: int) -> List[Tuple[WeightVector, int]]:
        """Weights to visit with the factor each one stands for."""
        if self.use_symmetry:
            return [
                (weight, weight.orbit_size())
                for weight in self.ring.weights_of_degree(j, dominant_only=True)
            ]
        return [(weight, 1) for weight in self.ring.weights_of_degree(j)]

    def koszul_betti(self, i: int, j: int) -> int:
        """dim Tor_i(I_{a x b}, C)_j."""
        if (
            self.ideal.is_zero_ideal
            or i < 0
            or i > self.ring.num_variables
            or j - i < self.ideal.generator_degree
        ):
            return 0
        if self.cache is not None:
            cached = self.cache.get_betti(i, j)
            if cached is not None:
                return cached

        # graded pieces are built single-threaded; the block map only reads them
        self.ideal.prepare(j - i)
        weights = self._weights(j)

        def block(item):
            weight, factor = item
            return factor * self.weight_refined_betti(i, j, weight)

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                values = list(executor.map(block, weights))
        else:
            values = [block(item) for item in weights]
        value = sum(values)

        if self.cache is not None:
            self.cache.put_betti(i, j, value)
        return value

    def hilbert_function(self, d: int) -> int:
        if self.cache is not None:
            cached = self.cache.get_hilbert(d)
            if cached is not None:
                return cached
        value = self.ideal.hilbert_function(d)
        if self.cache is not None:
            self.cache.put_hilbert(d, value)
        return value

    def betti_table(self, window: BettiWindow) -> BettiTable:
        table = BettiTable()
        for i, j in window.cells():
            table.add(i, j, self.koszul_betti(i, j))
        if self.cache is not None:
            self.cache.save()
        get_logger().info(
            f"Oracle table for I_{{{self.a}x{self.b}}} on {self.m}x{self.n} "
            f"(i<={window.max_i}, j<={window.max_j}): {len(table)} nonzero entries"
        )
        return table

    def alternating_sum_identity(self, j: int) -> Tuple[int, int]:
        """Both sides of sum_i (-1)^i B_{i,j} = sum_k (-1)^k C(mn,k) dim I_{j-k}."""
        mn = self.ring.num_variables
        left = sum((-1) ** i * self.koszul_betti(i, j) for i in range(0, min(mn, j) + 1))
        right = sum(
            (-1) ** k * comb(mn, k) * self.hilbert_function(j - k)
            for k in range(0, min(mn, j) + 1)
        )
        return left, right


def koszul_betti(a: int, b: int, m: int, n: int, i: int, j: int, **options) -> int:
    return KoszulEngine(a, b, m, n, **options).koszul_betti(i, j)


def weight_refined_betti(
    a: int, b: int, m: int, n: int, i: int, j: int, weight: WeightVector, **options
) -> int:
    return KoszulEngine(a, b, m, n, **options).weight_refined_betti(i, j, weight)
