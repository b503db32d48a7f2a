from functools import lru_cache
from typing import Dict, List, Tuple

from ...logging import get_logger
from .generators import closure_by_weight, highest_weight_generator
from .ring import SparseVector, WeightVector, get_ring, multiply_by_variable
from .subspace import GradedSubspace


class IdealPieces:
    """Graded pieces of I_{a x b} inside Sym(C^m (x) C^n), split by torus weight.

    Only dominant weight spaces are computed and stored; every other weight
    space is the image of a dominant one under a permutation of rows and
    columns (permutation matrices lie in GL and the ideal is GL-stable).
    After ``prepare`` has run for a degree the stored pieces are only read,
    so concurrent readers are safe.
    """

    def __init__(self, a: int, b: int, m: int, n: int):
        if a < 1 or b < 1:
            raise ValueError(f"a and b must be positive, got a={a}, b={b}")
        self.a, self.b, self.m, self.n = a, b, m, n
        self.ring = get_ring(m, n)
        self.generator_degree = a * b
        self._pieces: Dict[Tuple[int, WeightVector], GradedSubspace] = {}
        self._prepared_degrees = set()

    @property
    def is_zero_ideal(self) -> bool:
        return self.a > min(self.m, self.n)

    def _generator_pieces(self):
        f = highest_weight_generator(self.a, self.b, self.m, self.n)
        for weight, space in closure_by_weight(f, self.m, self.n).items():
            if weight.is_dominant():
                self._pieces[(self.generator_degree, weight)] = space

    def prepare(self, degree: int):
        """Compute every dominant weight space of I_d for all d <= degree."""
        if self.is_zero_ideal or degree < self.generator_degree:
            return
        for d in range(self.generator_degree, degree + 1):
            if d in self._prepared_degrees:
                continue
            if d == self.generator_degree:
                self._generator_pieces()
            else:
                for weight in self.ring.weights_of_degree(d, dominant_only=True):
                    self._pieces[(d, weight)] = self._multiply_up(d, weight)
            self._prepared_degrees.add(d)
            get_logger().debug(
                f"I_{{{self.a}x{self.b}}} on {self.m}x{self.n}: prepared degree {d}"
            )

    def _multiply_up(self, degree: int, weight: WeightVector) -> GradedSubspace:
        # I_{d,w} = sum over variables z_v of z_v * I_{d-1, w - wt(v)}
        products = []
        for v in range(self.ring.num_variables):
            source = weight - self.ring.variable_weight(v)
            if not source.is_nonnegative():
                continue
            for vector in self.vectors(degree - 1, source):
                products.append(multiply_by_variable(vector, v))
        return GradedSubspace.from_vectors(
            degree, self.ring.monomials_of_weight(weight), products, weight
        )

    def vectors(self, degree: int, weight: WeightVector) -> List[SparseVector]:
        """A basis of the weight space I_{d, w} (canonical when w is dominant)."""
        if (
            self.is_zero_ideal
            or degree < self.generator_degree
            or not weight.is_nonnegative()
            or weight.degree != degree
        ):
            return []
        self.prepare(degree)
        dominant, row_order, col_order = weight.dominant()
        piece = self._pieces.get((degree, dominant))
        if piece is None:
            return []
        if dominant == weight:
            return piece.vectors()
        return [
            {
                self.ring.permute_monomial(mon, row_order, col_order): c
                for mon, c in vector.items()
            }
            for vector in piece.vectors()
        ]

    def weight_dimension(self, degree: int, weight: WeightVector) -> int:
        if self.is_zero_ideal or degree < self.generator_degree:
            return 0
        self.prepare(degree)
        piece = self._pieces.get((degree, weight.dominant()[0]))
        return piece.dimension if piece else 0

    def piece(self, degree: int, weight: WeightVector) -> GradedSubspace:
        """The weight space I_{d, w} with its canonical basis."""
        columns = self.ring.monomials_of_weight(weight)
        return GradedSubspace.from_vectors(
            degree, columns, self.vectors(degree, weight), weight
        )

    def graded_piece(self, degree: int) -> GradedSubspace:
        """All of I_d, over every degree-d monomial."""
        columns = self.ring.monomials(degree)
        pieces = [
            self.piece(degree, weight)
            for weight in self.ring.weights_of_degree(degree)
        ]
        return GradedSubspace.direct_sum(degree, columns, pieces)

    def hilbert_function(self, degree: int) -> int:
        """dim I_d, summing dominant weight spaces times their orbit sizes."""
        if self.is_zero_ideal or degree < self.generator_degree:
            return 0
        self.prepare(degree)
        return sum(
            weight.orbit_size() * self.weight_dimension(degree, weight)
            for weight in self.ring.weights_of_degree(degree, dominant_only=True)
        )


@lru_cache(maxsize=None)
def get_ideal(a: int, b: int, m: int, n: int) -> IdealPieces:
    return IdealPieces(a, b, m, n)


def ideal_graded_piece(a: int, b: int, m: int, n: int, d: int) -> GradedSubspace:
    """I_{a x b} in degree d as an exact subspace of the degree-d polynomials."""
    return get_ideal(a, b, m, n).graded_piece(d)


def hilbert_function(a: int, b: int, m: int, n: int, d: int) -> int:
    return get_ideal(a, b, m, n).hilbert_function(d)
