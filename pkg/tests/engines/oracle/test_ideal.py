import pytest

from rect_betti.engines.oracle.generators import highest_weight_generator, lowering_closure
from rect_betti.engines.oracle.ideal import (
    IdealPieces,
    get_ideal,
    hilbert_function,
    ideal_graded_piece,
)
from rect_betti.engines.oracle.ring import WeightVector, get_ring, multiply_by_variable
from rect_betti.engines.oracle.subspace import GradedSubspace


class TestIdealGradedPiece:
    def test_permanental_example(self):
        """Test I_{1x2} on 2x2 matrices: nine quadrics, then every cubic and quartic."""
        assert ideal_graded_piece(1, 2, 2, 2, 1).dimension == 0
        assert ideal_graded_piece(1, 2, 2, 2, 2).dimension == 9
        assert ideal_graded_piece(1, 2, 2, 2, 3).dimension == 20
        assert ideal_graded_piece(1, 2, 2, 2, 4).dimension == 35

    def test_matches_products_with_monomials(self):
        """Test the weight-by-weight construction against span(g * mu) over all of S_{d-ab}."""
        ring = get_ring(2, 2)
        generators = lowering_closure(highest_weight_generator(1, 2, 2, 2), 2, 2)
        products = [
            multiply_by_variable(vector, v)
            for vector in generators.vectors()
            for v in range(ring.num_variables)
        ]
        expected = GradedSubspace.from_vectors(3, ring.monomials(3), products)
        assert ideal_graded_piece(1, 2, 2, 2, 3) == expected

    def test_principal_ideal(self):
        """Test the determinant ideal has dim I_d = dim S_{d-2}."""
        assert [hilbert_function(2, 1, 2, 2, d) for d in range(6)] == [0, 0, 1, 4, 10, 20]

    def test_zero_ideal(self):
        ideal = IdealPieces(3, 1, 2, 2)
        assert ideal.is_zero_ideal
        assert ideal.hilbert_function(5) == 0
        assert ideal.vectors(3, WeightVector((2, 1), (2, 1))) == []
        assert ideal_graded_piece(3, 1, 2, 2, 3).dimension == 0

    def test_invalid_shape(self):
        with pytest.raises(ValueError, match="must be positive"):
            IdealPieces(0, 1, 2, 2)


class TestIdealPieces:
    def setup_method(self):
        self.ideal = get_ideal(1, 2, 2, 2)

    def test_shared_instance(self):
        assert get_ideal(1, 2, 2, 2) is self.ideal

    def test_weight_pieces(self):
        assert len(self.ideal.vectors(2, WeightVector((2, 0), (2, 0)))) == 1
        assert self.ideal.weight_dimension(2, WeightVector((1, 1), (1, 1))) == 1
        assert self.ideal.weight_dimension(3, WeightVector((2, 1), (2, 1))) == 2
        assert self.ideal.vectors(2, WeightVector((2, 0), (1, 0))) == []

    def test_permuted_weights_carry_permuted_bases(self):
        """Test a non-dominant weight space is the permuted dominant one."""
        ideal = get_ideal(1, 2, 3, 2)
        weight = WeightVector((0, 2, 1), (1, 2))
        piece = ideal.piece(3, weight)
        dominant, _, _ = weight.dominant()
        assert piece.dimension == ideal.piece(3, dominant).dimension
        ring = get_ring(3, 2)
        for vector in piece.vectors():
            assert all(ring.monomial_weight(monomial) == weight for monomial in vector)

    def test_hilbert_function_over_weights(self):
        """Test dominant weights times orbit sizes give the same total as all weights."""
        ideal = get_ideal(1, 2, 3, 2)
        ring = get_ring(3, 2)
        for d in range(2, 5):
            total = sum(ideal.weight_dimension(d, w) for w in ring.weights_of_degree(d))
            assert ideal.hilbert_function(d) == total
            assert ideal.graded_piece(d).dimension == total
