import pytest

from rect_betti.engines.oracle.generators import (
    ShapeTooLarge,
    closure_by_weight,
    highest_weight_generator,
    lowering_closure,
)
from rect_betti.engines.oracle.ring import get_ring
from rect_betti.engines.oracle.subspace import GradedSubspace
from rect_betti.partitions import Partition
from rect_betti.rep_ring import schur_dim

PERMANENT = {(1, 0, 0, 1): 1, (0, 1, 1, 0): 1}
DETERMINANT = {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}


class TestHighestWeightGenerator:
    def test_square_of_a_variable(self):
        ring = get_ring(2, 2)
        assert ring.to_vector(highest_weight_generator(1, 2, 2, 2)) == {(2, 0, 0, 0): 1}
        assert ring.to_vector(highest_weight_generator(1, 1, 2, 2)) == {(1, 0, 0, 0): 1}

    def test_determinant(self):
        ring = get_ring(2, 2)
        assert ring.to_vector(highest_weight_generator(2, 1, 2, 2)) == DETERMINANT

    def test_leading_minor_in_larger_matrix(self):
        ring = get_ring(3, 2)
        squared = ring.to_vector(highest_weight_generator(2, 2, 3, 2))
        assert all(sum(monomial) == 4 for monomial in squared)
        assert squared == {
            (2, 0, 0, 2, 0, 0): 1,
            (1, 1, 1, 1, 0, 0): -2,
            (0, 2, 2, 0, 0, 0): 1,
        }

    def test_rejects_large_minors(self):
        with pytest.raises(ShapeTooLarge, match="exceeds min"):
            highest_weight_generator(3, 1, 2, 3)


class TestLoweringClosure:
    def test_generators_of_the_permanental_example(self):
        """Test the span of z11^2 has the nine quadrics including the permanent only."""
        ring = get_ring(2, 2)
        space = lowering_closure(highest_weight_generator(1, 2, 2, 2), 2, 2)
        assert space.degree == 2
        assert space.dimension == 9
        assert space.contains(PERMANENT)
        assert not space.contains(DETERMINANT)
        assert space.contains(ring.to_vector(ring.variable(1, 0) ** 2))

    def test_determinant_is_invariant(self):
        space = lowering_closure(highest_weight_generator(2, 1, 2, 2), 2, 2)
        assert space.dimension == 1
        assert space.contains(DETERMINANT)

    def test_any_weight_vector_generates_the_same_space(self):
        ring = get_ring(2, 2)
        from_top = lowering_closure(highest_weight_generator(1, 2, 2, 2), 2, 2)
        from_permanent = lowering_closure(ring.from_vector(PERMANENT), 2, 2)
        assert from_permanent == from_top

    def test_weight_spaces(self):
        spaces = closure_by_weight(highest_weight_generator(1, 2, 2, 2), 2, 2)
        assert len(spaces) == 9
        assert all(space.dimension == 1 for space in spaces.values())

    def test_invalid_start(self):
        ring = get_ring(2, 2)
        with pytest.raises(ValueError, match="zero polynomial"):
            lowering_closure(ring.ring.zero, 2, 2)

        z = ring.variable
        with pytest.raises(ValueError, match="homogeneous"):
            lowering_closure(z(0, 0) + z(0, 0) ** 2, 2, 2)

    def test_start_spanning_several_weights(self):
        """Test z11 + z22 generates all four variables."""
        ring = get_ring(2, 2)
        z = ring.variable
        space = lowering_closure(z(0, 0) + z(1, 1), 2, 2)
        assert space.dimension == 4
        variables = [ring.to_vector(z(i, j)) for i in range(2) for j in range(2)]
        assert space == GradedSubspace.from_vectors(1, ring.monomials(1), variables)

    def test_mixed_start_reaches_both_components(self):
        """Test det + z11^2 generates the determinant and the nine quadrics of z11^2."""
        ring = get_ring(2, 2)
        z = ring.variable
        space = lowering_closure(ring.from_vector(DETERMINANT) + z(0, 0) ** 2, 2, 2)
        assert space.dimension == 10
        assert space.contains(DETERMINANT)
        assert space.contains(PERMANENT)

    @pytest.mark.parametrize(
        "a, b, m, n",
        [
            (a, b, m, n)
            for m, n in [(1, 1), (2, 1), (2, 2), (3, 2)]
            for a in range(1, min(m, n) + 1)
            for b in range(1, 4)
        ],
    )
    def test_dimension_is_product_of_schur_dimensions(self, a, b, m, n):
        """Test the closure spans S_(b^a) C^m (x) S_(b^a) C^n."""
        rectangle = Partition.rectangle(a, b)
        space = lowering_closure(highest_weight_generator(a, b, m, n), m, n)
        assert space.dimension == schur_dim(rectangle, m) * schur_dim(rectangle, n)

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 4) for b in range(1, 4)])
    def test_dimension_on_three_by_three(self, a, b):
        rectangle = Partition.rectangle(a, b)
        space = lowering_closure(highest_weight_generator(a, b, 3, 3), 3, 3)
        assert space.dimension == schur_dim(rectangle, 3) ** 2
