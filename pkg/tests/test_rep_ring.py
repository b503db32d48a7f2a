import pytest
from math import comb

from rect_betti.partitions import EMPTY, Partition, partitions_of
from rect_betti.polynomials import IntPolynomial
from rect_betti.rep_ring import (
    BettiTable,
    EquivariantPolynomial,
    SchurLabel,
    cauchy_degree,
    compositions,
    evaluate_dimensions,
    evaluate_weight,
    kostka,
    polynomial_ring_dimension,
    schur_dim,
    sum_of_kostka,
)


def label(row, col):
    return SchurLabel(Partition(row), Partition(col))


class TestSchurDim:
    def test_examples(self):
        assert schur_dim(Partition((3, 3)), 2) == 1
        assert schur_dim(Partition((2,)), 2) == 3
        assert schur_dim(Partition((2, 1)), 3) == 8
        assert schur_dim(Partition((1, 1, 1)), 2) == 0
        assert schur_dim(EMPTY, 4) == 1

    @pytest.mark.parametrize("n", range(1, 5))
    def test_determinant_powers_are_one_dimensional(self, n):
        for b in range(5):
            assert schur_dim(Partition((b,) * n), n) == 1

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_kostka_sum(self, n):
        """Test dim S_lambda C^n equals the number of SSYT with entries <= n."""
        for size in range(7):
            for partition in partitions_of(size):
                assert schur_dim(partition, n) == sum_of_kostka(partition, n)

    @pytest.mark.parametrize("m", range(1, 4))
    @pytest.mark.parametrize("n", range(1, 4))
    def test_cauchy_identity(self, m, n):
        """Test sum over Cauchy labels of the dimensions is dim S_d."""
        for d in range(7):
            total = sum(label.dimension(m, n) for label in cauchy_degree(m, n, d))
            assert total == comb(m * n + d - 1, d)
            assert total == polynomial_ring_dimension(m * n, d)


class TestKostka:
    def test_examples(self):
        assert kostka(Partition((2, 1)), (1, 1, 1)) == 2
        assert kostka(Partition((2, 1)), (2, 1)) == 1
        assert kostka(Partition((2, 1)), (1, 2)) == 1
        assert kostka(Partition((2,)), (1, 1)) == 1
        assert kostka(Partition((1, 1)), (2, 0)) == 0
        assert kostka(Partition((3, 1)), (2, 2)) == 1

    def test_wrong_size_is_zero(self):
        assert kostka(Partition((2, 1)), (1, 1)) == 0
        assert kostka(Partition((2,)), (3, -1)) == 0

    def test_compositions(self):
        assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
        assert list(compositions(0, 0)) == [()]
        assert len(list(compositions(3, 3))) == comb(5, 2)


class TestEquivariantPolynomial:
    def setup_method(self):
        self.polynomial = EquivariantPolynomial()
        self.polynomial.add_term(label((3,), (2, 1)), 3, 1)
        self.polynomial.add_term(label((2, 1), (3,)), 3, 1)
        self.polynomial.add_term(label((2,), (2,)), 2, 0)

    def test_terms_are_sorted(self):
        """Test terms come out by (wdeg, zdeg, label)."""
        terms = self.polynomial.terms()
        assert [(str(t[0]), t[1], t[2], t[3]) for t in terms] == [
            ("(2)x(2)", 2, 0, 1),
            ("(3)x(2,1)", 3, 1, 1),
            ("(2,1)x(3)", 3, 1, 1),
        ]
        assert len(self.polynomial) == 3

    def test_add_term_merges(self):
        self.polynomial.add_term(label((2,), (2,)), 2, 0, 2)
        assert self.polynomial.multiplicity(label((2,), (2,)), 2, 0) == 3
        self.polynomial.add_term(label((1,), (1,)), 1, 0, 0)
        assert len(self.polynomial) == 3

    def test_invalid_term(self):
        with pytest.raises(ValueError, match="Invalid term"):
            self.polynomial.add_term(label((1,), (1,)), 1, 0, -1)

    def test_transpose(self):
        transposed = self.polynomial.transpose()
        assert transposed.multiplicity(label((2,), (2,)), 2, 0) == 1
        assert transposed.labels() == self.polynomial.labels()
        assert transposed.transpose() == self.polynomial

    def test_times_w_polynomial(self):
        product = self.polynomial.times_w_polynomial(IntPolynomial({0: 1, 2: 2}))
        assert product.multiplicity(label((2,), (2,)), 2, 0) == 1
        assert product.multiplicity(label((2,), (2,)), 2, 2) == 2
        assert product == self.polynomial + self.polynomial.shift_w(2) + self.polynomial.shift_w(2)

        with pytest.raises(ValueError, match="Virtual classes"):
            self.polynomial.times_w_polynomial(IntPolynomial({0: -1}))

    def test_w_slice(self):
        assert self.polynomial.w_slice(1).labels() == {
            label((3,), (2, 1)),
            label((2, 1), (3,)),
        }

    def test_restrict(self):
        """Test restriction drops labels that vanish on the smaller spaces."""
        restricted = self.polynomial.restrict(1, 2)
        assert restricted.labels() == {label((3,), (2, 1)), label((2,), (2,))}
        assert self.polynomial.restrict(2, 2) == self.polynomial

    def test_evaluate_dimensions(self):
        table = evaluate_dimensions(self.polynomial, 2, 2)
        assert table.as_dict() == {(0, 2): 9, (1, 3): 16}

    def test_evaluate_weight(self):
        """Test weight-space dimensions through Kostka numbers."""
        table = evaluate_weight(self.polynomial, (2, 1), (2, 1))
        # K((3),(2,1)) K((2,1),(2,1)) + K((2,1),(2,1)) K((3),(2,1))
        assert table.as_dict() == {(1, 3): 2}
        assert len(evaluate_weight(self.polynomial, (2, 0), (2, 0))) == 1
        assert evaluate_weight(self.polynomial, (2, 0), (0, 2)).as_dict() == {(0, 2): 1}


class TestBettiTable:
    def setup_method(self):
        self.table = BettiTable({(0, 2): 9, (1, 3): 16, (2, 4): 9, (3, 6): 1})

    def test_zero_entries_are_skipped(self):
        table = BettiTable()
        table.add(0, 1, 0)
        assert len(table) == 0
        assert table.get(0, 1) == 0

    def test_invalid_entry(self):
        with pytest.raises(ValueError, match="Invalid Betti entry"):
            self.table.add(0, 1, -1)

    def test_invariants(self):
        assert self.table.projective_dimension == 3
        assert self.table.regularity == 3
        assert self.table.alternating_sum(4) == 9
        assert BettiTable().projective_dimension == 0

    def test_window(self):
        assert self.table.window(2, 8).as_dict() == {(0, 2): 9, (1, 3): 16, (2, 4): 9}
        assert self.table.window(5, 3).as_dict() == {(0, 2): 9, (1, 3): 16}

    def test_diff(self):
        other = BettiTable({(0, 2): 9, (1, 3): 15, (2, 4): 9, (4, 7): 2})
        assert self.table.diff(other) == [(1, 3, 16, 15), (3, 6, 1, 0), (4, 7, 0, 2)]
        assert self.table.diff(BettiTable(self.table.as_dict())) == []
