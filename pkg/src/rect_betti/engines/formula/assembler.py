from typing import Dict, Tuple

from ...logging import get_logger
from ...rep_ring import BettiTable, EquivariantPolynomial, evaluate_dimensions
from ..base.engine import BettiEngine, BettiWindow
from .strands import h_rect, multiplicity_poly


class FormulaAssembler:
    """Assembles B_{a x b}(z, w) = sum_q h_{(a+q) x (b+q)} * M^q_{a x b}(w)."""

    class StrandCollision(AssertionError):
        def __init__(self, q: int, other_q: int, labels):
            self.q = q
            self.other_q = other_q
            self.labels = labels
            super().__init__(
                f"Strands q={q} and q={other_q} share {len(labels)} labels"
            )

    def __init__(self, a: int, b: int, m: int, n: int):
        if a < 1 or b < 1:
            raise BettiEngine.InvalidShape(
                f"a and b must be positive, got a={a}, b={b}", a=a, b=b, m=m, n=n
            )
        if m < n:
            raise BettiEngine.InvalidShape(
                f"FormulaAssembler expects m >= n, got m={m}, n={n}", a=a, b=b, m=m, n=n
            )
        if a > n:
            raise BettiEngine.InvalidShape(
                f"a={a} exceeds n={n}; the ideal is zero", a=a, b=b, m=m, n=n
            )
        self.a, self.b, self.m, self.n = a, b, m, n

    def build_strands(self) -> Dict[int, EquivariantPolynomial]:
        strands = {}
        for q in range(self.n - self.a + 1):
            h = h_rect(self.a + q, self.b + q, self.m, self.n)
            strands[q] = h.times_w_polynomial(multiplicity_poly(self.a, self.b, q))
        self._check_disjoint(strands)
        return strands

    def _check_disjoint(self, strands: Dict[int, EquivariantPolynomial]):
        seen = {}
        for q, strand in strands.items():
            labels = strand.labels()
            for other_q, other_labels in seen.items():
                shared = labels & other_labels
                if shared:
                    raise self.StrandCollision(q, other_q, shared)
            seen[q] = labels

    def build_polynomial(self) -> EquivariantPolynomial:
        total = EquivariantPolynomial()
        for strand in self.build_strands().values():
            total = total + strand
        return total


def _oriented(m: int, n: int) -> Tuple[int, int, bool]:
    """Return (m, n, swapped) with m >= n."""
    if m < n:
        get_logger().info(
            f"m={m} < n={n}: computing with m and n swapped and transposing labels"
        )
        return n, m, True
    return m, n, False


def betti_polynomial_by_strand(
    a: int, b: int, m: int, n: int
) -> Dict[int, EquivariantPolynomial]:
    """The summand of each strand q of the equivariant Betti polynomial."""
    m, n, swapped = _oriented(m, n)
    strands = FormulaAssembler(a, b, m, n).build_strands()
    if swapped:
        strands = {q: strand.transpose() for q, strand in strands.items()}
    return strands


def betti_polynomial(a: int, b: int, m: int, n: int) -> EquivariantPolynomial:
    """Equivariant Betti polynomial of I_{a x b} in Sym(C^m (x) C^n).

    m < n is accepted: the computation runs on (n, m) and every label is
    transposed back.
    """
    m, n, swapped = _oriented(m, n)
    polynomial = FormulaAssembler(a, b, m, n).build_polynomial()
    return polynomial.transpose() if swapped else polynomial


def proj_dim_and_reg(a: int, b: int, m: int, n: int) -> Tuple[int, int]:
    """(projective dimension, regularity) read off the numeric Betti table."""
    table = evaluate_dimensions(betti_polynomial(a, b, m, n), m, n)
    return table.projective_dimension, table.regularity


class FormulaEngine(BettiEngine):
    name = "formula"

    def __init__(self, a: int, b: int, m: int, n: int):
        super().__init__(a, b, m, n)
        if a > min(m, n):
            raise self.InvalidShape(
                f"a={a} exceeds min(m, n)={min(m, n)}", a=a, b=b, m=m, n=n
            )
        self._polynomial = None

    def equivariant_polynomial(self) -> EquivariantPolynomial:
        if self._polynomial is None:
            self._polynomial = betti_polynomial(self.a, self.b, self.m, self.n)
        return self._polynomial

    def strands(self) -> Dict[int, EquivariantPolynomial]:
        return betti_polynomial_by_strand(self.a, self.b, self.m, self.n)

    def full_table(self) -> BettiTable:
        return evaluate_dimensions(self.equivariant_polynomial(), self.m, self.n)

    def betti_table(self, window: BettiWindow) -> BettiTable:
        return self.full_table().window(window.max_i, window.max_j)
