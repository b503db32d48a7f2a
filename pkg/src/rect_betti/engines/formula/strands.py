"""
Building blocks of the closed formula: the strand polynomials h_{r x s},
the terms and homology of the linear complexes X^{r x s}, and the
multiplicity polynomials attached to each strand.
"""

from dataclasses import dataclass
from typing import List

from ...partitions import (
    Partition,
    count_in_rectangle,
    enumerate_in_rectangle,
    lambda_rect,
)
from ...polynomials import IntPolynomial, gauss_polynomial
from ...rep_ring import EquivariantPolynomial, SchurLabel


@dataclass(frozen=True)
class HomologySummand:
    """multiplicity copies of the ideal I_{rect_r x rect_s}."""

    rect_r: int
    rect_s: int
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("Homology summands carry a positive multiplicity")


def strand_label(r: int, s: int, alpha: Partition, beta: Partition) -> SchurLabel:
    """S_{lambda(r,s;alpha,beta)} (x) S_{lambda(r,s;beta',alpha')}."""
    return SchurLabel(
        lambda_rect(r, s, alpha, beta),
        lambda_rect(r, s, beta.conjugate(), alpha.conjugate()),
    )


def h_rect(r: int, s: int, m: int, n: int) -> EquivariantPolynomial:
    """h_{r x s}: generators of the terms of X^{r x s}(C^m, C^n).

    alpha runs over the min(r,s) x (n-r) box, beta over the (m-r) x min(r,s)
    box; each pair contributes one class in z^{rs+|alpha|+|beta|} w^{|alpha|+|beta|}.
    """
    if m < n:
        raise ValueError(f"h_rect expects m >= n, got m={m}, n={n}")
    polynomial = EquivariantPolynomial()
    if r > n:
        return polynomial

    k = min(r, s)
    betas = enumerate_in_rectangle(m - r, k)
    for alpha in enumerate_in_rectangle(k, n - r):
        for beta in betas:
            size = alpha.size + beta.size
            polynomial.add_term(strand_label(r, s, alpha, beta), r * s + size, size)
    return polynomial


def x_terms(r: int, s: int, m: int, n: int, i: int) -> List[SchurLabel]:
    """Generator labels of X^{r x s}_i(C^m, C^n)."""
    if r > min(m, n):
        return []
    k = min(r, s)
    if i > k * (m + n - 2 * r):
        return []

    labels = []
    for alpha_size in range(i + 1):
        # alpha_1 <= n - r, alpha'_1 <= min(r,s); beta_1 <= min(r,s), beta'_1 <= m - r
        alphas = [p for p in enumerate_in_rectangle(k, n - r) if p.size == alpha_size]
        betas = [
            p for p in enumerate_in_rectangle(m - r, k) if p.size == i - alpha_size
        ]
        for alpha in alphas:
            for beta in betas:
                labels.append(strand_label(r, s, alpha, beta))
    return sorted(labels, key=SchurLabel.sort_key)


def x_homology(r: int, s: int, m: int, n: int, k: int) -> List[HomologySummand]:
    """H_k(X^{r x s}) as a list of rectangular ideals with multiplicities.

    Odd homology vanishes; H_{2j} is the sum over q <= j of
    P(q, min(r,s)-1; j-q) copies of I_{(r+q) x (s+q)}, dropping the ideals
    that are zero on C^m (x) C^n.
    """
    if k % 2 == 1:
        return []
    j = k // 2
    summands = []
    for q in range(j + 1):
        if r + q > min(m, n):
            break
        multiplicity = count_in_rectangle(q, min(r, s) - 1, j - q)
        if multiplicity:
            summands.append(HomologySummand(r + q, s + q, multiplicity))
    return summands


def multiplicity_poly(a: int, b: int, q: int) -> IntPolynomial:
    """M^q_{a x b}(w) = w^{q^2+2q} * [q+min(a,b)-1 choose q]_{w^2}."""
    return gauss_polynomial(q, min(a, b) - 1).substitute_power(2).shift(q * q + 2 * q)
