from collections import defaultdict
from typing import Callable, Dict, List, Tuple

from sympy.polys.matrices import DomainMatrix

from ...logging import get_logger
from .ring import SparseVector, VariableRing, WeightVector, get_ring, vector_weight
from .subspace import GradedSubspace


class ShapeTooLarge(ValueError):
    def __init__(self, a: int, m: int, n: int):
        self.a, self.m, self.n = a, m, n
        super().__init__(f"a={a} exceeds min(m, n)={min(m, n)}")


def highest_weight_generator(a: int, b: int, m: int, n: int):
    """(det of the leading a x a block of Z)^b as a sympy polynomial."""
    if a > min(m, n):
        raise ShapeTooLarge(a, m, n)
    if a < 1 or b < 1:
        raise ValueError(f"a and b must be positive, got a={a}, b={b}")
    ring = get_ring(m, n)
    domain = ring.ring.to_domain()
    block = DomainMatrix(
        [[domain.convert(ring.variable(i, j)) for j in range(a)] for i in range(a)],
        (a, a),
        domain,
    )
    return block.det() ** b


def _operators(ring: VariableRing) -> List[Callable]:
    """E^row_{p,q}: g -> sum_j z_pj dg/dz_qj and E^col_{p,q}: g -> sum_i z_ip dg/dz_iq."""
    operators = []

    def row_operator(p, q):
        def apply(g):
            return sum(
                (ring.variable(p, j) * g.diff(ring.variable(q, j)) for j in range(ring.n)),
                ring.ring.zero,
            )

        return apply

    def col_operator(p, q):
        def apply(g):
            return sum(
                (ring.variable(i, p) * g.diff(ring.variable(i, q)) for i in range(ring.m)),
                ring.ring.zero,
            )

        return apply

    for p in range(ring.m):
        for q in range(ring.m):
            if p != q:
                operators.append(row_operator(p, q))
    for p in range(ring.n):
        for q in range(ring.n):
            if p != q:
                operators.append(col_operator(p, q))
    return operators


def _homogeneous_start(ring: VariableRing, f) -> Tuple[SparseVector, int]:
    start = ring.to_vector(f)
    if not start:
        raise ValueError("Cannot close the zero polynomial")
    degrees = {sum(monomial) for monomial in start}
    if len(degrees) != 1:
        raise ValueError("Start polynomial must be homogeneous")
    return start, degrees.pop()


def closure_by_weight(f, m: int, n: int) -> Dict[WeightVector, GradedSubspace]:
    """Weight spaces of the smallest subspace containing f closed under E_{p,q}, p != q.

    f must be a torus weight vector; each operator sends weight vectors to
    weight vectors, so the closure is tracked one weight space at a time.
    A weight space is revisited only when its dimension grew, and the
    search stops after a sweep in which no dimension grew.
    """
    ring = get_ring(m, n)
    start, degree = _homogeneous_start(ring, f)
    operators = _operators(ring)
    spaces: Dict[WeightVector, GradedSubspace] = {}
    pending: Dict[WeightVector, List[SparseVector]] = {vector_weight(ring, start): [start]}
    sweep = 0
    while pending:
        sweep += 1
        grown = []
        for weight in sorted(pending, key=lambda w: (w.row, w.col), reverse=True):
            old = spaces.get(weight)
            candidates = (old.vectors() if old else []) + pending[weight]
            new = GradedSubspace.from_vectors(
                degree, ring.monomials_of_weight(weight), candidates, weight
            )
            if old is None or new.dimension > old.dimension:
                spaces[weight] = new
                grown.append(weight)

        pending = defaultdict(list)
        for weight in grown:
            for vector in spaces[weight].vectors():
                g = ring.from_vector(vector)
                for operator in operators:
                    image = operator(g)
                    if image:
                        image_vector = ring.to_vector(image)
                        pending[vector_weight(ring, image_vector)].append(image_vector)
        get_logger().debug(
            f"Closure sweep {sweep}: {len(grown)} weight spaces grew, "
            f"total dimension {sum(s.dimension for s in spaces.values())}"
        )
    return spaces


def _closure_in_degree(ring: VariableRing, start: SparseVector, degree: int) -> GradedSubspace:
    """Closure inside the whole degree-d space, for starts mixing several weights."""
    columns = ring.monomials(degree)
    operators = _operators(ring)
    space = GradedSubspace.from_vectors(degree, columns, [start])
    frontier = space.vectors()
    while frontier:
        images = []
        for vector in frontier:
            g = ring.from_vector(vector)
            for operator in operators:
                image = operator(g)
                if image:
                    images.append(ring.to_vector(image))
        grown = GradedSubspace.from_vectors(degree, columns, space.vectors() + images)
        if grown.dimension == space.dimension:
            break
        space = grown
        frontier = space.vectors()
        get_logger().debug(f"Degree {degree} closure has dimension {space.dimension}")
    return space


def lowering_closure(f, m: int, n: int) -> GradedSubspace:
    """Span of f under the Lie algebra operators of gl_m x gl_n (p != q).

    Torus weight vectors take the weight-split path; any other homogeneous
    start is closed in the full space of its degree.
    """
    ring = get_ring(m, n)
    start, degree = _homogeneous_start(ring, f)
    if len({ring.monomial_weight(monomial) for monomial in start}) > 1:
        return _closure_in_degree(ring, start, degree)
    spaces = closure_by_weight(f, m, n)
    return GradedSubspace.direct_sum(degree, ring.monomials(degree), spaces.values())
