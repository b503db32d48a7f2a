from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple


class IntPolynomial:
    """Polynomial in one variable w with integer coefficients.

    Stored as a sparse exponent -> coefficient map without zero entries.
    Instances are treated as immutable values.
    """

    variable = "w"

    def __init__(self, coefficients: Mapping[int, int] = None):
        cleaned = {}
        for exponent, coefficient in (coefficients or {}).items():
            if exponent < 0:
                raise ValueError(f"Negative exponent {exponent}")
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        self._coefficients: Dict[int, int] = dict(sorted(cleaned.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls({0: 1})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coefficients)

    def coefficient(self, exponent: int) -> int:
        return self._coefficients.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._coefficients, default=-1)

    @property
    def low_degree(self) -> int:
        return min(self._coefficients, default=-1)

    def is_zero(self) -> bool:
        return not self._coefficients

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._coefficients.items())

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        result = dict(self._coefficients)
        for exponent, coefficient in other.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return IntPolynomial(result)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        result = {}
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(result)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by w^k."""
        return IntPolynomial({e + k: c for e, c in self.items()})

    def substitute_power(self, k: int) -> "IntPolynomial":
        """Replace w by w^k."""
        return IntPolynomial({e * k: c for e, c in self.items()})

    def evaluate(self, value: int) -> int:
        return sum(c * value**e for e, c in self.items())

    def is_palindromic(self) -> bool:
        if self.is_zero():
            return True
        top, bottom = self.degree, self.low_degree
        return all(
            self.coefficient(e) == self.coefficient(top + bottom - e)
            for e in range(bottom, top + 1)
        )

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(tuple(self._coefficients.items()))

    def __repr__(self):
        return f"IntPolynomial({self._coefficients})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for exponent, coefficient in self.items():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = self.variable if exponent == 1 else f"{self.variable}^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            sign = "-" if coefficient < 0 else "+"
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def gauss_polynomial(r: int, s: int) -> IntPolynomial:
    """Gaussian binomial [r+s choose r]_w.

    The coefficient of w^i counts partitions of i inside the r x s rectangle.
    Built with the q-Pascal rule
    [r+s choose r] = [r+s-1 choose r-1] + w^r [r+s-1 choose r].
    """
    if r < 0 or s < 0:
        raise ValueError(f"Rectangle sides must be nonnegative, got {r}x{s}")
    if r == 0 or s == 0:
        return IntPolynomial.one()
    return gauss_polynomial(r - 1, s) + gauss_polynomial(r, s - 1).shift(r)
