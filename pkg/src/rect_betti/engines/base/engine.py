from dataclasses import dataclass

from ...rep_ring import BettiTable, EquivariantPolynomial


@dataclass(frozen=True)
class BettiWindow:
    """Bounds i <= max_i, j <= max_j of a computed Betti table."""

    max_i: int
    max_j: int

    def __post_init__(self):
        if self.max_i < 0 or self.max_j < 0:
            raise ValueError("Window bounds must be nonnegative")

    def cells(self):
        for i in range(self.max_i + 1):
            for j in range(i, self.max_j + 1):
                yield i, j


class BettiEngine:
    """Common surface of the formula engine and the Koszul oracle."""

    name = "base"

    class InvalidShape(ValueError):
        def __init__(self, message: str, **shape):
            self.shape = shape
            super().__init__(message)

    class UnsupportedFeature(Exception):
        def __init__(self, engine: str, feature: str):
            self.engine = engine
            self.feature = feature
            super().__init__(f"Engine {engine} does not support {feature}")

    def __init__(self, a: int, b: int, m: int, n: int):
        self._validate_shape(a, b, m, n)
        self.a, self.b, self.m, self.n = a, b, m, n

    def _validate_shape(self, a: int, b: int, m: int, n: int):
        for name, value in (("a", a), ("b", b), ("m", m), ("n", n)):
            if not isinstance(value, int) or value < 1:
                raise self.InvalidShape(
                    f"{name} must be a positive integer, got {value}", a=a, b=b, m=m, n=n
                )

    @property
    def shape(self):
        return (self.a, self.b, self.m, self.n)

    def betti_table(self, window: BettiWindow) -> BettiTable:
        raise NotImplementedError("betti_table")

    def equivariant_polynomial(self) -> EquivariantPolynomial:
        raise self.UnsupportedFeature(self.name, "equivariant output")
