"""
Pydantic schemas for the JSON forms of Betti tables, equivariant
polynomials, cache files, error reports and CLI jobs.
"""

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .settings import DEFAULT_CELL_BUDGET


def _check_partition(value: List[int]) -> List[int]:
    if any(x < 0 for x in value):
        raise ValueError(f"Partition parts must be nonnegative: {value}")
    if any(x < y for x, y in zip(value, value[1:])):
        raise ValueError(f"Partition parts must be weakly decreasing: {value}")
    # trailing zeros are not part of the canonical form
    while value and value[-1] == 0:
        value = value[:-1]
    return value


class EquivariantTermSchema(BaseModel):
    """One term mult * [S_row C^m (x) S_col C^n] z^z w^w."""

    row: List[int]
    col: List[int]
    z: int = Field(ge=0)
    w: int = Field(ge=0)
    mult: int = Field(ge=1)

    @field_validator("row", "col")
    @classmethod
    def validate_partition(cls, value):
        return _check_partition(value)


class BettiEntrySchema(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    value: int = Field(ge=0)


class HomologySummandSchema(BaseModel):
    rect_r: int = Field(ge=1)
    rect_s: int = Field(ge=1)
    multiplicity: int = Field(ge=1)


class HilbertValueSchema(BaseModel):
    degree: int = Field(ge=0)
    value: int = Field(ge=0)


class CacheFileSchema(BaseModel):
    """Contents of one result cache file."""

    a: int
    b: int
    m: int
    n: int
    hilbert: List[HilbertValueSchema] = []
    betti: List[BettiEntrySchema] = []


class ErrorReport(BaseModel):
    code: int
    message: str
    data: Optional[Any] = None


class JobSpec(BaseModel):
    """A Betti table job as requested on the command line."""

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    mode: Literal["formula", "oracle", "compare"] = "formula"
    max_i: Optional[int] = Field(default=None, ge=0)
    max_j: Optional[int] = Field(default=None, ge=0)
    format: Literal["pretty", "json", "csv"] = "pretty"
    equivariant: bool = False
    cache_dir: Optional[str] = None
    cell_budget: int = Field(default=DEFAULT_CELL_BUDGET, ge=1)
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def validate_shape(self):
        if self.a > min(self.m, self.n):
            raise ValueError(
                f"a={self.a} exceeds min(m, n)={min(self.m, self.n)}; the ideal is zero"
            )
        if self.equivariant and self.mode == "oracle":
            raise ValueError("Equivariant output is only available from the formula")
        return self

    @property
    def is_transposed(self) -> bool:
        return self.m < self.n
