import os
from typing import Mapping, Optional

from pydantic import BaseModel, Field

DEFAULT_CELL_BUDGET = 50_000_000


class Settings(BaseModel):
    """Runtime settings read from BETTI_* environment variables."""

    cache_dir: Optional[str] = None
    cell_budget: int = Field(default=DEFAULT_CELL_BUDGET, ge=1)
    workers: int = Field(default=1, ge=1)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        environ = os.environ if environ is None else environ
        values = {}
        if environ.get("BETTI_CACHE_DIR"):
            values["cache_dir"] = environ["BETTI_CACHE_DIR"]
        if environ.get("BETTI_CELL_BUDGET"):
            values["cell_budget"] = environ["BETTI_CELL_BUDGET"]
        if environ.get("BETTI_WORKERS"):
            values["workers"] = environ["BETTI_WORKERS"]
        return cls.model_validate(values)

    def merged(self, **overrides) -> "Settings":
        """Copy with every override that is not None applied."""
        updates = {key: value for key, value in overrides.items() if value is not None}
        return self.model_validate({**self.model_dump(), **updates})
