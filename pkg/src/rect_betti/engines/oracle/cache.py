import json
import os
import tempfile
from pathlib import Path
from typing import Dict, Optional, Tuple

from pydantic import ValidationError

from ...logging import get_logger
from ...schema import BettiEntrySchema, CacheFileSchema, HilbertValueSchema


class ResultCache:
    """Advisory on-disk store of oracle results for one (a, b, m, n).

    A missing or unreadable file behaves like an empty cache. Files are
    written with sorted keys so equal contents give identical bytes.
    """

    def __init__(self, directory, a: int, b: int, m: int, n: int):
        self.directory = Path(directory)
        self.a, self.b, self.m, self.n = a, b, m, n
        self._betti: Dict[Tuple[int, int], int] = {}
        self._hilbert: Dict[int, int] = {}
        self._dirty = False
        self.load()

    @property
    def path(self) -> Path:
        return self.directory / f"betti_a{self.a}_b{self.b}_m{self.m}_n{self.n}.json"

    def load(self):
        if not self.path.exists():
            return
        try:
            content = CacheFileSchema.model_validate_json(self.path.read_text())
        except (OSError, ValidationError) as e:
            get_logger().warning(f"Ignoring unreadable cache file {self.path}: {e}")
            return
        if (content.a, content.b, content.m, content.n) != (self.a, self.b, self.m, self.n):
            get_logger().warning(f"Ignoring cache file {self.path} for another shape")
            return
        self._betti = {(e.i, e.j): e.value for e in content.betti}
        self._hilbert = {h.degree: h.value for h in content.hilbert}
        get_logger().info(
            f"Loaded {len(self._betti)} Betti entries from cache {self.path}"
        )

    def get_betti(self, i: int, j: int) -> Optional[int]:
        return self._betti.get((i, j))

    def put_betti(self, i: int, j: int, value: int):
        if self._betti.get((i, j)) != value:
            self._betti[(i, j)] = value
            self._dirty = True

    def get_hilbert(self, degree: int) -> Optional[int]:
        return self._hilbert.get(degree)

    def put_hilbert(self, degree: int, value: int):
        if self._hilbert.get(degree) != value:
            self._hilbert[degree] = value
            self._dirty = True

    def to_schema(self) -> CacheFileSchema:
        return CacheFileSchema(
            a=self.a,
            b=self.b,
            m=self.m,
            n=self.n,
            hilbert=[
                HilbertValueSchema(degree=d, value=v)
                for d, v in sorted(self._hilbert.items())
            ],
            betti=[
                BettiEntrySchema(i=i, j=j, value=v)
                for (i, j), v in sorted(self._betti.items())
            ],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_schema().model_dump(), sort_keys=True, indent=2) + "\n"

    def save(self):
        if not self._dirty:
            return
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, temp_path = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as handle:
                handle.write(self.dumps())
            os.replace(temp_path, self.path)
        except OSError as e:
            get_logger().warning(f"Could not write cache file {self.path}: {e}")
            return
        self._dirty = False
        get_logger().info(f"Saved {len(self._betti)} Betti entries to cache {self.path}")
