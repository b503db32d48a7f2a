from typing import List, Optional, Tuple

from .engines.base.engine import BettiWindow
from .rep_ring import BettiTable, EquivariantPolynomial
from .schema import BettiEntrySchema, JobSpec


class ResultEntry:
    def __init__(
        self,
        engine: str,
        table: BettiTable,
        polynomial: Optional[EquivariantPolynomial] = None,
    ):
        self.engine = engine
        self.table = table
        self.polynomial = polynomial

        self.data = self._build_data()

    def _build_data(self) -> List[dict]:
        return [
            BettiEntrySchema(i=i, j=j, value=value).model_dump()
            for (i, j), value in self.table.items()
        ]


class ResultContext:
    """Tables produced for one job, in the order the engines ran."""

    def __init__(self, spec: JobSpec, window: BettiWindow):
        self.spec = spec
        self.window = window
        self.history: List[ResultEntry] = []
        self.strands = None

    def add_context(
        self,
        engine: str,
        table: BettiTable,
        polynomial: Optional[EquivariantPolynomial] = None,
    ):
        self.history.append(ResultEntry(engine, table, polynomial))

    def get(self, engine: str) -> Optional[ResultEntry]:
        for entry in self.history:
            if entry.engine == engine:
                return entry
        return None

    def diff(self) -> List[Tuple[int, int, int, int]]:
        """(i, j, formula, oracle) for every cell of the window where they differ."""
        formula = self.get("formula")
        oracle = self.get("oracle")
        if formula is None or oracle is None:
            return []
        return formula.table.diff(oracle.table)

    @property
    def is_match(self) -> bool:
        return not self.diff()
