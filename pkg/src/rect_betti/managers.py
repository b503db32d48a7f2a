from typing import Optional

from . import errors
from .contexts import ResultContext
from .engines.base.engine import BettiEngine, BettiWindow
from .engines.formula.assembler import FormulaAssembler, FormulaEngine
from .engines.oracle.cache import ResultCache
from .engines.oracle.koszul import KoszulEngine
from .logging import get_logger
from .rep_ring import max_internal_degree
from .schema import JobSpec


class JobManager:
    """Runs a JobSpec through the requested engines and collects the tables."""

    class InvalidMode(Exception):
        def __init__(self, mode: str):
            self.mode = mode
            super().__init__(f"Invalid mode: {mode}")

    class ProcessingError(Exception):
        def __init__(self, mode: str, command_error: errors.CommandError):
            self.mode = mode
            self.command_error = command_error
            super().__init__(f"Error processing {mode} job: {command_error.message}")

    class Mode:
        formula = "formula"
        oracle = "oracle"
        compare = "compare"

    def __init__(self, spec: JobSpec):
        self.spec = spec
        self._formula: Optional[FormulaEngine] = None

    def _shape_data(self) -> dict:
        return {"a": self.spec.a, "b": self.spec.b, "m": self.spec.m, "n": self.spec.n}

    def _get_formula_engine(self) -> FormulaEngine:
        if self._formula is None:
            spec = self.spec
            self._formula = FormulaEngine(spec.a, spec.b, spec.m, spec.n)
        return self._formula

    def _get_oracle_engine(self) -> KoszulEngine:
        spec = self.spec
        cache = None
        if spec.cache_dir:
            cache = ResultCache(spec.cache_dir, spec.a, spec.b, spec.m, spec.n)
        return KoszulEngine(
            spec.a,
            spec.b,
            spec.m,
            spec.n,
            cell_budget=spec.cell_budget,
            workers=spec.workers,
            cache=cache,
        )

    def default_window(self) -> BettiWindow:
        """i <= mn - 1 and j one past the largest internal degree of the formula."""
        spec = self.spec
        max_i = spec.max_i if spec.max_i is not None else spec.m * spec.n - 1
        max_j = spec.max_j
        if max_j is None:
            top = max_internal_degree(self._get_formula_engine().equivariant_polynomial())
            max_j = (top if top is not None else spec.a * spec.b) + 1
        return BettiWindow(max_i, max_j)

    def _process_formula_job(self, context: ResultContext):
        try:
            engine = self._get_formula_engine()
            table = engine.betti_table(context.window)
            polynomial = engine.equivariant_polynomial() if self.spec.equivariant else None
            if self.spec.equivariant:
                context.strands = engine.strands()
        except Exception as e:
            data = dict(self._shape_data(), error=str(e))
            if isinstance(e, BettiEngine.InvalidShape):
                error = errors.InvalidJob("Invalid shape for the formula", data)
            elif isinstance(e, FormulaAssembler.StrandCollision):
                error = errors.InternalError(e, "Strands of the formula overlap")
            else:
                raise e
            raise self.ProcessingError(self.Mode.formula, error) from e
        context.add_context(FormulaEngine.name, table, polynomial)

    def _process_oracle_job(self, context: ResultContext):
        try:
            table = self._get_oracle_engine().betti_table(context.window)
        except Exception as e:
            data = dict(self._shape_data(), error=str(e))
            if isinstance(e, KoszulEngine.ResourceBudgetExceeded):
                data.update(i=e.i, j=e.j)
                error = errors.ResourceBudgetExceeded(e.cells, e.budget, data)
            elif isinstance(e, BettiEngine.InvalidShape):
                error = errors.InvalidJob("Invalid shape for the oracle", data)
            else:
                raise e
            raise self.ProcessingError(self.Mode.oracle, error) from e
        context.add_context(KoszulEngine.name, table)

    def _process_compare_job(self, context: ResultContext):
        self._process_formula_job(context)
        self._process_oracle_job(context)
        differences = context.diff()
        if differences:
            get_logger().warning(
                f"Formula and oracle differ in {len(differences)} entries"
            )

    def _get_processor_mapping(self):
        return {
            self.Mode.formula: self._process_formula_job,
            self.Mode.oracle: self._process_oracle_job,
            self.Mode.compare: self._process_compare_job,
        }

    def run(self) -> ResultContext:
        """Compute the job; domain failures surface as ProcessingError."""
        processor_mapping = self._get_processor_mapping()
        if self.spec.mode not in processor_mapping:
            raise self.InvalidMode(self.spec.mode)

        spec = self.spec
        get_logger().info(
            f"Starting {spec.mode} job for I_{{{spec.a}x{spec.b}}} on {spec.m}x{spec.n}"
        )
        try:
            context = ResultContext(spec, self.default_window())
            processor_mapping[spec.mode](context)
        except self.ProcessingError:
            raise
        except Exception as e:
            get_logger().exception(f"Unexpected error in {spec.mode} job")
            raise self.ProcessingError(spec.mode, errors.InternalError(e)) from e
        get_logger().info(f"Finished {spec.mode} job")
        return context
