# Copyright 2026 The me2c developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

import csv
import dataclasses
import logging
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from me2c.coloring import EdgeColoring, Violation, check_feasible
from me2c.config import Config
from me2c.errors import Me2cError
from me2c.generators import generate
from me2c.graph import Graph
from me2c.normalize import NormalizeStats, Normalizer, Strategy
from me2c.oracle import check_budget, exact_opt
from me2c.pipeline import Solution, solve_full
from me2c.rewrite import RewriteLog
from me2c.strategies import StrategyMetadata, get_strategy


logger = logging.getLogger(__name__)


#: The first line of every benchmark CSV.
BENCH_HEADER = "# me2c-bench v1"

#: The benchmark CSV columns.
BENCH_COLUMNS = (
    "instance", "n", "m", "strategy", "achieved", "bound", "bound_kind", "ratio",
    "opt", "true_ratio", "seconds", "mod1", "mod2", "mod3", "mod4", "mod5",
    "d2_plus", "d2_minus", "failed",
)  # fmt: skip


def _fraction(x: Optional[Fraction]) -> str:
    if x is None:
        return ""
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RunReport:
    """The outcome of one solve.

    Parameters:
        instance (str): The instance name, usually the file path.
        n (int): Vertices of the input graph.
        m (int): Edges of the input graph.
        strategy (str): The strategy that ran.
        achieved (int): Colors in the solution.
        bound (int): The certified upper bound.
        bound_kind (str): Where the bound comes from.
        ratio (~fractions.Fraction): ``bound / achieved``.
        seconds (float): Wall time of the solve.
        counts (Dict[str, int]): Modification counts.
        d2_plus (Optional[int]): Perfect-matching strategy only.
        d2_minus (Optional[int]): Perfect-matching strategy only.
        opt (Optional[int]): The exact optimum, when it was computed.
        failed (bool): True if certification failed.
    """

    instance: str
    n: int
    m: int
    strategy: str
    achieved: int
    bound: int
    bound_kind: str
    ratio: Fraction
    seconds: float = 0.0
    counts: Dict[str, int] = field(default_factory=dict)
    d2_plus: Optional[int] = None
    d2_minus: Optional[int] = None
    opt: Optional[int] = None
    failed: bool = False

    @property
    def true_ratio(self) -> Optional[Fraction]:
        """``opt / achieved``, when the optimum is known."""
        if self.opt is None:
            return None
        if self.achieved == 0:
            return Fraction(1)
        return Fraction(self.opt, self.achieved)

    @classmethod
    def from_solution(cls, instance: str, g: Graph, sol: Solution, seconds: float) -> RunReport:
        cert = sol.certificate
        pm = sol.stats.strategy is Strategy.PERFECT_MATCHING
        return cls(
            instance=instance,
            n=g.n,
            m=g.m,
            strategy=cert.strategy,
            achieved=cert.achieved,
            bound=cert.bound.bound,
            bound_kind=cert.bound_kind,
            ratio=cert.ratio,
            seconds=seconds,
            counts=dict(sol.stats.counts),
            d2_plus=sol.stats.d2_plus if pm else None,
            d2_minus=sol.stats.d2_minus if pm else None,
            failed=cert.failed,
        )

    @classmethod
    def failure(cls, instance: str, g: Optional[Graph], strategy: str) -> RunReport:
        """A report for a run that raised before producing a solution."""
        return cls(
            instance=instance,
            n=g.n if g is not None else 0,
            m=g.m if g is not None else 0,
            strategy=strategy,
            achieved=0,
            bound=0,
            bound_kind="-",
            ratio=Fraction(1),
            failed=True,
        )

    def to_text(self) -> str:
        """Serialize as a key-value block.

        The wall time is left out so that reruns produce identical text.
        """

        def opt(x) -> str:
            return "-" if x is None else str(x)

        lines = [
            f"instance {self.instance}",
            f"n {self.n}",
            f"m {self.m}",
            f"strategy {self.strategy}",
            f"achieved {self.achieved}",
            f"bound {self.bound}",
            f"bound_kind {self.bound_kind}",
            f"ratio {_fraction(self.ratio)}",
        ]
        lines += [f"{tag} {self.counts.get(tag, 0)}" for tag in ("mod1", "mod2", "mod3", "mod4", "mod5")]
        lines += [
            f"d2_plus {opt(self.d2_plus)}",
            f"d2_minus {opt(self.d2_minus)}",
            f"failed {int(self.failed)}",
        ]
        return "\n".join(lines) + "\n"

    def csv_row(self) -> List[str]:
        """The benchmark CSV row, in :data:`BENCH_COLUMNS` order."""

        def opt(x) -> str:
            return "" if x is None else str(x)

        return [
            self.instance,
            str(self.n),
            str(self.m),
            self.strategy,
            str(self.achieved),
            str(self.bound),
            self.bound_kind,
            _fraction(self.ratio),
            opt(self.opt),
            _fraction(self.true_ratio),
            f"{self.seconds:.3f}",
            *(str(self.counts.get(tag, 0)) for tag in ("mod1", "mod2", "mod3", "mod4", "mod5")),
            opt(self.d2_plus),
            opt(self.d2_minus),
            str(int(self.failed)),
        ]


def _bench_one(job: Tuple[str, Optional[str], Optional[int], Config]) -> RunReport:
    path, strategy, budget, config = job
    return Solver(config).bench_instance(Path(path), strategy, budget)


class Solver:
    """The primary high-level API for me2c.

    Every command of the CLI is a thin wrapper around one method.

    Parameters:
        config (Optional[Config]): The run settings. Defaults apply if None.

    Raises:
        TypeError:
            There was a type error in the config.
        ValueError:
            There was a value error in the config.
    """

    config: Config  #: The run settings.

    def __init__(self, config: Optional[Config] = None) -> None:
        """Initialize the facade."""
        if config is None:
            config = Config.empty()
        config.validate()
        self.config = config

    def load(self, path: Path) -> Graph:
        """Read a graph file."""
        logger.info(f"LOAD {path}")
        return Graph.from_path(path)

    def strategy(self, g: Graph, name: Optional[str] = None) -> StrategyMetadata:
        """Look up a strategy and resolve it against ``g``.

        Raises:
            PreconditionError: Unknown strategy or unsuitable graph.
        """
        meta = get_strategy(name or self.config.strategy).resolve(g)
        logger.debug(f"strategy {meta.name}: pipeline={meta.pipeline} ratio<={meta.ratio_limit}")
        return meta

    def solve(
        self,
        g: Graph,
        strategy: Optional[str] = None,
        instance: str = "<graph>",
        normalize: bool = True,
    ) -> Tuple[Solution, RunReport]:
        """Color ``g`` and certify the result.

        The certificate is not validated here, so a failed certificate still
        yields a report. Callers check ``report.failed`` or call
        ``solution.certificate.validate()``.

        Arguments:
            g (Graph):
                The graph.
            strategy (Optional[str]):
                A strategy name. Defaults to the configured one.
            instance (str):
                A name for logs and reports.
            normalize (bool):
                If False, skip normalization and color ``g`` directly.

        Returns:
            Tuple[Solution, RunReport]:
                The solution and its report.
        """
        meta = self.strategy(g, strategy)
        logger.info(f"SOLVE {instance} strategy={meta.name}")
        start = time.perf_counter()
        sol = solve_full(
            g,
            meta.normalization(),
            normalize_first=normalize,
            step_limit_factor=self.config.step_limit_factor,
            name=meta.name if normalize else None,
        )
        seconds = time.perf_counter() - start
        report = RunReport.from_solution(instance, g, sol, seconds)

        cert = sol.certificate
        ratio = _fraction(cert.ratio)
        logger.info(f"CERTIFY {instance} achieved={cert.achieved} bound={cert.bound.bound} ratio={ratio}")
        if cert.failed:
            logger.error(f"certification failed for {instance}")
        elif normalize and not cert.within(meta.ratio_limit):
            logger.warning(f"certified ratio {ratio} exceeds {_fraction(meta.ratio_limit)}")
        return sol, report

    def normalize(self, g: Graph, strategy: Optional[str] = None) -> Tuple[Graph, RewriteLog, NormalizeStats]:
        """Normalize ``g`` with the pipeline of ``strategy``."""
        meta = self.strategy(g, strategy)
        logger.info(f"NORMALIZE strategy={meta.name} n={g.n} m={g.m}")
        return Normalizer(g, meta.normalization(), self.config.step_limit_factor).run()

    def exact(self, g: Graph, budget: Optional[int] = None) -> Tuple[EdgeColoring, int]:
        """Solve ``g`` exactly.

        Raises:
            BudgetExceededError: ``g`` has too many edges for the budget.
        """
        budget = self.config.oracle_budget if budget is None else budget
        logger.info(f"EXACT n={g.n} m={g.m} budget={budget}")
        return exact_opt(g, budget)

    def verify(self, g: Graph, chi: EdgeColoring) -> Optional[Violation]:
        """Check a coloring. Returns the first violation, or None."""
        logger.info(f"VERIFY n={g.n} m={g.m} colors={chi.count}")
        return check_feasible(g, chi)

    def generate(self, family: str, params: Sequence, seed: Optional[int] = None) -> Graph:
        """Build a graph of a generator family."""
        logger.info(f"GEN {family} {' '.join(str(p) for p in params)} seed={seed}")
        return generate(family, *params, seed=seed)

    def bench_instance(self, path: Path, strategy: Optional[str] = None, budget: Optional[int] = None) -> RunReport:
        """Solve one file and, within the budget, compare with the optimum.

        Errors raised by the library become a failed report.
        """
        name = strategy or self.config.strategy
        budget = self.config.oracle_budget if budget is None else budget
        g: Optional[Graph] = None
        try:
            g = self.load(path)
            sol, report = self.solve(g, name, instance=str(path))
        except Me2cError as e:
            logger.warning(f"{path}: {e}")
            return RunReport.failure(str(path), g, name)

        try:
            check_budget(g.m, budget)
        except Me2cError:
            return report
        _, opt = exact_opt(g, budget)
        return dataclasses.replace(report, opt=opt)

    def bench(
        self,
        paths: Sequence[Path],
        strategy: Optional[str] = None,
        budget: Optional[int] = None,
    ) -> List[RunReport]:
        """Run :meth:`bench_instance` on every path, in input order."""
        workers = self.config.bench_workers
        logger.info(f"BENCH {len(paths)} instances workers={workers}")
        if workers <= 1:
            return [self.bench_instance(p, strategy, budget) for p in paths]
        jobs = [(str(p), strategy, budget, self.config) for p in paths]
        with Pool(workers) as pool:
            return pool.map(_bench_one, jobs)

    def print_graph(self, g: Graph, file=sys.stdout, flush=False):
        """Print a graph in the edge-list format."""
        print(g.to_text(), end="", file=file)
        if flush:
            file.flush()

    def print_coloring(self, g: Graph, chi: EdgeColoring, file=sys.stdout, flush=False):
        """Print a coloring in the coloring format."""
        print(chi.to_text(g), end="", file=file)
        if flush:
            file.flush()

    def print_report(self, report: RunReport, file=sys.stdout, flush=False):
        """Print a run report as key-value lines."""
        print(report.to_text(), end="", file=file)
        if flush:
            file.flush()

    def print_trace(self, log: RewriteLog, file=sys.stdout, flush=False):
        """Print a rewrite log, one step per line."""
        print(log.to_trace(), end="", file=file)
        if flush:
            file.flush()

    def print_bench(self, reports: Sequence[RunReport], file=sys.stdout, flush=False):
        """Print benchmark reports as a versioned CSV."""
        print(BENCH_HEADER, file=file)
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for report in reports:
            writer.writerow(report.csv_row())
        if flush:
            file.flush()
