import asyncio
import logging
import pathlib
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .bench import bench_uniform, resolution_for
from .constants import CHAIN_BASES, FINEST_BASE
from .correspondence import build_correspondence_map, default_axes, project_all
from .env import Env
from .errors import AxisRangeError, GridexError
from .grid_search import GridIndex, build_index, nearest
from .io import (
    load_cloud,
    load_matrix,
    place_markers,
    query_line,
    render,
    write_bench,
    write_chain,
    write_coordinates,
    write_factor_map,
    write_histogram,
    write_partitions,
    write_text,
)
from .madic_chain import build_chain, chain_histogram
from .models import (
    BenchRow,
    CoarseningChain,
    DataMatrix,
    FactorMap,
    GridHistogram,
    OverlapReport,
    PipelineConfig,
    RenderMode,
    RenderSpec,
    RunStatus,
    StageRun,
    SupplementaryPoint,
    SupplementaryProfile,
    UnitCloud,
)
from .pixel_grid import build_cloud, build_histogram, overlap_report
from .stage import Stage
from .util import TimeParser

logger = logging.getLogger(__name__)


class StageFailed(GridexError):
    def __init__(self, run: StageRun) -> None:
        super().__init__(run.error)
        self.run = run


class PipelineRunner:
    """Runs pipeline stages one after another and keeps their StageRun records.

    Stages compute on a single worker thread and hand their results back to
    the event loop, which writes the artifacts once a stage has completed.
    The first failed stage stops the pipeline.
    """

    def __init__(
        self,
        config: PipelineConfig,
        env: Env | None = None,
    ) -> None:
        if env is None:
            env = Env()

        self.config = config
        self.env = env
        self.runs: List[StageRun] = []

        self._timeout = TimeParser(env.GRIDEX_STAGE_TIMEOUT).time
        self._executor = ThreadPoolExecutor(max_workers=1)
        self._semaphore = asyncio.Semaphore(value=1)

        self.matrix: Optional[DataMatrix] = None
        self.profiles: List[SupplementaryProfile] = []
        self.factor_map: Optional[FactorMap] = None
        self.supplementary: List[SupplementaryPoint] = []
        self.cloud: Optional[UnitCloud] = None
        self.histogram: Optional[GridHistogram] = None
        self.chain: Optional[CoarseningChain] = None
        self.index: Optional[GridIndex] = None

    @property
    def out_dir(self) -> pathlib.Path:
        return self.config.out_dir

    @property
    def failed(self) -> bool:
        return any(run.status == RunStatus.FAILED for run in self.runs)

    @property
    def timed_out(self) -> bool:
        return any(run.timed_out for run in self.runs)

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0

    async def _stage(self, name: str, call: Callable[..., Any], *args, **kwargs) -> Any:
        stage = Stage(
            name,
            call,
            self._executor,
            self._semaphore,
            timeout=self._timeout,
        )

        logger.info("stage %s started", name)
        run = await stage.execute(*args, **kwargs)
        self.runs.append(run)

        if run.timed_out:
            # the timed-out worker keeps running; never join it
            self.shutdown()

        if run.failed:
            logger.error(run.error)
            logger.debug(run.trace)
            raise StageFailed(run)

        logger.info("stage %s finished in %.3fs", name, run.elapsed)
        return run.result

    def _render_spec(self, hist: GridHistogram, mode: RenderMode) -> RenderSpec:
        return RenderSpec(
            mode=mode,
            annotation=self.config.annotation,
            markers=place_markers(hist, self.cloud, self.supplementary),
        )

    def _load(self) -> Tuple[DataMatrix, List[SupplementaryProfile]]:
        if self.config.input is None:
            raise GridexError("no input file given")

        return load_matrix(
            self.config.input,
            self.config.sup_rows,
            self.config.sup_cols,
        )

    def _ca(
        self,
        matrix: DataMatrix,
        profiles: List[SupplementaryProfile],
    ) -> Tuple[FactorMap, List[SupplementaryPoint]]:
        k = self.config.axes if self.config.axes is not None else default_axes(matrix)
        if max(self.config.pair) > k:
            raise AxisRangeError(f"factor pair {self.config.pair} exceeds retained axes {k}")

        factor_map = build_correspondence_map(matrix, k)
        return factor_map, project_all(factor_map, profiles)

    def _grid(self, factor_map: FactorMap) -> Tuple[UnitCloud, GridHistogram, OverlapReport]:
        cloud = build_cloud(factor_map, self.config.pair_index, self.config.cloud)
        histogram = build_histogram(cloud, FINEST_BASE)
        return cloud, histogram, overlap_report(cloud, histogram)

    def _chain(self, histogram: GridHistogram, cloud: UnitCloud) -> CoarseningChain:
        return build_chain(histogram, cloud, self.config.merge_rule)

    def _resolution(self, cloud: UnitCloud) -> int:
        if self.config.resolution is not None:
            return self.config.resolution

        return resolution_for(cloud.n, self.config.occupancy)

    def _index(self, cloud: UnitCloud) -> GridIndex:
        return build_index(cloud, self._resolution(cloud))

    def _query(self, points: Sequence[Tuple[float, float]], exclude: Optional[str]) -> List[str]:
        cloud = load_cloud(
            self.out_dir / "coords.csv",
            self.config.pair_index,
            self.config.cloud,
        )
        index = build_index(cloud, self._resolution(cloud))
        return [query_line(point, nearest(index, point, exclude=exclude)) for point in points]

    def _bench(self) -> List[BenchRow]:
        return bench_uniform(
            self.config.bench_n,
            float(self.config.occupancy),
            self.config.bench_queries,
            self.config.seed,
            distribution=self.config.distribution,
            timing=self.config.bench_timing,
        )

    async def run_ca(self) -> List[StageRun]:
        self.matrix, self.profiles = await self._stage("load", self._load)
        self.factor_map, self.supplementary = await self._stage(
            "ca",
            self._ca,
            self.matrix,
            self.profiles,
        )

        write_coordinates(self.out_dir / "coords.csv", self.factor_map, self.supplementary)
        write_factor_map(self.out_dir / "ca.json", self.factor_map)
        return self.runs

    async def run_grid(self) -> List[StageRun]:
        await self.run_ca()
        self.cloud, self.histogram, report = await self._stage("grid", self._grid, self.factor_map)

        text = self._render_spec(self.histogram, RenderMode.TEXT)
        svg = self._render_spec(self.histogram, RenderMode.SVG)
        write_histogram(self.out_dir / "hist.json", self.histogram, report)
        write_text(self.out_dir / "grid.txt", render(self.histogram, text))
        write_text(self.out_dir / "grid.svg", render(self.histogram, svg))
        return self.runs

    async def run_chain(self) -> List[StageRun]:
        await self.run_grid()
        self.chain = await self._stage("chain", self._chain, self.histogram, self.cloud)

        write_chain(self.out_dir / "chain.json", self.chain)
        write_partitions(self.out_dir / "partitions.csv", self.chain)
        for base in CHAIN_BASES[1:]:
            level = chain_histogram(self.chain, self.cloud, base)
            write_text(
                self.out_dir / "levels" / f"grid_{base}.txt",
                render(level, self._render_spec(level, RenderMode.TEXT)),
            )

        return self.runs

    async def run_pipeline(self) -> List[StageRun]:
        await self.run_chain()
        self.index = await self._stage("index", self._index, self.cloud)
        return self.runs

    async def run_query(
        self,
        points: Sequence[Tuple[float, float]],
        exclude: Optional[str] = None,
    ) -> List[str]:
        lines = await self._stage("query", self._query, points, exclude)
        write_text(self.out_dir / "queries.jsonl", "".join(f"{line}\n" for line in lines))
        return lines

    async def run_bench(self) -> pathlib.Path:
        rows = await self._stage("bench", self._bench)
        return write_bench(self.out_dir / "bench.csv", rows)

    def shutdown(self):
        try:
            self._executor.shutdown(wait=not self.timed_out, cancel_futures=True)

        except Exception:
            pass


async def run_pipeline(config: PipelineConfig, env: Env | None = None) -> Tuple[int, List[StageRun]]:
    """Run load through index and write every artifact; returns (exit status, stage runs)."""
    runner = PipelineRunner(config, env=env)
    try:
        await runner.run_pipeline()

    except StageFailed:
        pass

    finally:
        runner.shutdown()

    return runner.exit_status, runner.runs


def stage_summary(runs: Sequence[StageRun]) -> Dict[str, str]:
    return {run.stage: run.status.value for run in runs}
