"""Async orchestration of the per-class Ehrhart computations."""

import asyncio
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from fractions import Fraction
from typing import Callable

from equivariant_ehrhart.action import PolytopeAction
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.cache import Cache, FileCache
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.equivariant import EquivariantSeries
from equivariant_ehrhart.events import EventType, ProgressEvent
from equivariant_ehrhart.groups.group import images
from equivariant_ehrhart.models import ClassResult, PipelineResult, Statistics
from equivariant_ehrhart.polytope.ehrhart import ehrhart_series
from equivariant_ehrhart.polytope.polytope import LatticePolytope

logger = logging.getLogger(__name__)


def _series_of_vertices(vertices: list[tuple[Fraction, ...]], face_dim_limit: int) -> RationalSeries:
    return ehrhart_series(LatticePolytope(vertices, face_dim_limit=face_dim_limit))


class EquivariantEhrhartPipeline:
    """Computes Ehr(P^g; z) for every conjugacy class of an action.

    Classes run concurrently under a semaphore. With ``workers > 1`` the
    lattice counting happens in a process pool; results never depend on the
    width.

    Attributes:
        config: Computation settings
        cache: Optional series cache; a FileCache is created from
            ``config.cache_dir`` when none is given
        on_progress: Optional progress callback function
    """

    def __init__(
        self,
        config: ComputeConfig | None = None,
        cache: Cache | None = None,
        on_progress: Callable[[ProgressEvent], None] | None = None,
    ) -> None:
        self.config = config or ComputeConfig()
        if cache is None and self.config.cache_dir:
            cache = FileCache(self.config.cache_dir)
        self.cache = cache
        self.on_progress = on_progress

        self._semaphore = asyncio.Semaphore(self.config.max_concurrent_classes)
        self._cache_hits = 0
        self._computed = 0
        self._completed = 0

    async def run(self, action: PolytopeAction) -> PipelineResult:
        """Compute the equivariant Ehrhart series of an action."""
        start_time = time.time()
        self._cache_hits = 0
        self._computed = 0
        self._completed = 0
        group = action.group
        total = len(group.conjugacy_classes)
        logger.info("Pipeline start: %d classes, group order %d", total, group.order)

        executor: Executor | None = None
        if self.config.workers > 1:
            executor = ProcessPoolExecutor(max_workers=self.config.workers)
        try:
            tasks = [
                self._run_class(action, index, rep, total, executor)
                for index, rep in enumerate(group.class_representatives)
            ]
            classes = await asyncio.gather(*tasks)
        finally:
            if executor is not None:
                executor.shutdown()

        statistics = Statistics(
            total_classes=total,
            computed=self._computed,
            cache_hits=self._cache_hits,
            elapsed_time=time.time() - start_time,
        )
        logger.info(
            "Pipeline end: %d classes in %.2fs (%d cache hits)",
            total, statistics.elapsed_time, statistics.cache_hits,
        )
        self._emit_progress(EventType.PIPELINE_END, "Pipeline complete", total, total, None)
        series = EquivariantSeries(action, tuple(c.series for c in classes))
        return PipelineResult(series=series, classes=list(classes), statistics=statistics)

    async def _run_class(
        self,
        action: PolytopeAction,
        index: int,
        rep,
        total: int,
        executor: Executor | None,
    ) -> ClassResult:
        async with self._semaphore:
            self._emit_progress(
                EventType.CLASS_START, f"Starting class {index}", self._completed, total,
                {"class": index},
            )
            fixed = action.fixed_polytope(rep).polytope
            series, cached = await self._series_with_cache(fixed, executor)
            self._completed += 1
            logger.debug("Class %d done (fixed dim %d, cached=%s)", index, fixed.dim, cached)
            self._emit_progress(
                EventType.CLASS_END, f"Class {index} complete", self._completed, total,
                {"class": index, "fixed_dim": fixed.dim, "cached": cached},
            )
        return ClassResult(index, images(rep), fixed.vertices, fixed.dim, series, cached)

    async def _series_with_cache(
        self, polytope: LatticePolytope, executor: Executor | None
    ) -> tuple[RationalSeries, bool]:
        if self.cache:
            cached = await self.cache.get(polytope)
            if cached is not None:
                self._cache_hits += 1
                return cached, True

        if executor is None:
            series = ehrhart_series(polytope)
        else:
            loop = asyncio.get_running_loop()
            series = await loop.run_in_executor(
                executor, _series_of_vertices, list(polytope.vertices), polytope.face_dim_limit
            )
        self._computed += 1

        if self.cache:
            await self.cache.set(polytope, series)
        return series, False

    def _emit_progress(
        self,
        event_type: EventType,
        message: str,
        completed: int,
        total: int,
        data: dict | None
    ) -> None:
        if self.on_progress:
            self.on_progress(ProgressEvent(
                type=event_type,
                message=message,
                completed=completed,
                total=total,
                data=data,
            ))


def compute_equivariant_series(
    action: PolytopeAction,
    config: ComputeConfig | None = None,
    cache: Cache | None = None,
    on_progress: Callable[[ProgressEvent], None] | None = None,
) -> PipelineResult:
    """Blocking wrapper around EquivariantEhrhartPipeline.run."""
    return asyncio.run(EquivariantEhrhartPipeline(config, cache, on_progress).run(action))


__all__ = ["EquivariantEhrhartPipeline", "compute_equivariant_series"]
