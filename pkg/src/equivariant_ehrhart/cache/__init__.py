"""Ehrhart series caches keyed by the canonical vertex list of a polytope."""

import json
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from pathlib import Path

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.arith.series import RationalSeries
from equivariant_ehrhart.polytope.polytope import LatticePolytope
from equivariant_ehrhart.utils import rational_string

logger = logging.getLogger(__name__)


def series_to_json(series: RationalSeries) -> dict:
    return {
        "numerator": [rational_string(c) for c in series.numerator.coeffs],
        "denominator_factors": [[a, m] for a, m in series.denominator_factors],
    }


def series_from_json(data: dict) -> RationalSeries:
    numerator = Polynomial(Fraction(c) for c in data["numerator"])
    factors = tuple((int(a), int(m)) for a, m in data["denominator_factors"])
    return RationalSeries(numerator, factors)


class Cache(ABC):
    """Abstract base class for caching Ehrhart series.

    The key is the SHA256 of the sorted vertex list, so two fixed polytopes
    with the same vertices share an entry whatever group produced them.
    """

    @abstractmethod
    async def get(self, polytope: LatticePolytope) -> RationalSeries | None:
        """Get the cached series of a polytope."""
        pass

    @abstractmethod
    async def set(self, polytope: LatticePolytope, series: RationalSeries) -> None:
        """Store the series of a polytope."""
        pass

    def _make_key(self, polytope: LatticePolytope) -> str:
        return polytope.canonical_key()[:32]


class MemoryCache(Cache):
    """In-memory cache, not persistent across runs."""

    def __init__(self) -> None:
        self._cache: dict[str, RationalSeries] = {}

    async def get(self, polytope: LatticePolytope) -> RationalSeries | None:
        return self._cache.get(self._make_key(polytope))

    async def set(self, polytope: LatticePolytope, series: RationalSeries) -> None:
        self._cache[self._make_key(polytope)] = series


class FileCache(Cache):
    """File-based cache storing one JSON document per polytope.

    Persistent across runs.
    """

    def __init__(self, cache_dir: str) -> None:
        self._cache_dir = Path(cache_dir)
        self._cache_dir.mkdir(parents=True, exist_ok=True)

    async def get(self, polytope: LatticePolytope) -> RationalSeries | None:
        cache_file = self._get_cache_file(polytope)

        if not cache_file.exists():
            return None

        try:
            with open(cache_file, "r", encoding="utf-8") as f:
                return series_from_json(json.load(f))
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as e:
            logger.warning(
                "Failed to load cache file %s: %s",
                cache_file,
                e
            )
            return None

    async def set(self, polytope: LatticePolytope, series: RationalSeries) -> None:
        cache_file = self._get_cache_file(polytope)
        with open(cache_file, "w", encoding="utf-8") as f:
            json.dump(series_to_json(series), f, indent=2, sort_keys=True)

    def _get_cache_file(self, polytope: LatticePolytope) -> Path:
        return self._cache_dir / f"{self._make_key(polytope)[:16]}.json"


__all__ = [
    "Cache",
    "MemoryCache",
    "FileCache",
    "series_to_json",
    "series_from_json",
]
