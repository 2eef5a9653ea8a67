"""Tests for cache implementations."""

import logging
from abc import ABC
from fractions import Fraction

import pytest

from equivariant_ehrhart.arith import Polynomial, RationalSeries
from equivariant_ehrhart.cache import (
    Cache,
    FileCache,
    MemoryCache,
    series_from_json,
    series_to_json,
)
from equivariant_ehrhart.polytope import LatticePolytope

SQUARE = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
TRIANGLE = LatticePolytope([(0, 0), (1, 0), (0, 1)])
SQUARE_SERIES = RationalSeries.over([1, 1], 1, 3)


class TestCacheBase:
    """Tests for Cache abstract base class."""

    def test_is_abstract_class(self):
        assert issubclass(Cache, ABC)

    def test_cannot_instantiate_directly(self):
        with pytest.raises(TypeError):
            Cache()

    def test_key_ignores_vertex_order(self):
        cache = MemoryCache()
        reordered = LatticePolytope([(1, 1), (0, 1), (1, 0), (0, 0)])
        assert cache._make_key(SQUARE) == cache._make_key(reordered)


class TestSerialization:
    """Tests for the JSON form of cached series."""

    def test_to_json(self):
        series = RationalSeries.over([Fraction(1, 2), 1], 2, 1)
        assert series_to_json(series) == {
            "numerator": ["1/2", "1"],
            "denominator_factors": [[2, 1]],
        }

    def test_from_json(self):
        data = {"numerator": ["1", "4", "1"], "denominator_factors": [[1, 3]]}
        assert series_from_json(data).numerator == Polynomial([1, 4, 1])


class TestMemoryCache:
    """Tests for MemoryCache."""

    def test_inherits_from_cache(self):
        assert issubclass(MemoryCache, Cache)

    async def test_get_missing(self):
        cache = MemoryCache()
        assert await cache.get(SQUARE) is None

    async def test_set_and_get(self):
        cache = MemoryCache()
        await cache.set(SQUARE, SQUARE_SERIES)
        assert await cache.get(SQUARE) == SQUARE_SERIES

    async def test_different_polytope_misses(self):
        cache = MemoryCache()
        await cache.set(SQUARE, SQUARE_SERIES)
        assert await cache.get(TRIANGLE) is None


class TestFileCache:
    """Tests for FileCache."""

    def test_inherits_from_cache(self):
        assert issubclass(FileCache, Cache)

    def test_creates_directory(self, tmp_path):
        FileCache(str(tmp_path / "nested" / "cache"))
        assert (tmp_path / "nested" / "cache").is_dir()

    async def test_set_and_get(self, tmp_path):
        cache = FileCache(str(tmp_path))
        await cache.set(SQUARE, SQUARE_SERIES)
        assert await cache.get(SQUARE) == SQUARE_SERIES

    async def test_persists_across_instances(self, tmp_path):
        await FileCache(str(tmp_path)).set(SQUARE, SQUARE_SERIES)
        result = await FileCache(str(tmp_path)).get(SQUARE)
        assert result.numerator == Polynomial([1, 1])
        assert result.denominator_factors == ((1, 3),)

    async def test_get_missing(self, tmp_path):
        assert await FileCache(str(tmp_path)).get(TRIANGLE) is None

    async def test_corrupt_file(self, tmp_path, caplog):
        cache = FileCache(str(tmp_path))
        await cache.set(SQUARE, SQUARE_SERIES)
        for path in tmp_path.glob("*.json"):
            path.write_text("{not json", encoding="utf-8")
        with caplog.at_level(logging.WARNING):
            assert await cache.get(SQUARE) is None
        assert "Failed to load cache file" in caplog.text
