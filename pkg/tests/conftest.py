"""Shared fixtures for the equivariant-ehrhart test suite."""

import pytest

from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.groups.characters import character_table_cyclic
from equivariant_ehrhart.special import (
    cube_rotation_action,
    permutahedron_action,
)


@pytest.fixture
def pi3_action():
    """Pi_3 under Z/3Z rotating coordinates."""
    return permutahedron_action(3)


@pytest.fixture
def pi3_table(pi3_action):
    """Character table of the Z/3Z acting on Pi_3."""
    return character_table_cyclic(3, pi3_action.group)


@pytest.fixture
def pi4_symmetric_action():
    """Pi_4 under the full symmetric group S_4."""
    return permutahedron_action(4, symmetric=True)


@pytest.fixture
def cube_action():
    """The unit cube under the Klein four-group of half-turns."""
    return cube_rotation_action()


@pytest.fixture
def square_action():
    """[0,1]^2 under the reflection swapping the two coordinates."""
    from equivariant_ehrhart.action import bind
    from equivariant_ehrhart.polytope.polytope import LatticePolytope

    square = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    return bind(square, matrices=[[[0, 1], [1, 0]]])


@pytest.fixture
def config(tmp_path):
    """Inline configuration with an isolated cache directory."""
    return ComputeConfig(cache_dir=str(tmp_path / "cache"))
