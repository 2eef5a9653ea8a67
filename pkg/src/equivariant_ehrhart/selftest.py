"""Known-answer checks that run in a few seconds.

Each check builds a small example, computes it and compares against values
worked out by hand.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from equivariant_ehrhart.arith.polynomial import Polynomial
from equivariant_ehrhart.certificates import (
    composition_of_orbit_polytope,
    odd_rectangle_obstruction,
    sufficient_certificate,
)
from equivariant_ehrhart.equivariant import equivariant_series, hstar
from equivariant_ehrhart.errors import EhrhartError
from equivariant_ehrhart.groups.characters import (
    ClassFunction,
    character_table_cyclic,
    character_table_elementary2,
)
from equivariant_ehrhart.halfopen import (
    IntervalPartition,
    Triangulation,
    ee_via_orbits,
    hstar_via_permrep,
)
from equivariant_ehrhart.hypersimplex import hstar_character_dosp, hstar_character_formula
from equivariant_ehrhart.polytope.ehrhart import ehrhart_series
from equivariant_ehrhart.special import (
    cube_rotation_action,
    permutahedron,
    permutahedron_action,
    prime_permutahedron_report,
)
from equivariant_ehrhart.zonotope import (
    Graph,
    fixed_zonotope_quasipolynomial,
    path_graph_effectiveness,
    zonotope_ehrhart,
)

logger = logging.getLogger(__name__)

# Pi_3: the invariant triangle on the odd permutations plus three unimodular ears
PI3_PERMREP_SIMPLICES = (
    ((2, 1, 3), (1, 3, 2), (3, 2, 1)),
    ((1, 2, 3), (2, 1, 3), (1, 3, 2)),
    ((2, 3, 1), (1, 3, 2), (3, 2, 1)),
    ((3, 1, 2), (3, 2, 1), (2, 1, 3)),
)
PI3_PERMREP_INTERVALS = (
    ((), PI3_PERMREP_SIMPLICES[0]),
    (((1, 2, 3),), PI3_PERMREP_SIMPLICES[1]),
    (((2, 3, 1),), PI3_PERMREP_SIMPLICES[2]),
    (((3, 1, 2),), PI3_PERMREP_SIMPLICES[3]),
)

# Pi_3: six triangles around the barycenter g = (2, 2, 2)
_A, _B, _C = (1, 2, 3), (2, 1, 3), (1, 3, 2)
_D, _E, _F = (2, 3, 1), (3, 1, 2), (3, 2, 1)
_G = (2, 2, 2)
PI3_BARYCENTRIC_SIMPLICES = (
    (_A, _B, _G), (_B, _E, _G), (_A, _C, _G), (_C, _D, _G), (_E, _F, _G), (_D, _F, _G),
)
PI3_BARYCENTRIC_INTERVALS = (
    ((), (_G,)),
    ((_A,), (_A, _B, _G)),
    ((_B,), (_B, _E, _G)),
    ((_C,), (_A, _C, _G)),
    ((_D,), (_C, _D, _G)),
    ((_E,), (_E, _F, _G)),
    ((_F,), (_D, _F, _G)),
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one known-answer check.

    Attributes:
        name: Check name
        passed: Whether the computed value matched
        detail: What was compared, or the error raised
    """
    name: str
    passed: bool
    detail: str


def pi3_permrep_decomposition():
    polytope = permutahedron(3)
    return (
        Triangulation.of(polytope, PI3_PERMREP_SIMPLICES),
        IntervalPartition.of(PI3_PERMREP_INTERVALS),
    )


def pi3_barycentric_decomposition():
    polytope = permutahedron(3)
    return (
        Triangulation.of(polytope, PI3_BARYCENTRIC_SIMPLICES),
        IntervalPartition.of(PI3_BARYCENTRIC_INTERVALS),
    )


def _class_functions(group, rows) -> Polynomial:
    return Polynomial(ClassFunction(group, row) for row in rows)


def _compare(expected, observed) -> tuple[bool, str]:
    return expected == observed, f"expected {expected!r}, got {observed!r}"


def check_pi3_ehrhart():
    return _compare(Polynomial([1, 4, 1]), ehrhart_series(permutahedron(3)).numerator)


def check_pi3_hstar():
    action = permutahedron_action(3)
    report = hstar(equivariant_series(action), character_table_cyclic(3, action.group))
    expected = _class_functions(action.group, [[1, 1, 1], [4, 1, 1], [1, 1, 1]])
    ok, detail = _compare(expected, report.polynomial)
    return ok and report.is_effective is True, detail


def check_pi3_permrep():
    action = permutahedron_action(3)
    triangulation, parts = pi3_permrep_decomposition()
    result = hstar_via_permrep(triangulation, parts, action)
    return _compare(_class_functions(action.group, [[1, 1, 1], [4, 1, 1], [1, 1, 1]]), result.hstar)


def check_pi3_orbit_series():
    action = permutahedron_action(3)
    triangulation, parts = pi3_barycentric_decomposition()
    result = ee_via_orbits(triangulation, parts, action)
    numerator = _class_functions(action.group, [[1, 1, 1], [4, -2, -2], [1, 1, 1]])
    chi = _class_functions(action.group, [[1, 1, 1], [3, 0, 0], [3, 0, 0]])
    ok1, detail1 = _compare(numerator, result.numerator)
    ok2, detail2 = _compare(chi, result.chi_tP)
    return ok1 and ok2, f"{detail1}; {detail2}"


def check_cube():
    action = cube_rotation_action()
    table = character_table_elementary2(2, action.group)
    report = hstar(equivariant_series(action), table)
    expected = _class_functions(action.group, [[1, 1, 1, 1], [4, 0, 0, 0], [1, 1, 1, 1]])
    ok, detail = _compare(expected, report.polynomial)
    verdict = sufficient_certificate(action)
    return ok and report.is_effective is True and verdict.kind == "inconclusive", \
        f"{detail}; certificate {verdict.kind}"


def check_hypersimplex():
    formula = hstar_character_formula(2, 4, 2)
    winding = [chi.degree for chi in hstar_character_dosp(2, 4)]
    ok1, detail1 = _compare(Polynomial([1, 2, 1]), formula)
    ok2, detail2 = _compare([1, 2, 1, 0], winding)
    return ok1 and ok2, f"{detail1}; {detail2}"


def check_prime_permutahedra():
    observed = {p: prime_permutahedron_report(p).hstar for p in (3, 5)}
    return _compare({3: (1, 4, 1), 5: (1, 286, 1636, 1026, 51)}, observed)


def check_path_zonotope():
    quasi = fixed_zonotope_quasipolynomial(Graph.path(4), [3, 2, 1, 0])
    return _compare((Polynomial([1, 1]), Polynomial()), tuple(quasi.constituents))


def check_stanley():
    generators = [(1, -1, 0), (1, 0, -1), (0, 1, -1)]
    return _compare(Polynomial([1, 3, 3]), zonotope_ehrhart(generators))


def check_path_effectiveness():
    observed = {n: path_graph_effectiveness(n).is_effective for n in (3, 5, 7)}
    return _compare({3: True, 5: True, 7: True}, observed)


def check_odd_rectangle():
    verdict = odd_rectangle_obstruction(composition_of_orbit_polytope((1, 2, 3, 4)))
    return verdict.kind == "not-exists", f"verdict {verdict.kind}, witness {verdict.witness}"


KNOWN_ANSWERS: tuple[tuple[str, Callable[[], tuple[bool, str]]], ...] = (
    ("pi3-ehrhart", check_pi3_ehrhart),
    ("pi3-hstar", check_pi3_hstar),
    ("pi3-permrep", check_pi3_permrep),
    ("pi3-orbit-series", check_pi3_orbit_series),
    ("cube-half-turns", check_cube),
    ("hypersimplex-2-4", check_hypersimplex),
    ("prime-permutahedra", check_prime_permutahedra),
    ("path-zonotope-4", check_path_zonotope),
    ("stanley-k3", check_stanley),
    ("path-effectiveness", check_path_effectiveness),
    ("odd-rectangle-pi4", check_odd_rectangle),
)


def run_selftest(names: list[str] | None = None) -> list[CheckResult]:
    """Run the known-answer checks, all of them by default.

    Raises:
        ValueError: If a requested name is unknown
    """
    known = dict(KNOWN_ANSWERS)
    selected = names or list(known)
    unknown = [n for n in selected if n not in known]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for name in selected:
        try:
            passed, detail = known[name]()
        except EhrhartError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        logger.debug("Check %s: %s", name, "pass" if passed else "FAIL")
        results.append(CheckResult(name, passed, detail))
    return results


__all__ = [
    "CheckResult",
    "KNOWN_ANSWERS",
    "PI3_BARYCENTRIC_INTERVALS",
    "PI3_BARYCENTRIC_SIMPLICES",
    "PI3_PERMREP_INTERVALS",
    "PI3_PERMREP_SIMPLICES",
    "pi3_barycentric_decomposition",
    "pi3_permrep_decomposition",
    "run_selftest",
]
