"""Command-line entry point.

Every subcommand reads JSON input files, validates all of them before any
computation starts, and writes one canonical JSON document to stdout or
``--out``. Exit codes: 0 on success, 2 for invalid input, 1 for internal
failures.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from equivariant_ehrhart.action import PolytopeAction, symmetric_table_for_action
from equivariant_ehrhart.certificates import hypersurface_verdict, orbit_polytope_action
from equivariant_ehrhart.config import ComputeConfig
from equivariant_ehrhart.equivariant import chi_tP, h_tilde, hstar, restrict_hstar
from equivariant_ehrhart.errors import EhrhartError, InvalidInput
from equivariant_ehrhart.events import log_progress
from equivariant_ehrhart.groups.characters import (
    CharacterTable,
    character_table_cyclic,
    character_table_elementary2,
)
from equivariant_ehrhart.groups.group import cyclic_group
from equivariant_ehrhart.halfopen import ee_via_orbits, hstar_via_permrep, validate_decomposition
from equivariant_ehrhart.hypersimplex import (
    enumerate_dosps,
    hstar_character_dosp,
    hstar_character_formula,
    shift_of,
)
from equivariant_ehrhart.models import PipelineResult
from equivariant_ehrhart.output import formatters
from equivariant_ehrhart.output.schemas import (
    CharacterTableInput,
    DecompositionInput,
    GraphInput,
    GroupInput,
    PolytopeInput,
    load_input,
)
from equivariant_ehrhart.output.serialization import dumps, encode_polynomial
from equivariant_ehrhart.pipeline import compute_equivariant_series
from equivariant_ehrhart.polytope.ehrhart import ehrhart_polynomial, ehrhart_quasipolynomial, ehrhart_series
from equivariant_ehrhart.selftest import run_selftest
from equivariant_ehrhart.special import prime_permutahedron_report
from equivariant_ehrhart.zonotope import (
    Graph,
    classify_polynomiality,
    fixed_zonotope_quasipolynomial,
    fixed_zonotope_series,
    fixed_zonotope_vertices,
    path_graph_effectiveness,
    zonotope_ehrhart,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2

TABLE_KINDS = ("cyclic", "symmetric", "elementary2")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equivariant-ehrhart",
        description="Exact equivariant Ehrhart theory of lattice polytopes with a finite group action",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level on stderr")
    parser.add_argument("--out", help="Write the JSON document to this file instead of stdout")
    parser.add_argument("--workers", type=int, default=1, help="Process-pool width (default: 1)")
    parser.add_argument(
        "--max-concurrent", type=int, default=8,
        help="Conjugacy classes processed concurrently (default: 8)",
    )
    parser.add_argument("--cache-dir", help="Directory of the persistent Ehrhart series cache")
    parser.add_argument("--order-cap", type=int, default=None, help="Largest accepted group order")
    parser.add_argument(
        "--truncation", type=int, default=None,
        help="Degree up to which non-polynomial H* is expanded (default: 4N(d+1))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def polytope_group(p: argparse.ArgumentParser, group: bool = True) -> None:
        p.add_argument("--polytope", required=True, help="Polytope file")
        if group:
            p.add_argument("--group", required=True, help="Group file")

    def table(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--table",
            help="cyclic:N, symmetric:N, elementary2:K, or a character-table file",
        )

    p = sub.add_parser("ehrhart", help="Ehrhart series and quasipolynomial of a polytope")
    polytope_group(p, group=False)

    p = sub.add_parser("fixed-polytopes", help="Fixed polytopes and their Ehrhart series per class")
    polytope_group(p)

    p = sub.add_parser("ee-series", help="Equivariant Ehrhart series over (1 - z^N)^(d+1)")
    polytope_group(p)
    table(p)

    p = sub.add_parser("hstar", help="H*-series with polynomiality and effectiveness")
    polytope_group(p)
    table(p)

    p = sub.add_parser("restrict", help="H*-series of the action restricted to a subgroup")
    polytope_group(p)
    p.add_argument("--subgroup", required=True, help="Group file generating the subgroup")
    table(p)

    p = sub.add_parser("chi-tp", help="chi_tP as a quasipolynomial in t")
    polytope_group(p)
    table(p)

    p = sub.add_parser("zonotope", help="Fixed graphic zonotope of a graph automorphism")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="Graph file")
    source.add_argument("--path", type=int, help="Path graph on N vertices")
    source.add_argument("--cycle", type=int, help="Cycle graph on N vertices")
    source.add_argument("--complete", type=int, help="Complete graph on N vertices")
    p.add_argument(
        "--automorphism", type=_int_list, default=None,
        help="0-based image array, e.g. 3,2,1,0 (default: identity)",
    )

    p = sub.add_parser("halfopen", help="Validate and use a half-open decomposition")
    polytope_group(p)
    p.add_argument("--decomposition", required=True, help="Decomposition file")
    p.add_argument(
        "--mode", choices=("validate", "permrep", "orbits"), default="validate",
        help="validate only, H* via box permutation characters, or EE via interval orbits",
    )

    p = sub.add_parser("hypersimplex", help="Winding-number characters of Delta(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("prime-permutahedron", help="h* of Pi_p from the forest tiling")
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("certify", help="Invariant nondegenerate hypersurface certificates")
    p.add_argument("--polytope", help="Polytope file")
    p.add_argument("--group", help="Group file")
    p.add_argument(
        "--orbit-point", type=_int_list, default=None,
        help="Generator of an S_n orbit polytope, e.g. 0,1,2,3",
    )

    p = sub.add_parser("selftest", help="Run the known-answer checks")
    p.add_argument("--check", action="append", help="Run only this check (repeatable)")
    return parser


def config_from_args(args: argparse.Namespace) -> ComputeConfig:
    values = {
        "workers": args.workers,
        "max_concurrent_classes": args.max_concurrent,
        "cache_dir": args.cache_dir,
        "truncation": args.truncation,
    }
    if args.order_cap is not None:
        values["order_cap"] = args.order_cap
    return ComputeConfig(**values)


def build_table(spec: str | None, action: PolytopeAction) -> CharacterTable | None:
    """Character table for the acting group from a --table value."""
    if spec is None:
        return None
    kind, _, arg = spec.partition(":")
    if kind in TABLE_KINDS and arg:
        try:
            size = int(arg)
        except ValueError as e:
            raise InvalidInput(f"bad table size in {spec!r}") from e
        if kind == "cyclic":
            return character_table_cyclic(size, action.group)
        if kind == "symmetric":
            return symmetric_table_for_action(action, size)
        return character_table_elementary2(size, action.group)
    return load_input(spec, CharacterTableInput).to_table(action.group)


class Job:
    """Inputs of one invocation, parsed and validated up front."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.config = config_from_args(args)
        self.polytope_input = self._load("polytope", PolytopeInput)
        self.group_input = self._load("group", GroupInput)
        self.subgroup_input = self._load("subgroup", GroupInput)
        self.decomposition_input = self._load("decomposition", DecompositionInput)
        self.graph_input = self._load("graph", GraphInput)
        table = getattr(args, "table", None)
        if table and table.partition(":")[0] not in TABLE_KINDS:
            load_input(table, CharacterTableInput)

    def _load(self, name: str, model):
        path = getattr(self.args, name, None)
        return load_input(path, model) if path else None

    def action(self) -> PolytopeAction:
        polytope = self.polytope_input.to_polytope(self.config)
        return self.group_input.bind(polytope, self.config)


def _equivariant_series(job: Job, action: PolytopeAction) -> PipelineResult:
    return compute_equivariant_series(action, job.config, on_progress=log_progress)


def _run_ehrhart(job: Job) -> dict:
    polytope = job.polytope_input.to_polytope(job.config)
    series = ehrhart_series(polytope)
    polynomial = ehrhart_polynomial(polytope) if polytope.is_lattice else None
    return formatters.to_ehrhart(polytope, series, ehrhart_quasipolynomial(polytope), polynomial)


def _run_fixed_polytopes(job: Job) -> dict:
    return formatters.to_fixed_polytopes(_equivariant_series(job, job.action()))


def _run_ee_series(job: Job) -> dict:
    action = job.action()
    table = build_table(job.args.table, action)
    report = h_tilde(_equivariant_series(job, action).series)
    return formatters.to_ee_series(report, chi_tP(report, table))


def _run_hstar(job: Job) -> dict:
    action = job.action()
    table = build_table(job.args.table, action)
    series = _equivariant_series(job, action).series
    return formatters.to_hstar(hstar(series, table, config=job.config), table)


def _run_restrict(job: Job) -> dict:
    action = job.action()
    subgroup = job.subgroup_input.bind(action.polytope, job.config).group
    sub_action = action.restrict(subgroup)
    table = build_table(job.args.table, sub_action)
    series = _equivariant_series(job, action).series
    report = restrict_hstar(series, subgroup, table, config=job.config)
    return formatters.to_hstar(report, table)


def _run_chi_tp(job: Job) -> dict:
    action = job.action()
    table = build_table(job.args.table, action)
    report = h_tilde(_equivariant_series(job, action).series)
    return formatters.to_chi(chi_tP(report, table))


def _run_zonotope(job: Job) -> dict:
    args = job.args
    if job.graph_input is not None:
        graph = job.graph_input.to_graph()
    elif args.path is not None:
        graph = Graph.path(args.path)
    elif args.cycle is not None:
        graph = Graph.cycle(args.cycle)
    else:
        graph = Graph.complete(args.complete)
    sigma = args.automorphism if args.automorphism is not None else list(range(graph.n))
    document = formatters.to_zonotope(
        graph,
        sigma,
        fixed_zonotope_vertices(graph, sigma),
        fixed_zonotope_series(graph, sigma),
        fixed_zonotope_quasipolynomial(graph, sigma),
        classify_polynomiality(graph, sigma),
    )
    edge_vectors = [
        [1 if x == u else -1 if x == v else 0 for x in range(graph.n)] for u, v in graph.edges
    ]
    document["ehrhart_polynomial"] = encode_polynomial(zonotope_ehrhart(edge_vectors))
    if args.path is not None and args.path >= 3 and args.path % 2:
        document["path_effectiveness"] = formatters.to_path_effectiveness(
            path_graph_effectiveness(args.path)
        )
    return document


def _run_halfopen(job: Job) -> dict:
    action = job.action()
    triangulation, parts = job.decomposition_input.build(action.polytope)
    document = {"validation": formatters.to_validation(validate_decomposition(triangulation, parts))}
    if job.args.mode == "permrep":
        document["permrep"] = formatters.to_permrep(hstar_via_permrep(triangulation, parts, action))
    elif job.args.mode == "orbits":
        document["orbits"] = formatters.to_orbit_series(ee_via_orbits(triangulation, parts, action))
    return document


def _run_hypersimplex(job: Job) -> dict:
    k, n = job.args.k, job.args.n
    group = cyclic_group(n)
    shifts = [shift_of(rep) for rep in group.class_representatives]
    return formatters.to_hypersimplex(
        k,
        n,
        hstar_character_dosp(k, n, group),
        [hstar_character_formula(k, n, s) for s in shifts],
        enumerate_dosps(k, n),
        shifts,
    )


def _run_prime_permutahedron(job: Job) -> dict:
    return formatters.to_prime_permutahedron(prime_permutahedron_report(job.args.p))


def _run_certify(job: Job) -> dict:
    orbit_point = job.args.orbit_point
    if job.polytope_input is not None and job.group_input is not None:
        action = job.action()
    elif orbit_point is not None:
        action = orbit_polytope_action(orbit_point)
    else:
        raise InvalidInput("certify needs --polytope and --group, or --orbit-point")
    return formatters.to_certificate(hypersurface_verdict(action, orbit_point, job.config))


def _run_selftest(job: Job) -> dict:
    results = run_selftest(job.args.check)
    return {
        "passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }


COMMANDS = {
    "ehrhart": _run_ehrhart,
    "fixed-polytopes": _run_fixed_polytopes,
    "ee-series": _run_ee_series,
    "hstar": _run_hstar,
    "restrict": _run_restrict,
    "chi-tp": _run_chi_tp,
    "zonotope": _run_zonotope,
    "halfopen": _run_halfopen,
    "hypersimplex": _run_hypersimplex,
    "prime-permutahedron": _run_prime_permutahedron,
    "certify": _run_certify,
    "selftest": _run_selftest,
}


def _report_error(report: dict) -> None:
    sys.stderr.write(json.dumps(report, sort_keys=True, indent=2, default=str) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        job = Job(args)
        document = COMMANDS[args.command](job)
    except ValidationError as e:
        _report_error({
            "error": "ValidationError",
            "message": "input file does not match its schema",
            "details": {"errors": e.errors(include_url=False)},
        })
        return EXIT_INVALID
    except EhrhartError as e:
        _report_error(e.to_dict())
        return EXIT_INTERNAL if e.internal else EXIT_INVALID
    except ValueError as e:
        _report_error({"error": "ValueError", "message": str(e), "details": {}})
        return EXIT_INVALID

    text = dumps(document)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.command == "selftest" and not document["passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "build_table", "config_from_args", "run", "main"]
