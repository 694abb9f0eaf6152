"""
pystringc: Construct, verify and classify string C-groups of permutation groups.

This module implements the command-line front end.

Inputs are a `.graph` DSL file, a `.sggi` text file, `-` for standard input, or `catalog:<id>` for a bundled
catalog entry. Exit code is 0 on success, 1 on a parse, validity or catalog error (or a failed verification) and
2 when a verdict is indeterminate because a resource cap was reached.

:see: https://github.com/hunyadi/pystringc
"""

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from strong_typing.schema import classdef_to_schema

from . import __version__
from .base import Config, OutputFormat, dump_json
from .catalog.registry import CatalogEntry, find_entries, get_entry, instantiate
from .catalog.verification import INDETERMINATE, verify_entries
from .classify.search import ClassificationError, ClassificationRecord, enumerate_string_cgroups, rerun_with_single_worker, sigma
from .extend import rd_extend, rd_guard, sesqui_extend
from .fracture import SplitRecord, find_splits, fracture_graph, two_fracture_graph
from .graph.exchange import export_dot, is_graph_dsl, parse_dsl, print_dsl, read_sggi, sggi_text
from .graph.representation import PermRepGraph, graph_of
from .group.perm_group import GroupKind, identify
from .model.permutation import Permutation
from .sggi.core import Sggi, dual, schlafli
from .sggi.verdict import Verdict, Witness, is_string_cgroup

LOGGER = logging.getLogger("pystringc")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INDETERMINATE = 2

CATALOG_PREFIX = "catalog:"


@dataclass(frozen=True)
class VerifyRecord:
    """
    JSON form of the `verify` report.

    :param degree: Number of points.
    :param rank: Number of generators.
    :param schlafli: Schläfli type; empty below rank 2.
    :param group: Short name of the group.
    :param order: Group order.
    :param kind: Symmetric, alternating or other, on the moved points.
    :param transitive: Whether the group is transitive.
    :param primitive: Whether a transitive group is primitive.
    :param verdict: String C-group verdict.
    :param witness: Index sets violating the intersection property, for a false verdict.
    :param splits: Splits of every label, with perfect flags.
    :param fracture: Whether the sggi admits a fracture graph.
    :param two_fracture: Whether the sggi admits a 2-fracture graph.
    :param config: Configuration the checks ran with.
    """

    degree: int
    rank: int
    schlafli: list[int]
    group: str
    order: int
    kind: GroupKind
    transitive: bool
    primitive: Optional[bool]
    verdict: Verdict
    witness: Optional[Witness]
    splits: list[SplitRecord]
    fracture: bool
    two_fracture: bool
    config: Config


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _catalog_entry(source: str) -> Optional[CatalogEntry]:
    if source.startswith(CATALOG_PREFIX):
        return instantiate(source[len(CATALOG_PREFIX):])
    return None


def read_input(source: str) -> Sggi:
    "Reads an sggi from a catalog identifier, a file or standard input."

    entry = _catalog_entry(source)
    if entry is not None:
        return entry.sggi()
    return read_sggi(_read_text(source))


def read_graph(source: str) -> PermRepGraph:
    "Reads a permutation representation graph; sggi text is converted to its graph."

    entry = _catalog_entry(source)
    if entry is not None:
        return entry.graph
    text = _read_text(source)
    if is_graph_dsl(text):
        return parse_dsl(text).validate()
    return graph_of(read_sggi(text))


def _group_name(gamma: Sggi, kind: GroupKind, name: str, order: int) -> str:
    if gamma.rank == 2 and kind is GroupKind.OTHER and order > 4:
        return f"D_{order // 2}"
    return name


def verify_record(gamma: Sggi, config: Config) -> VerifyRecord:
    identity = identify(gamma.group)
    verdict = is_string_cgroup(gamma, config=config)
    return VerifyRecord(
        degree=gamma.degree,
        rank=gamma.rank,
        schlafli=list(schlafli(gamma)) if gamma.rank >= 2 else [],
        group=_group_name(gamma, identity.kind, str(identity), identity.order),
        order=identity.order,
        kind=identity.kind,
        transitive=identity.transitive,
        primitive=identity.primitive,
        verdict=verdict.verdict,
        witness=verdict.witness,
        splits=[split.record() for split in find_splits(gamma)],
        fracture=fracture_graph(gamma) is not None,
        two_fracture=two_fracture_graph(gamma) is not None,
        config=config,
    )


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def print_verify(record: VerifyRecord, out: TextIO) -> None:
    print(f"sggi: valid, rank {record.rank}, degree {record.degree}", file=out)
    if record.schlafli:
        print(f"type: {{{','.join(str(p) for p in record.schlafli)}}}", file=out)
    details = ["transitive" if record.transitive else "intransitive"]
    if record.primitive is not None:
        details.append("primitive" if record.primitive else "imprimitive")
    print(f"group: {record.group} (order {record.order}, {', '.join(details)})", file=out)

    if record.witness is not None:
        print(f"string C-group: false; witness {record.witness}", file=out)
    else:
        print(f"string C-group: {record.verdict.value}", file=out)

    for split in record.splits:
        kind = "perfect" if split.perfect else "not perfect"
        print(f"split: label {split.label}, pair {{{split.pair[0]},{split.pair[1]}}}, {kind}", file=out)
    print(f"fracture graph: {_yes_no(record.fracture)}", file=out)
    print(f"2-fracture graph: {_yes_no(record.two_fracture)}", file=out)


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    gamma = read_input(args.input)
    record = verify_record(gamma, config)
    if config.output is OutputFormat.JSON:
        print(dump_json(record))
    else:
        print_verify(record, sys.stdout)
    if record.verdict is Verdict.INDETERMINATE:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, config: Config) -> int:
    result = enumerate_string_cgroups(args.degree, args.rank, config=config)
    print(dump_json(result.record()))
    if args.seed_check and not rerun_with_single_worker(result):
        LOGGER.error("single-worker rerun found different representatives")
        return EXIT_ERROR
    if not result.complete:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_sigma(args: argparse.Namespace, config: Config) -> int:
    print(sigma(args.degree, args.kappa, config=config))
    return EXIT_OK


def _emit_sggi(gamma: Sggi, config: Config) -> None:
    "Writes the sggi text form, then the graph DSL after a blank line."

    graph_dsl = print_dsl(graph_of(gamma))
    if config.output is OutputFormat.JSON:
        print(
            dump_json(
                {"degree": gamma.degree, "generators": [str(g) for g in gamma.gens], "graph_dsl": graph_dsl}
            )
        )
    else:
        sys.stdout.write(sggi_text(gamma))
        sys.stdout.write("\n")
        sys.stdout.write(graph_dsl)


def cmd_extend(args: argparse.Namespace, config: Config) -> int:
    gamma = read_input(args.input)
    if args.dual:
        _emit_sggi(dual(gamma), config)
    elif args.split is not None:
        extension = rd_extend(gamma, args.split)
        guarantee = rd_guard(gamma, args.split, report=extension.split)
        LOGGER.info(f"rank and degree extension at {extension.split}: {guarantee.value}")
        _emit_sggi(extension.result, config)
    else:
        if args.tau is None:
            raise ValueError("sesqui-extension requires --tau")
        points = [int(p) for p in re.findall(r"\d+", args.tau)]
        tau = Permutation.parse(args.tau, max([gamma.degree, *points]))
        result = sesqui_extend(gamma, args.sesqui, tau)
        LOGGER.info(f"{result.kind.value} sesqui-extension of generator {result.index}")
        _emit_sggi(result.extended, config)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace, config: Config) -> int:
    sys.stdout.write(export_dot(read_graph(args.input)))
    return EXIT_OK


def cmd_catalog_verify(args: argparse.Namespace, config: Config) -> int:
    reports = verify_entries(args.pattern, config=config, max_rank=args.max_rank)
    if config.output is OutputFormat.JSON:
        print(dump_json(reports))
    else:
        for report in reports:
            print(report)

    failed = [r for r in reports if not r.confirmed]
    if not failed:
        return EXIT_OK
    if all(c.actual == INDETERMINATE for r in failed for c in r.checks if not (c.passed or c.informational)):
        return EXIT_INDETERMINATE
    return EXIT_ERROR


def cmd_catalog_list(args: argparse.Namespace, config: Config) -> int:
    for name in find_entries(args.pattern):
        parameters = get_entry(name).parameters
        if parameters:
            print(f"{name}@{','.join(f'{p}=...' for p in parameters)}")
        else:
            print(name)
    return EXIT_OK


def cmd_schema(args: argparse.Namespace, config: Config) -> int:
    print(json.dumps(classdef_to_schema(ClassificationRecord), ensure_ascii=False, indent=4))
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, help="largest group order intersected by enumerating its elements")
    common.add_argument("--search-cap", type=int, help="largest group order searched by backtracking")
    common.add_argument("--max-degree", type=int, help="largest degree accepted by classification")
    common.add_argument("--workers", type=int, help="number of worker threads for classification")
    common.add_argument("--json", action="store_true", help="write results as JSON")
    common.add_argument("--verbose", action="store_true", help="log search internals")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="pystringc",
        description="Construct, verify and classify string C-groups of permutation groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="check validity, group and string C-group verdict")
    verify.add_argument("input", help="graph DSL or sggi text file, `-` or `catalog:<id>`")
    verify.set_defaults(handler=cmd_verify)

    classify = commands.add_parser("classify", parents=[common], help="enumerate string C-groups of S_n")
    classify.add_argument("degree", type=int)
    classify.add_argument("rank", type=int)
    classify.add_argument("--seed-check", action="store_true", help="rerun with one worker and compare")
    classify.add_argument(
        "--recheck-prunes", action="store_true", help="re-examine pruned branches on at most six points"
    )
    classify.set_defaults(handler=cmd_classify)

    sigma_ = commands.add_parser("sigma", parents=[common], help="count string C-groups of S_n of rank n-κ")
    sigma_.add_argument("degree", type=int)
    sigma_.add_argument("kappa", type=int)
    sigma_.set_defaults(handler=cmd_sigma)

    extend = commands.add_parser("extend", parents=[common], help="apply a dual, split or sesqui-extension")
    extend.add_argument("input")
    action = extend.add_mutually_exclusive_group(required=True)
    action.add_argument("--split", type=int, metavar="LABEL", help="rank and degree extension at a perfect split")
    action.add_argument("--sesqui", type=int, metavar="K", help="sesqui-extension of generator K")
    action.add_argument("--dual", action="store_true", help="reverse the generators")
    extend.add_argument("--tau", help="the extending involution in cycle notation")
    extend.set_defaults(handler=cmd_extend)

    dot = commands.add_parser("dot", parents=[common], help="export the permutation representation graph")
    dot.add_argument("input")
    dot.set_defaults(handler=cmd_export_dot)

    catalog_verify = commands.add_parser("catalog-verify", parents=[common], help="replay catalog claims")
    catalog_verify.add_argument("pattern", nargs="?", default="*", help="shell-style pattern or family instance")
    catalog_verify.add_argument("--max-rank", type=int, default=0, help="also verify family instances up to this rank")
    catalog_verify.set_defaults(handler=cmd_catalog_verify)

    catalog_list = commands.add_parser("catalog-list", parents=[common], help="list catalog entries")
    catalog_list.add_argument("pattern", nargs="?", default="*")
    catalog_list.set_defaults(handler=cmd_catalog_list)

    schema = commands.add_parser("schema", parents=[common], help="print the JSON schema of classification output")
    schema.set_defaults(handler=cmd_schema)
    return parser


_HANDLER = logging.StreamHandler()
_HANDLER.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))


def _configure_logging(verbose: bool) -> None:
    _HANDLER.setStream(sys.stderr)
    if _HANDLER not in LOGGER.handlers:
        LOGGER.addHandler(_HANDLER)
    LOGGER.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    try:
        config = Config.from_environment().replace(
            intersection_cap=args.cap,
            search_cap=args.search_cap,
            max_degree=args.max_degree,
            workers=args.workers,
            output=OutputFormat.JSON if args.json else None,
            recheck_prunes=True if getattr(args, "recheck_prunes", False) else None,
        )
        return args.handler(args, config)
    except (ValueError, ClassificationError, OSError) as e:
        LOGGER.error(str(e))
        return EXIT_ERROR
