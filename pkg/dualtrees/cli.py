"""
command line entry point: ``dualtrees construct | shell | metrics | verify |
export``. exit status 0 when every requested check passes, 1 on a library
error or a failed check, 2 on a usage error and 3 on an I/O error
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from dualtrees.complex.planar_complex import Diagram
from dualtrees.config import dualtrees_config
from dualtrees.constructions.corpus import standard_corpus
from dualtrees.constructions.delta import assemble_delta
from dualtrees.duality.dual_graph import DualGraph
from dualtrees.duality.spanning_tree import dual_tree
from dualtrees.io.diagram_file import (
    dumps,
    read_diagram,
    write_diagram,
    write_dual,
    write_record,
    write_sidecar,
)
from dualtrees.io.export import write_dot, write_svg
from dualtrees.metrics.metrics_report import metrics_report
from dualtrees.shelling.exact import exact_filling_length
from dualtrees.shelling.logarithmic import logarithmic_shelling
from dualtrees.shelling.record import ShellingRecord, replay
from dualtrees.shelling.tunnelling import tunnelling_bound, tunnelling_shelling
from dualtrees.utils.logging import setup_logger, update_logging_level
from dualtrees.verification.theorem import (
    audit_shelling,
    check_theorem,
    family_summary,
    theorem_table,
)
from dualtrees.verification.wilson import wilson_random_spanning_tree

logger = setup_logger(__name__)

COMMANDS = ("construct", "shell", "metrics", "verify", "export")
STRATEGIES = ("exact", "tunnel", "log")
STRATEGY_ALIASES = dict(tunnelling="tunnel")
FORMATS = ("json", "dot", "svg", "table")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CheckFailed(RuntimeError):
    pass


@dataclass
class RunConfig:

    command: str
    n: List[int] = field(default_factory=list)
    seed: Optional[int] = None
    strategy: str = "tunnel"
    samples: Optional[int] = None
    cap: Optional[int] = None
    state_limit: Optional[int] = None
    diagram: Optional[Path] = None
    corpus: Optional[str] = None
    output: Optional[Path] = None
    sidecar: Optional[Path] = None
    format: str = "table"
    exhaustive: bool = False
    audit: bool = False
    dual: bool = False
    workers: int = 0

    def __post_init__(self):

        self.strategy = STRATEGY_ALIASES.get(self.strategy, self.strategy)

    def validate(self) -> None:

        assert self.command in COMMANDS, f"unknown command {self.command}"
        assert self.strategy in STRATEGIES, f"unknown strategy {self.strategy}"
        assert self.format in FORMATS, f"unknown format {self.format}"
        assert all(n >= 1 for n in self.n), f"levels {self.n} must be at least 1"

        for name in ("samples", "cap", "state_limit"):

            value = getattr(self, name)
            assert value is None or value > 0, f"{name} must be positive, got {value}"

        assert self.workers >= 0, f"workers must not be negative, got {self.workers}"

        sources = sum(x is not None and x != [] for x in (self.diagram, self.corpus, self.n or None))

        if self.command == "verify":

            assert self.n, "verify needs --n"

        else:

            assert sources == 1, "give exactly one of --n, --diagram, --corpus"
            assert len(self.n) <= 1, f"{self.command} takes a single level"


def _emit(text: str, output: Optional[Path]) -> None:

    if output is None:

        sys.stdout.write(text)

    else:

        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text)


def _load(config: RunConfig):
    """
    the diagram to work on, with the construction pieces when it is Delta_n
    """

    if config.diagram is not None:

        return read_diagram(config.diagram), None, None

    if config.corpus is not None:

        return standard_corpus()[config.corpus], None, None

    return assemble_delta(config.n[0], choice_seed=config.seed)


def _client(config: RunConfig):

    if config.workers == 0:
        return None

    from dask.distributed import Client, LocalCluster

    cluster = LocalCluster(n_workers=config.workers, threads_per_worker=1)

    return Client(cluster)


def _construct(config: RunConfig) -> int:

    diagram, inscribed, metadata = _load(config)

    if config.format == "table":

        data = metadata.to_dict() if metadata is not None else dict(
            area=diagram.area, boundary_length=diagram.boundary_length
        )
        _emit(pd.Series(data).to_frame(name="value").to_string() + "\n", config.output)

        return EXIT_OK

    if config.format == "json":

        if config.output is None and metadata is not None:

            _emit(dumps(dict(diagram=diagram.to_dict(), metadata=metadata.to_dict())), None)

        elif config.output is None:

            _emit(dumps(diagram.to_dict()), None)

        else:

            write_diagram(diagram, config.output)

        if metadata is not None:

            sidecar = config.sidecar

            if sidecar is None and config.output is not None:
                sidecar = config.output.with_suffix(".meta.json")

            if sidecar is not None:
                write_sidecar(metadata, inscribed, sidecar)

        return EXIT_OK

    return _export(config, diagram=diagram)


def _tree_for(diagram: Diagram, seed: Optional[int]):

    seed = dualtrees_config.verification.seed if seed is None else seed

    return wilson_random_spanning_tree(diagram.complex.skeleton(), np.random.default_rng(seed))


def _shell(config: RunConfig) -> int:

    diagram, inscribed, metadata = _load(config)

    bound = None

    if config.strategy == "exact":

        fl, record = exact_filling_length(diagram, cap=config.cap, state_limit=config.state_limit)
        logger.info(f"filling length {fl}")

    elif config.strategy == "tunnel":

        pair = dual_tree(diagram, _tree_for(diagram, config.seed))
        record = tunnelling_shelling(diagram, pair, audit=config.audit)
        bound = tunnelling_bound(diagram, pair)

    else:

        record = logarithmic_shelling(diagram, audit=config.audit)

    check = replay(diagram, record.moves)

    if check.trace != record.trace:

        raise CheckFailed(f"{record.strategy} trace does not replay")

    if bound is not None and record.max_boundary > bound:

        raise CheckFailed(f"max boundary {record.max_boundary} exceeds {bound}")

    if config.audit and inscribed is not None:

        audit = audit_shelling(metadata.n, record, inscribed)

        if audit.max_met < metadata.n + 1:

            raise CheckFailed(f"boundary meets only {audit.max_met} inscribed tree edges")

    if config.output is not None:
        write_record(record, config.output)

    _emit(_trace_text(record, bound), None)

    return EXIT_OK


def _trace_text(record: ShellingRecord, bound: Optional[int]) -> str:

    lines = [record.summary()]

    if bound is not None:
        lines.append(f"bound Diam T + 2 lambda Diam T* + boundary: {bound}")

    lines.append("trace: " + " ".join(str(x) for x in record.trace))

    return "\n".join(lines) + "\n"


def _metrics(config: RunConfig) -> int:

    diagram, _, _ = _load(config)

    client = _client(config)

    try:

        report = metrics_report(diagram, client=client)

    finally:

        if client is not None:
            client.close()

    if config.format == "json":
        _emit(dumps(report.to_dict()), config.output)
    else:
        _emit(repr(report) + "\n", config.output)

    return EXIT_OK


def _verify(config: RunConfig) -> int:

    client = _client(config)

    try:

        reports = [
            check_theorem(
                n,
                samples=config.samples,
                rng_seed=config.seed,
                exhaustive=config.exhaustive,
                audit_shellings=True if config.audit else None,
                client=client,
            )
            for n in config.n
        ]

    finally:

        if client is not None:
            client.close()

    if config.format == "json":

        data = dict(reports=[r.to_dict() for r in reports])

        if len(reports) >= 2:
            data["family"] = family_summary(reports)

        _emit(dumps(data), config.output)

    else:

        text = theorem_table(reports).to_string() + "\n"

        if len(reports) >= 2:
            text += pd.Series(family_summary(reports)).to_string() + "\n"

        _emit(text, config.output)

    failed = [r.n for r in reports if not r.passed]

    if failed:

        logger.error(f"checks failed at n = {failed}")

        return EXIT_VIOLATION

    return EXIT_OK


def _export(config: RunConfig, diagram: Optional[Diagram] = None) -> int:

    if diagram is None:
        diagram, inscribed, metadata = _load(config)
    else:
        inscribed = metadata = None

    tree = _tree_for(diagram, config.seed) if config.seed is not None else None

    if config.format in ("json", "table"):

        if config.dual:

            if config.output is None:
                _emit(dumps(DualGraph(diagram).to_dict()), None)
            else:
                write_dual(DualGraph(diagram), config.output)

        elif config.output is None:

            _emit(dumps(diagram.to_dict()), None)

        else:

            write_diagram(diagram, config.output)

        return EXIT_OK

    assert config.output is not None, f"{config.format} export needs --output"

    if config.format == "dot":
        write_dot(diagram, config.output, tree=tree)
    else:
        write_svg(diagram, config.output, tree=tree)

    return EXIT_OK


_runners = dict(
    construct=_construct,
    shell=_shell,
    metrics=_metrics,
    verify=_verify,
    export=_export,
)


def run(config: RunConfig) -> int:
    """
    carry out one command and return the exit status

    :param config: a parsed or hand-built command
    :returns: 0, 1, 2 or 3
    :rtype:

    """

    try:

        config.validate()

    except AssertionError as e:

        logger.error(f"usage: {e}")

        return EXIT_USAGE

    try:

        return _runners[config.command](config)

    except OSError as e:

        logger.error(f"I/O error: {e}")

        return EXIT_IO

    except (ValueError, RuntimeError, AssertionError) as e:

        logger.error(f"{type(e).__name__}: {e}")

        return EXIT_VIOLATION


def _positive(text: str) -> int:

    value = int(text)

    if value <= 0:
        raise argparse.ArgumentTypeError(f"{value} is not positive")

    return value


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="dualtrees",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    def source(p, many: bool = False):

        if many:
            p.add_argument("--n", type=_positive, nargs="+", required=True)
        else:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--n", type=_positive, nargs=1)
            group.add_argument("--diagram", type=Path)
            group.add_argument("--corpus", choices=sorted(standard_corpus()))

        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("construct", help="build Delta_n")
    source(p)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--sidecar", type=Path, default=None)

    p = sub.add_parser("shell", help="shell a diagram and print its trace")
    source(p)
    p.add_argument("--strategy", choices=STRATEGIES + tuple(STRATEGY_ALIASES), default="tunnel")
    p.add_argument("--cap", type=_positive, default=None)
    p.add_argument("--state-limit", type=_positive, default=None)
    p.add_argument("--audit", action="store_true")

    p = sub.add_parser("metrics", help="diameters, degrees and boundary")
    source(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--workers", type=int, default=0)

    p = sub.add_parser("verify", help="check both diameter bounds on Delta_n")
    source(p, many=True)
    p.add_argument("--samples", type=_positive, default=None)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--workers", type=int, default=0)

    p = sub.add_parser("export", help="write JSON, DOT or SVG")
    source(p)
    p.add_argument("--format", choices=("json", "dot", "svg"), default="dot")
    p.add_argument("--dual", action="store_true")

    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:

    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        update_logging_level("DEBUG" if args.verbose > 1 else "INFO")

    known = RunConfig.__dataclass_fields__

    values = {k: v for k, v in vars(args).items() if k in known and v is not None}

    config = RunConfig(**values)

    try:

        config.validate()

    except AssertionError as e:

        parser.error(str(e))

    return config


def main(argv: Optional[Sequence[str]] = None) -> int:

    config = parse_config(argv)

    return run(config)


if __name__ == "__main__":

    sys.exit(main())
