"""
Asymptree - asymptotic cone experiments for the Lobachevsky plane
Command-line entry point
"""
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

import pandas as pd
from dotenv import load_dotenv
from pydantic import ValidationError

from src.calculations.decomposition import SpectrumDecomposer
from src.correspondence.embedding import ProfileEmbedding
from src.correspondence.witness import DEMO_CONFIGURATION, subcone_witness
from src.data.expression_parser import format_spectrum, parse_levelled
from src.data.profile_store import load_profile
from src.data.report_writer import rows_to_frame, write_table
from src.models.profiles import ProfileF
from src.models.report import (
    DEFAULT_SCALES,
    DEFAULT_SEED,
    DEFAULT_THRESHOLD,
    DEFAULT_TRIALS,
    Command,
    ExperimentConfig,
    ReportFormat,
)
from src.utils.errors import AsymptreeError, ExpressionParseError, ProfileFormatError
from src.utils.logging_config import configure_logging
from src.verification.convergence_grid import ConvergenceGrid
from src.verification.metric_suite import MetricPropertySuite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

CONVERGENCE_COLUMNS = ["pair", "n", "tree_delta", "hyper_scaled", "error"]
SPECTRUM_COLUMNS = ["index", "coefficient", "level", "term"]


def _parse_scales(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid scale list '{text}'") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"Master seed (env ASYMPTREE_SEED, default {DEFAULT_SEED})")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="Instances per property suite")
    common.add_argument("--scales", type=_parse_scales, default=DEFAULT_SCALES,
                        help="Comma-separated increasing scales N")
    common.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                        help="Largest accepted error at the final scale")
    common.add_argument("--format", choices=[f.value for f in ReportFormat], default=ReportFormat.CSV.value)
    common.add_argument("--out", type=Path, default=None, help="Output file (default stdout)")
    common.add_argument("--log-level", default=None,
                        help="Log level (env ASYMPTREE_LOG_LEVEL, default WARNING)")

    parser = argparse.ArgumentParser(
        prog="asymptree",
        description="Asymptotic cone of the Lobachevsky plane: tree metrics and convergence experiments",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(Command.VERIFY_METRIC.value, parents=[common],
                        help="Run the metric, four-point, geodesic and cross-formula suites")
    commands.add_parser(Command.CONVERGENCE_GRID.value, parents=[common],
                        help="Tabulate convergence_error over the (R1, R2, Phi) grid")
    embed = commands.add_parser(Command.EMBED_PAIR.value, parents=[common],
                                help="Compare two F-profiles across scales")
    embed.add_argument("profiles", nargs=2, type=Path, metavar="PROFILE_JSON")
    commands.add_parser(Command.SUBCONE_DEMO.value, parents=[common],
                        help="Run the fixed 4-profile subcone witness")
    decompose = commands.add_parser(Command.DECOMPOSE.value, parents=[common],
                                    help="Print the spectrum of a levelled number")
    decompose.add_argument("expression", help="e.g. '3*u^0 + -2*u^1/2'")
    return parser


def resolve_seed(flag: Optional[int]) -> int:
    """Flag wins over ASYMPTREE_SEED, which wins over the default"""
    if flag is not None:
        return flag
    return int(os.getenv("ASYMPTREE_SEED", DEFAULT_SEED))


def cmd_verify_metric(cfg: ExperimentConfig) -> int:
    report = MetricPropertySuite(cfg.seed, cfg.trials).run()
    frame = rows_to_frame(report.counts, columns=["property", "space", "checked", "violations"])
    write_table(frame, cfg.format, cfg.out)
    if not report.passed:
        logger.error(f"{report.total_violations} property violations")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_convergence_grid(cfg: ExperimentConfig) -> int:
    table = ConvergenceGrid().run(cfg.scales)
    write_table(table, cfg.format, cfg.out)
    return EXIT_OK


def cmd_embed_pair(cfg: ExperimentConfig, paths: list[Path]) -> int:
    profiles = [load_profile(path) for path in paths]
    for path, profile in zip(paths, profiles):
        if not isinstance(profile, ProfileF):
            raise ProfileFormatError(f"{path}: embed-pair needs F-profiles, got kind {profile.kind.value}")
    rows = [ProfileEmbedding.pair_error(profiles[0], profiles[1], n) for n in cfg.scales]
    write_table(rows_to_frame(rows, columns=CONVERGENCE_COLUMNS), cfg.format, cfg.out)
    final = rows[-1].error
    if final > cfg.threshold:
        logger.error(f"Error {final:.6g} at n={rows[-1].n} exceeds threshold {cfg.threshold}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_subcone_demo(cfg: ExperimentConfig) -> int:
    witness = subcone_witness(DEMO_CONFIGURATION, cfg.scales)
    write_table(rows_to_frame(witness.rows, columns=CONVERGENCE_COLUMNS), cfg.format, cfg.out)
    final = witness.max_error_by_scale[-1][1]
    if final > cfg.threshold:
        logger.error(f"Max pairwise error {final:.6g} exceeds threshold {cfg.threshold}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_decompose(cfg: ExperimentConfig, expression: str) -> int:
    spectrum = SpectrumDecomposer.decompose(parse_levelled(expression))
    records = [
        {
            "index": i,
            "coefficient": str(entry.coefficient),
            "level": str(entry.level.g),
            "term": term,
        }
        for i, (entry, term) in enumerate(zip(spectrum.entries, format_spectrum(spectrum)), start=1)
    ]
    write_table(pd.DataFrame.from_records(records, columns=SPECTRUM_COLUMNS), cfg.format, cfg.out)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    # Load environment variables
    load_dotenv()

    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        cfg = ExperimentConfig(
            command=args.command,
            seed=resolve_seed(args.seed),
            scales=args.scales,
            trials=args.trials,
            out=args.out,
            format=args.format,
            threshold=args.threshold,
        )
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    try:
        if cfg.command is Command.VERIFY_METRIC:
            return cmd_verify_metric(cfg)
        if cfg.command is Command.CONVERGENCE_GRID:
            return cmd_convergence_grid(cfg)
        if cfg.command is Command.EMBED_PAIR:
            return cmd_embed_pair(cfg, args.profiles)
        if cfg.command is Command.SUBCONE_DEMO:
            return cmd_subcone_demo(cfg)
        return cmd_decompose(cfg, args.expression)
    except ExpressionParseError as e:
        logger.error(f"Cannot parse expression: {e}")
        return EXIT_USAGE
    except AsymptreeError as e:
        logger.error(f"{cfg.command.value} failed: {e}")
        return EXIT_USAGE
    except ValidationError as e:
        logger.error(f"{cfg.command.value} got invalid input: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
