#!/usr/bin/env python3
"""
divide-atlas
Main entry point: subcommands over the atlas use cases
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Presentation layer
from presentation.cli.cli_presenter import CLIPresenter
from presentation.cli.input_validator import InputValidator
from presentation.cli.progress_observer import CLIProgressObserver, SilentProgressObserver

# Application layer
from application.dto.sweep_spec import SweepSpecBuilder
from application.dto.verification_report import parse_suites
from application.use_cases.describe_knot_use_case import DescribeKnotUseCase
from application.use_cases.sweep_atlas_use_case import SweepAtlasUseCase
from application.use_cases.verify_identities_use_case import VerifyIdentitiesUseCase

# Configuration and DI
from config.configuration import AppConfiguration, ConfigurationLoader
from config.dependency_injection import ServiceContainer, configure_services

# Domain
from domain.exceptions.atlas_errors import AtlasError, ConfigurationError, ValidationError
from domain.services.braid_service import BraidService
from domain.services.invariant_service import InvariantService
from domain.services.lshape_service import LShapeService
from domain.services.trace_service import TraceService
from domain.services.ttk_service import TtkService
from domain.value_objects.braid_word import BraidWord, format_macro
from domain.value_objects.knot_type import KnotType
from domain.value_objects.twisted_torus import TwistedTorus
from infrastructure.logging.log_setup import configure_logging
from infrastructure.rendering.svg_renderer import SvgDiagramRenderer


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    """
    Build the command-line parser

    Returns:
        Parser with one subparser per command
    """
    parser = argparse.ArgumentParser(
        prog='divide-atlas',
        description='Berge knots as L-shaped lattice divides: regions, braids and invariants',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Examples:
  python -m presentation.main knot --type III --eps 1 -A 2 -k 2 -t 1
  python -m presentation.main sweep --grid "A=2..10,k=0..3,t=-2..2" --types III,IV --out atlas.jsonl
  python -m presentation.main trace --region 3,5,3,4 --svg region.svg
  python -m presentation.main braid --region 3,5,3,4 --expanded
  python -m presentation.main alex --braid "W(5)^3 W(3)"
  python -m presentation.main ttk -p 4 -q 3 -r 5 -s 1
  python -m presentation.main relations --max-A 10 --discover
  python -m presentation.main verify --suite berge,lshape --report verification
        '''
    )

    # Global options
    parser.add_argument('--config', type=str, help='Path to configuration file (YAML)')
    parser.add_argument('--no-progress', action='store_true', help='Disable progress bars')
    parser.add_argument(
        '--log-level',
        type=str.upper,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
        help='Override the configured log level'
    )

    sub = parser.add_subparsers(dest='command', required=True)

    knot = sub.add_parser('knot', help='Describe one Berge knot')
    knot.add_argument('--type', dest='knot_type', required=True, help='III, IV, V or VI')
    knot.add_argument('--eps', type=int, required=True, help='epsilon, -1 or 1')
    knot.add_argument('-A', type=int, required=True)
    knot.add_argument('-k', type=int, default=0)
    knot.add_argument('-t', type=int, default=0)
    knot.add_argument('--delta', type=int, help='Presented sign; defaults to the canonical one')
    knot.add_argument('--format', choices=['table', 'json'], default='table')

    sweep = sub.add_parser(
        'sweep',
        help='Stream atlas rows to a JSON-lines file',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=(
            'Stream atlas rows to a JSON-lines file.\n\n'
            'Rows use the canonical sign delta = -eps*sgn(t), so every coef is positive.\n'
            'Use "knot --delta" for the mirror image.'
        )
    )
    sweep.add_argument('--grid', type=str, help='Ranges such as "A=2..10,k=0..3,t=-2..2"')
    sweep.add_argument('--types', type=str, help='Comma-separated types, e.g. III,IV')
    sweep.add_argument('--eps', type=str, help='Comma-separated epsilons, e.g. -1,1')
    sweep.add_argument('--out', type=str, default='atlas.jsonl', help='JSON-lines output path')
    sweep.add_argument('--formats', type=str, help='Tabular report formats: csv,json,excel')
    sweep.add_argument('--report-name', type=str, help='Base name of the tabular reports')
    sweep.add_argument('--max-index', type=int, help='Alexander cap on braid index')
    sweep.add_argument('--max-length', type=int, help='Alexander cap on word length')
    sweep.add_argument('--trace-max-area', type=int, help='Largest region area that is lattice-traced')

    trace = sub.add_parser('trace', help='Trace the divide of a region')
    shape = trace.add_mutually_exclusive_group(required=True)
    shape.add_argument('--region', type=str, help='a1,a2,b1,b2')
    shape.add_argument('--rect', type=str, help='a,b')
    trace.add_argument('--svg', type=str, help='Write an SVG drawing to this path')

    braid = sub.add_parser('braid', help='Braid of an L-shaped region')
    braid.add_argument('--region', type=str, required=True, help='a1,a2,b1,b2')
    braid.add_argument('--raw-claim1', action='store_true', help='Show the alternating braid read off the picture')
    braid.add_argument('--expanded', action='store_true', help='Print letters as well as macros')

    alex = sub.add_parser('alex', help='Alexander polynomial of a braid closure')
    alex.add_argument('--braid', type=str, required=True, help='Macro or expanded word, e.g. "W(5)^3 W(3)"')
    alex.add_argument('--index', type=int, help='Braid index; defaults to the smallest that fits')
    alex.add_argument('--seifert', action='store_true', help='Use the Seifert matrix (positive words)')

    ttk = sub.add_parser('ttk', help='Twisted torus knot T(p,q;r,s)')
    ttk.add_argument('-p', type=int, required=True)
    ttk.add_argument('-q', type=int, required=True)
    ttk.add_argument('-r', type=int, required=True)
    ttk.add_argument('-s', type=int, required=True)

    relations = sub.add_parser('relations', help='Adding-squares relations between Berge knots')
    relations.add_argument('--max-A', dest='max_A', type=int, default=10)
    relations.add_argument('--max-k', dest='max_k', type=int, default=3)
    relations.add_argument('--discover', action='store_true', help='Exhaustive single-move search')

    verify = sub.add_parser('verify', help='Run the verification suites')
    verify.add_argument('--suite', type=str, default='all', help='all or a comma list of suites')
    verify.add_argument('--report', type=str, help='Base name of the verification report')
    verify.add_argument('--formats', type=str, help='Report formats: csv,json,excel')

    return parser


def load_configuration(args: argparse.Namespace) -> AppConfiguration:
    """
    Configuration from file and environment, then command-line overrides

    Raises:
        ConfigurationError: If configuration is invalid
    """
    config = ConfigurationLoader.load(args.config)
    if args.log_level:
        config.logging.log_level = args.log_level
    return config


def setup_logging(config: AppConfiguration) -> None:
    level = "DEBUG" if config.debug_mode else config.logging.log_level
    configure_logging(
        level=level,
        log_format=config.logging.log_format,
        log_dir=config.logging.log_dir if config.logging.enabled else None,
        max_bytes=config.logging.max_log_size_mb * 1024 * 1024,
        backup_count=config.logging.backup_count
    )


def run_knot(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    knot_type = KnotType.from_string(args.knot_type)
    InputValidator.validate_epsilon(args.eps)
    use_case: DescribeKnotUseCase = container.resolve(DescribeKnotUseCase)
    description = use_case.execute(knot_type, args.eps, args.A, args.k, args.t, delta=args.delta)
    if args.format == 'json':
        presenter.display_json(description.to_dict())
    else:
        presenter.display_description(description)
    return EXIT_OK if description.row.all_checks_pass else EXIT_FAILED


def run_sweep(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    config = container.get_configuration()
    defaults = config.sweep
    builder = (
        SweepSpecBuilder()
        .with_types(InputValidator.parse_types(args.types) if args.types else defaults.knot_types())
        .with_epsilons(InputValidator.parse_epsilons(args.eps) if args.eps else defaults.epsilons)
        .with_ranges(
            (defaults.a_min, defaults.a_max),
            (defaults.k_min, defaults.k_max),
            (defaults.t_min, defaults.t_max)
        )
        .with_caps(
            args.max_index or config.invariants.max_alexander_index,
            args.max_length or config.invariants.max_alexander_length
        )
        .with_trace_cap(args.trace_max_area or defaults.trace_max_area)
    )
    if args.grid:
        builder.with_grid(args.grid)
    spec = builder.build()

    formats = InputValidator.parse_formats(args.formats) if args.formats else None
    use_case: SweepAtlasUseCase = container.resolve(SweepAtlasUseCase)
    use_case.set_progress_observer(_observer(args))
    result = use_case.execute(
        spec,
        output_path=args.out,
        report_formats=formats,
        report_name=args.report_name
    )
    presenter.display_sweep_result(result)
    return result.exit_code


def run_trace(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    region = InputValidator.parse_region(args.region) if args.region else InputValidator.parse_rect(args.rect)
    tracer: TraceService = container.resolve(TraceService)
    placed = tracer.place(region)
    trace = tracer.trace(placed)

    svg_path = None
    if args.svg:
        renderer: SvgDiagramRenderer = container.resolve(SvgDiagramRenderer)
        document = renderer.render(placed, tracer.curve_geometry(placed), trace.double_points)
        target = Path(args.svg)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(document, encoding='utf-8')
        svg_path = str(target)
        logger.info("Wrote SVG drawing of %s to %s", region, target)

    presenter.display_trace(placed, trace, svg_path)
    return EXIT_OK


def run_braid(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    region = InputValidator.parse_region(args.region)
    braids: BraidService = container.resolve(BraidService)
    g, h, omega = braids.conjugators(region.a1, region.a2)
    conjugators = [("G", g), ("H", h), ("Omega", omega)]
    if args.raw_claim1:
        presenter.display_braid(
            f"Alternating braid of {region}", braids.claim1_braid(region), None, conjugators, True
        )
    else:
        presenter.display_braid(
            f"Braid of {region}",
            braids.cp_braid(region),
            format_macro(braids.cp_factors(region)),
            conjugators,
            args.expanded
        )
    return EXIT_OK


def run_alex(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    word = BraidWord.parse(args.braid, args.index)
    invariants: InvariantService = container.resolve(InvariantService)
    if args.seifert:
        alexander = invariants.seifert_alexander(word)
        method = "seifert"
    else:
        alexander = invariants.alexander(word)
        method = "burau"
    genus = invariants.bennequin_genus(word) if word.is_positive else alexander.span // 2
    presenter.display_alexander(word, alexander, invariants.determinant(alexander), genus, method)
    return EXIT_OK


def run_ttk(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    knot = TwistedTorus(*InputValidator.validate_ttk(args.p, args.q, args.r, args.s))
    ttk: TtkService = container.resolve(TtkService)
    invariants: InvariantService = container.resolve(InvariantService)
    braids: BraidService = container.resolve(BraidService)

    region = ttk.ttk_region(knot)
    word = ttk.ttk_braid(knot)
    braid_profile = invariants.profile(word)
    region_profile = invariants.profile(braids.cp_braid(region))
    same = braid_profile.matches(region_profile)
    presenter.display_ttk(
        knot.label(),
        region,
        word,
        [("twisted torus", braid_profile), ("region", region_profile)],
        same
    )
    return EXIT_OK if same else EXIT_FAILED


def run_relations(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    InputValidator.validate_positive(args.max_A, "max-A")
    if args.max_k < 0:
        raise ValidationError("max-k must be non-negative", field="max-k", value=args.max_k)
    lshape: LShapeService = container.resolve(LShapeService)

    outcomes = [
        (source, target, move, lshape.relation_search(source, target))
        for source, target, move in lshape.printed_relations(args.max_A, args.max_k)
    ]
    presenter.display_printed_relations(outcomes)
    if args.discover:
        presenter.display_discovered_relations(lshape.discover_relations(args.max_A, args.max_k))
    return EXIT_OK if all(found == move for _, _, move, found in outcomes) else EXIT_FAILED


def run_verify(args, container: ServiceContainer, presenter: CLIPresenter) -> int:
    suites = parse_suites(args.suite)
    config = container.get_configuration()
    formats = (
        InputValidator.parse_formats(args.formats) if args.formats
        else config.reporting.default_formats
    )
    use_case: VerifyIdentitiesUseCase = container.resolve(VerifyIdentitiesUseCase)
    use_case.set_progress_observer(_observer(args))
    report = use_case.execute(suites=suites, report_name=args.report, report_formats=formats)
    presenter.display_verification(report)
    return report.exit_code


COMMANDS: Dict[str, Callable[[argparse.Namespace, ServiceContainer, CLIPresenter], int]] = {
    'knot': run_knot,
    'sweep': run_sweep,
    'trace': run_trace,
    'braid': run_braid,
    'alex': run_alex,
    'ttk': run_ttk,
    'relations': run_relations,
    'verify': run_verify,
}


def _observer(args: argparse.Namespace):
    if args.no_progress:
        return SilentProgressObserver()
    return CLIProgressObserver(use_progress_bar=True)


def main(argv: Optional[List[str]] = None, presenter: Optional[CLIPresenter] = None) -> int:
    """
    Main entry point

    Returns:
        Exit code: 0 success, 1 failed checks, 2 invalid input
    """
    args = build_parser().parse_args(argv)
    presenter = presenter or CLIPresenter()

    try:
        config = load_configuration(args)
        setup_logging(config)
        container = configure_services(config)
        return COMMANDS[args.command](args, container, presenter)

    except ConfigurationError as e:
        presenter.display_error("Configuration error", e)
        return EXIT_INVALID
    except ValidationError as e:
        presenter.display_error("Invalid input", e)
        return EXIT_INVALID
    except AtlasError as e:
        presenter.display_error("Operation failed", e)
        return EXIT_FAILED
    except KeyboardInterrupt:
        presenter.display_warning("Operation cancelled by user")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
