#!/usr/bin/env python3
"""
slicejunta - command-line entry point

Usage:
    slicejunta construct dictator --n 4 --k 2 --coord 1 > dictator.json
    slicejunta analyze --input dictator.json
    slicejunta eta --degree 7
    slicejunta census --n 4 --k 2 --exhaustive
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd
from pydantic import ValidationError

from . import __version__
from .analysis import (
    dichotomy_chain,
    induction_union,
    influence,
    influence_profile,
    level_influence_value,
    matching_cover,
    minimal_junta,
    noise_monte_carlo,
)
from .analysis.noise import NoiseSpectrum
from .config import DEFAULT_CAPACITY, RunConfig, float_15, fraction_str
from .core import SliceDomain, SliceFunction, degree, harmonic_representation, restrict, slice_unrank
from .core.harmonic import coefficient_table
from .core.polynomial import MultilinearPolynomial
from .core.projectors import level_projectors
from .exceptions import ClaimViolation, PreconditionError, SliceJuntaError
from .extremal import (
    eta,
    eta_bounds_check,
    fd_construction,
    gamma_bounds,
    lower_bound,
    pd_polynomial,
    zeta_xi_definitions,
)
from .formats import (
    cube_function_to_dict,
    encode_value,
    polynomial_to_dict,
    read_cube_function,
    read_slice_function,
    slice_function_to_dict,
)
from .transfer import cube_to_slice, explicit_cube_polynomial, slice_to_cube
from .verify import (
    DEFAULT_CHAIN_RHO,
    EXHAUSTIVE,
    SAMPLE,
    AnchorStore,
    CheckpointCache,
    census_from_config,
    dichotomy_scan,
    eq1_constant_probe,
    hyper_scan,
    transfer_sweep,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_USAGE = 2

COMMON_KEYS = {'command', 'seed', 'workers', 'shard_size', 'out', 'format', 'checkpoint_dir', 'verbose'}


class ClaimFailed(Exception):
    """A report was produced but one of its checked claims failed."""


# --- output helpers -----------------------------------------------------


def _banner(title: str) -> None:
    print("\n" + "=" * 80, file=sys.stderr)
    print(title, file=sys.stderr)
    print("=" * 80, file=sys.stderr)


def _status(label: str, value) -> None:
    print(f"  {label:16s} {value}", file=sys.stderr)


def _write(text: str, config: RunConfig) -> None:
    if config.out:
        Path(config.out).write_text(text)
        _status("Output:", config.out)
    else:
        sys.stdout.write(text)


def _emit_report(report: dict, config: RunConfig, table: Optional[pd.DataFrame] = None) -> None:
    """Write a report as JSON (with the run configuration) or its table as CSV."""
    if config.format == 'csv':
        frame = table if table is not None else pd.json_normalize([report])
        _write(frame.to_csv(index=False), config)
        return
    document = dict(report)
    document['code_version'] = __version__
    document['config'] = config.model_dump()
    _write(json.dumps(document, indent=2) + "\n", config)


def _emit_data(data: dict, config: RunConfig) -> None:
    """Write a function or polynomial file."""
    _write(json.dumps(data, indent=2) + "\n", config)


def _fractions(values) -> List[str]:
    return [fraction_str(v) for v in values]


def _require(args, *names) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise PreconditionError(f"{args.command} needs {', '.join(missing)}")


def _load_slice(args) -> SliceFunction:
    _require(args, 'input')
    f = read_slice_function(args.input)
    _status("Input:", f"{args.input} on {f.domain}")
    return f


def _certificate_dict(certificate) -> dict:
    return {
        'witness': list(certificate.witness),
        'size': certificate.size,
        'relevant': list(certificate.relevant()),
        'table': [None if v is None else encode_value(v) for v in certificate.table],
        'classes': [list(c) for c in certificate.partition.classes],
    }


# --- subcommands --------------------------------------------------------


def cmd_analyze(args, config: RunConfig) -> None:
    f = _load_slice(args)
    DEFAULT_CAPACITY.check_exact(f.domain.size)
    norms = level_projectors(f.domain).level_norms(f)
    certificate = minimal_junta(f)
    d = degree(f)
    _status("Degree:", d)
    _status("Junta size:", certificate.size)
    report = {
        'n': f.domain.n,
        'k': f.domain.k,
        'boolean': f.is_boolean,
        'degree': d,
        'level_norms': _fractions(norms),
        'junta': _certificate_dict(certificate),
        'harmonic': coefficient_table(harmonic_representation(f)),
    }
    table = pd.DataFrame({'level': range(len(norms)), 'norm_squared': _fractions(norms)})
    _emit_report(report, config, table)


def cmd_influence(args, config: RunConfig) -> None:
    f = _load_slice(args)
    if args.pair:
        i, j = args.pair
        value = influence(f, i, j)
        _emit_report({'pair': [i, j], 'influence': encode_value(value)}, config)
        return
    profile = influence_profile(f)
    level_value = level_influence_value(f)
    ratio = profile.total / level_value if level_value != 0 else None
    minimum = profile.min_nonzero()
    _status("Total influence:", profile.total)
    report = {
        'pairwise': {f"{i},{j}": str(v) for (i, j), v in sorted(profile.pairwise.items())},
        'total_influence': str(profile.total),
        'level_influence_value': str(level_value),
        'constant': str(ratio) if ratio is not None else None,
        'min_nonzero_influence': str(minimum) if minimum is not None else None,
    }
    _emit_report(report, config, profile.to_dataframe())


def cmd_junta(args, config: RunConfig) -> None:
    f = _load_slice(args)
    certificate = minimal_junta(f)
    cover = matching_cover(f)
    report = {
        'junta': _certificate_dict(certificate),
        'matching_cover': {
            'threshold': str(cover.threshold),
            'matching': [list(e) for e in cover.matching],
            'cover': list(cover.cover),
            'is_junta': cover.is_junta,
            'counting_bound_holds': cover.counting_bound_holds,
        },
    }
    if args.induction is not None:
        induction = induction_union(f, args.induction)
        report['induction'] = {
            'b': induction.b,
            'union': list(induction.union),
            'is_junta': induction.is_junta,
            'witnesses': {str(w.coordinate): list(w.relevant) for w in induction.witnesses},
        }
    _status("Witness:", list(certificate.witness))
    table = pd.DataFrame({
        'pattern': range(len(certificate.table)),
        'value': [None if v is None else str(v) for v in certificate.table],
    })
    _emit_report(report, config, table)


def cmd_noise(args, config: RunConfig) -> None:
    f = _load_slice(args)
    _require(args, 'rho')
    spectrum = NoiseSpectrum(f)
    noisy = spectrum.apply(args.rho)
    report = {
        'rho': args.rho,
        'values': [float_15(float(v)) for v in noisy],
        'hypercontractivity_ratio': float_15(spectrum.ratio(args.rho)),
    }
    if args.samples:
        point = slice_unrank(f.domain, args.rank)
        estimate = noise_monte_carlo(f, args.rho, point, args.samples, np.random.default_rng(config.seed))
        report['monte_carlo'] = {
            'rank': args.rank,
            'estimate': float_15(estimate.estimate),
            'stderr': float_15(estimate.stderr),
            'exact': float_15(float(noisy[args.rank])),
            'samples': estimate.samples,
        }
    table = pd.DataFrame({'rank': range(f.domain.size), 'noisy': report['values']})
    _emit_report(report, config, table)


def cmd_hyper(args, config: RunConfig) -> None:
    if args.input:
        f = _load_slice(args)
        _require(args, 'rho')
        report = {'rho': args.rho, 'ratio': float_15(NoiseSpectrum(f).ratio(args.rho))}
        if args.pair:
            chain = dichotomy_chain(f, args.pair[0], args.pair[1], args.rho)
            report['chain'] = {
                'degree': chain.degree,
                'influence': str(chain.influence),
                'attenuated': float_15(chain.attenuated),
                'noisy': float_15(chain.noisy),
                'rhs': float_15(chain.rhs),
                'hypercontractive': chain.hypercontractive,
                'implied_bound': float_15(chain.implied_bound),
                'bound_holds': chain.bound_holds,
            }
        _emit_report(report, config)
        return
    _require(args, 'n', 'k')
    table = hyper_scan(args.n, args.k, args.exponents, args.samples or 1000, config.seed)
    _status("Smallest passing:", table.smallest_passing_exponent)
    frame = pd.DataFrame([row.model_dump() for row in table.rows])
    _emit_report(table.to_dict(), config, frame)


def cmd_restrict(args, config: RunConfig) -> None:
    f = _load_slice(args)
    _require(args, 'coord', 'value')
    g = restrict(f, args.coord, args.value)
    _status("Restricted to:", g.domain)
    _emit_data(slice_function_to_dict(g), config)


def cmd_convert(args, config: RunConfig) -> None:
    if args.direction == 'cube-to-slice':
        _require(args, 'input', 'n', 'k')
        g = read_cube_function(args.input)
        _emit_data(slice_function_to_dict(cube_to_slice(g, args.n, args.k)), config)
        return
    f = _load_slice(args)
    if args.direction == 'harmonic':
        _emit_data(polynomial_to_dict(harmonic_representation(f)), config)
        return
    certificate = minimal_junta(f)
    _status("Witness:", list(certificate.witness))
    if args.direction == 'slice-to-cube':
        _emit_data(cube_function_to_dict(slice_to_cube(f, certificate)), config)
    else:
        _emit_data(polynomial_to_dict(explicit_cube_polynomial(f, certificate)), config)


def cmd_construct(args, config: RunConfig) -> None:
    if args.kind == 'dictator':
        _require(args, 'n', 'k', 'coord')
        f = SliceFunction.dictator(SliceDomain(args.n, args.k), args.coord)
    elif args.kind == 'fd':
        _require(args, 'degree', 'n', 'k')
        f = fd_construction(args.degree, args.n, args.k)
    elif args.kind == 'from-cube':
        _require(args, 'input', 'n', 'k')
        f = cube_to_slice(read_cube_function(args.input), args.n, args.k)
    else:
        _require(args, 'degree')
        poly = pd_polynomial(args.degree)
        m = lower_bound(args.degree)
        n = args.n if args.n is not None else 2 * m
        if n < m:
            raise PreconditionError(f"P_{args.degree} is written over x_1..x_{m}; --n must be >= {m}")
        # C(x_1 + ... + x_m, t) is the elementary symmetric polynomial e_t on 0/1 points
        result = MultilinearPolynomial(n)
        for t, b in enumerate(poly.binomial_coefficients()):
            result = result + MultilinearPolynomial.elementary_symmetric(
                n, t, range(1, m + 1)
            ).scale(b)
        _emit_data(polynomial_to_dict(result), config)
        return
    _status("Constructed:", f"{args.kind} on {f.domain}")
    _emit_data(slice_function_to_dict(f), config)


def cmd_eta(args, config: RunConfig) -> None:
    _require(args, 'degree')
    result = eta(args.degree)
    eta_bounds_check(args.degree)
    _status("eta:", result.eta)
    report = result.to_dict()
    report['definitions'] = zeta_xi_definitions()
    _emit_report(report, config)


def cmd_gamma(args, config: RunConfig) -> None:
    _require(args, 'degree')
    report = gamma_bounds(args.degree)
    _status("Nisan-Szegedy:", report.ns_upper)
    _emit_report(report.to_dict(), config)


def cmd_census(args, config: RunConfig) -> None:
    _require(args, 'n', 'k')
    mode = EXHAUSTIVE if args.exhaustive else SAMPLE
    if args.clear_checkpoints and config.checkpoint_dir:
        removed = CheckpointCache(config.checkpoint_dir).clear()
        _status("Checkpoints:", f"{removed} removed")
    report = census_from_config(
        config, args.n, args.k,
        max_degree_filter=args.degree,
        mode=mode,
        samples=args.samples or 1000,
        chain_rho=None if args.no_chain else args.chain_rho,
    )
    document = report.to_dict()
    if args.transfer:
        sweep = transfer_sweep(args.n, args.k)
        document['transfer'] = sweep.to_dict()
        document['claims']['transfer_sweep'] = sweep.passed
    _status("Functions:", report.functions)
    _status("Degree <= 1:", report.degree_one_count)
    for claim, ok in document['claims'].items():
        _status(claim, "PASS" if ok else "FAIL")
    frame = pd.DataFrame([row.model_dump() for row in report.counts])
    _emit_report(document, config, frame)
    if not all(document['claims'].values()):
        raise ClaimFailed("census claims failed")


def cmd_probe_eq1(args, config: RunConfig) -> None:
    domains = [tuple(d) for d in args.domain] if args.domain else [(4, 2), (6, 3)]
    report = eq1_constant_probe(domains, samples=args.samples or 100, seed=config.seed)
    _status("Constant c:", report.constant)
    frame = pd.DataFrame([row.model_dump() for row in report.rows])
    _emit_report(report.to_dict(), config, frame)
    if not report.consistent:
        raise ClaimFailed("total-influence ratios are not constant")


def cmd_dichotomy(args, config: RunConfig) -> None:
    _require(args, 'n', 'k', 'degree')
    anchors = AnchorStore(args.anchors)
    table = dichotomy_scan(
        args.n, args.k, args.degree, workers=config.workers, anchors=anchors, record=args.record
    )
    if args.record:
        _status("Anchors:", f"recorded in {anchors.path}")
    frame = pd.DataFrame([row.model_dump() for row in table.rows])
    _emit_report(table.to_dict(), config, frame)
    if table.anchors_match is False:
        raise ClaimFailed("dichotomy minima differ from the stored anchors")


COMMANDS = {
    'analyze': cmd_analyze,
    'influence': cmd_influence,
    'junta': cmd_junta,
    'noise': cmd_noise,
    'hyper': cmd_hyper,
    'restrict': cmd_restrict,
    'convert': cmd_convert,
    'construct': cmd_construct,
    'eta': cmd_eta,
    'gamma': cmd_gamma,
    'census': cmd_census,
    'probe-eq1': cmd_probe_eq1,
    'dichotomy': cmd_dichotomy,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='slicejunta',
        description="Exact analysis of Boolean functions on the slice and the hypercube",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Build a dictator on C(4,2) and analyze it
  slicejunta construct dictator --n 4 --k 2 --coord 1 --out dictator.json
  slicejunta analyze --input dictator.json

  # Longest Boolean prefix of a degree-7 polynomial
  slicejunta eta --degree 7

  # Exhaustive census of all 64 functions on C(4,2)
  slicejunta census --n 4 --k 2 --exhaustive

  # Census of C(6,3) on 8 workers with resumable checkpoints
  slicejunta census --n 6 --k 3 --exhaustive --workers 8 --checkpoint-dir .census

Exit codes:
  0 success, 1 a checked claim failed, 2 usage, capacity or format error
        """
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=0, help='Seed for every random stream (default: 0)')
    common.add_argument('--workers', type=int, default=None,
                        help='Census worker processes (default: SLICEJUNTA_WORKERS or 1)')
    common.add_argument('--shard-size', type=int, default=4096, help='Functions per census shard')
    common.add_argument('--checkpoint-dir', default=None, help='Directory for census checkpoints')
    common.add_argument('--out', default=None, help='Output file (default: stdout)')
    common.add_argument('--format', choices=['json', 'csv'], default='json',
                        help='Report format (default: json)')
    common.add_argument('--verbose', action='store_true', help='Debug logging')
    common.add_argument('--input', default=None, help='Slice-function (or cube-function) file')
    common.add_argument('--n', type=int, default=None, help='Slice length')
    common.add_argument('--k', type=int, default=None, help='Slice weight')
    common.add_argument('--degree', type=int, default=None, help='Degree (or degree bound)')
    common.add_argument('--rho', type=float, default=None, help='Noise correlation in (0, 1]')
    common.add_argument('--pair', type=int, nargs=2, default=None, metavar=('I', 'J'),
                        help='Coordinate pair (1-based)')
    common.add_argument('--samples', type=int, default=None, help='Number of random samples')

    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('analyze', parents=[common], help='Degree, level norms and minimal junta')
    sub.add_parser('influence', parents=[common], help='Pairwise and total influences')

    junta = sub.add_parser('junta', parents=[common], help='Minimal junta and matching cover')
    junta.add_argument('--induction', type=int, choices=[0, 1], default=None,
                       help='Also report restriction witnesses for x_i = b')

    noise = sub.add_parser('noise', parents=[common], help='Noise operator T_rho')
    noise.add_argument('--rank', type=int, default=0, help='Monte Carlo start point (colex rank)')

    hyper = sub.add_parser('hyper', parents=[common], help='Hypercontractivity ratio or scan')
    hyper.add_argument('--exponents', type=float, nargs='+', default=[0.5, 1.0, 2.0, 4.0],
                       help='Exponent grid for the scan')

    restrict_parser = sub.add_parser('restrict', parents=[common], help='Restrict x_i = b')
    restrict_parser.add_argument('--coord', type=int, default=None, help='Coordinate i')
    restrict_parser.add_argument('--value', type=int, choices=[0, 1], default=None, help='Value b')

    convert = sub.add_parser('convert', parents=[common], help='Slice <-> cube conversions')
    convert.add_argument('--direction', default='slice-to-cube',
                         choices=['slice-to-cube', 'cube-to-slice', 'explicit-polynomial', 'harmonic'])

    construct = sub.add_parser('construct', parents=[common], help='Build example inputs')
    construct.add_argument('kind', choices=['dictator', 'pd', 'fd', 'from-cube'])
    construct.add_argument('--coord', type=int, default=None, help='Dictator coordinate')

    sub.add_parser('eta', parents=[common], help='Exhaustive eta(d) search')
    sub.add_parser('gamma', parents=[common], help='gamma(d) bounds')

    census_parser = sub.add_parser('census', parents=[common], help='Census of Boolean functions')
    census_parser.add_argument('--exhaustive', action='store_true',
                               help='Enumerate all 2^C(n,k) functions (default: sample)')
    census_parser.add_argument('--transfer', action='store_true',
                               help='Also run the slice-to-cube sweep over every function')
    census_parser.add_argument('--chain-rho', type=float, default=DEFAULT_CHAIN_RHO,
                               help='rho of the bootstrapping-chain check (default: %(default)s)')
    census_parser.add_argument('--no-chain', action='store_true',
                               help='Skip the bootstrapping-chain check')
    census_parser.add_argument('--clear-checkpoints', action='store_true',
                               help='Delete stored shard checkpoints before running')

    probe = sub.add_parser('probe-eq1', parents=[common], help='Total-influence constant')
    probe.add_argument('--domain', type=int, nargs=2, action='append', metavar=('N', 'K'),
                       help='Domain to probe (repeatable; default: 4 2 and 6 3)')

    dichotomy = sub.add_parser(
        'dichotomy', parents=[common], help='Minimum nonzero influence per degree'
    )
    dichotomy.add_argument('--anchors', default=None,
                           help='Anchors file (default: the packaged anchors)')
    dichotomy.add_argument('--record', action='store_true',
                           help='Freeze the computed minima into the anchors file')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    try:
        config = RunConfig(
            command=args.command,
            seed=args.seed,
            workers=args.workers,
            shard_size=args.shard_size,
            out=args.out,
            format=args.format,
            checkpoint_dir=args.checkpoint_dir,
            options={key: value for key, value in vars(args).items() if key not in COMMON_KEYS},
        )
        _banner(f"slicejunta {__version__} - {args.command}")
        COMMANDS[args.command](args, config)
    except (ClaimViolation, ClaimFailed) as e:
        print(f"\nCLAIM FAILED: {e}", file=sys.stderr)
        return EXIT_CLAIM
    except (SliceJuntaError, ValidationError, FileNotFoundError) as e:
        print(f"\nERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
