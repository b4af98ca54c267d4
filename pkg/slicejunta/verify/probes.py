"""
Probes of single claims: the total-influence constant, hypercontractivity scans and the
slice-to-cube transfer sweep.
"""

import logging
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..analysis.influence import level_influence_value, total_influence
from ..analysis.junta import minimal_junta
from ..analysis.noise import NoiseSpectrum
from ..config import (
    DEFAULT_CAPACITY,
    Capacity,
    Eq1ProbeReport,
    Eq1Row,
    HyperScanRow,
    HyperScanTable,
    TransferSweepReport,
    float_15,
)
from ..core.domain import SliceDomain
from ..core.functions import SliceFunction
from ..core.projectors import level_projectors
from ..exceptions import ClaimViolation, PreconditionError
from ..transfer.conversions import explicit_cube_polynomial, slice_to_cube

logger = logging.getLogger(__name__)

HYPER_TOLERANCE = 1e-9


def _probe_functions(
    domain: SliceDomain,
    samples: int,
    rng: np.random.Generator,
    exhaustive_limit: int
) -> Iterator[Tuple[str, SliceFunction]]:
    if domain.size <= exhaustive_limit:
        for code in range(1 << domain.size):
            yield f"code:{code}", SliceFunction.from_code(domain, code)
        return
    tables = rng.integers(0, 2, size=(samples, domain.size))
    for index, table in enumerate(tables):
        yield f"sample:{index}", SliceFunction(domain, table.tolist())


def eq1_constant_probe(
    domains: Iterable[Tuple[int, int]],
    samples: int = 100,
    seed: int = 0,
    exhaustive_limit: int = 6,
    capacity: Capacity = DEFAULT_CAPACITY
) -> Eq1ProbeReport:
    """
    Measure c in Inf[g] = c * sum_d [d(n+1-d)/n] ||g^{=d}||^2 over pure-level parts.

    Every Boolean function is split into its levels; each nonzero level d >= 1 gives one
    evidence row with the definitional total influence, the level formula and their ratio.

    Args:
        domains: (n, k) pairs
        samples: Random Boolean functions per domain when not enumerating
        seed: Seed for the samples
        exhaustive_limit: Enumerate all 2^C(n,k) functions when C(n,k) is at most this
        capacity: Size limits

    Returns:
        Eq1ProbeReport; consistent is False when two rows disagree
    """
    domains = [SliceDomain(n, k) for n, k in domains]
    if not domains:
        raise PreconditionError("the probe needs at least one domain")
    if samples < 0:
        raise PreconditionError(f"samples must be >= 0, got {samples}")
    rng = np.random.default_rng(seed)

    rows: List[Eq1Row] = []
    ratios = set()
    for domain in domains:
        capacity.check_exact(domain.size)
        projectors = level_projectors(domain)
        for source, f in _probe_functions(domain, samples, rng, exhaustive_limit):
            for d, level in enumerate(projectors.levels(f)):
                if d == 0 or all(v == 0 for v in level.values):
                    continue
                lhs = total_influence(level)
                rhs = level_influence_value(level)
                ratio = Fraction(lhs) / rhs
                ratios.add(ratio)
                rows.append(Eq1Row(
                    n=domain.n, k=domain.k, source=source, level=d,
                    total_influence=str(lhs), level_value=str(rhs), ratio=str(ratio)
                ))

    first = domains[0]
    dictator = SliceFunction.dictator(first, 1)
    report = Eq1ProbeReport(
        constant=str(next(iter(ratios))) if len(ratios) == 1 else None,
        consistent=len(ratios) <= 1,
        rows=rows,
        dictator_total_influence=str(total_influence(dictator)),
        dictator_level_value=str(level_influence_value(dictator)),
    )
    if not report.consistent:
        logger.error("total-influence ratios are not constant: %s", sorted(ratios))
    logger.info("eq1 probe: %d rows, constant %s", len(rows), report.constant)
    return report


def hyper_base(n: int, k: int) -> float:
    """2k(n-k) / (n(n-1))."""
    if n < 2:
        raise PreconditionError(f"hypercontractivity scan needs n >= 2, got {n}")
    return 2 * k * (n - k) / (n * (n - 1))


def hyper_scan(
    n: int,
    k: int,
    exponents: Sequence[float] = (0.5, 1.0, 2.0, 4.0),
    samples: int = 1000,
    seed: int = 0,
    capacity: Capacity = DEFAULT_CAPACITY
) -> HyperScanTable:
    """
    Largest ||T_rho f||_2 / ||f||_{4/3} over sampled Boolean f, for rho = base ** exponent.

    Args:
        n: Slice length
        k: Slice weight
        exponents: Candidate exponents
        samples: Uniform random truth tables
        seed: Seed of the sample
        capacity: Size limits

    Returns:
        HyperScanTable with one row per exponent (in increasing order)
    """
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")
    domain = SliceDomain(n, k)
    capacity.check_exact(domain.size)
    base = hyper_base(n, k)
    rng = np.random.default_rng(seed)
    tables = rng.integers(0, 2, size=(samples, domain.size))
    spectra = [NoiseSpectrum(SliceFunction(domain, table.tolist())) for table in tables]

    rows = []
    for exponent in sorted(float(e) for e in exponents):
        rho = base ** exponent
        ratios = np.array([spectrum.ratio(rho) for spectrum in spectra])
        argmax = int(np.argmax(ratios))
        rows.append(HyperScanRow(
            exponent=exponent, rho=float_15(rho),
            max_ratio=float_15(float(ratios[argmax])), argmax_sample=argmax
        ))
        logger.debug("exponent %g: rho %.6f, max ratio %.6f", exponent, rho, ratios[argmax])

    passing = [row.exponent for row in rows if row.max_ratio <= 1 + HYPER_TOLERANCE]
    return HyperScanTable(
        n=n, k=k, samples=samples, seed=seed, base=float_15(base), rows=rows,
        smallest_passing_exponent=min(passing) if passing else None,
    )


def transfer_sweep(n: int, k: int, capacity: Capacity = DEFAULT_CAPACITY) -> TransferSweepReport:
    """
    Run slice_to_cube and explicit_cube_polynomial on every Boolean function of C(n,k).

    Functions whose minimal junta is larger than min(k, n-k) are skipped. A ClaimViolation
    on any function is recorded by code instead of aborting the sweep.
    """
    domain = SliceDomain(n, k)
    capacity.check_exhaustive(domain.size)
    report = TransferSweepReport(n=n, k=k)
    limit = min(k, n - k)
    for code in range(1 << domain.size):
        f = SliceFunction.from_code(domain, code)
        report.functions += 1
        try:
            certificate = minimal_junta(f)
            if certificate.size > limit:
                report.skipped += 1
                continue
            g = slice_to_cube(f, certificate)
            polynomial = explicit_cube_polynomial(f, certificate, capacity)
            if polynomial.degree > g.degree:
                raise ClaimViolation(f"explicit degree {polynomial.degree} > cube degree {g.degree}")
            report.converted += 1
        except ClaimViolation as e:
            logger.error("transfer sweep: code %d: %s", code, e)
            report.failures.append(code)
    logger.info("transfer sweep %s: %d converted, %d skipped, %d failures",
                domain, report.converted, report.skipped, len(report.failures))
    return report
