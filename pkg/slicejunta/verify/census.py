"""
Census of Boolean functions on a slice: degree, minimal junta size and influences.

Functions are enumerated in the integer order of their bit-packed truth tables (bit r =
value at rank r) and processed in contiguous shards. Sampled truth tables are seeded by
(seed, index). Each shard reduces to counts and minima, and merging shards is
associative, so the report does not depend on the number of workers or on the shard size.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .. import __version__
from ..analysis.junta import partition_from_zero_pairs
from ..analysis.noise import check_rho, noise_exponent
from ..config import (
    DEFAULT_CAPACITY,
    Capacity,
    CensusReport,
    CountRow,
    DichotomyRow,
    DichotomyTable,
    RunConfig,
    fraction_str,
)
from ..core.domain import SliceDomain, coordinate_pairs, point_matrix, transposition_permutations
from ..core.projectors import LevelProjectors, level_projectors
from ..exceptions import ClaimViolation, PreconditionError
from ..extremal.constructions import degree_one_theorem_applies
from .anchors import AnchorStore
from .cache import CheckpointCache
from .probes import eq1_constant_probe

logger = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
SAMPLE = 'sample'

DEFAULT_CHAIN_RHO = 0.5
CHAIN_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ShardTask:
    """A contiguous block of functions: codes [start, end) or sample rows [start, end)."""

    n: int
    k: int
    start: int
    end: int
    max_degree_filter: Optional[int] = None
    mode: str = EXHAUSTIVE
    seed: int = 0
    chain_rho: Optional[float] = None


@dataclass
class ShardResult:
    """Mergeable summary of one shard."""

    functions: int = 0
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)
    min_flips: Dict[int, int] = field(default_factory=dict)
    degree_one: int = 0
    degree_one_unclassified: int = 0
    degree_one_large_junta: int = 0
    influence_bound_violations: int = 0
    transitivity_violations: int = 0
    chain_pairs: int = 0
    chain_hypercontractive: int = 0
    chain_failures: int = 0
    chain_lower_failures: int = 0

    _SUMMED = (
        'functions', 'degree_one', 'degree_one_unclassified', 'degree_one_large_junta',
        'influence_bound_violations', 'transitivity_violations', 'chain_pairs',
        'chain_hypercontractive', 'chain_failures', 'chain_lower_failures',
    )

    def merge(self, other: "ShardResult") -> "ShardResult":
        counts = dict(self.counts)
        for key, value in other.counts.items():
            counts[key] = counts.get(key, 0) + value
        min_flips = dict(self.min_flips)
        for d, value in other.min_flips.items():
            min_flips[d] = min(value, min_flips.get(d, value))
        return ShardResult(
            counts=counts,
            min_flips=min_flips,
            **{name: getattr(self, name) + getattr(other, name) for name in self._SUMMED}
        )

    def to_json(self) -> dict:
        data = {name: getattr(self, name) for name in self._SUMMED}
        data['counts'] = [[d, size, count] for (d, size), count in sorted(self.counts.items())]
        data['min_flips'] = {str(d): v for d, v in sorted(self.min_flips.items())}
        return data

    @classmethod
    def from_json(cls, data: dict) -> "ShardResult":
        return cls(
            counts={(d, size): count for d, size, count in data['counts']},
            min_flips={int(d): v for d, v in data['min_flips'].items()},
            **{name: data[name] for name in cls._SUMMED}
        )


def code_tables(start: int, end: int, size: int) -> np.ndarray:
    """(end - start, size) 0/1 tables of the codes start..end-1."""
    codes = np.arange(start, end, dtype=np.int64)[:, np.newaxis]
    return (codes >> np.arange(size, dtype=np.int64)) & 1


def sample_tables(seed: int, start: int, end: int, size: int) -> np.ndarray:
    """Uniform 0/1 tables of sample rows start..end-1; row i only depends on (seed, i)."""
    if start >= end:
        return np.zeros((0, size), dtype=np.int64)
    return np.stack([
        np.random.default_rng([seed, index]).integers(0, 2, size=size, dtype=np.int64)
        for index in range(start, end)
    ])


def degree_one_templates(domain: SliceDomain) -> np.ndarray:
    """The 2n+2 tables of constants, dictators and anti-dictators, as rows."""
    columns = point_matrix(domain).astype(np.int64).T
    rows = [np.zeros(domain.size, dtype=np.int64), np.ones(domain.size, dtype=np.int64)]
    rows.extend(columns)
    rows.extend(1 - columns)
    return np.unique(np.array(rows), axis=0)


class _ChainCheck:
    """
    Bootstrapping chain rho^{2 deg f}||g||^2 <= ||T_rho g||^2 <= ||g||_{4/3}^2 for
    g = f - f^(i j), evaluated for every row and pair with nonzero influence.

    L commutes with every transposition, so the levels of g are the levels of f minus
    their transposes and one set of level tables per shard serves all pairs.
    """

    def __init__(
        self,
        projectors: LevelProjectors,
        tables: np.ndarray,
        degrees: np.ndarray,
        rho: float
    ):
        self.tables = tables
        self.degrees = degrees
        self.rho = rho
        self.size = projectors.domain.size
        self.numerators, self.denominators = projectors.level_numerators(tables)
        n = projectors.domain.n
        self.weights = [rho ** (2 * noise_exponent(n, d)) for d in range(len(self.denominators))]

    def check_pair(self, perm: np.ndarray, pair_flips: np.ndarray, result: ShardResult) -> None:
        rows = np.flatnonzero(pair_flips > 0)
        if rows.size == 0:
            return
        f = self.tables[rows]
        g = f - f[:, perm]
        noisy = np.zeros(rows.size)
        for numerator, denominator, weight in zip(self.numerators, self.denominators, self.weights):
            h = numerator[rows]
            dot = np.asarray((g * (h - h[:, perm])).sum(axis=1), dtype=float)
            noisy += weight * dot / (self.size * denominator)

        squared = pair_flips[rows] / self.size
        degrees = self.degrees[rows]
        attenuated = self.rho ** (2 * degrees) * squared
        hypercontractive = noisy <= squared ** 1.5 * (1 + CHAIN_TOLERANCE)
        implied = self.rho ** (4 * degrees) / 4
        holds = ~hypercontractive | (squared / 4 >= implied * (1 - CHAIN_TOLERANCE))
        lower_holds = attenuated <= noisy * (1 + CHAIN_TOLERANCE) + 1e-15

        result.chain_pairs += int(rows.size)
        result.chain_hypercontractive += int(np.count_nonzero(hypercontractive))
        result.chain_failures += int(np.count_nonzero(~holds))
        result.chain_lower_failures += int(np.count_nonzero(~lower_holds))


def _shard_tables(task: ShardTask, domain: SliceDomain) -> np.ndarray:
    if task.mode == SAMPLE:
        return sample_tables(task.seed, task.start, task.end, domain.size)
    return code_tables(task.start, task.end, domain.size)


def run_shard(task: ShardTask) -> ShardResult:
    """Summarise every function of one shard."""
    domain = SliceDomain(task.n, task.k)
    projectors = level_projectors(domain)
    tables = _shard_tables(task, domain)

    degrees = projectors.degrees(tables)
    if task.max_degree_filter is not None:
        keep = degrees <= task.max_degree_filter
        tables, degrees = tables[keep], degrees[keep]
    result = ShardResult(functions=int(tables.shape[0]))
    if tables.shape[0] == 0:
        return result

    pairs = coordinate_pairs(domain.n)
    chain = None
    if task.chain_rho is not None and pairs:
        chain = _ChainCheck(projectors, tables, degrees, task.chain_rho)
    flips = np.zeros((tables.shape[0], len(pairs)), dtype=np.int64)
    for p, perm in enumerate(transposition_permutations(domain)):
        flips[:, p] = np.count_nonzero(tables != tables[:, perm], axis=1)
        if chain is not None:
            chain.check_pair(perm, flips[:, p], result)

    junta_sizes = np.zeros(tables.shape[0], dtype=np.int64)
    if pairs:
        junta_sizes = _junta_sizes(domain, pairs, flips == 0, result)

    keys, counts = np.unique(np.stack([degrees, junta_sizes], axis=1), axis=0, return_counts=True)
    result.counts = {(int(d), int(s)): int(c) for (d, s), c in zip(keys, counts)}

    positive = np.where(flips > 0, flips, np.iinfo(np.int64).max)
    row_min = positive.min(axis=1)
    for d in np.unique(degrees):
        in_class = row_min[degrees == d]
        in_class = in_class[in_class < np.iinfo(np.int64).max]
        if in_class.size:
            result.min_flips[int(d)] = int(in_class.min())

    # Inf[f] <= deg f  <=>  sum of flips <= 4 * C(n,k) * n * deg f
    bound = 4 * domain.size * domain.n * degrees
    result.influence_bound_violations = int(np.count_nonzero(flips.sum(axis=1) > bound))

    low = degrees <= 1
    result.degree_one = int(np.count_nonzero(low))
    if result.degree_one:
        templates = degree_one_templates(domain)
        matches = (tables[low][:, np.newaxis, :] == templates[np.newaxis, :, :]).all(axis=2).any(axis=1)
        result.degree_one_unclassified = int(np.count_nonzero(~matches))
        result.degree_one_large_junta = int(np.count_nonzero(junta_sizes[low] > 1))
    return result


def _junta_sizes(
    domain: SliceDomain,
    pairs: List[Tuple[int, int]],
    zero_pattern: np.ndarray,
    result: ShardResult
) -> np.ndarray:
    """Minimal junta size per row, computed once per distinct zero-influence pattern."""
    patterns, inverse = np.unique(zero_pattern, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    sizes = np.zeros(patterns.shape[0], dtype=np.int64)
    for idx, pattern in enumerate(patterns):
        zero_pairs = [pairs[p] for p in np.flatnonzero(pattern)]
        try:
            partition = partition_from_zero_pairs(domain.n, zero_pairs)
            sizes[idx] = domain.n - partition.largest_size
        except ClaimViolation:
            logger.error("zero-influence transitivity fails for pattern %s", pattern.tolist())
            result.transitivity_violations += int(np.count_nonzero(inverse == idx))
            sizes[idx] = -1
    return sizes[inverse]


def _shard_ranges(total: int, shard_size: int) -> Iterator[Tuple[int, int]]:
    for start in range(0, total, shard_size):
        yield start, min(start + shard_size, total)


def _run_tasks(tasks: List[ShardTask], workers: int) -> List[ShardResult]:
    if workers <= 1 or len(tasks) <= 1:
        return [run_shard(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run_shard, tasks))


def census(
    n: int,
    k: int,
    max_degree_filter: Optional[int] = None,
    mode: str = EXHAUSTIVE,
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
    shard_size: int = 4096,
    checkpoint_dir: Optional[str] = None,
    capacity: Capacity = DEFAULT_CAPACITY,
    eq1_samples: int = 20,
    anchors: Optional[AnchorStore] = None,
    chain_rho: Optional[float] = DEFAULT_CHAIN_RHO
) -> CensusReport:
    """
    Enumerate (or sample) Boolean functions on C(n,k) and aggregate their structure.

    Args:
        n: Slice length
        k: Slice weight
        max_degree_filter: Keep only functions of degree <= this bound
        mode: 'exhaustive' (all 2^C(n,k) functions) or 'sample' (uniform truth tables)
        samples: Number of functions in sample mode
        seed: Seed for sample mode and for the total-influence constant sample
        workers: Worker processes
        shard_size: Functions per shard
        checkpoint_dir: Directory for finished-shard checkpoints
        capacity: Size limits
        eq1_samples: Sampled functions for the proportionality constant
        anchors: Regression anchors (packaged anchors by default)
        chain_rho: Correlation for the bootstrapping-chain check; None skips it

    Returns:
        CensusReport
    """
    domain = SliceDomain(n, k)
    capacity.check_census(domain.size)
    if mode == EXHAUSTIVE:
        capacity.check_exhaustive(domain.size)
        total = 1 << domain.size
    elif mode == SAMPLE:
        if samples < 1:
            raise PreconditionError(f"sample mode needs samples >= 1, got {samples}")
        total = samples
        # one shard holds at most census_points table entries
        shard_size = max(1, min(shard_size, capacity.census_points // domain.size))
    else:
        raise PreconditionError(f"unknown census mode {mode!r}")
    if chain_rho is not None:
        chain_rho = check_rho(chain_rho)

    started = time.perf_counter()
    cache = CheckpointCache(checkpoint_dir) if checkpoint_dir else None
    merged = ShardResult()
    pending: List[Tuple[Optional[str], ShardTask]] = []
    shards = 0
    for start, end in _shard_ranges(total, shard_size):
        shards += 1
        task = ShardTask(
            n, k, start, end, max_degree_filter,
            mode=mode, seed=seed if mode == SAMPLE else 0, chain_rho=chain_rho
        )
        key = None
        if cache is not None:
            key = CheckpointCache.shard_key(
                n=n, k=k, filter=max_degree_filter, start=start, end=end,
                mode=mode, seed=seed if mode == SAMPLE else None, chain_rho=chain_rho,
                version=__version__
            )
            stored = cache.get(key)
            if stored is not None:
                merged = merged.merge(ShardResult.from_json(stored))
                continue
        pending.append((key, task))

    logger.info("census %s %s: %d functions in %d shards (%d pending), %d workers",
                domain, mode, total, shards, len(pending), workers)
    for (key, _), result in zip(pending, _run_tasks([t for _, t in pending], workers)):
        if cache is not None:
            cache.set(key, result.to_json())
        merged = merged.merge(result)
    enumerated = time.perf_counter()

    report = _build_report(domain, mode, seed, max_degree_filter, merged, shards, anchors, chain_rho)
    if domain.size <= capacity.exact_points:
        probe = eq1_constant_probe([(n, k)], samples=eq1_samples, seed=seed, exhaustive_limit=0)
        report.eq1_constant = probe.constant
        report.claims['eq1_single_constant'] = probe.consistent
    else:
        logger.info("%s exceeds the exact capacity; total-influence constant not measured", domain)
    report.timing = {
        'enumeration_seconds': round(enumerated - started, 3),
        'total_seconds': round(time.perf_counter() - started, 3),
    }
    return report


def _build_report(
    domain: SliceDomain,
    mode: str,
    seed: int,
    max_degree_filter: Optional[int],
    merged: ShardResult,
    shards: int,
    anchors: Optional[AnchorStore],
    chain_rho: Optional[float]
) -> CensusReport:
    anchors = anchors or AnchorStore()
    n, k = domain.n, domain.k
    min_influence = {
        str(d): fraction_str(Fraction(flips, 4 * domain.size))
        for d, flips in sorted(merged.min_flips.items())
    }
    claims = {
        'zero_influence_transitive': merged.transitivity_violations == 0,
        'total_influence_at_most_degree': merged.influence_bound_violations == 0,
    }
    if chain_rho is not None:
        claims['dichotomy_chain'] = (
            merged.chain_failures == 0 and merged.chain_lower_failures == 0
        )
        if merged.chain_failures or merged.chain_lower_failures:
            logger.error("bootstrapping chain failed: %d implied-bound and %d noise-bound failures",
                         merged.chain_failures, merged.chain_lower_failures)
    theorem_range = degree_one_theorem_applies(n, k)
    if theorem_range:
        claims['degree_one_classified'] = (
            merged.degree_one_unclassified == 0 and merged.degree_one_large_junta == 0
        )
        if mode == EXHAUSTIVE and (max_degree_filter is None or max_degree_filter >= 1):
            claims['degree_one_count'] = merged.degree_one == 2 * n + 2
            expected = anchors.degree_one_count(n, k)
            if expected is not None:
                claims['anchor_degree_one_count'] = merged.degree_one == expected
    if mode == EXHAUSTIVE:
        claims['all_functions_counted'] = (
            max_degree_filter is not None or merged.functions == 1 << domain.size
        )
        cumulative: Optional[Fraction] = None
        for d in range(domain.max_degree + 1):
            if d in merged.min_flips:
                value = Fraction(merged.min_flips[d], 4 * domain.size)
                cumulative = value if cumulative is None else min(cumulative, value)
            if max_degree_filter is not None and d > max_degree_filter:
                break
            verdict = anchors.check_dichotomy(n, k, d, cumulative)
            if verdict is not None:
                claims[f'anchor_dichotomy_{d}'] = verdict

    return CensusReport(
        n=n,
        k=k,
        mode=mode,
        seed=seed if mode == SAMPLE else None,
        max_degree_filter=max_degree_filter,
        functions=merged.functions,
        counts=[
            CountRow(degree=d, junta_size=size, count=count)
            for (d, size), count in sorted(merged.counts.items())
        ],
        degree_one_count=merged.degree_one,
        min_nonzero_influence=min_influence,
        chain_rho=chain_rho,
        chain_pairs=merged.chain_pairs,
        chain_hypercontractive=merged.chain_hypercontractive,
        claims=claims,
        theorem_range=theorem_range,
        shards=shards,
        code_version=__version__,
    )


def census_from_config(config: RunConfig, n: int, k: int, **kwargs) -> CensusReport:
    """Run a census with the worker count, seed, shard size and checkpoints of a RunConfig."""
    return census(
        n, k,
        seed=config.seed,
        workers=config.workers,
        shard_size=config.shard_size,
        checkpoint_dir=config.checkpoint_dir,
        **kwargs
    )


def dichotomy_scan(
    n: int,
    k: int,
    d: int,
    workers: int = 1,
    shard_size: int = 4096,
    capacity: Capacity = DEFAULT_CAPACITY,
    anchors: Optional[AnchorStore] = None,
    record: bool = False
) -> DichotomyTable:
    """
    Minimum nonzero Inf_ij among Boolean functions of degree <= e, for e = 1..d.

    Args:
        n: Slice length
        k: Slice weight
        d: Largest degree bound
        workers: Worker processes
        shard_size: Functions per shard
        capacity: Size limits
        anchors: Regression anchors (packaged anchors by default)
        record: Freeze every computed minimum into the anchors once the stored ones agree

    Returns:
        DichotomyTable; the minima are nonincreasing in e

    Raises:
        ClaimViolation: If record is set and a stored anchor disagrees
    """
    if d < 1:
        raise PreconditionError(f"dichotomy scan needs d >= 1, got {d}")
    anchors = anchors or AnchorStore()
    report = census(
        n, k, max_degree_filter=d, workers=workers, shard_size=shard_size,
        capacity=capacity, eq1_samples=0, anchors=anchors
    )
    per_degree = {row.degree: 0 for row in report.counts}
    for row in report.counts:
        per_degree[row.degree] += row.count

    rows = []
    verdicts = []
    cumulative: Optional[Fraction] = None
    for e in range(0, d + 1):
        value = report.min_nonzero_influence.get(str(e))
        if value is not None:
            value = Fraction(value)
            cumulative = value if cumulative is None else min(cumulative, value)
        if e == 0:
            continue
        rows.append(DichotomyRow(
            n=n, k=k, degree=e,
            min_nonzero_influence=fraction_str(cumulative) if cumulative is not None else None,
            functions=sum(count for degree, count in per_degree.items() if degree <= e),
        ))
        verdict = anchors.check_dichotomy(n, k, e, cumulative)
        if verdict is not None:
            verdicts.append(verdict)

    table = DichotomyTable(n=n, k=k, rows=rows, anchors_match=all(verdicts) if verdicts else None)
    if record:
        if table.anchors_match is False:
            raise ClaimViolation(f"dichotomy minima on C({n},{k}) differ from the stored anchors")
        for row in rows:
            if row.min_nonzero_influence is not None:
                anchors.record_dichotomy(n, k, row.degree, Fraction(row.min_nonzero_influence))
    return table
