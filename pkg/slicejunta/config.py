"""
Configuration and report models for slicejunta.
"""

import os
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from .exceptions import CapacityError


def fraction_str(value: Fraction) -> str:
    """Render an exact rational as 'p/q' (or 'p' for integers)."""
    return str(Fraction(value))


def float_15(value: float) -> float:
    """Round a float to 15 significant digits for reports."""
    return float(f"{value:.15g}")


class Capacity(BaseModel):
    """Size limits for the exact and exhaustive code paths."""

    exact_points: int = Field(
        4096,
        ge=1,
        description="Largest C(n,k) for dense exact solves and level projectors"
    )
    exhaustive_points: int = Field(
        22,
        ge=1,
        le=30,
        description="Largest C(n,k) for exhaustive 2^C(n,k) enumeration"
    )
    census_points: int = Field(
        1 << 22,
        ge=1,
        description="Largest C(n,k) for the sampled census and degree computations"
    )
    cube_variables: int = Field(24, ge=1, description="Largest truth table is 2^m")
    eta_max_degree: int = Field(14, ge=1, description="Largest degree for the eta search")

    def check_exact(self, size: int) -> None:
        """Raise CapacityError when a slice is too large for exact work."""
        if size > self.exact_points:
            raise CapacityError(
                f"slice has {size} points; exact path supports at most {self.exact_points}"
            )

    def check_census(self, size: int) -> None:
        """Raise CapacityError when a slice is too large for the census path."""
        if size > self.census_points:
            raise CapacityError(
                f"census path supports C(n,k) <= {self.census_points}, got {size}"
            )

    def check_exhaustive(self, size: int) -> None:
        """Raise CapacityError when 2^size functions cannot be enumerated."""
        if size > self.exhaustive_points:
            raise CapacityError(
                f"exhaustive census needs C(n,k) <= {self.exhaustive_points}, got {size}"
            )


DEFAULT_CAPACITY = Capacity()


class RunConfig(BaseModel):
    """Configuration of a single CLI run; embedded verbatim in every report."""

    command: str = Field(..., description="Subcommand name")
    seed: int = Field(0, description="Seed for every random stream of the run")
    workers: Optional[int] = Field(
        None,
        ge=1,
        description="Census worker processes (or SLICEJUNTA_WORKERS env var)"
    )
    shard_size: int = Field(4096, ge=1, description="Functions per census shard")
    out: Optional[str] = Field(None, description="Output path (stdout if None)")
    format: str = Field("json", description="Report format: json or csv")
    checkpoint_dir: Optional[str] = Field(None, description="Census shard cache directory")
    options: Dict[str, Any] = Field(default_factory=dict, description="Subcommand flags")

    @field_validator('format')
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Validate output format."""
        if v.lower() not in ('json', 'csv'):
            raise ValueError("Format must be one of: json, csv")
        return v.lower()

    def model_post_init(self, __context) -> None:
        """Resolve the worker count from the environment if not given."""
        if self.workers is None:
            env_workers = os.getenv('SLICEJUNTA_WORKERS')
            self.workers = int(env_workers) if env_workers else 1
            if self.workers < 1:
                raise CapacityError("SLICEJUNTA_WORKERS must be a positive integer")


class CountRow(BaseModel):
    """Number of functions with a given (degree, minimal junta size)."""

    degree: int
    junta_size: int
    count: int


class CensusReport(BaseModel):
    """Aggregated outcome of a census run."""

    n: int
    k: int
    mode: str
    seed: Optional[int] = None
    max_degree_filter: Optional[int] = None
    functions: int
    counts: List[CountRow] = Field(default_factory=list)
    degree_one_count: int = 0
    min_nonzero_influence: Dict[str, Optional[str]] = Field(
        default_factory=dict,
        description="degree -> min positive Inf_ij as 'p/q'"
    )
    eq1_constant: Optional[str] = None
    chain_rho: Optional[float] = Field(None, description="rho of the bootstrapping-chain check")
    chain_pairs: int = Field(
        0,
        description="(function, pair) combinations with nonzero influence that were checked"
    )
    chain_hypercontractive: int = Field(
        0,
        description="Checked combinations with ||T_rho g||_2^2 <= ||g||_{4/3}^2"
    )
    claims: Dict[str, bool] = Field(default_factory=dict)
    theorem_range: bool = Field(False, description="2 <= k <= n-2 holds")
    shards: int = 0
    code_version: str = ""
    timing: Dict[str, float] = Field(default_factory=dict)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()

    @property
    def passed(self) -> bool:
        return all(self.claims.values())


class Eq1Row(BaseModel):
    """One pure-level evidence row of the total-influence constant probe."""

    n: int
    k: int
    source: str
    level: int
    total_influence: str
    level_value: str
    ratio: str


class Eq1ProbeReport(BaseModel):
    """Outcome of the total-influence constant probe."""

    constant: Optional[str] = None
    consistent: bool = True
    rows: List[Eq1Row] = Field(default_factory=list)
    dictator_total_influence: Optional[str] = None
    dictator_level_value: Optional[str] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class DichotomyRow(BaseModel):
    """Minimum positive influence among Boolean functions of degree <= d."""

    n: int
    k: int
    degree: int
    min_nonzero_influence: Optional[str] = None
    functions: int = 0


class HyperScanRow(BaseModel):
    """Largest hypercontractivity ratio seen for one exponent."""

    exponent: float
    rho: float
    max_ratio: float
    argmax_sample: int


class DichotomyTable(BaseModel):
    """Cumulative minima of the nonzero influences, one row per degree bound."""

    n: int
    k: int
    rows: List[DichotomyRow] = Field(default_factory=list)
    anchors_match: Optional[bool] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class HyperScanTable(BaseModel):
    """Hypercontractivity scan over a grid of exponents."""

    n: int
    k: int
    samples: int
    seed: int
    base: float = Field(..., description="2k(n-k)/(n(n-1)); rho = base ** exponent")
    rows: List[HyperScanRow] = Field(default_factory=list)
    smallest_passing_exponent: Optional[float] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class GammaReport(BaseModel):
    """Nisan-Szegedy cap and, for small degree, the brute-force value of gamma(d)."""

    d: int
    ns_upper: int
    bruteforce: Optional[int] = None
    attained: Optional[bool] = None
    notice: Optional[str] = None
    witness: Optional[List[int]] = None

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class TransferSweepReport(BaseModel):
    """Slice-to-cube and explicit-polynomial agreement over every function of a slice."""

    n: int
    k: int
    functions: int = 0
    converted: int = Field(0, description="Functions whose minimal junta is covered")
    skipped: int = Field(0, description="Functions with L > min(k, n-k)")
    failures: List[int] = Field(default_factory=list, description="Codes that violated a claim")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()

    @property
    def passed(self) -> bool:
        return not self.failures
