"""
JSON file formats for slice functions, polynomials, cube functions and eta results.

Exact rationals are written as integers when integral and as "p/q" strings otherwise.
Files never hold floats; floating-point results only appear in reports.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Union

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError

from .config import float_15
from .core.domain import SliceDomain
from .core.functions import SliceFunction
from .core.polynomial import MultilinearPolynomial
from .exceptions import FormatError, PreconditionError
from .extremal.eta import EtaSearchResult
from .transfer.cube import CubeFunction

logger = logging.getLogger(__name__)

RawValue = Union[StrictInt, StrictStr]


class SliceFile(BaseModel):
    """{"n": int, "k": int, "order": "colex", "values": [...]}, values by colex rank."""

    model_config = ConfigDict(extra='forbid')

    n: StrictInt
    k: StrictInt
    order: Literal['colex'] = 'colex'
    values: List[RawValue]


class TermEntry(BaseModel):
    model_config = ConfigDict(extra='forbid')

    vars: List[StrictInt]
    coeff: Union[StrictInt, StrictStr]


class PolynomialFile(BaseModel):
    """{"n": int, "terms": [{"vars": [sorted 1-based indices], "coeff": "p/q"}]}."""

    model_config = ConfigDict(extra='forbid')

    n: StrictInt
    terms: List[TermEntry]


class CubeFile(BaseModel):
    """{"m": int, "order": "binary-lsb", "values": [...]}, bit t of the index is x_{t+1}."""

    model_config = ConfigDict(extra='forbid')

    m: StrictInt
    order: Literal['binary-lsb'] = 'binary-lsb'
    values: List[Union[StrictInt, StrictStr]]


def _location(error: ValidationError, what: str) -> str:
    first = error.errors()[0]
    loc = first['loc']
    if len(loc) >= 2 and loc[0] == 'values' and isinstance(loc[1], int):
        place = f"values[{loc[1]}] (rank {loc[1]})"
    else:
        place = '.'.join(str(part) for part in loc) or '<root>'
    return f"{what}: field {place}: {first['msg']}"


def _load(path: Union[str, Path], model, what: str):
    try:
        with open(path, 'r') as f:
            raw = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"{what} {path}: not valid JSON ({e})") from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        raise FormatError(_location(e, f"{what} {path}")) from e


def _dump(data: dict, path: Union[str, Path]) -> None:
    with open(path, 'w') as f:
        json.dump(data, f, indent=2)
        f.write('\n')
    logger.info("wrote %s", path)


def _parse_exact(raw, place: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"{place}: {raw!r} is not an integer or 'p/q' string") from e


def encode_value(value) -> Union[int, float, str]:
    if isinstance(value, float):
        return float_15(value)
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def slice_function_to_dict(f: SliceFunction) -> dict:
    if not f.is_exact:
        raise FormatError("slice files hold exact values only")
    return {
        'n': f.domain.n,
        'k': f.domain.k,
        'order': 'colex',
        'values': [encode_value(v) for v in f.values],
    }


def slice_function_from_dict(data: SliceFile, source: str = "slice file") -> SliceFunction:
    try:
        domain = SliceDomain(data.n, data.k)
    except PreconditionError as e:
        raise FormatError(f"{source}: fields n, k: {e}") from e
    if len(data.values) != domain.size:
        raise FormatError(
            f"{source}: field values: {domain} needs {domain.size} values, got {len(data.values)}"
        )
    values = [
        _parse_exact(v, f"{source}: values[{rank}] (rank {rank})")
        for rank, v in enumerate(data.values)
    ]
    return SliceFunction(domain, values)


def read_slice_function(path: Union[str, Path]) -> SliceFunction:
    """
    Read a slice-function file.

    Raises:
        FormatError: On any schema violation, naming the field or rank
    """
    return slice_function_from_dict(_load(path, SliceFile, "slice file"), f"slice file {path}")


def write_slice_function(f: SliceFunction, path: Union[str, Path]) -> None:
    _dump(slice_function_to_dict(f), path)


def polynomial_to_dict(p: MultilinearPolynomial) -> dict:
    return {
        'n': p.n,
        'terms': [
            {'vars': sorted(monomial), 'coeff': encode_value(coeff)}
            for monomial, coeff in p.sorted_terms()
        ],
    }


def polynomial_from_dict(data: PolynomialFile, source: str = "polynomial file") -> MultilinearPolynomial:
    terms = {}
    for index, term in enumerate(data.terms):
        place = f"{source}: terms[{index}]"
        if term.vars != sorted(set(term.vars)):
            raise FormatError(f"{place}.vars: indices must be strictly increasing, got {term.vars}")
        if any(not 1 <= v <= data.n for v in term.vars):
            raise FormatError(f"{place}.vars: indices must lie in 1..{data.n}, got {term.vars}")
        monomial = tuple(term.vars)
        if monomial in terms:
            raise FormatError(f"{place}.vars: monomial {term.vars} listed twice")
        terms[monomial] = _parse_exact(term.coeff, f"{place}.coeff")
    return MultilinearPolynomial(data.n, terms)


def read_polynomial(path: Union[str, Path]) -> MultilinearPolynomial:
    """Read a polynomial file (slice or cube variables alike)."""
    return polynomial_from_dict(_load(path, PolynomialFile, "polynomial file"), f"polynomial file {path}")


def write_polynomial(p: MultilinearPolynomial, path: Union[str, Path]) -> None:
    _dump(polynomial_to_dict(p), path)


def cube_function_to_dict(g: CubeFunction) -> dict:
    return {'m': g.m, 'order': 'binary-lsb', 'values': [encode_value(v) for v in g.values]}


def cube_function_from_dict(data: CubeFile, source: str = "cube file") -> CubeFunction:
    if data.m < 0 or len(data.values) != 1 << max(data.m, 0):
        raise FormatError(
            f"{source}: field values: m = {data.m} needs {1 << max(data.m, 0)} values, "
            f"got {len(data.values)}"
        )
    values = [_parse_exact(v, f"{source}: values[{idx}]") for idx, v in enumerate(data.values)]
    try:
        return CubeFunction(data.m, values)
    except PreconditionError as e:
        raise FormatError(f"{source}: field m: {e}") from e


def read_cube_function(path: Union[str, Path]) -> CubeFunction:
    return cube_function_from_dict(_load(path, CubeFile, "cube file"), f"cube file {path}")


def write_cube_function(g: CubeFunction, path: Union[str, Path]) -> None:
    _dump(cube_function_to_dict(g), path)


def read_eta_result(path: Union[str, Path]) -> EtaSearchResult:
    return _load(path, EtaSearchResult, "eta file")


def write_eta_result(result: EtaSearchResult, path: Union[str, Path]) -> None:
    _dump(result.to_dict(), path)
