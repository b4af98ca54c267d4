"""
Influences, junta structure and the noise operator.
"""

from .influence import (
    DichotomyChain,
    InfluenceProfile,
    dichotomy_chain,
    influence,
    influence_probability,
    influence_profile,
    influence_squared_difference,
    level_influence_value,
    total_influence,
)
from .junta import (
    InductionReport,
    JuntaCertificate,
    MatchingCover,
    RestrictionWitness,
    ZeroInfluencePartition,
    induction_union,
    is_junta,
    junta_table,
    matching_cover,
    minimal_junta,
    partition_from_zero_pairs,
    restriction_witnesses,
    zero_influence_partition,
)
from .noise import (
    MonteCarloEstimate,
    NoiseSpectrum,
    check_rho,
    hypercontractivity_ratio,
    noise,
    noise_exponent,
    noise_monte_carlo,
)

__all__ = [
    'DichotomyChain',
    'InfluenceProfile',
    'dichotomy_chain',
    'influence',
    'influence_probability',
    'influence_profile',
    'influence_squared_difference',
    'level_influence_value',
    'total_influence',
    'InductionReport',
    'JuntaCertificate',
    'MatchingCover',
    'RestrictionWitness',
    'ZeroInfluencePartition',
    'induction_union',
    'is_junta',
    'junta_table',
    'matching_cover',
    'minimal_junta',
    'partition_from_zero_pairs',
    'restriction_witnesses',
    'zero_influence_partition',
    'MonteCarloEstimate',
    'NoiseSpectrum',
    'check_rho',
    'hypercontractivity_ratio',
    'noise',
    'noise_exponent',
    'noise_monte_carlo',
]
