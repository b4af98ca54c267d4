"""
Census harness and claim probes.
"""

from .anchors import AnchorStore
from .cache import CheckpointCache
from .census import (
    DEFAULT_CHAIN_RHO,
    EXHAUSTIVE,
    SAMPLE,
    ShardResult,
    ShardTask,
    census,
    census_from_config,
    code_tables,
    degree_one_templates,
    dichotomy_scan,
    run_shard,
    sample_tables,
)
from .probes import eq1_constant_probe, hyper_base, hyper_scan, transfer_sweep

__all__ = [
    'AnchorStore',
    'CheckpointCache',
    'DEFAULT_CHAIN_RHO',
    'EXHAUSTIVE',
    'SAMPLE',
    'ShardResult',
    'ShardTask',
    'census',
    'census_from_config',
    'code_tables',
    'degree_one_templates',
    'dichotomy_scan',
    'run_shard',
    'sample_tables',
    'eq1_constant_probe',
    'hyper_base',
    'hyper_scan',
    'transfer_sweep',
]
