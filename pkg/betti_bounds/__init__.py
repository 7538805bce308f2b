"""
betti-bounds
Lower bounds on Betti numbers of moduli stacks of stable curves

Builds stable dual graphs and their strata, the homology of free infinite
loop spaces on Thom spaces of BU(1), BT(2) and BN(2), and combines them
into per-degree lower bounds on dim H_i of the compactified moduli stack
in a range of degrees controlled by partitions of the genus.

Architecture:
    - models: immutable value types (series, graphs, boundary data)
    - algebra: series arithmetic, target spaces, Dyer-Lashof counting
    - graphs: validation, edge operations, isomorphism, enumeration
    - bounds: feasible ranges, target series, test graphs
    - validation: marshmallow schemas for files and reports
    - cli: click command surface

Version: 1.0
"""

import logging
from dataclasses import dataclass
from typing import Optional

from .config import get_config
from .config.cache import EnhancedCacheManager, cache_from_config
from .utils.run_log import RunLogger

__version__ = '1.0.0'

logger = logging.getLogger(__name__)


@dataclass
class RunContext:
    """Configuration, result cache and run log shared by one invocation"""
    config: type
    cache: EnhancedCacheManager
    run_log: RunLogger
    workers: int = 1


def create_context(config_name: Optional[str] = None,
                   cache_dir: Optional[str] = None,
                   workers: Optional[int] = None) -> RunContext:
    """Run context factory pattern"""
    config_class = get_config(config_name)
    context = RunContext(
        config=config_class,
        cache=(EnhancedCacheManager(cache_dir, version_tag=config_class.CODE_VERSION_TAG)
               if cache_dir else cache_from_config(config_class)),
        run_log=RunLogger(config_class.RUN_LOG_FILE),
        workers=workers or config_class.PARALLELISM,
    )
    config_class.init_app(context)
    logger.debug(f"Run context ready with {config_class.__name__}")
    return context
