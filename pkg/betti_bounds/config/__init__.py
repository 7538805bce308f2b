"""
Configuration package for betti-bounds
"""

from .config import (Config, DevelopmentConfig, ProductionConfig, TestingConfig, config,
                     configure_logging, default_data_dir, get_config)

__all__ = ['Config', 'DevelopmentConfig', 'ProductionConfig', 'TestingConfig', 'config',
           'configure_logging', 'default_data_dir', 'get_config']
