"""
Utilities package for betti-bounds
"""

from .run_log import RunEventType, RunLogger, RunSeverity

__all__ = ['RunEventType', 'RunLogger', 'RunSeverity']
